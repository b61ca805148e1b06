#include "qseries/frobenius.hpp"

#include <chrono>
#include <future>

#include "qseries/error.hpp"

namespace qseries::frobenius {

namespace {

PochhammerFactor P(std::size_t offset, std::size_t step, long exponent)
{
    return PochhammerFactor{1, offset, step, exponent};
}

double since_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport timed_compare(const std::string& claim, std::size_t order, auto&& lhs, auto&& rhs)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = compare_series(claim, lhs(order), rhs(order));
    r.elapsed_ms = since_ms(start);
    return r;
}

VerificationReport timed_progression(const std::string& claim, const ProductExpr& p, std::size_t order,
                                     Progression progression)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = check_progression(claim, expand_product(p, order), Integer(5), progression);
    r.elapsed_ms = since_ms(start);
    return r;
}

TermCheck check_term(const std::string& name, const ProductExpr& term, const ProductExpr& reduced, std::size_t order)
{
    ExpansionCache cache;
    return TermCheck{
        timed_compare(name + " = reduced form (mod 5)", order,
                      [&](std::size_t n) { return reduce_mod(expand_product(term, n, &cache), 5); },
                      [&](std::size_t n) { return reduce_mod(expand_product(reduced, n, &cache), 5); }),
        timed_progression("reduced " + name + " = 0 (mod 5) on 5n+3", reduced, order, Progression{5, 3}),
    };
}

} // namespace

Series cphi4_numerator(std::size_t order)
{
    const Series phi2 = theta_phi(2, order);
    const Series psi4 = theta_psi(4, order);
    const Series cubed = pow(phi2, 3);
    const Series mixed = scale(shift(mul(phi2, pow(psi4, 2)), 1), 12);
    return add(cubed, mixed);
}

Series build_cphi4(std::size_t order)
{
    return mul(cphi4_numerator(order), expand_pochhammer(P(1, 1, -4), order));
}

Series build_cphi4_even(std::size_t order, EvenRoute route)
{
    switch (route) {
    case EvenRoute::dissection:
        return dissect(build_cphi4(2 * order + 1), 2, 0);
    case EvenRoute::closed_form: {
        ExpansionCache cache;
        return add(expand_product(even_first_term(), order, &cache),
                   expand_product(even_second_term(), order, &cache));
    }
    case EvenRoute::theta_form: {
        ExpansionCache cache;
        const Series phi1 = theta_phi(1, order);
        const Series denom = mul(expand_pochhammer(P(1, 1, -6), order, &cache),
                                 expand_pochhammer(P(1, 2, -4), order, &cache));
        const Series first = mul(pow(phi1, 5), denom);
        const Series second = scale(shift(mul(mul(phi1, pow(theta_psi(2, order), 4)), denom), 1), 48);
        return add(first, second);
    }
    }
    throw ContractViolation("unknown even-part route");
}

ProductExpr even_first_term()
{
    return {1, 0, {P(2, 2, 29), P(1, 1, -20), P(4, 4, -10)}};
}

ProductExpr even_second_term()
{
    return {48, 1, {P(2, 2, 5), P(4, 4, 6), P(1, 1, -12)}};
}

ProductExpr even_first_term_mod5()
{
    return {1, 0, {P(10, 10, 5), P(2, 2, 4), P(5, 5, -4), P(20, 20, -2)}};
}

ProductExpr even_second_term_mod5()
{
    return {48, 1, {P(10, 10, 1), P(20, 20, 1), P(1, 1, 3), P(4, 4, 1), P(5, 5, -3)}};
}

Mod5Split mod5_split_check(std::size_t order)
{
    return Mod5Split{
        check_term("first even-part term", even_first_term(), even_first_term_mod5(), order),
        check_term("second even-part term", even_second_term(), even_second_term_mod5(), order),
    };
}

VerificationReport reduced_term_progression(int term, std::size_t order, Progression progression)
{
    if (term != 1 && term != 2) {
        throw ContractViolation("the even part has terms 1 and 2 only");
    }
    const ProductExpr& p = term == 1 ? even_first_term_mod5() : even_second_term_mod5();
    return timed_progression("reduced even-part term " + std::to_string(term) + " = 0 (mod 5) on " +
                                 std::to_string(progression.step) + "n+" + std::to_string(progression.residue),
                             p, order, progression);
}

VerificationReport even_part_congruence_check(std::size_t order)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = check_progression("cphi_4(10n+6) = 0 (mod 5)", build_cphi4_even(order), Integer(5),
                                             Progression{5, 3});
    r.elapsed_ms = since_ms(start);
    return r;
}

ProductExpr cphibar4_even_quoted()
{
    return {64, 1, {P(4, 4, 6), P(2, 2, -7), P(1, 2, -12)}};
}

ProductExpr cphibar4_even_rearranged()
{
    return {64, 1, {P(4, 4, 6), P(2, 2, 5), P(1, 1, -12)}};
}

ProductExpr cphibar4_even_mod5()
{
    return {64, 1, {P(20, 20, 1), P(4, 4, 1), P(10, 10, 1), P(1, 1, 3), P(5, 5, -3)}};
}

Series build_cphibar4_even(std::size_t order)
{
    return expand_product(cphibar4_even_quoted(), order);
}

CphibarChecks cphibar4_checks(std::size_t rearrangement_order, std::size_t congruence_order)
{
    ExpansionCache cache;
    return CphibarChecks{
        timed_compare(
            "barred even part: quoted form = rearranged form", rearrangement_order,
            [&](std::size_t n) { return expand_product(cphibar4_even_quoted(), n, &cache); },
            [&](std::size_t n) { return expand_product(cphibar4_even_rearranged(), n, &cache); }),
        timed_compare(
            "barred even part = reduced form (mod 5)", congruence_order,
            [&](std::size_t n) { return reduce_mod(expand_product(cphibar4_even_rearranged(), n, &cache), 5); },
            [&](std::size_t n) { return reduce_mod(expand_product(cphibar4_even_mod5(), n, &cache), 5); }),
        timed_progression("cphibar_4(10n+6) = 0 (mod 5)", cphibar4_even_quoted(), congruence_order,
                          Progression{5, 3}),
    };
}

FrobeniusSeriesBundle build_bundle(std::size_t even_order)
{
    auto dissected = std::async(std::launch::async, [=] {
        return build_cphi4_even(even_order, EvenRoute::dissection);
    });
    Series closed = build_cphi4_even(even_order, EvenRoute::closed_form);
    return FrobeniusSeriesBundle{
        build_cphi4(2 * even_order + 1),
        dissected.get(),
        std::move(closed),
        build_cphibar4_even(even_order),
    };
}

} // namespace qseries::frobenius
