#pragma once

// Generating functions for 4-colored generalized Frobenius partitions and
// the mod-5 pipeline showing cphi_4(10n+6) = 0 (mod 5).
//
// Notation below: (a;b) is the infinite product (a;b)_inf.
//
//   sum cphi_4(n) q^n  = (phi(q^2)^3 + 12 q phi(q^2) psi(q^4)^2) / (q;q)^4
//   sum cphi_4(2n) q^n = phi(q)^5 / ((q;q)^6 (q;q^2)^4)
//                        + 48 q phi(q) psi(q^2)^4 / ((q;q)^6 (q;q^2)^4)
//                      = (q^2;q^2)^29 / ((q;q)^20 (q^4;q^4)^10)
//                        + 48 q (q^2;q^2)^5 (q^4;q^4)^6 / (q;q)^12
//
// The even part of the barred function is taken as given in its product
// form 64 q (q^4;q^4)^6 / ((q^2;q^2)^7 (q;q^2)^12); only what follows from
// that form is checked here.

#include <cstddef>

#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"
#include "qseries/verify.hpp"

namespace qseries::frobenius {

/// Numerator phi(q^2)^3 + 12 q phi(q^2) psi(q^4)^2 of the cphi_4 generating function.
Series cphi4_numerator(std::size_t order);

/// sum_{n <= N} cphi_4(n) q^n
Series build_cphi4(std::size_t order);

enum class EvenRoute {
    dissection,  // even part of build_cphi4(2N + 1)
    closed_form, // eta-quotient form
    theta_form,  // phi/psi form before the product substitution
};

/// sum_{n <= N} cphi_4(2n) q^n along the chosen route.
Series build_cphi4_even(std::size_t order, EvenRoute route = EvenRoute::closed_form);

// The two eta-quotient terms of the even part, and their mod-5 reductions.
ProductExpr even_first_term();
ProductExpr even_second_term();
ProductExpr even_first_term_mod5();
ProductExpr even_second_term_mod5();

struct TermCheck {
    VerificationReport reduction;   // term = reduced term (mod 5)
    VerificationReport progression; // reduced term vanishes mod 5 on 5n+3
};

struct Mod5Split {
    TermCheck first;
    TermCheck second;

    bool ok() const
    {
        return first.reduction.ok() && first.progression.ok() && second.reduction.ok() && second.progression.ok();
    }
};

Mod5Split mod5_split_check(std::size_t order);

/// Progression check on a reduced term (1 or 2) for an arbitrary class.
VerificationReport reduced_term_progression(int term, std::size_t order, Progression progression);

/// sum cphi_4(2n) q^n vanishes mod 5 on exponents 5n+3.
VerificationReport even_part_congruence_check(std::size_t order);

// Barred variant: the quoted form, its rearrangement, and its mod-5 reduction.
ProductExpr cphibar4_even_quoted();
ProductExpr cphibar4_even_rearranged();
ProductExpr cphibar4_even_mod5();

/// sum_{n <= N} cphibar_4(2n) q^n from the quoted product form.
Series build_cphibar4_even(std::size_t order);

struct CphibarChecks {
    VerificationReport rearrangement; // quoted form = rearranged form
    VerificationReport reduction;     // rearranged = reduced (mod 5)
    VerificationReport progression;   // vanishes mod 5 on 5n+3

    bool ok() const { return rearrangement.ok() && reduction.ok() && progression.ok(); }
};

CphibarChecks cphibar4_checks(std::size_t rearrangement_order, std::size_t congruence_order);

struct FrobeniusSeriesBundle {
    Series full;
    Series even_via_dissection;
    Series even_via_closed_form;
    Series cphibar_even;

    bool routes_agree() const { return even_via_dissection == even_via_closed_form; }
};

/// Builds everything at even-part order N; the two even routes run concurrently.
FrobeniusSeriesBundle build_bundle(std::size_t even_order);

} // namespace qseries::frobenius
