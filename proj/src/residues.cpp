#include "qseries/residues.hpp"

#include <chrono>

#include "qseries/error.hpp"

namespace qseries {

namespace {

long mod(long a, long p)
{
    const long r = a % p;
    return r < 0 ? r + p : r;
}

// value of mult * n(n+1)/2 (shape = tri) or mult * n(3n-1)/2 (shape = pent) modulo p
long half_form(long mult, long n, long p, bool pentagonal)
{
    const long body = pentagonal ? mod(n * (3 * n - 1), 2 * p) : mod(n * (n + 1), 2 * p);
    // body is even as an integer, so halving modulo 2p is exact
    return mod(mult * (body / 2), p);
}

long form_value(const QuadraticFormQuery& q, long k, long m)
{
    return mod(half_form(q.form.tri_mult, k, q.prime, false) + half_form(q.form.pent_mult, m, q.prime, true), q.prime);
}

long completed_value(const CompletedSquareForm& c, long k, long m, long p)
{
    const long a = mod(c.k_scale * k + c.k_shift, p);
    const long b = mod(c.m_scale * m + c.m_shift, p);
    return mod(mod(c.k_coeff, p) * mod(a * a, p) + mod(c.m_coeff, p) * mod(b * b, p), p);
}

std::string signed_term(long v)
{
    return v < 0 ? " - " + std::to_string(-v) : " + " + std::to_string(v);
}

} // namespace

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

void QuadraticFormQuery::validate() const
{
    form.validate();
    if (!is_prime(prime)) {
        throw ContractViolation("residue analysis needs a prime modulus, got " + std::to_string(prime));
    }
    if (residue < 0 || residue >= prime) {
        throw ContractViolation("target residue must lie in [0, " + std::to_string(prime) + ")");
    }
    if (prime == 2 && (form.tri_mult % 2 != 0 || form.pent_mult % 2 != 0)) {
        throw ContractViolation("modulo 2 the halved forms are not functions of the residues; use even multipliers");
    }
}

std::string QuadraticFormQuery::describe() const
{
    return std::to_string(form.tri_mult) + "*k(k+1)/2 + " + std::to_string(form.pent_mult) + "*m(3m-1)/2 = " +
           std::to_string(residue) + " (mod " + std::to_string(prime) + ")";
}

std::string CompletedSquareForm::describe() const
{
    return std::to_string(k_coeff) + "*(" + std::to_string(k_scale) + "k" + signed_term(k_shift) + ")^2 + " +
           std::to_string(m_coeff) + "*(" + std::to_string(m_scale) + "m" + signed_term(m_shift) + ")^2";
}

ResidueAnalysis residue_solutions(const QuadraticFormQuery& query)
{
    query.validate();
    // With 2 invertible mod p the form is a polynomial in (k mod p, m mod p).
    ResidueAnalysis out;
    const long p = query.prime;
    for (long k = 0; k < p; ++k) {
        for (long m = 0; m < p; ++m) {
            if (form_value(query, k, m) == query.residue) {
                out.solutions.emplace_back(k, m);
                if (mod(2 * k + 1, p) != 0) {
                    out.weight_vanishes = false;
                }
            }
        }
    }
    return out;
}

VerificationReport completed_square_equivalence(const QuadraticFormQuery& query, const CompletedSquareForm& completed)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.claim = query.describe() + "  <=>  " + completed.describe() + " = 0 (mod " + std::to_string(query.prime) + ")";
    r.modulus = Integer(query.prime);
    try {
        query.validate();
        r.status = Status::verified;
        const long p = query.prime;
        for (long k = 0; k < p && !r.witness; ++k) {
            for (long m = 0; m < p; ++m) {
                const bool original = form_value(query, k, m) == query.residue;
                const bool squared = completed_value(completed, k, m, p) == 0;
                if (original != squared) {
                    r.status = Status::violated;
                    r.witness = ResiduePair{k, m};
                    break;
                }
            }
        }
    } catch (const Error& e) {
        r.status = Status::error;
        r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport check_weights_on_terms(const QuadraticFormQuery& query, std::size_t order)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.claim = "2k+1 = 0 (mod " + std::to_string(query.prime) + ") on every term with " + query.describe();
    r.order = order;
    r.modulus = Integer(query.prime);
    r.progression = Progression{static_cast<std::size_t>(query.prime), static_cast<std::size_t>(query.residue)};
    try {
        query.validate();
        r.status = Status::verified;
        const auto p = static_cast<std::size_t>(query.prime);
        for (const auto& term : double_sum_terms(query.form, order)) {
            if (term.exponent % p == static_cast<std::size_t>(query.residue) && mod(2 * term.k + 1, query.prime) != 0) {
                r.status = Status::violated;
                r.counterexample = Counterexample{term.exponent, Integer(term.weight)};
                break;
            }
        }
    } catch (const Error& e) {
        r.status = Status::error;
        r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace qseries
