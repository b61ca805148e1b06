#pragma once

// Residue-class analysis of the exponent forms
//     alpha*k(k+1)/2 + beta*m(3m-1)/2
// modulo a prime: which (k mod p, m mod p) land on a given residue, and
// whether the weight 2k+1 vanishes on all of them.

#include <string>
#include <utility>
#include <vector>

#include "qseries/qproducts.hpp"
#include "qseries/verify.hpp"

namespace qseries {

struct QuadraticFormQuery {
    DoubleSumForm form;
    long prime = 5;
    long residue = 0;

    /// Throws ContractViolation for a non-prime modulus, an out-of-range
    /// residue, or p = 2 with an odd multiplier (k(k+1)/2 is then not a
    /// function of k mod 2).
    void validate() const;
    std::string describe() const;
};

using ResiduePair = std::pair<long, long>;

struct ResidueAnalysis {
    std::vector<ResiduePair> solutions; // lexicographic (k, m)
    /// 2k+1 = 0 mod p on every solution (vacuously true for none).
    bool weight_vanishes = true;
};

ResidueAnalysis residue_solutions(const QuadraticFormQuery& query);

/// c_k*(a_k*k + b_k)^2 + c_m*(a_m*m + b_m)^2 = 0 (mod p)
struct CompletedSquareForm {
    long k_coeff = 1;
    long k_scale = 1;
    long k_shift = 0;
    long m_coeff = 1;
    long m_scale = 1;
    long m_shift = 0;

    std::string describe() const;
};

/// Enumerates all p^2 residue pairs and checks that the query condition and
/// the completed-square condition select the same pairs. The first pair
/// where they disagree is reported as the witness.
VerificationReport completed_square_equivalence(const QuadraticFormQuery& query, const CompletedSquareForm& completed);

/// Walks the actual double-sum terms up to `order` and checks that every
/// term whose exponent is congruent to the query residue carries a weight
/// 2k+1 divisible by p. The counterexample is the offending exponent and
/// weight.
VerificationReport check_weights_on_terms(const QuadraticFormQuery& query, std::size_t order);

bool is_prime(long n);

} // namespace qseries
