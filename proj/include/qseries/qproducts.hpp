#pragma once

// Closed-form building blocks: infinite q-Pochhammer products, products of
// them (eta-quotients with a monomial prefactor), Ramanujan's theta
// functions phi and psi, and the weighted theta-type double sums
//
//     sum_{k >= 0} sum_{m in Z} (-1)^{k+m} (2k+1) q^{alpha*k(k+1)/2 + beta*m(3m-1)/2}.

#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// (sign * q^offset; q^step)_inf ^ exponent
struct PochhammerFactor {
    int sign = 1;
    std::size_t offset = 1;
    std::size_t step = 1;
    long exponent = 1;

    /// Throws ContractViolation unless sign is +-1, offset/step >= 1 and exponent != 0.
    void validate() const;

    friend bool operator==(const PochhammerFactor&, const PochhammerFactor&) = default;
};

/// coefficient * q^power * product of factors
struct ProductExpr {
    Integer coefficient = 1;
    std::size_t power = 0;
    std::vector<PochhammerFactor> factors;
};

struct DoubleSumForm {
    long tri_mult = 1;  // multiplies k(k+1)/2
    long pent_mult = 1; // multiplies m(3m-1)/2

    void validate() const;
};

/// Memoizes the exponent-1 product of each (sign, offset, step) at a given
/// order. Insertions are serialized, so one cache may be shared by the
/// threads of a single evaluation.
class ExpansionCache {
public:
    Series base_product(int sign, std::size_t offset, std::size_t step, std::size_t order);
    std::size_t size() const;

private:
    using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
    mutable std::mutex mutex_;
    std::map<Key, Series> entries_;
};

Series expand_pochhammer(const PochhammerFactor& f, std::size_t order, ExpansionCache* cache = nullptr);
Series expand_product(const ProductExpr& p, std::size_t order, ExpansionCache* cache = nullptr);

/// phi(q^t) = sum_{n in Z} q^{t n^2}
Series theta_phi(std::size_t t, std::size_t order);
/// psi(q^t) = sum_{n >= 0} q^{t n(n+1)/2}
Series theta_psi(std::size_t t, std::size_t order);

Series weighted_double_sum(const DoubleSumForm& form, std::size_t order);

/// One (k, m) term of a weighted double sum.
struct DoubleSumTerm {
    long k;
    long m;
    std::size_t exponent;
    long weight; // (-1)^{k+m} (2k+1)
};

/// Every term with exponent <= order, in the loop order used by
/// weighted_double_sum.
std::vector<DoubleSumTerm> double_sum_terms(const DoubleSumForm& form, std::size_t order);

} // namespace qseries
