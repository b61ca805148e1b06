#include "qseries/qproducts.hpp"

#include <algorithm>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

// Product over n >= 0 with offset + step*n <= order of (1 - sign*q^{offset+step*n}).
Series binomial_product(int sign, std::size_t offset, std::size_t step, std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    std::size_t degree = 0; // highest exponent that can be nonzero so far
    for (std::size_t e = offset; e <= order; e += step) {
        // multiply in place by (1 - sign*q^e), top down
        const std::size_t top = std::min(order, degree + e);
        for (std::size_t i = top; i >= e; --i) {
            if (sign > 0) {
                c[i] -= c[i - e];
            } else {
                c[i] += c[i - e];
            }
            if (i == e) {
                break;
            }
        }
        degree = top;
    }
    return Series(std::move(c));
}

} // namespace

void PochhammerFactor::validate() const
{
    if (sign != 1 && sign != -1) {
        throw ContractViolation("Pochhammer sign must be +1 or -1");
    }
    if (offset < 1 || step < 1) {
        throw ContractViolation("Pochhammer offset and step must be at least 1");
    }
    if (exponent == 0) {
        throw ContractViolation("Pochhammer exponent must be nonzero");
    }
}

void DoubleSumForm::validate() const
{
    if (tri_mult < 1 || pent_mult < 1) {
        throw ContractViolation("double-sum multipliers must be at least 1");
    }
}

Series ExpansionCache::base_product(int sign, std::size_t offset, std::size_t step, std::size_t order)
{
    const Key key{sign, offset, step, order};
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) {
            return it->second;
        }
    }
    Series s = binomial_product(sign, offset, step, order);
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(s)).first->second;
}

std::size_t ExpansionCache::size() const
{
    std::lock_guard lock(mutex_);
    return entries_.size();
}

Series expand_pochhammer(const PochhammerFactor& f, std::size_t order, ExpansionCache* cache)
{
    f.validate();
    Series base = cache ? cache->base_product(f.sign, f.offset, f.step, order)
                        : binomial_product(f.sign, f.offset, f.step, order);
    return f.exponent == 1 ? base : pow(base, f.exponent);
}

Series expand_product(const ProductExpr& p, std::size_t order, ExpansionCache* cache)
{
    if (p.power > order || sgn(p.coefficient) == 0) {
        return Series(order);
    }
    // Everything beyond order - power is shifted out, so expand the factors
    // at the reduced order and shift once.
    const std::size_t inner = order - p.power;
    Series acc = Series::monomial(p.coefficient, 0, inner);
    for (const auto& f : p.factors) {
        acc = mul(acc, expand_pochhammer(f, inner, cache));
    }
    std::vector<Integer> out(order + 1);
    for (std::size_t i = 0; i <= inner; ++i) {
        out[i + p.power] = acc[i];
    }
    return Series(std::move(out));
}

Series theta_phi(std::size_t t, std::size_t order)
{
    if (t == 0) {
        throw ContractViolation("theta_phi: t must be positive");
    }
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; t * n * n <= order; ++n) {
        c[t * n * n] += 2;
    }
    return Series(std::move(c));
}

Series theta_psi(std::size_t t, std::size_t order)
{
    if (t == 0) {
        throw ContractViolation("theta_psi: t must be positive");
    }
    std::vector<Integer> c(order + 1);
    for (std::size_t n = 0; t * n * (n + 1) / 2 <= order; ++n) {
        c[t * n * (n + 1) / 2] += 1;
    }
    return Series(std::move(c));
}

std::vector<DoubleSumTerm> double_sum_terms(const DoubleSumForm& form, std::size_t order)
{
    form.validate();
    const long limit = static_cast<long>(order);
    std::vector<DoubleSumTerm> terms;
    for (long k = 0;; ++k) {
        const long tri = form.tri_mult * (k * (k + 1) / 2);
        if (tri > limit) {
            break;
        }
        const long budget = limit - tri;
        // m(3m-1)/2 is increasing in |m| on each side of zero: walk m = 0, 1, 2, ...
        // and m = -1, -2, ... until the budget is exceeded.
        for (int side : {1, -1}) {
            for (long m = side > 0 ? 0 : -1;; m += side) {
                const long pent = form.pent_mult * (m * (3 * m - 1) / 2);
                if (pent > budget) {
                    break;
                }
                const long weight = ((k + m) % 2 == 0 ? 1 : -1) * (2 * k + 1);
                terms.push_back({k, m, static_cast<std::size_t>(tri + pent), weight});
            }
        }
    }
    return terms;
}

Series weighted_double_sum(const DoubleSumForm& form, std::size_t order)
{
    std::vector<Integer> c(order + 1);
    for (const auto& term : double_sum_terms(form, order)) {
        c[term.exponent] += term.weight;
    }
    return Series(std::move(c));
}

} // namespace qseries
