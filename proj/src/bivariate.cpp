#include "qseries/bivariate.hpp"

#include <string>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

BivariateSeries BivariateSeries::monomial(const Integer& c, long j, std::size_t t, std::size_t order)
{
    BivariateSeries out(order);
    out.accumulate(j, Series::monomial(c, t, order));
    return out;
}

Series BivariateSeries::z_coeff(long j) const
{
    if (auto it = entries_.find(j); it != entries_.end()) {
        return it->second;
    }
    return Series(order_);
}

std::optional<std::size_t> BivariateSeries::valuation(long j) const
{
    if (auto it = entries_.find(j); it != entries_.end()) {
        return it->second.valuation();
    }
    return std::nullopt;
}

void BivariateSeries::accumulate(long j, const Series& s)
{
    if (s.order() != order_) {
        throw ContractViolation("bivariate entry of order " + std::to_string(s.order()) +
                                " added to a series of order " + std::to_string(order_));
    }
    auto it = entries_.find(j);
    if (it == entries_.end()) {
        if (!s.is_zero()) {
            entries_.emplace(j, s);
        }
        return;
    }
    it->second = add(it->second, s);
    if (it->second.is_zero()) {
        entries_.erase(it);
    }
}

BivariateSeries bimul(const BivariateSeries& a, const BivariateSeries& b)
{
    if (a.order() != b.order()) {
        throw ContractViolation("bimul: order mismatch (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
    }
    BivariateSeries out(a.order());
    for (const auto& [ja, sa] : a.entries()) {
        for (const auto& [jb, sb] : b.entries()) {
            out.accumulate(ja + jb, mul(sa, sb));
        }
    }
    return out;
}

BivariateSeries biadd(const BivariateSeries& a, const BivariateSeries& b)
{
    BivariateSeries out = a;
    for (const auto& [j, s] : b.entries()) {
        out.accumulate(j, s);
    }
    return out;
}

namespace {

using FactorBuilder = Integer (*)(int k, int i);

Integer binomial(int k, int i)
{
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    return c;
}

Integer unit(int, int)
{
    return 1;
}

// sum_{i=0..k} weight(k, i) z^{direction*i} q^{i*m}
BivariateSeries factor(int k, long direction, std::size_t m, std::size_t order, FactorBuilder weight)
{
    BivariateSeries f(order);
    for (int i = 0; i <= k; ++i) {
        if (static_cast<std::size_t>(i) * m > order) {
            break;
        }
        f.accumulate(direction * i, Series::monomial(weight(k, i), static_cast<std::size_t>(i) * m, order));
    }
    return f;
}

// Least q-degree the factors with index >= next can spend to move the
// z-exponent by `distance` towards zero: each index contributes at most k
// steps, each step costing the index.
std::size_t return_cost(unsigned long distance, std::size_t next, int k)
{
    std::size_t cost = 0;
    for (unsigned long i = 0; i < distance; ++i) {
        cost += next + i / static_cast<unsigned long>(k);
    }
    return cost;
}

// Factors are applied in ascending m, the z factor before the z^{-1} one,
// stopping once m > N.
Series constant_term(int k, std::size_t order, bool prune, FactorBuilder weight)
{
    if (k < 1) {
        throw ContractViolation("the number of colors/repetitions must be at least 1");
    }
    BivariateSeries state = BivariateSeries::monomial(1, 0, 0, order);
    for (std::size_t m = 0; m <= order; ++m) {
        if (m >= 1) {
            state = bimul(state, factor(k, 1, m, order, weight));
        }
        state = bimul(state, factor(k, -1, m, order, weight));
        if (prune) {
            state.prune_if_not([&](long j, std::size_t v) {
                const unsigned long distance = static_cast<unsigned long>(j < 0 ? -j : j);
                return v + return_cost(distance, m + 1, k) <= order;
            });
        }
    }
    return state.z_coeff(0);
}

} // namespace

Series cphi_constant_term(int colors, std::size_t order, bool prune)
{
    return constant_term(colors, order, prune, binomial);
}

Series phi_constant_term(int repetitions, std::size_t order, bool prune)
{
    return constant_term(repetitions, order, prune, unit);
}

Series partition_numbers(std::size_t order)
{
    std::vector<Integer> p(order + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Integer acc;
        for (std::size_t j = 1;; ++j) {
            const std::size_t g1 = j * (3 * j - 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::size_t g2 = j * (3 * j + 1) / 2;
            Integer term = p[n - g1];
            if (g2 <= n) {
                term += p[n - g2];
            }
            if (j % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    return Series(std::move(p));
}

void check_partition_gate(const Series& k1_output)
{
    const Series expected = partition_numbers(k1_output.order());
    if (k1_output == expected) {
        return;
    }
    for (std::size_t n = 0; n <= k1_output.order(); ++n) {
        if (k1_output[n] != expected[n]) {
            throw OracleError("oracle invalid: k = 1 self-check failed at n = " + std::to_string(n) + " (got " +
                              k1_output[n].get_str() + ", p(n) = " + expected[n].get_str() + ")");
        }
    }
    throw OracleError("oracle invalid: k = 1 self-check failed");
}

void check_garvan_gate(const Series& phi4, const Series& cphi4)
{
    const Series a = reduce_mod(phi4, 5);
    const Series b = reduce_mod(cphi4, 5);
    if (a.order() != b.order()) {
        throw ContractViolation("Garvan gate: order mismatch");
    }
    for (std::size_t n = 0; n <= a.order(); ++n) {
        if (a[n] != b[n]) {
            throw OracleError("oracle invalid: phi_4(" + std::to_string(n) + ") = " + phi4[n].get_str() +
                              " and cphi_4(" + std::to_string(n) + ") = " + cphi4[n].get_str() +
                              " differ modulo 5");
        }
    }
}

namespace {

void check_limits(std::size_t order, const OracleConfig& config)
{
    if (order > config.max_order) {
        throw OracleError("oracle refused: order " + std::to_string(order) + " exceeds the configured limit " +
                          std::to_string(config.max_order));
    }
}

} // namespace

Series cphi_oracle(int colors, std::size_t order, const OracleConfig& config)
{
    if (colors < 1) {
        throw ContractViolation("cphi_oracle: colors must be at least 1");
    }
    check_limits(order, config);
    Series k1 = cphi_constant_term(1, order, config.prune);
    check_partition_gate(k1);
    return colors == 1 ? k1 : cphi_constant_term(colors, order, config.prune);
}

Series phi_oracle(int repetitions, std::size_t order, const OracleConfig& config)
{
    if (repetitions < 1) {
        throw ContractViolation("phi_oracle: repetitions must be at least 1");
    }
    check_limits(order, config);
    Series k1 = phi_constant_term(1, order, config.prune);
    check_partition_gate(k1);
    Series phi4 = phi_constant_term(4, order, config.prune);
    check_garvan_gate(phi4, cphi_oracle(4, order, config));
    if (repetitions == 1) {
        return k1;
    }
    return repetitions == 4 ? phi4 : phi_constant_term(repetitions, order, config.prune);
}

} // namespace qseries
