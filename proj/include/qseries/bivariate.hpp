#pragma once

// Series that are Laurent polynomials in z and truncated power series in q,
// and the constant-term oracles for generalized Frobenius partitions built
// on top of them.

#include <cstddef>
#include <map>

#include "qseries/series.hpp"

namespace qseries {

class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t order) : order_(order) {}

    /// c * z^j * q^t
    static BivariateSeries monomial(const Integer& c, long j, std::size_t t, std::size_t order);

    std::size_t order() const noexcept { return order_; }
    /// Retained entries, keyed by z-exponent. Every entry is nonzero.
    const std::map<long, Series>& entries() const noexcept { return entries_; }

    /// The q-series multiplying z^j (zero if no such entry).
    Series z_coeff(long j) const;
    /// Exact q-valuation of the z^j entry, nullopt when absent.
    std::optional<std::size_t> valuation(long j) const;

    /// Adds s to the z^j entry; the entry is dropped if it becomes zero.
    void accumulate(long j, const Series& s);
    /// Drops every entry for which keep(j, valuation) is false.
    template <typename Pred>
    void prune_if_not(Pred keep)
    {
        std::erase_if(entries_, [&](const auto& kv) { return !keep(kv.first, *kv.second.valuation()); });
    }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::size_t order_;
    std::map<long, Series> entries_;
};

/// Convolution in z, truncated multiplication in q. Zero entries are pruned.
BivariateSeries bimul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries biadd(const BivariateSeries& a, const BivariateSeries& b);

struct OracleConfig {
    std::size_t max_order = 60;
    /// Also drop entries that can no longer reach z^0 within the order.
    bool prune = true;
};

/// cphi_k(0..N): constant term in z of
///     prod_{m>=1} (1 + z q^m)^k * prod_{m>=0} (1 + z^{-1} q^m)^k.
/// Every call runs the k = 1 partition-number gate first and throws
/// OracleError if it fails, or if N exceeds config.max_order.
Series cphi_oracle(int colors, std::size_t order, const OracleConfig& config = {});

/// phi_k(0..N): constant term in z of
///     prod_{m>=1} (sum_{i<=k} z^i q^{im}) * prod_{m>=0} (sum_{i<=k} z^{-i} q^{im}).
/// Gated twice: k = 1 must give p(n), and phi_4 must agree with cphi_4
/// modulo 5 on 0..N. Throws OracleError when a gate fails.
Series phi_oracle(int repetitions, std::size_t order, const OracleConfig& config = {});

/// Raw constant-term expansions without any gate.
Series cphi_constant_term(int colors, std::size_t order, bool prune);
Series phi_constant_term(int repetitions, std::size_t order, bool prune);

/// p(0..N) from Euler's pentagonal recurrence.
Series partition_numbers(std::size_t order);

/// Gate checks, exposed so the failure path can be exercised directly.
void check_partition_gate(const Series& k1_output);
void check_garvan_gate(const Series& phi4, const Series& cphi4);

} // namespace qseries
