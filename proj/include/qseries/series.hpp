#pragma once

// Truncated univariate formal power series with exact coefficients.
//
// A Series of order N stores the coefficients of q^0 .. q^N. Every
// operation is exact on those exponents and discards anything higher.
// Coefficients live either in Z (arbitrary precision, GMP) or in Z/m, in
// which case they are kept as canonical residues in [0, m).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;

class Series {
public:
    /// The zero series of the given order.
    explicit Series(std::size_t order, std::optional<Integer> modulus = std::nullopt);

    /// Takes ownership of `coeffs`; order becomes coeffs.size() - 1. With a
    /// modulus every coefficient is reduced into [0, m).
    Series(std::vector<Integer> coeffs, std::optional<Integer> modulus = std::nullopt);

    static Series one(std::size_t order, std::optional<Integer> modulus = std::nullopt);
    /// c * q^t, or zero when t > order.
    static Series monomial(const Integer& c, std::size_t t, std::size_t order,
                           std::optional<Integer> modulus = std::nullopt);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::optional<Integer>& modulus() const noexcept { return modulus_; }

    /// Coefficient of q^n; throws ContractViolation for n > order().
    const Integer& coeff(std::size_t n) const;
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, or nullopt for zero.
    std::optional<std::size_t> valuation() const;
    std::size_t nonzero_count() const;

    /// Explicit retruncation to a lower (or equal) order.
    Series truncate(std::size_t order) const;

    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Integer> coeffs_;
    std::optional<Integer> modulus_;
};

struct MulOptions {
    /// Operand length from which Karatsuba is used; 0 disables it.
    std::size_t karatsuba_threshold = 0;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const Integer& c);
/// Multiply by q^s (higher terms fall off).
Series shift(const Series& a, std::size_t s);

Series mul(const Series& a, const Series& b, const MulOptions& options = {});
Series invert(const Series& a);
Series pow(const Series& a, long e, const MulOptions& options = {});

/// a(q^t), truncated to a.order().
Series substitute_power(const Series& a, std::size_t t);
/// a(q^t) written into a series of an explicit (possibly larger) order.
Series substitute_power(const Series& a, std::size_t t, std::size_t order);

/// Sum over n of coeff(t*n + r) q^n; order becomes floor((N - r) / t).
Series dissect(const Series& a, std::size_t t, std::size_t r);

/// Canonical residues in [0, m) of an integer series.
Series reduce_mod(const Series& a, const Integer& m);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

} // namespace qseries
