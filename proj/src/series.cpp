#include "qseries/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qseries/error.hpp"

namespace qseries {

namespace {

std::string modulus_text(const std::optional<Integer>& m)
{
    return m ? m->get_str() : std::string("none");
}

void require_compatible(const Series& a, const Series& b, const char* op)
{
    if (a.order() != b.order()) {
        throw ContractViolation(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
    }
    if (a.modulus() != b.modulus()) {
        throw ContractViolation(std::string(op) + ": modulus mismatch (" + modulus_text(a.modulus()) +
                                " vs " + modulus_text(b.modulus()) + ")");
    }
}

std::vector<std::size_t> nonzero_positions(std::span<const Integer> c)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

// res[0 .. la+lb-2] += a * b, full (untruncated) product. res must be zeroed
// by the caller and have room for la + lb - 1 entries.
void schoolbook_full(const Integer* a, std::size_t la, const Integer* b, std::size_t lb, Integer* res)
{
    for (std::size_t i = 0; i < la; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < lb; ++j) {
            mpz_addmul(res[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

// Full product of two equal-length blocks, written (added) into res[0 .. 2n-2].
void karatsuba(const Integer* a, const Integer* b, std::size_t n, Integer* res, std::size_t threshold)
{
    if (n < threshold || n < 4) {
        schoolbook_full(a, n, b, n, res);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;

    // z0 = a_lo * b_lo, z2 = a_hi * b_hi, z1 = (a_lo + a_hi)(b_lo + b_hi) - z0 - z2
    std::vector<Integer> z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba(a, b, lo, z0.data(), threshold);
    karatsuba(a + lo, b + lo, hi, z2.data(), threshold);

    std::vector<Integer> sa(hi), sb(hi);
    for (std::size_t i = 0; i < hi; ++i) {
        sa[i] = a[lo + i];
        sb[i] = b[lo + i];
        if (i < lo) {
            sa[i] += a[i];
            sb[i] += b[i];
        }
    }
    karatsuba(sa.data(), sb.data(), hi, z1.data(), threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) {
        z1[i] -= z0[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        z1[i] -= z2[i];
    }

    for (std::size_t i = 0; i < z0.size(); ++i) {
        res[i] += z0[i];
    }
    for (std::size_t i = 0; i < z1.size(); ++i) {
        res[lo + i] += z1[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        res[2 * lo + i] += z2[i];
    }
}

} // namespace

Series::Series(std::size_t order, std::optional<Integer> modulus)
    : coeffs_(order + 1), modulus_(std::move(modulus))
{
    if (modulus_ && *modulus_ < 2) {
        throw ContractViolation("modulus must be at least 2, got " + modulus_->get_str());
    }
}

Series::Series(std::vector<Integer> coeffs, std::optional<Integer> modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus))
{
    if (coeffs_.empty()) {
        throw ContractViolation("a series needs at least one coefficient");
    }
    if (modulus_) {
        if (*modulus_ < 2) {
            throw ContractViolation("modulus must be at least 2, got " + modulus_->get_str());
        }
        for (auto& c : coeffs_) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_->get_mpz_t());
        }
    }
}

Series Series::one(std::size_t order, std::optional<Integer> modulus)
{
    return monomial(1, 0, order, std::move(modulus));
}

Series Series::monomial(const Integer& c, std::size_t t, std::size_t order, std::optional<Integer> modulus)
{
    std::vector<Integer> v(order + 1);
    if (t <= order) {
        v[t] = c;
    }
    return Series(std::move(v), std::move(modulus));
}

const Integer& Series::coeff(std::size_t n) const
{
    if (n > order()) {
        throw ContractViolation("coefficient index " + std::to_string(n) + " exceeds order " +
                                std::to_string(order()));
    }
    return coeffs_[n];
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::optional<std::size_t> Series::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Series::nonzero_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

Series Series::truncate(std::size_t order) const
{
    if (order > this->order()) {
        throw ContractViolation("cannot truncate a series of order " + std::to_string(this->order()) +
                                " to the higher order " + std::to_string(order));
    }
    return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1),
                  modulus_);
}

bool operator==(const Series& a, const Series& b)
{
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
}

Series add(const Series& a, const Series& b)
{
    require_compatible(a, b, "add");
    std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] += b[i];
    }
    return Series(std::move(v), a.modulus());
}

Series sub(const Series& a, const Series& b)
{
    require_compatible(a, b, "sub");
    std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] -= b[i];
    }
    return Series(std::move(v), a.modulus());
}

Series neg(const Series& a)
{
    std::vector<Integer> v(a.order() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = -a[i];
    }
    return Series(std::move(v), a.modulus());
}

Series scale(const Series& a, const Integer& c)
{
    std::vector<Integer> v(a.order() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a[i] * c;
    }
    return Series(std::move(v), a.modulus());
}

Series shift(const Series& a, std::size_t s)
{
    std::vector<Integer> v(a.order() + 1);
    for (std::size_t i = s; i < v.size(); ++i) {
        v[i] = a[i - s];
    }
    return Series(std::move(v), a.modulus());
}

Series mul(const Series& a, const Series& b, const MulOptions& options)
{
    require_compatible(a, b, "mul");
    const std::size_t len = a.order() + 1;
    std::vector<Integer> res(len);

    if (options.karatsuba_threshold > 0 && len >= options.karatsuba_threshold) {
        std::vector<Integer> full(2 * len - 1);
        karatsuba(a.coeffs().data(), b.coeffs().data(), len, full.data(), options.karatsuba_threshold);
        std::move(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(len), res.begin());
        return Series(std::move(res), a.modulus());
    }

    // Iterate the sparser operand in the outer loop; theta functions and
    // Pochhammer products are mostly zeros.
    const bool a_outer = a.nonzero_count() <= b.nonzero_count();
    const Series& outer = a_outer ? a : b;
    const Series& inner = a_outer ? b : a;
    const auto inner_nz = nonzero_positions(inner.coeffs());

    for (std::size_t i : nonzero_positions(outer.coeffs())) {
        mpz_srcptr x = outer[i].get_mpz_t();
        const std::size_t room = len - i;
        for (std::size_t j : inner_nz) {
            if (j >= room) {
                break;
            }
            mpz_addmul(res[i + j].get_mpz_t(), x, inner[j].get_mpz_t());
        }
    }
    return Series(std::move(res), a.modulus());
}

Series invert(const Series& a)
{
    const Integer& c0 = a[0];
    Integer inv0;
    if (a.modulus()) {
        if (mpz_invert(inv0.get_mpz_t(), c0.get_mpz_t(), a.modulus()->get_mpz_t()) == 0) {
            throw InversionError("constant term " + c0.get_str() + " is not a unit modulo " +
                                 a.modulus()->get_str());
        }
    } else {
        if (c0 != 1 && c0 != -1) {
            throw InversionError("constant term " + c0.get_str() + " is not a unit in Z");
        }
        inv0 = c0;
    }

    const std::size_t len = a.order() + 1;
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k < len; ++k) {
        if (sgn(a[k]) != 0) {
            nz.push_back(k);
        }
    }

    // b_n = -inv0 * sum_{k=1..n} a_k b_{n-k}
    std::vector<Integer> b(len);
    b[0] = inv0;
    Integer acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k : nz) {
            if (k > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = -inv0 * acc;
        if (a.modulus()) {
            mpz_fdiv_r(b[n].get_mpz_t(), b[n].get_mpz_t(), a.modulus()->get_mpz_t());
        }
    }
    return Series(std::move(b), a.modulus());
}

Series pow(const Series& a, long e, const MulOptions& options)
{
    if (e < 0) {
        return pow(invert(a), -e, options);
    }
    Series result = Series::one(a.order(), a.modulus());
    Series base = a;
    auto n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1UL) {
            result = mul(result, base, options);
        }
        n >>= 1;
        if (n != 0) {
            base = mul(base, base, options);
        }
    }
    return result;
}

Series substitute_power(const Series& a, std::size_t t)
{
    return substitute_power(a, t, a.order());
}

Series substitute_power(const Series& a, std::size_t t, std::size_t order)
{
    if (t == 0) {
        throw ContractViolation("substitute_power: t must be positive");
    }
    if (order / t > a.order()) {
        throw ContractViolation("substitute_power: operand of order " + std::to_string(a.order()) +
                                " cannot fill order " + std::to_string(order) + " under q -> q^" +
                                std::to_string(t));
    }
    std::vector<Integer> v(order + 1);
    for (std::size_t n = 0; n * t <= order; ++n) {
        v[n * t] = a[n];
    }
    return Series(std::move(v), a.modulus());
}

Series dissect(const Series& a, std::size_t t, std::size_t r)
{
    if (t == 0) {
        throw ContractViolation("dissect: step must be positive");
    }
    if (r >= t) {
        throw ContractViolation("dissect: residue " + std::to_string(r) + " must be below step " +
                                std::to_string(t));
    }
    if (r > a.order()) {
        throw ContractViolation("dissect: residue " + std::to_string(r) + " exceeds order " +
                                std::to_string(a.order()));
    }
    const std::size_t order = (a.order() - r) / t;
    std::vector<Integer> v(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        v[n] = a[t * n + r];
    }
    return Series(std::move(v), a.modulus());
}

Series reduce_mod(const Series& a, const Integer& m)
{
    if (a.modulus()) {
        throw ContractViolation("reduce_mod: series is already reduced modulo " + a.modulus()->get_str());
    }
    if (m < 2) {
        throw ContractViolation("reduce_mod: modulus must be at least 2, got " + m.get_str());
    }
    return Series(std::vector<Integer>(a.coeffs().begin(), a.coeffs().end()), m);
}

} // namespace qseries
