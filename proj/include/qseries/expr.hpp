#pragma once

// Expression trees over series and their evaluation.
//
// Leaves: Pochhammer factors, theta phi(q^t) / psi(q^t), monomials c*q^t and
// named series references. Nodes: +, -, *, integer power, inversion,
// q -> q^t, dissection and reduction modulo m.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "qseries/qproducts.hpp"
#include "qseries/series.hpp"

namespace qseries {

class SeriesExpr;
using ExprPtr = std::shared_ptr<const SeriesExpr>;

namespace expr {

struct Pochhammer {
    PochhammerFactor factor;
};
struct Theta {
    enum class Kind { phi, psi } kind;
    std::size_t t;
};
struct Monomial {
    Integer coefficient;
    std::size_t power;
};
struct Ref {
    std::string name;
};
struct Binary {
    enum class Op { add, sub, mul } op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Power {
    ExprPtr base;
    long exponent;
};
struct Invert {
    ExprPtr operand;
};
struct Substitute {
    ExprPtr operand;
    std::size_t t;
};
struct Dissect {
    ExprPtr operand;
    std::size_t step;
    std::size_t residue;
};
struct Reduce {
    ExprPtr operand;
    Integer modulus;
};

} // namespace expr

class SeriesExpr {
public:
    using Node = std::variant<expr::Pochhammer, expr::Theta, expr::Monomial, expr::Ref, expr::Binary,
                              expr::Power, expr::Invert, expr::Substitute, expr::Dissect, expr::Reduce>;

    explicit SeriesExpr(Node node) : node_(std::move(node)) {}

    const Node& node() const noexcept { return node_; }

private:
    Node node_;
};

// Builders. These validate their arguments and throw ContractViolation.
ExprPtr pochhammer(int sign, std::size_t offset, std::size_t step, long exponent);
ExprPtr phi(std::size_t t);
ExprPtr psi(std::size_t t);
ExprPtr monomial(Integer c, std::size_t t);
ExprPtr ref(std::string name);
ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr power(ExprPtr base, long e);
ExprPtr invert(ExprPtr a);
ExprPtr substitute(ExprPtr a, std::size_t t);
ExprPtr dissect(ExprPtr a, std::size_t step, std::size_t residue);
ExprPtr reduce(ExprPtr a, Integer m);

/// Structural equality of two trees.
bool same_tree(const SeriesExpr& a, const SeriesExpr& b);

/// Renders the tree in the expression language accepted by parse_expr.
std::string to_string(const SeriesExpr& e);

/// Named series available to an evaluation. A provider is asked for a
/// series of exactly the requested order.
class Environment {
public:
    using Provider = std::function<Series(std::size_t order)>;

    void bind(std::string name, Provider provider);
    /// Binds a fixed series; requests above its order fail, lower ones truncate.
    void bind_series(std::string name, Series s);

    bool contains(const std::string& name) const { return providers_.contains(name); }
    Series lookup(const std::string& name, std::size_t order) const;

private:
    std::map<std::string, Provider> providers_;
};

/// Bottom-up evaluation at order N. Subtrees below dissect(., t, r) are
/// evaluated at t*N + r, those below q -> q^t at floor(N / t).
Series evaluate(const SeriesExpr& e, std::size_t order, const Environment& env = {},
                ExpansionCache* cache = nullptr);

} // namespace qseries
