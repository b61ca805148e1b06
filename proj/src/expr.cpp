#include "qseries/expr.hpp"

#include <type_traits>

#include "qseries/error.hpp"

namespace qseries {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExprPtr make(SeriesExpr::Node node)
{
    return std::make_shared<const SeriesExpr>(std::move(node));
}

void require_operand(const ExprPtr& p)
{
    if (!p) {
        throw ContractViolation("null expression operand");
    }
}

} // namespace

ExprPtr pochhammer(int sign, std::size_t offset, std::size_t step, long exponent)
{
    PochhammerFactor f{sign, offset, step, exponent};
    f.validate();
    return make(expr::Pochhammer{f});
}

ExprPtr phi(std::size_t t)
{
    if (t == 0) {
        throw ContractViolation("phi(q^t) needs t >= 1");
    }
    return make(expr::Theta{expr::Theta::Kind::phi, t});
}

ExprPtr psi(std::size_t t)
{
    if (t == 0) {
        throw ContractViolation("psi(q^t) needs t >= 1");
    }
    return make(expr::Theta{expr::Theta::Kind::psi, t});
}

ExprPtr monomial(Integer c, std::size_t t)
{
    return make(expr::Monomial{std::move(c), t});
}

ExprPtr ref(std::string name)
{
    if (name.empty()) {
        throw ContractViolation("empty series name");
    }
    return make(expr::Ref{std::move(name)});
}

ExprPtr operator+(ExprPtr a, ExprPtr b)
{
    require_operand(a);
    require_operand(b);
    return make(expr::Binary{expr::Binary::Op::add, std::move(a), std::move(b)});
}

ExprPtr operator-(ExprPtr a, ExprPtr b)
{
    require_operand(a);
    require_operand(b);
    return make(expr::Binary{expr::Binary::Op::sub, std::move(a), std::move(b)});
}

ExprPtr operator*(ExprPtr a, ExprPtr b)
{
    require_operand(a);
    require_operand(b);
    return make(expr::Binary{expr::Binary::Op::mul, std::move(a), std::move(b)});
}

ExprPtr power(ExprPtr base, long e)
{
    require_operand(base);
    return make(expr::Power{std::move(base), e});
}

ExprPtr invert(ExprPtr a)
{
    require_operand(a);
    return make(expr::Invert{std::move(a)});
}

ExprPtr substitute(ExprPtr a, std::size_t t)
{
    require_operand(a);
    if (t == 0) {
        throw ContractViolation("sub(., t) needs t >= 1");
    }
    return make(expr::Substitute{std::move(a), t});
}

ExprPtr dissect(ExprPtr a, std::size_t step, std::size_t residue)
{
    require_operand(a);
    if (step == 0) {
        throw ContractViolation("dissect(., t, r) needs t >= 1");
    }
    if (residue >= step) {
        throw ContractViolation("dissect(., t, r) needs r < t, got t = " + std::to_string(step) +
                                ", r = " + std::to_string(residue));
    }
    return make(expr::Dissect{std::move(a), step, residue});
}

ExprPtr reduce(ExprPtr a, Integer m)
{
    require_operand(a);
    if (m < 2) {
        throw ContractViolation("mod(., m) needs m >= 2, got " + m.get_str());
    }
    return make(expr::Reduce{std::move(a), std::move(m)});
}

bool same_tree(const SeriesExpr& a, const SeriesExpr& b)
{
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node());
            if constexpr (std::is_same_v<T, expr::Pochhammer>) {
                return x.factor == y.factor;
            } else if constexpr (std::is_same_v<T, expr::Theta>) {
                return x.kind == y.kind && x.t == y.t;
            } else if constexpr (std::is_same_v<T, expr::Monomial>) {
                return x.coefficient == y.coefficient && x.power == y.power;
            } else if constexpr (std::is_same_v<T, expr::Ref>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, expr::Binary>) {
                return x.op == y.op && same_tree(*x.lhs, *y.lhs) && same_tree(*x.rhs, *y.rhs);
            } else if constexpr (std::is_same_v<T, expr::Power>) {
                return x.exponent == y.exponent && same_tree(*x.base, *y.base);
            } else if constexpr (std::is_same_v<T, expr::Invert>) {
                return same_tree(*x.operand, *y.operand);
            } else if constexpr (std::is_same_v<T, expr::Substitute>) {
                return x.t == y.t && same_tree(*x.operand, *y.operand);
            } else if constexpr (std::is_same_v<T, expr::Dissect>) {
                return x.step == y.step && x.residue == y.residue && same_tree(*x.operand, *y.operand);
            } else {
                return x.modulus == y.modulus && same_tree(*x.operand, *y.operand);
            }
        },
        a.node());
}

namespace {

// Binding strength used to decide where parentheses are needed.
enum Prec { additive = 1, multiplicative = 2, exponent = 3, atom = 4 };

int precedence(const SeriesExpr& e)
{
    return std::visit(overloaded{
                          [](const expr::Binary& b) {
                              return b.op == expr::Binary::Op::mul ? int(multiplicative) : int(additive);
                          },
                          [](const expr::Power&) { return int(exponent); },
                          [](const expr::Monomial& m) {
                              // c*q^t with c != 1 and t > 0 prints as a product
                              return (m.power > 0 && m.coefficient != 1) || m.coefficient < 0 ? int(multiplicative)
                                                                                            : int(atom);
                          },
                          [](const auto&) { return int(atom); },
                      },
                      e.node());
}

void print(const SeriesExpr& e, std::string& out);

void print_wrapped(const SeriesExpr& e, bool wrap, std::string& out)
{
    if (wrap) {
        out += '(';
    }
    print(e, out);
    if (wrap) {
        out += ')';
    }
}

void print(const SeriesExpr& e, std::string& out)
{
    std::visit(overloaded{
                   [&](const expr::Pochhammer& p) {
                       out += p.factor.sign > 0 ? "P(" : "Pneg(";
                       out += std::to_string(p.factor.offset) + "," + std::to_string(p.factor.step) + "," +
                              std::to_string(p.factor.exponent) + ")";
                   },
                   [&](const expr::Theta& t) {
                       out += t.kind == expr::Theta::Kind::phi ? "phi(" : "psi(";
                       out += std::to_string(t.t) + ")";
                   },
                   [&](const expr::Monomial& m) {
                       if (m.power == 0) {
                           out += m.coefficient.get_str();
                       } else if (m.coefficient == 1) {
                           out += "q^" + std::to_string(m.power);
                       } else {
                           out += m.coefficient.get_str() + "*q^" + std::to_string(m.power);
                       }
                   },
                   [&](const expr::Ref& r) { out += "$" + r.name; },
                   [&](const expr::Binary& b) {
                       const int p = precedence(e);
                       print_wrapped(*b.lhs, precedence(*b.lhs) < p, out);
                       out += b.op == expr::Binary::Op::add ? " + " : b.op == expr::Binary::Op::sub ? " - " : "*";
                       print_wrapped(*b.rhs, precedence(*b.rhs) <= p, out);
                   },
                   [&](const expr::Power& p) {
                       print_wrapped(*p.base, precedence(*p.base) < atom, out);
                       out += "^" + std::to_string(p.exponent);
                   },
                   [&](const expr::Invert& i) {
                       out += "inv(";
                       print(*i.operand, out);
                       out += ")";
                   },
                   [&](const expr::Substitute& s) {
                       out += "sub(";
                       print(*s.operand, out);
                       out += "," + std::to_string(s.t) + ")";
                   },
                   [&](const expr::Dissect& d) {
                       out += "dissect(";
                       print(*d.operand, out);
                       out += "," + std::to_string(d.step) + "," + std::to_string(d.residue) + ")";
                   },
                   [&](const expr::Reduce& r) {
                       out += "mod(";
                       print(*r.operand, out);
                       out += "," + r.modulus.get_str() + ")";
                   },
               },
               e.node());
}

} // namespace

std::string to_string(const SeriesExpr& e)
{
    std::string out;
    print(e, out);
    return out;
}

void Environment::bind(std::string name, Provider provider)
{
    providers_.insert_or_assign(std::move(name), std::move(provider));
}

void Environment::bind_series(std::string name, Series s)
{
    const std::string label = name;
    bind(std::move(name), [s = std::move(s), label](std::size_t order) {
        if (order > s.order()) {
            throw EvaluationError("series '" + label + "' is only known to order " + std::to_string(s.order()) +
                                  ", order " + std::to_string(order) + " requested");
        }
        return s.truncate(order);
    });
}

Series Environment::lookup(const std::string& name, std::size_t order) const
{
    auto it = providers_.find(name);
    if (it == providers_.end()) {
        throw EvaluationError("unbound series name '" + name + "'");
    }
    Series s = it->second(order);
    if (s.order() != order) {
        throw EvaluationError("provider for '" + name + "' returned order " + std::to_string(s.order()) +
                              " instead of " + std::to_string(order));
    }
    return s;
}

Series evaluate(const SeriesExpr& e, std::size_t order, const Environment& env, ExpansionCache* cache)
{
    ExpansionCache local;
    ExpansionCache* c = cache ? cache : &local;
    return std::visit(
        overloaded{
            [&](const expr::Pochhammer& p) { return expand_pochhammer(p.factor, order, c); },
            [&](const expr::Theta& t) {
                return t.kind == expr::Theta::Kind::phi ? theta_phi(t.t, order) : theta_psi(t.t, order);
            },
            [&](const expr::Monomial& m) { return Series::monomial(m.coefficient, m.power, order); },
            [&](const expr::Ref& r) { return env.lookup(r.name, order); },
            [&](const expr::Binary& b) {
                Series lhs = evaluate(*b.lhs, order, env, c);
                Series rhs = evaluate(*b.rhs, order, env, c);
                switch (b.op) {
                case expr::Binary::Op::add:
                    return add(lhs, rhs);
                case expr::Binary::Op::sub:
                    return sub(lhs, rhs);
                default:
                    return mul(lhs, rhs);
                }
            },
            [&](const expr::Power& p) { return pow(evaluate(*p.base, order, env, c), p.exponent); },
            [&](const expr::Invert& i) { return qseries::invert(evaluate(*i.operand, order, env, c)); },
            [&](const expr::Substitute& s) {
                return substitute_power(evaluate(*s.operand, order / s.t, env, c), s.t, order);
            },
            [&](const expr::Dissect& d) {
                const std::size_t inner = d.step * order + d.residue;
                return qseries::dissect(evaluate(*d.operand, inner, env, c), d.step, d.residue);
            },
            [&](const expr::Reduce& r) { return reduce_mod(evaluate(*r.operand, order, env, c), r.modulus); },
        },
        e.node());
}

} // namespace qseries
