#include "qseries/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse()
    {
        ExprPtr e = expression();
        skip_ws();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    ExprPtr expression()
    {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = lhs + term();
            } else if (accept('-')) {
                lhs = lhs - term();
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term()
    {
        ExprPtr lhs = factor();
        while (accept('*')) {
            lhs = lhs * factor();
        }
        return lhs;
    }

    ExprPtr factor()
    {
        ExprPtr base = atom();
        if (accept('^')) {
            return power(std::move(base), signed_int());
        }
        return base;
    }

    ExprPtr atom()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return monomial(big_uint(), 0);
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression();
            expect(')');
            return e;
        }
        if (c == '$') {
            ++pos_;
            std::string name = word(true);
            if (name.empty()) {
                fail("expected a series name after '$'");
            }
            return ref(std::move(name));
        }
        const std::string kw = word(false);
        if (kw == "q") {
            expect('^');
            return monomial(1, unsigned_int());
        }
        if (kw.empty()) {
            fail(std::string("unexpected '") + c + "'");
        }
        expect('(');
        if (kw == "P" || kw == "Pneg") {
            const std::size_t a = positive_int("offset");
            expect(',');
            const std::size_t b = positive_int("step");
            expect(',');
            skip_ws();
            const std::size_t at = pos_;
            const long e = signed_int();
            expect(')');
            if (e == 0) {
                fail_at("Pochhammer exponent must be nonzero", at);
            }
            return pochhammer(kw == "P" ? 1 : -1, a, b, e);
        }
        if (kw == "phi" || kw == "psi") {
            const std::size_t t = positive_int("substitution power");
            expect(')');
            return kw == "phi" ? phi(t) : psi(t);
        }
        if (kw == "inv") {
            ExprPtr e = expression();
            expect(')');
            return invert(std::move(e));
        }
        if (kw == "sub") {
            ExprPtr e = expression();
            expect(',');
            const std::size_t t = positive_int("substitution power");
            expect(')');
            return substitute(std::move(e), t);
        }
        if (kw == "dissect") {
            ExprPtr e = expression();
            expect(',');
            const std::size_t t = positive_int("dissection step");
            expect(',');
            skip_ws();
            const std::size_t at = pos_;
            const std::size_t r = unsigned_int();
            expect(')');
            if (r >= t) {
                fail_at("dissection residue " + std::to_string(r) + " must be below the step " + std::to_string(t),
                        at);
            }
            return dissect(std::move(e), t, r);
        }
        if (kw == "mod") {
            ExprPtr e = expression();
            expect(',');
            skip_ws();
            const std::size_t at = pos_;
            Integer m = big_uint();
            expect(')');
            if (m < 2) {
                fail_at("modulus must be at least 2", at);
            }
            return reduce(std::move(e), std::move(m));
        }
        fail_at("unknown function '" + kw + "'", start);
    }

    // Letters (and, for names, digits and '_') at the current position.
    std::string word(bool name)
    {
        const std::size_t start = pos_;
        while (!at_end()) {
            const auto ch = static_cast<unsigned char>(text_[pos_]);
            if (std::isalpha(ch) || (name && (std::isdigit(ch) || ch == '_'))) {
                ++pos_;
            } else {
                break;
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer big_uint()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t unsigned_int()
    {
        skip_ws();
        const std::size_t start = pos_;
        const Integer v = big_uint();
        if (!v.fits_slong_p()) {
            fail_at("integer out of range", start);
        }
        return static_cast<std::size_t>(v.get_si());
    }

    std::size_t positive_int(const char* what)
    {
        skip_ws();
        const std::size_t start = pos_;
        const std::size_t v = unsigned_int();
        if (v == 0) {
            fail_at(std::string(what) + " must be at least 1", start);
        }
        return v;
    }

    long signed_int()
    {
        skip_ws();
        const std::size_t start = pos_;
        const bool negative = accept('-');
        Integer v = big_uint();
        if (negative) {
            v = -v;
        }
        if (!v.fits_slong_p()) {
            fail_at("integer out of range", start);
        }
        return v.get_si();
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }

    bool accept(char c)
    {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string& what)
    {
        skip_ws();
        fail_at(what, pos_);
    }

    [[noreturn]] void fail_at(const std::string& what, std::size_t offset)
    {
        throw ParseError("syntax error: " + what, offset + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace qseries
