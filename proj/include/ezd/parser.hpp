#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "ezd/polynomial.hpp"

namespace ezd {

// Recursive-descent parser for the polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR | VAR '^' INT | '(' expr ')' | '-' factor
// Implicit multiplication is not allowed. Errors report the byte offset.
class PolynomialParser {
  public:
    PolynomialParser(std::string_view src, const std::vector<std::string>& vars, FieldSpec field,
                     MonomialOrder ord = MonomialOrder::grevlex)
        : src_(src), vars_(vars), field_(field), ord_(ord) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                p = p + term();
            else if (accept('-'))
                p = p - term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '/') fail("division is not allowed");
            if (accept('*'))
                p = p * factor();
            else
                return p;
        }
    }

    Polynomial factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = integer();
            return Polynomial::constant(field_, vars_.size(), Scalar::from_int(field_, n), ord_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            std::size_t vi = vars_.size();
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) {
                    vi = i;
                    break;
                }
            if (vi == vars_.size())
                throw Error(ErrorKind::UnknownVariable,
                            "unknown variable '" + name + "' at position " + std::to_string(start));
            int e = 1;
            skip_ws();
            if (accept('^')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                long long n = integer();
                if (n < 0 || n > 10000) fail("exponent out of range");
                e = static_cast<int>(n);
            }
            return Polynomial::term(field_, Monomial::var(vars_.size(), vi, e), Scalar::one(field_), ord_);
        }
        if (c == '/') fail("division is not allowed");
        fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
        return Polynomial::zero(field_, vars_.size(), ord_);  // unreachable
    }

    long long integer() {
        long long n = 0;
        std::size_t digits = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            if (++digits > 18) fail("integer literal too long");
            n = n * 10 + (src_[pos_++] - '0');
        }
        return n;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_));
    }

    std::string_view src_;
    const std::vector<std::string>& vars_;
    FieldSpec field_;
    MonomialOrder ord_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view src, const std::vector<std::string>& vars, FieldSpec field,
                                   MonomialOrder ord = MonomialOrder::grevlex) {
    return PolynomialParser(src, vars, field, ord).parse();
}

}  // namespace ezd
