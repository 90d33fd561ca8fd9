#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ezd/monomial.hpp"
#include "ezd/scalar.hpp"

namespace ezd {

// Multivariate polynomial in canonical form: terms strictly descending under
// the active order, no zero coefficients, no duplicate monomials.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Scalar>;

    Polynomial(FieldSpec field, std::size_t nvars, MonomialOrder ord = MonomialOrder::grevlex)
        : field_(field), nvars_(nvars), order_(ord) {}

    static Polynomial zero(FieldSpec f, std::size_t nvars, MonomialOrder ord = MonomialOrder::grevlex) {
        return Polynomial(f, nvars, ord);
    }
    static Polynomial constant(FieldSpec f, std::size_t nvars, const Scalar& c,
                               MonomialOrder ord = MonomialOrder::grevlex) {
        Polynomial p(f, nvars, ord);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(nvars), c);
        return p;
    }
    static Polynomial term(FieldSpec f, Monomial m, const Scalar& c, MonomialOrder ord = MonomialOrder::grevlex) {
        Polynomial p(f, m.nvars(), ord);
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
        return p;
    }
    static Polynomial variable(FieldSpec f, std::size_t nvars, std::size_t i,
                               MonomialOrder ord = MonomialOrder::grevlex) {
        return term(f, Monomial::var(nvars, i), Scalar::one(f), ord);
    }

    // Build from arbitrary (monomial, coefficient) pairs; collects and sorts.
    static Polynomial from_terms(FieldSpec f, std::size_t nvars, std::vector<Term> raw,
                                 MonomialOrder ord = MonomialOrder::grevlex) {
        Polynomial p(f, nvars, ord);
        auto cmp = [ord](const Monomial& a, const Monomial& b) { return monomial_less(b, a, ord); };
        std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
        for (auto& [m, c] : raw) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), c);
            else
                it->second += c;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& leading_monomial() const { return terms_.front().first; }
    const Scalar& leading_coefficient() const { return terms_.front().second; }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.front().first.degree();
        for (auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Polynomial with_order(MonomialOrder ord) const {
        if (ord == order_) return *this;
        return from_terms(field_, nvars_, terms_, ord);
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        Polynomial r(field_, nvars_, order_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size()) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                switch (monomial_compare(terms_[i].first, o.terms_[j].first, order_)) {
                    case Ordering::greater: r.terms_.push_back(terms_[i++]); break;
                    case Ordering::less: r.terms_.push_back(o.terms_[j++]); break;
                    case Ordering::equal: {
                        Scalar c = terms_[i].second + o.terms_[j].second;
                        if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
                        ++i;
                        ++j;
                        break;
                    }
                }
            }
        }
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(field_, nvars_, order_);
        for (auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        std::vector<Term> raw;
        raw.reserve(terms_.size() * o.terms_.size());
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) raw.emplace_back(ma * mb, ca * cb);
        return from_terms(field_, nvars_, std::move(raw), order_);
    }
    Polynomial operator*(const Scalar& s) const {
        Polynomial r(field_, nvars_, order_);
        if (s.is_zero()) return r;
        for (auto& [m, c] : terms_) r.terms_.emplace_back(m, c * s);
        return r;
    }
    // multiply by a single term c*m
    Polynomial times_term(const Monomial& m, const Scalar& c) const {
        Polynomial r(field_, nvars_, order_);
        if (c.is_zero()) return r;
        for (auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
        return r;
    }
    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading_coefficient().inverse();
    }

    bool operator==(const Polynomial& o) const {
        return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Render using the grammar accepted by the parser; "0" for zero.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string coef = c.str();
            bool neg = !coef.empty() && coef[0] == '-';
            if (neg) coef.erase(0, 1);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m.exponent(i) == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (m.exponent(i) > 1) mono += "^" + std::to_string(m.exponent(i));
            }
            if (mono.empty())
                out += coef;
            else if (coef == "1")
                out += mono;
            else
                out += coef + "*" + mono;
        }
        return out;
    }

  private:
    void check(const Polynomial& o) const {
        if (!(field_ == o.field_) || nvars_ != o.nvars_)
            throw Error(ErrorKind::FieldMismatch, "polynomial field/variable mismatch");
    }

    FieldSpec field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

}  // namespace ezd
