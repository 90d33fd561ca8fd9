#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ezd/error.hpp"

namespace ezd {

enum class MonomialOrder { grevlex, lex, grlex };
enum class Ordering { less, equal, greater };

// Exponent vector with cached total degree. Variable i is the i-th slot;
// earlier variables are larger in every supported order.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
    }
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
        std::vector<int> v(nvars, 0);
        v[i] = e;
        return Monomial(std::move(v));
    }

    std::size_t nvars() const { return exps_.size(); }
    int degree() const { return degree_; }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check(o);
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + o.exps_[i];
        return Monomial(std::move(v));
    }

    bool divides(const Monomial& o) const {
        check(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }
    // quotient o / this; require divides
    Monomial quotient_into(const Monomial& o) const {
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = o.exps_[i] - exps_[i];
        return Monomial(std::move(v));
    }
    Monomial lcm(const Monomial& o) const {
        check(o);
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(exps_[i], o.exps_[i]);
        return Monomial(std::move(v));
    }
    bool coprime(const Monomial& o) const {
        check(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  private:
    void check(const Monomial& o) const {
        if (exps_.size() != o.exps_.size()) throw Error(ErrorKind::ArityMismatch, "monomial arity mismatch");
    }
    std::vector<int> exps_;
    int degree_ = 0;
};

inline Ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (a.nvars() != b.nvars()) throw Error(ErrorKind::ArityMismatch, "monomial arity mismatch");
    auto from_int = [](int c) { return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal; };
    const std::size_t n = a.nvars();
    switch (ord) {
        case MonomialOrder::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a.exponent(i) != b.exponent(i)) return from_int(a.exponent(i) - b.exponent(i));
            return Ordering::equal;
        case MonomialOrder::grlex:
            if (a.degree() != b.degree()) return from_int(a.degree() - b.degree());
            for (std::size_t i = 0; i < n; ++i)
                if (a.exponent(i) != b.exponent(i)) return from_int(a.exponent(i) - b.exponent(i));
            return Ordering::equal;
        case MonomialOrder::grevlex:
            if (a.degree() != b.degree()) return from_int(a.degree() - b.degree());
            // degree tie: the last variable where exponents differ decides, smaller wins
            for (std::size_t i = n; i-- > 0;)
                if (a.exponent(i) != b.exponent(i)) return from_int(b.exponent(i) - a.exponent(i));
            return Ordering::equal;
    }
    return Ordering::equal;
}

inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    return monomial_compare(a, b, ord) == Ordering::less;
}

inline const char* order_name(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::grevlex: return "grevlex";
        case MonomialOrder::lex: return "lex";
        case MonomialOrder::grlex: return "grlex";
    }
    return "?";
}

}  // namespace ezd
