#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ezd/polynomial.hpp"

namespace ezd {

// Reduced Groebner basis of a polynomial ideal, plus the staircase (standard
// monomials) when the ideal is zero-dimensional.
struct GroebnerBasis {
    MonomialOrder order;
    FieldSpec field;
    std::size_t nvars;
    std::vector<Polynomial> generators;        // monic, tail-reduced, pairwise non-dividing LMs
    bool unit_ideal = false;                   // GB == {1}
    std::optional<std::vector<Monomial>> staircase;  // ascending; present iff finite

    bool zero_dimensional() const { return staircase.has_value(); }
};

// Remainder of f on division by gens; supported on standard monomials.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens, MonomialOrder ord) {
    Polynomial rem = Polynomial::zero(f.field(), f.nvars(), ord);
    Polynomial p = f.with_order(ord);
    while (!p.is_zero()) {
        const Monomial& lm = p.leading_monomial();
        const Polynomial* divisor = nullptr;
        for (auto& g : gens)
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                divisor = &g;
                break;
            }
        if (divisor) {
            Scalar c = p.leading_coefficient() / divisor->leading_coefficient();
            p = p - divisor->times_term(divisor->leading_monomial().quotient_into(lm), c);
        } else {
            Polynomial lt = Polynomial::term(f.field(), lm, p.leading_coefficient(), ord);
            rem = rem + lt;
            p = p - lt;
        }
    }
    return rem;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!(f.field() == gb.field) || f.nvars() != gb.nvars)
        throw Error(ErrorKind::FieldMismatch, "normal_form: incompatible polynomial");
    return normal_form(f, gb.generators, gb.order);
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
    Monomial l = a.leading_monomial().lcm(b.leading_monomial());
    Polynomial sa = a.times_term(a.leading_monomial().quotient_into(l), a.leading_coefficient().inverse());
    Polynomial sb = b.times_term(b.leading_monomial().quotient_into(l), b.leading_coefficient().inverse());
    return sa - sb;
}

namespace detail {

// Standard monomials under the leading-term ideal, ascending; nullopt when
// infinite. Breadth-first search bounded by the pure-power leading terms,
// which doubles as the zero-dimensionality check.
inline std::optional<std::vector<Monomial>> enumerate_staircase(const std::vector<Polynomial>& gb,
                                                                std::size_t nvars, MonomialOrder ord,
                                                                std::size_t cap = 1u << 20) {
    // zero-dimensional iff every variable has a pure power among the LMs
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (auto& g : gb) {
            const Monomial& lm = g.leading_monomial();
            bool pure = lm.exponent(v) > 0;
            for (std::size_t w = 0; pure && w < nvars; ++w)
                if (w != v && lm.exponent(w) > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    auto is_standard = [&](const Monomial& m) {
        for (auto& g : gb)
            if (g.leading_monomial().divides(m)) return false;
        return true;
    };
    auto cmp = [ord](const Monomial& a, const Monomial& b) { return monomial_less(a, b, ord); };
    std::set<Monomial, decltype(cmp)> seen(cmp);
    std::vector<Monomial> queue{Monomial::one(nvars)};
    if (is_standard(queue[0])) seen.insert(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t v = 0; v < nvars; ++v) {
            Monomial next = queue[qi] * Monomial::var(nvars, v);
            if (!is_standard(next) || seen.count(next)) continue;
            if (seen.size() >= cap) return std::nullopt;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    return std::vector<Monomial>(seen.begin(), seen.end());
}

}  // namespace detail

// Buchberger with the coprime-LM and chain pair-elimination criteria.
// Selection: smallest lcm under the order, ties by pair index. The output is
// the unique reduced basis of (gens) for the given order.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens_in, MonomialOrder ord) {
    std::vector<Polynomial> basis;
    FieldSpec field = FieldSpec::rationals();
    std::size_t nvars = 0;
    bool have_field = false;
    for (auto& g : gens_in) {
        if (!have_field) {
            field = g.field();
            nvars = g.nvars();
            have_field = true;
        } else if (!(g.field() == field) || g.nvars() != nvars) {
            throw Error(ErrorKind::FieldMismatch, "buchberger: mixed fields or variable counts");
        }
        Polynomial r = g.with_order(ord);
        if (!r.is_zero()) basis.push_back(r.monic());
    }
    if (!have_field) throw Error(ErrorKind::BadInput, "buchberger: no generators");
    if (basis.empty()) throw Error(ErrorKind::BadInput, "buchberger: all generators are zero");

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // normal strategy: smallest lcm first, deterministic tie-break
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            auto c = monomial_compare(pending[k].lcm, pending[best].lcm, ord);
            if (c == Ordering::less ||
                (c == Ordering::equal &&
                 std::pair(pending[k].i, pending[k].j) < std::pair(pending[best].i, pending[best].j)))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        done.insert({pr.i, pr.j});

        const Monomial &li = basis[pr.i].leading_monomial(), &lj = basis[pr.j].leading_monomial();
        if (li.coprime(lj)) continue;
        // chain criterion: some k with LM(k) | lcm(i,j) and both pairs handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return a < b ? std::pair(a, b) : std::pair(b, a);
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        Polynomial rem = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis, ord);
        if (!rem.is_zero()) {
            basis.push_back(rem.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose LM is divisible by another LM
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                !(basis[j].leading_monomial() == basis[i].leading_monomial() && j > i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [ord](const Polynomial& a, const Polynomial& b) {
        return monomial_less(a.leading_monomial(), b.leading_monomial(), ord);
    });

    GroebnerBasis gb{ord, field, nvars, std::move(reduced)};
    gb.unit_ideal = gb.generators.size() == 1 && gb.generators[0].leading_monomial().is_one();
    if (!gb.unit_ideal) gb.staircase = detail::enumerate_staircase(gb.generators, nvars, ord);
    else gb.staircase = std::vector<Monomial>{};
    return gb;
}

}  // namespace ezd
