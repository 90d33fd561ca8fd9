#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ezd/groebner.hpp"
#include "ezd/linalg.hpp"

namespace ezd {

class ArtinianRing;
using RingPtr = std::shared_ptr<const ArtinianRing>;

// Element of an artinian ring, as normal-form coordinates over the
// staircase basis.
struct RingElement {
    RingPtr ring;
    Vector coords;

    bool is_zero() const {
        for (auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// R = K[x_1..x_n]/I presented as a finite-dimensional algebra: staircase
// basis b_1=1,...,b_l, one l x l multiplication matrix per variable, and the
// m-adic filtration R = m^0 > m^1 > ... > m^{s+1} = 0.
class ArtinianRing : public std::enable_shared_from_this<ArtinianRing> {
  public:
    FieldSpec field;
    std::vector<std::string> var_names;
    MonomialOrder order;
    std::vector<Polynomial> ideal_gens;  // the defining generators, as given
    GroebnerBasis gb;
    std::vector<Monomial> basis;  // staircase, ascending; basis[0] == 1
    std::vector<Matrix> mult;     // action of each variable on coordinates
    std::vector<Subspace> filtration;  // filtration[i] == m^i; last is zero
    std::size_t socle_degree = 0;      // m^s != 0, m^{s+1} == 0

    ArtinianRing(FieldSpec f, GroebnerBasis g) : field(f), order(g.order), gb(std::move(g)) {}

    std::size_t length() const { return basis.size(); }
    std::size_t nvars() const { return var_names.size(); }
    const Subspace& maximal_ideal() const { return filtration[1]; }

    RingPtr self() const { return shared_from_this(); }

    std::size_t basis_index(const Monomial& m) const {
        auto it = basis_index_.find(m.exponents());
        if (it == basis_index_.end()) throw Error(ErrorKind::BadInput, "monomial not in staircase");
        return it->second;
    }

    RingElement zero() const { return {self(), Vector(length(), Scalar::zero(field))}; }
    RingElement one() const {
        RingElement e = zero();
        e.coords[0] = Scalar::one(field);
        return e;
    }
    RingElement variable(std::size_t i) const {
        return element(Polynomial::variable(field, nvars(), i, order));
    }

    RingElement element(const Polynomial& f) const {
        Polynomial nf = normal_form(f, gb);
        RingElement e = zero();
        for (auto& [m, c] : nf.terms()) e.coords[basis_index(m)] = c;
        return e;
    }

    Polynomial to_polynomial(const RingElement& a) const {
        std::vector<Polynomial::Term> raw;
        for (std::size_t k = 0; k < length(); ++k)
            if (!a.coords[k].is_zero()) raw.emplace_back(basis[k], a.coords[k]);
        return Polynomial::from_terms(field, nvars(), std::move(raw), order);
    }

    // coordinates of (basis monomial m) * v
    Vector monomial_action(const Monomial& m, Vector v) const {
        for (std::size_t i = 0; i < nvars(); ++i)
            for (int e = 0; e < m.exponent(i); ++e) v = mult[i].apply(v);
        return v;
    }

    // l x l matrix of multiplication by a
    Matrix mult_by(const RingElement& a) const {
        Matrix m(field, length(), length());
        for (std::size_t k = 0; k < length(); ++k) {
            Vector col = monomial_action(basis[k], a.coords);
            for (std::size_t i = 0; i < length(); ++i) m(i, k) = col[i];
        }
        return m;
    }

    RingElement mul(const RingElement& a, const RingElement& b) const {
        Vector r(length(), Scalar::zero(field));
        for (std::size_t k = 0; k < length(); ++k) {
            if (b.coords[k].is_zero()) continue;
            Vector col = monomial_action(basis[k], a.coords);
            for (std::size_t i = 0; i < length(); ++i) r[i] += col[i] * b.coords[k];
        }
        return {self(), std::move(r)};
    }
    RingElement add(const RingElement& a, const RingElement& b) const {
        Vector r = a.coords;
        for (std::size_t i = 0; i < length(); ++i) r[i] += b.coords[i];
        return {self(), std::move(r)};
    }
    RingElement sub(const RingElement& a, const RingElement& b) const {
        Vector r = a.coords;
        for (std::size_t i = 0; i < length(); ++i) r[i] -= b.coords[i];
        return {self(), std::move(r)};
    }
    RingElement scale(const RingElement& a, const Scalar& s) const {
        Vector r = a.coords;
        for (auto& c : r) c *= s;
        return {self(), std::move(r)};
    }

    // local ring: unit iff nonzero constant coordinate
    bool is_unit(const RingElement& a) const { return !a.coords[0].is_zero(); }

    // element rendered from normal-form coordinates with the first nonzero
    // coefficient scaled to 1 (twin uniqueness is only up-to-unit)
    std::string render_normalized(const RingElement& a) const {
        RingElement b = a;
        for (auto& c : b.coords)
            if (!c.is_zero()) {
                b = scale(b, c.inverse());
                break;
            }
        return to_polynomial(b).str(var_names);
    }

    void finalize_index() {
        for (std::size_t k = 0; k < basis.size(); ++k) basis_index_[basis[k].exponents()] = k;
    }

  private:
    std::map<std::vector<int>, std::size_t> basis_index_;
};

inline RingElement operator*(const RingElement& a, const RingElement& b) { return a.ring->mul(a, b); }
inline RingElement operator+(const RingElement& a, const RingElement& b) { return a.ring->add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return a.ring->sub(a, b); }
inline bool operator==(const RingElement& a, const RingElement& b) { return a.coords == b.coords; }

inline RingPtr build_ring(FieldSpec field, std::vector<std::string> vars, std::vector<Polynomial> ideal_gens,
                          MonomialOrder ord = MonomialOrder::grevlex) {
    for (auto& g : ideal_gens)
        if (g.nvars() != vars.size()) throw Error(ErrorKind::ArityMismatch, "generator arity mismatch");
    GroebnerBasis gb = buchberger(ideal_gens, ord);
    if (gb.unit_ideal) throw Error(ErrorKind::UnitIdeal, "ideal is the whole ring");
    if (!gb.zero_dimensional())
        throw Error(ErrorKind::NotZeroDimensional, "staircase is infinite: dim R > 0 out of scope");

    auto ring = std::make_shared<ArtinianRing>(field, std::move(gb));
    ring->var_names = std::move(vars);
    ring->ideal_gens = std::move(ideal_gens);
    ring->basis = *ring->gb.staircase;
    ring->finalize_index();
    const std::size_t l = ring->length();

    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        Matrix m(field, l, l);
        Polynomial xi = Polynomial::variable(field, ring->nvars(), i, ord);
        for (std::size_t k = 0; k < l; ++k) {
            Polynomial nf = normal_form(xi.times_term(ring->basis[k], Scalar::one(field)), ring->gb);
            for (auto& [mon, c] : nf.terms()) m(ring->basis_index(mon), k) = c;
        }
        ring->mult.push_back(std::move(m));
    }

    // m-adic filtration; stabilizing at a nonzero level means some variable
    // is not nilpotent, i.e. the ring is not local
    std::vector<Subspace> filt;
    filt.push_back(Subspace::full(field, l));
    {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            for (std::size_t k = 0; k < l; ++k) {
                Vector v(l, Scalar::zero(field));
                v[k] = Scalar::one(field);
                rows.push_back(ring->mult[i].apply(v));
            }
        Subspace m = Subspace::span_of(field, l, rows);
        if (m.dim() == l)
            throw Error(ErrorKind::NotLocal, "the variables generate the unit ideal");
        filt.push_back(std::move(m));
    }
    while (!filt.back().is_zero()) {
        const Subspace& prev = filt.back();
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            for (std::size_t r = 0; r < prev.dim(); ++r) rows.push_back(ring->mult[i].apply(prev.basis().row(r)));
        Subspace next = Subspace::span_of(field, l, rows);
        if (next.dim() == prev.dim())
            throw Error(ErrorKind::NotLocal, "a variable is not nilpotent modulo the ideal");
        filt.push_back(std::move(next));
    }
    ring->filtration = std::move(filt);
    ring->socle_degree = ring->filtration.size() - 2;
    return ring;
}

// R/J presented by a coordinate section: the non-pivot coordinates of J form
// a complement, with induced multiplication matrices.
struct QuotientData {
    RingPtr parent;
    Subspace j_space;                    // the ideal being divided out
    std::vector<std::size_t> section;    // coordinate indices of the complement
    std::vector<Matrix> mult;            // induced variable actions, dim x dim
    std::size_t length = 0;

    Vector project(const Vector& v) const {
        Vector r = j_space.reduce(v);
        Vector out;
        out.reserve(section.size());
        for (auto q : section) out.push_back(r[q]);
        return out;
    }
    Vector lift(const Vector& w) const {
        Vector v(parent->length(), Scalar::zero(parent->field));
        for (std::size_t i = 0; i < section.size(); ++i) v[section[i]] = w[i];
        return v;
    }
};

inline QuotientData quotient(const RingPtr& ring, const Subspace& j_space) {
    if (j_space.ambient_dim() != ring->length())
        throw Error(ErrorKind::ArityMismatch, "quotient: ambient mismatch");
    if (j_space.dim() == ring->length()) throw Error(ErrorKind::BadInput, "quotient by the whole ring");
    QuotientData q{ring, j_space, {}, {}, 0};
    std::vector<bool> is_pivot(ring->length(), false);
    for (auto c : j_space.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < ring->length(); ++c)
        if (!is_pivot[c]) q.section.push_back(c);
    q.length = q.section.size();
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        Matrix m(ring->field, q.length, q.length);
        for (std::size_t k = 0; k < q.length; ++k) {
            Vector e(ring->length(), Scalar::zero(ring->field));
            e[q.section[k]] = Scalar::one(ring->field);
            Vector col = q.project(ring->mult[i].apply(e));
            for (std::size_t r = 0; r < q.length; ++r) m(r, k) = col[r];
        }
        q.mult.push_back(std::move(m));
    }
    return q;
}

namespace detail {

inline void monomials_of_degree_rec(std::size_t nvars, std::size_t i, int remaining, std::vector<int>& cur,
                                    std::vector<Monomial>& out) {
    if (i + 1 == nvars) {
        cur[i] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[i] = e;
        monomials_of_degree_rec(nvars, i + 1, remaining - e, cur, out);
    }
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    monomials_of_degree_rec(nvars, 0, d, cur, out);
    return out;
}

}  // namespace detail

// Macaulay inverse system via contraction (apolarity): the ring Q/(0:_Q F)
// where a monomial q acts on x^b by q . x^b = x^{b-q} when q <= b, else 0.
// Contraction avoids factorial denominators, so the construction is valid in
// any characteristic.
inline RingPtr inverse_system_ring(FieldSpec field, std::vector<std::string> vars, const Polynomial& form,
                                   MonomialOrder ord = MonomialOrder::grevlex) {
    if (form.is_zero()) throw Error(ErrorKind::BadInput, "inverse system form must be nonzero");
    if (!form.is_homogeneous()) throw Error(ErrorKind::BadInput, "inverse system form must be homogeneous");
    const std::size_t n = vars.size();
    const int s = form.degree();
    std::vector<Polynomial> gens;
    // degree-by-degree: kernel of the contraction map Q_d -> S_{s-d}
    for (int d = 1; d <= s; ++d) {
        auto qmons = detail::monomials_of_degree(n, d);
        auto smons = detail::monomials_of_degree(n, s - d);
        std::map<std::vector<int>, std::size_t> srow;
        for (std::size_t r = 0; r < smons.size(); ++r) srow[smons[r].exponents()] = r;
        Matrix c(field, smons.size(), qmons.size());
        for (std::size_t k = 0; k < qmons.size(); ++k)
            for (auto& [m, coef] : form.terms())
                if (qmons[k].divides(m)) c(srow.at(qmons[k].quotient_into(m).exponents()), k) = coef;
        Subspace ker = kernel(c);
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            std::vector<Polynomial::Term> raw;
            for (std::size_t k = 0; k < qmons.size(); ++k)
                if (!ker.basis()(r, k).is_zero()) raw.emplace_back(qmons[k], ker.basis()(r, k));
            gens.push_back(Polynomial::from_terms(field, n, std::move(raw), ord));
        }
    }
    // everything in degree s+1 annihilates F
    for (auto& m : detail::monomials_of_degree(n, s + 1))
        gens.push_back(Polynomial::term(field, m, Scalar::one(field), ord));
    return build_ring(field, std::move(vars), std::move(gens), ord);
}

}  // namespace ezd
