#pragma once

#include <optional>
#include <vector>

#include "ezd/ring.hpp"

namespace ezd {

// Ideal of an ArtinianRing: a subspace of the coordinate space closed under
// the action of every variable, with the generators kept as witnesses.
struct IdealInRing {
    RingPtr ring;
    Subspace space;
    std::vector<RingElement> generators;

    std::size_t dim() const { return space.dim(); }
    bool contains(const RingElement& a) const { return space.contains(a.coords); }
    bool is_zero() const { return space.is_zero(); }
};

inline IdealInRing zero_ideal(const RingPtr& ring) {
    return {ring, Subspace::zero(ring->field, ring->length()), {}};
}

namespace detail {

// smallest variable-action-closed subspace containing the seed
inline Subspace ideal_closure(const RingPtr& ring, Subspace space) {
    for (;;) {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < space.dim(); ++r) rows.push_back(space.basis().row(r));
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            for (std::size_t r = 0; r < space.dim(); ++r) rows.push_back(ring->mult[i].apply(space.basis().row(r)));
        Subspace next = Subspace::span_of(ring->field, ring->length(), rows);
        if (next.dim() == space.dim()) return next;
        space = std::move(next);
    }
}

}  // namespace detail

inline IdealInRing ideal_of(const RingPtr& ring, std::vector<RingElement> gens) {
    std::vector<Vector> rows;
    for (auto& g : gens) rows.push_back(g.coords);
    Subspace seed = Subspace::span_of(ring->field, ring->length(), rows);
    return {ring, detail::ideal_closure(ring, std::move(seed)), std::move(gens)};
}

// m * I, as a subspace (already variable-closed)
inline Subspace m_times(const RingPtr& ring, const Subspace& space) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        for (std::size_t r = 0; r < space.dim(); ++r) rows.push_back(ring->mult[i].apply(space.basis().row(r)));
    return Subspace::span_of(ring->field, ring->length(), rows);
}

// (J :_R a) = {r in R : r*a in J}; with J = 0 this is the annihilator (0:a).
// Always an ideal containing J.
inline IdealInRing annihilator(const RingPtr& ring, const RingElement& a,
                               const std::optional<IdealInRing>& modulo = std::nullopt) {
    Matrix ma = ring->mult_by(a);
    Subspace ker = (modulo && !modulo->space.is_zero())
                       ? kernel(modulo->space.constraints() * ma)  // {v : ma v in J}
                       : kernel(ma);
    if (modulo) ker = ker.sum(modulo->space);
    std::vector<RingElement> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) gens.push_back({ring, ker.basis().row(r)});
    return {ring, ker, std::move(gens)};
}

// minimal number of generators via Nakayama: mu = dim I - dim(m I), with
// deterministic witnesses (first RREF rows of I independent modulo m I)
struct MinGens {
    std::size_t mu = 0;
    std::vector<RingElement> witnesses;
};

inline MinGens min_gens(const RingPtr& ring, const IdealInRing& ideal) {
    Subspace mi = m_times(ring, ideal.space);
    MinGens out;
    out.mu = ideal.dim() - mi.dim();
    Subspace acc = mi;
    for (std::size_t r = 0; r < ideal.space.dim() && out.witnesses.size() < out.mu; ++r) {
        Vector v = ideal.space.basis().row(r);
        if (!acc.contains(v)) {
            out.witnesses.push_back({ring, v});
            acc = acc.sum(Subspace::span_of(ring->field, ring->length(), {v}));
        }
    }
    return out;
}

// Deterministic generator of I modulo J when mu(I mod J) == 1, else nullopt.
// The generator g satisfies ideal_of(g) + J == I + J.
inline std::optional<RingElement> principal_generator(const RingPtr& ring, const IdealInRing& ideal,
                                                      const std::optional<IdealInRing>& modulo = std::nullopt) {
    Subspace i_plus_j = modulo ? ideal.space.sum(modulo->space) : ideal.space;
    Subspace floor = m_times(ring, i_plus_j);
    if (modulo) floor = floor.sum(modulo->space);
    if (i_plus_j.dim() - floor.dim() != 1) return std::nullopt;
    for (std::size_t r = 0; r < ideal.space.dim(); ++r) {
        Vector v = ideal.space.basis().row(r);
        if (!floor.contains(v)) return RingElement{ring, v};
    }
    // I may sit inside J + mI; fall back to rows of I+J
    for (std::size_t r = 0; r < i_plus_j.dim(); ++r) {
        Vector v = i_plus_j.basis().row(r);
        if (!floor.contains(v)) return RingElement{ring, v};
    }
    return std::nullopt;
}

// socle(R) = (0 :_R m) = common kernel of all multiplication matrices
inline IdealInRing socle(const RingPtr& ring) {
    const std::size_t l = ring->length();
    Matrix stacked(ring->field, l * ring->nvars(), l);
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t c = 0; c < l; ++c) stacked(i * l + r, c) = ring->mult[i](r, c);
    Subspace ker = ring->nvars() == 0 ? Subspace::full(ring->field, l) : kernel(stacked);
    std::vector<RingElement> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) gens.push_back({ring, ker.basis().row(r)});
    return {ring, ker, std::move(gens)};
}

// (0 : J) for a finitely generated ideal = intersection of the generator
// annihilators (used for the principal-annihilator checks on sequences)
inline IdealInRing annihilator_of_ideal(const RingPtr& ring, const IdealInRing& ideal,
                                        const std::optional<IdealInRing>& modulo = std::nullopt) {
    Subspace acc = Subspace::full(ring->field, ring->length());
    for (std::size_t r = 0; r < ideal.space.dim(); ++r) {
        RingElement g{ring, ideal.space.basis().row(r)};
        acc = acc.intersect(annihilator(ring, g, modulo).space);
    }
    std::vector<RingElement> gens;
    for (std::size_t r = 0; r < acc.dim(); ++r) gens.push_back({ring, acc.basis().row(r)});
    return {ring, acc, std::move(gens)};
}

}  // namespace ezd
