#pragma once

#include <optional>
#include <vector>

#include "ezd/ezd.hpp"

namespace ezd {

enum class CiStatus { computed, not_graded, not_minimally_embedded };

// Graded/filtration invariants and classification predicates. The CI family
// of flags is decided only for graded presentations with I inside m^2
// (graded Nakayama on degree-truncated pieces is exact there); "Koszul CI"
// is the quadratic-CI criterion, which is equivalent to Koszulness for
// complete intersections.
struct ClassifyReport {
    std::size_t length = 0;
    std::vector<std::size_t> hilbert_function;  // dim m^i/m^{i+1}
    std::size_t socle_dim = 0;
    std::size_t socle_degree = 0;
    bool gorenstein = false;
    bool graded = false;
    CiStatus ci_status = CiStatus::not_graded;
    std::size_t mu_ideal = 0;                 // graded case only
    std::vector<int> generator_degrees;       // degrees d with a minimal generator
    std::vector<std::size_t> mu_by_degree;    // minimal generator count per degree
    bool ci = false;
    bool quadratic = false;
    bool koszul_ci = false;
    std::size_t e = 0;            // multiplicity == length in dimension zero
    std::size_t log2_bound = 0;   // floor(log2 e)
};

namespace detail {

// basis of the degree-d graded piece of I, as coordinate rows over the
// degree-d monomials: {m - NF(m) : m nonstandard of degree d}
inline Matrix graded_piece(const RingPtr& ring, int d, const std::vector<Monomial>& mons) {
    std::map<std::vector<int>, std::size_t> col;
    for (std::size_t k = 0; k < mons.size(); ++k) col[mons[k].exponents()] = k;
    std::vector<Vector> rows;
    for (auto& m : mons) {
        Polynomial f = Polynomial::term(ring->field, m, Scalar::one(ring->field), ring->order);
        Polynomial nf = normal_form(f, ring->gb);
        if (nf == f) continue;  // standard monomial
        Vector v(mons.size(), Scalar::zero(ring->field));
        v[col.at(m.exponents())] = Scalar::one(ring->field);
        for (auto& [mm, c] : nf.terms()) v[col.at(mm.exponents())] -= c;
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(ring->field, mons.size(), rows);
}

}  // namespace detail

inline ClassifyReport classify(const RingPtr& ring) {
    ClassifyReport rep;
    rep.length = ring->length();
    rep.e = rep.length;
    rep.log2_bound = 0;
    while ((std::size_t{2} << rep.log2_bound) <= rep.e) ++rep.log2_bound;
    rep.socle_degree = ring->socle_degree;
    for (std::size_t i = 0; i + 1 < ring->filtration.size(); ++i)
        rep.hilbert_function.push_back(ring->filtration[i].dim() - ring->filtration[i + 1].dim());
    rep.socle_dim = socle(ring).dim();
    rep.gorenstein = rep.socle_dim == 1;

    rep.graded = true;
    for (auto& g : ring->ideal_gens)
        if (!g.is_zero() && !g.is_homogeneous()) rep.graded = false;
    if (!rep.graded) {
        rep.ci_status = CiStatus::not_graded;
        return rep;
    }

    // mu(I) degree by degree: mu_d = dim I_d - dim(S_1 * I_{d-1})
    const std::size_t n = ring->nvars();
    Matrix prev = Matrix(ring->field, 0, 0);
    std::vector<Monomial> prev_mons;
    for (int d = 1; d <= static_cast<int>(ring->socle_degree) + 1; ++d) {
        auto mons = detail::monomials_of_degree(n, d);
        Matrix id = detail::graded_piece(ring, d, mons);
        if (d == 1 && id.rows() > 0) {
            rep.ci_status = CiStatus::not_minimally_embedded;
            return rep;
        }
        // rows of S_1 * I_{d-1} over the degree-d monomial coordinates
        std::map<std::vector<int>, std::size_t> col;
        for (std::size_t k = 0; k < mons.size(); ++k) col[mons[k].exponents()] = k;
        std::vector<Vector> rows;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t r = 0; r < prev.rows(); ++r) {
                Vector out(mons.size(), Scalar::zero(ring->field));
                for (std::size_t k = 0; k < prev_mons.size(); ++k) {
                    if (prev(r, k).is_zero()) continue;
                    out[col.at((prev_mons[k] * Monomial::var(n, v)).exponents())] += prev(r, k);
                }
                rows.push_back(std::move(out));
            }
        std::size_t grown = rank(Matrix::from_rows(ring->field, mons.size(), rows));
        std::size_t mu_d = rank(id) - grown;
        rep.mu_by_degree.push_back(mu_d);
        if (mu_d > 0) rep.generator_degrees.push_back(d);
        rep.mu_ideal += mu_d;
        prev = rref(id);
        prev_mons = std::move(mons);
    }
    rep.ci_status = CiStatus::computed;
    rep.ci = rep.mu_ideal == n;
    rep.quadratic = !rep.generator_degrees.empty();
    for (int d : rep.generator_degrees)
        if (d != 2) rep.quadratic = false;
    rep.koszul_ci = rep.ci && rep.quadratic;
    return rep;
}

namespace detail {

// substitute var k := rep (a polynomial with no x_k), then drop variable k
inline Polynomial eliminate_variable(const Polynomial& p, std::size_t k, const Polynomial& rep) {
    const std::size_t n = p.nvars();
    Polynomial acc = Polynomial::zero(p.field(), n, p.order());
    for (auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        int ek = e[k];
        e[k] = 0;
        Polynomial t = Polynomial::term(p.field(), Monomial(std::move(e)), c, p.order());
        for (int i = 0; i < ek; ++i) t = t * rep;
        acc = acc + t;
    }
    // drop coordinate k
    std::vector<Polynomial::Term> raw;
    for (auto& [m, c] : acc.terms()) {
        std::vector<int> e = m.exponents();
        e.erase(e.begin() + k);
        raw.emplace_back(Monomial(std::move(e)), c);
    }
    return Polynomial::from_terms(p.field(), n - 1, std::move(raw), p.order());
}

}  // namespace detail

// R/(x_1..x_i) re-presented as a polynomial quotient by eliminating one
// variable per linear form. Returns nullopt when every variable is gone
// (the quotient is the field).
inline std::optional<RingPtr> substituted_quotient(const RingPtr& ring, const std::vector<RingElement>& xs) {
    std::vector<std::string> vars = ring->var_names;
    std::vector<Polynomial> gens = ring->ideal_gens;
    std::vector<Polynomial> forms;
    for (auto& x : xs) forms.push_back(ring->to_polynomial(x));
    for (std::size_t step = 0; step < forms.size(); ++step) {
        Polynomial l = forms[step];
        if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous())
            throw Error(ErrorKind::Precondition, "substituted_quotient requires independent linear forms");
        // pivot: highest-index variable present in l
        std::size_t k = 0;
        Scalar ck = Scalar::zero(l.field());
        for (auto& [m, c] : l.terms())
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (m.exponent(v) > 0 && v >= k) {
                    k = v;
                    ck = c;
                }
        // x_k := -(1/c_k) * (l - c_k x_k)
        Polynomial rest = l - Polynomial::term(l.field(), Monomial::var(vars.size(), k), ck, l.order());
        Polynomial rep = rest * (-(ck.inverse()));  // no x_k, still in all vars
        std::vector<Polynomial> new_gens;
        for (auto& g : gens) {
            Polynomial h = detail::eliminate_variable(g, k, rep);
            if (!h.is_zero()) new_gens.push_back(h);
        }
        gens = std::move(new_gens);
        std::vector<Polynomial> new_forms;
        for (std::size_t t = step + 1; t < forms.size(); ++t)
            new_forms.push_back(detail::eliminate_variable(forms[t], k, rep));
        forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(step) + 1, forms.end());
        for (auto& f : new_forms) forms.push_back(std::move(f));
        vars.erase(vars.begin() + k);
        if (vars.empty()) return std::nullopt;
    }
    if (gens.empty()) throw Error(ErrorKind::Precondition, "substituted quotient is not artinian");
    return build_ring(ring->field, vars, gens, ring->order);
}

// Per-prefix complete-intersection verdicts for a minimal generating tuple
// of m, cross-checked against the sequential exact zero-divisor test.
struct T5Report {
    bool applicable = false;
    std::vector<bool> quotient_ci;  // index i: R/(x_1..x_i), i = 0..n
    bool all_ci = false;
    bool sequential_verdict = false;
    bool consistent = false;  // biconditional observed
};

inline T5Report t5_check(const RingPtr& ring, const std::vector<RingElement>& xs) {
    T5Report rep;
    IdealInRing ix = ideal_of(ring, xs);
    // mu(m) via the filtration: dim m - dim m^2
    std::size_t mu_m =
        ring->filtration[1].dim() - (ring->filtration.size() > 2 ? ring->filtration[2].dim() : 0);
    bool gen_m = ix.space == ring->maximal_ideal();
    if (!gen_m || min_gens(ring, ix).mu != xs.size() || xs.size() != mu_m)
        throw Error(ErrorKind::NotMinimalGenerators, "t5_check requires xs to minimally generate m");
    rep.applicable = true;
    for (std::size_t i = 0; i <= xs.size(); ++i) {
        std::vector<RingElement> pref(xs.begin(), xs.begin() + i);
        std::optional<RingPtr> q = i == 0 ? std::optional<RingPtr>(ring) : substituted_quotient(ring, pref);
        bool ci;
        if (!q) {
            ci = true;  // the field is a complete intersection
        } else {
            ClassifyReport c = classify(*q);
            ci = c.ci_status == CiStatus::computed && c.ci;
        }
        rep.quotient_ci.push_back(ci);
    }
    rep.all_ci = true;
    for (bool b : rep.quotient_ci) rep.all_ci = rep.all_ci && b;
    rep.sequential_verdict = sequence_test(ring, xs).is_sequence;
    rep.consistent = rep.all_ci == rep.sequential_verdict;
    return rep;
}

// Checks for a minimal sequence of length n == socle degree on a ring with
// m^{n+1} = 0, m^n != 0: the sequence generates m, the ring is a complete
// intersection, and every adjusted twin avoids m^2.
struct C21Report {
    bool applicable = false;
    bool generates_m = false;
    bool ci = false;
    std::vector<bool> twin_outside_m2;
    bool ok = false;
};

inline C21Report c21_check(const RingPtr& ring, const std::vector<RingElement>& xs,
                           const std::vector<RingElement>& adjusted_twins) {
    C21Report rep;
    SequenceReport seq = sequence_test(ring, xs);
    rep.applicable = seq.is_sequence && seq.minimal && xs.size() == ring->socle_degree;
    if (!rep.applicable) return rep;
    rep.generates_m = ideal_of(ring, xs).space == ring->maximal_ideal();
    ClassifyReport c = classify(ring);
    rep.ci = c.ci_status == CiStatus::computed && c.ci;
    const Subspace& m2 = ring->filtration.size() > 2 ? ring->filtration[2]
                                                     : Subspace::zero(ring->field, ring->length());
    for (auto& y : adjusted_twins) rep.twin_outside_m2.push_back(!m2.contains(y.coords));
    rep.ok = rep.generates_m && rep.ci;
    for (bool b : rep.twin_outside_m2) rep.ok = rep.ok && b;
    return rep;
}

// Socle-degree-2 biconditional, the graded assertion for any socle degree,
// and the evidence-only socle-degree-3 report. Searches run over the
// linear-form pool, so a prime field is required.
struct P15Report {
    std::size_t socle_degree = 0;
    bool koszul_ci = false;
    bool search_found = false;
    std::vector<RingElement> witness;  // first minimal sequence found
    std::optional<bool> part_i_equivalence;  // socle degree 2 only
    std::optional<bool> part_ii_ok;          // found => koszul CI
    bool evidence_only = false;              // socle degree 3: not asserted
};

inline P15Report p15_check(const RingPtr& ring) {
    ClassifyReport c = classify(ring);
    if (c.ci_status == CiStatus::not_graded)
        throw Error(ErrorKind::NotGraded, "p15_check requires a graded presentation");
    P15Report rep;
    rep.socle_degree = ring->socle_degree;
    rep.koszul_ci = c.ci_status == CiStatus::computed && c.koszul_ci;
    auto pool = linear_form_pool(ring);
    auto hits = search(ring, SearchMode::minimal_sequences, ring->socle_degree, pool, 1);
    rep.search_found = !hits.empty();
    if (rep.search_found) rep.witness = hits[0];
    if (rep.socle_degree == 2) rep.part_i_equivalence = rep.search_found == rep.koszul_ci;
    if (rep.search_found) rep.part_ii_ok = rep.koszul_ci;
    rep.evidence_only = rep.socle_degree == 3;
    return rep;
}

}  // namespace ezd
