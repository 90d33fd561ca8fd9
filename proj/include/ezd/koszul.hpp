#pragma once

#include <cstdint>
#include <vector>

#include "ezd/ezd.hpp"

namespace ezd {

namespace detail {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// strictly increasing index tuples of size k from {0..p-1}, lexicographic
inline std::vector<std::vector<std::size_t>> index_tuples(std::size_t p, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < p; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

// Koszul complex on x_1..x_p over R. K_i is free of rank C(p,i) with basis
// e_T for strictly increasing tuples T; coordinates are C(p,i) blocks of
// length l. Differential (sign convention):
//   d(e_{j_1<..<j_i}) = sum_k (-1)^{k+1} x_{j_k} e_{..without j_k..}
struct KoszulComplex {
    RingPtr ring;
    std::vector<RingElement> xs;
    std::vector<std::vector<std::vector<std::size_t>>> bases;  // bases[i] = tuples of size i
    std::vector<Matrix> diff;  // diff[i] : K_i -> K_{i-1}, for i = 1..p

    std::size_t p() const { return xs.size(); }
    std::size_t module_dim(std::size_t i) const { return ring->length() * bases[i].size(); }
};

inline KoszulComplex koszul_complex(const RingPtr& ring, const std::vector<RingElement>& xs) {
    if (xs.empty()) throw Error(ErrorKind::Precondition, "koszul_complex needs at least one element");
    KoszulComplex cx;
    cx.ring = ring;
    cx.xs = xs;
    const std::size_t p = xs.size(), l = ring->length();
    std::vector<Matrix> mult_x;
    for (auto& x : xs) mult_x.push_back(ring->mult_by(x));
    for (std::size_t i = 0; i <= p; ++i) cx.bases.push_back(detail::index_tuples(p, i));
    cx.diff.push_back(Matrix(ring->field, 0, 0));  // placeholder for index 0
    for (std::size_t i = 1; i <= p; ++i) {
        const auto& src = cx.bases[i];
        const auto& dst = cx.bases[i - 1];
        auto dst_pos = [&](const std::vector<std::size_t>& t) {
            for (std::size_t k = 0; k < dst.size(); ++k)
                if (dst[k] == t) return k;
            throw Error(ErrorKind::BadInput, "koszul: tuple lookup failed");
        };
        Matrix d(ring->field, l * dst.size(), l * src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            for (std::size_t k = 0; k < i; ++k) {
                std::vector<std::size_t> t = src[col];
                std::size_t var = t[k];
                t.erase(t.begin() + k);
                std::size_t row_block = dst_pos(t);
                bool negative = (k % 2) == 1;  // (-1)^{k+1} with 1-based k
                for (std::size_t r = 0; r < l; ++r)
                    for (std::size_t c = 0; c < l; ++c) {
                        Scalar v = mult_x[var](r, c);
                        if (v.is_zero()) continue;
                        if (negative) v = -v;
                        d(row_block * l + r, col * l + c) += v;
                    }
            }
        }
        cx.diff.push_back(std::move(d));
    }
    // d_{i-1} d_i = 0
    for (std::size_t i = 2; i <= p; ++i)
        if (!(cx.diff[i - 1] * cx.diff[i]).is_zero())
            throw Error(ErrorKind::BadInput, "koszul: differential square is nonzero");
    return cx;
}

// H_i = ker(d_i)/im(d_{i+1}) with its induced R/(x_1..x_p)-module structure.
// Freeness certificate: over an artinian local ring a surjection S^mu -> M
// with length(M) = mu * length(S) is an isomorphism, so
//   free <=> length == mu * length(S).
struct HomologyModule {
    std::size_t degree = 0;
    std::size_t length = 0;       // K-dimension of the subquotient
    std::size_t mu = 0;           // minimal generators over S = R/(x_1..x_p)
    std::size_t quotient_len = 0; // length of S
    bool free = false;
    std::uint64_t rank_expected = 0;  // C(p, i)

    bool free_of_expected_rank() const { return free && mu == rank_expected; }
};

inline HomologyModule homology(const KoszulComplex& cx, std::size_t i) {
    if (i > cx.p()) throw Error(ErrorKind::BadInput, "homology index out of range");
    const RingPtr& ring = cx.ring;
    const std::size_t l = ring->length();
    const std::size_t dim_i = cx.module_dim(i);
    Subspace ker = i == 0 ? Subspace::full(ring->field, dim_i) : kernel(cx.diff[i]);
    Subspace im = i == cx.p() ? Subspace::zero(ring->field, dim_i) : column_space(cx.diff[i + 1]);

    HomologyModule h;
    h.degree = i;
    h.rank_expected = detail::binomial(cx.p(), i);
    h.length = ker.dim() - im.dim();
    h.quotient_len = l - ideal_of(ring, cx.xs).dim();

    // m * H inside the subquotient: variables act blockwise on kernel
    // representatives (the action preserves ker since d is R-linear)
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < im.dim(); ++r) rows.push_back(im.basis().row(r));
    for (std::size_t v = 0; v < ring->nvars(); ++v)
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            Vector in = ker.basis().row(r);
            Vector out(dim_i, Scalar::zero(ring->field));
            for (std::size_t blk = 0; blk * l < dim_i; ++blk) {
                Vector part(in.begin() + blk * l, in.begin() + (blk + 1) * l);
                Vector acted = ring->mult[v].apply(part);
                for (std::size_t t = 0; t < l; ++t) out[blk * l + t] = acted[t];
            }
            rows.push_back(std::move(out));
        }
    Subspace m_h_plus_im = Subspace::span_of(ring->field, dim_i, rows);
    h.mu = h.length - (m_h_plus_im.dim() - im.dim());
    h.free = h.length == h.mu * h.quotient_len;
    return h;
}

// Rank-and-freeness criterion for every prefix and degree, cross-checked
// against the sequential exact zero-divisor test. The two verdicts agreeing
// on every input is the theorem; disagreement means a build bug.
struct T2PrefixEntry {
    std::size_t prefix = 0;                // p
    bool membership_ok = false;            // x_p not in (x_1..x_{p-1})
    std::vector<HomologyModule> homology;  // degrees 0..p
    bool ok = false;
};

struct T2Report {
    std::vector<T2PrefixEntry> prefixes;
    bool koszul_verdict = false;
    bool sequential_verdict = false;
    bool agree = false;
};

inline T2Report t2_check(const RingPtr& ring, const std::vector<RingElement>& xs) {
    if (xs.size() > 4) throw Error(ErrorKind::TooLong, "t2 guard: length > 4");
    if (xs.empty()) throw Error(ErrorKind::Precondition, "t2_check needs a nonempty tuple");
    T2Report rep;
    rep.koszul_verdict = true;
    for (std::size_t p = 1; p <= xs.size(); ++p) {
        T2PrefixEntry entry;
        entry.prefix = p;
        std::vector<RingElement> pref(xs.begin(), xs.begin() + p - 1);
        entry.membership_ok = !ideal_of(ring, pref).space.contains(xs[p - 1].coords);
        entry.ok = entry.membership_ok;
        std::vector<RingElement> cur(xs.begin(), xs.begin() + p);
        KoszulComplex cx = koszul_complex(ring, cur);
        for (std::size_t i = 0; i <= p; ++i) {
            entry.homology.push_back(homology(cx, i));
            if (!entry.homology.back().free_of_expected_rank()) entry.ok = false;
        }
        rep.koszul_verdict = rep.koszul_verdict && entry.ok;
        rep.prefixes.push_back(std::move(entry));
    }
    rep.sequential_verdict = sequence_test(ring, xs).is_sequence;
    rep.agree = rep.koszul_verdict == rep.sequential_verdict;
    return rep;
}

}  // namespace ezd
