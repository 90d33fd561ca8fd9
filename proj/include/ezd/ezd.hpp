#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ezd/ideal.hpp"

namespace ezd {

enum class PairFailure { none, zero, unit, annihilator_zero, annihilator_not_principal };

inline const char* pair_failure_name(PairFailure f) {
    switch (f) {
        case PairFailure::none: return "none";
        case PairFailure::zero: return "zero";
        case PairFailure::unit: return "unit";
        case PairFailure::annihilator_zero: return "annihilator_zero";
        case PairFailure::annihilator_not_principal: return "annihilator_not_principal";
    }
    return "?";
}

// Verdict of the exact zero-divisor pair test on R/J. When true, the twin y
// satisfies x*y = 0 mod J, (y) + J = (J : x), and by length counting in an
// artinian local ring also (J : y) = (x) + J, so the pair condition
// (0:x) = (y), (0:y) = (x) holds in R/J.
struct EzdReport {
    RingElement x;
    bool verdict = false;
    std::optional<RingElement> twin;
    std::size_t dim_xr = 0;   // dim of x*(R/J)
    std::size_t dim_ann = 0;  // dim of (0 :_{R/J} x)
    PairFailure reason = PairFailure::none;
};

inline EzdReport pair_test(const RingPtr& ring, const RingElement& x,
                           const std::optional<IdealInRing>& modulo = std::nullopt) {
    EzdReport rep;
    rep.x = x;
    const std::size_t jdim = modulo ? modulo->space.dim() : 0;
    if (modulo ? modulo->space.contains(x.coords) : x.is_zero()) {
        rep.reason = PairFailure::zero;
        return rep;
    }
    if (ring->is_unit(x)) {
        rep.reason = PairFailure::unit;
        return rep;
    }
    IdealInRing ann = annihilator(ring, x, modulo);
    rep.dim_ann = ann.dim() - jdim;
    Subspace xr = ideal_of(ring, {x}).space;
    if (modulo) xr = xr.sum(modulo->space);
    rep.dim_xr = xr.dim() - jdim;
    if (rep.dim_ann == 0) {
        rep.reason = PairFailure::annihilator_zero;
        return rep;
    }
    auto gen = principal_generator(ring, ann, modulo);
    if (!gen) {
        rep.reason = PairFailure::annihilator_not_principal;
        return rep;
    }
    rep.verdict = true;
    rep.twin = *gen;
    return rep;
}

// Sequence of exact zero-divisors: x_i must be an exact zero-divisor on
// R/(x_1..x_{i-1}). Twins are the per-step twins, lifted to R.
struct SequenceReport {
    std::vector<RingElement> xs;
    bool is_sequence = false;
    std::optional<std::size_t> failing_index;  // 0-based step that failed
    std::vector<EzdReport> steps;
    std::vector<RingElement> twins;  // only meaningful when is_sequence
    std::size_t mu = 0;
    bool minimal = false;
};

inline SequenceReport sequence_test(const RingPtr& ring, const std::vector<RingElement>& xs) {
    SequenceReport rep;
    rep.xs = xs;
    rep.is_sequence = true;
    IdealInRing j = zero_ideal(ring);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        EzdReport step = pair_test(ring, xs[i], j);
        rep.steps.push_back(step);
        if (!step.verdict) {
            rep.is_sequence = false;
            rep.failing_index = i;
            break;
        }
        rep.twins.push_back(*step.twin);
        std::vector<RingElement> pref(xs.begin(), xs.begin() + i + 1);
        j = ideal_of(ring, pref);
    }
    if (!xs.empty()) {
        rep.mu = min_gens(ring, ideal_of(ring, xs)).mu;
        rep.minimal = rep.is_sequence && rep.mu == xs.size();
    } else {
        rep.minimal = rep.is_sequence;
    }
    return rep;
}

struct PermutabilityReport {
    bool verdict = false;
    std::optional<std::vector<std::size_t>> failing_permutation;  // indices into xs
};

inline PermutabilityReport permutability_test(const RingPtr& ring, const std::vector<RingElement>& xs) {
    if (xs.size() > 6) throw Error(ErrorKind::TooLong, "permutability guard: n > 6");
    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
        std::vector<RingElement> perm;
        for (auto i : idx) perm.push_back(xs[i]);
        if (!sequence_test(ring, perm).is_sequence) return {false, idx};
    } while (std::next_permutation(idx.begin(), idx.end()));
    return {true, std::nullopt};
}

// Cor.-style strong test: the sequence must be minimal and each lifted twin
// y_i must lie in (0:_R x_i) + (x_1,..,x_{i-1}). When it does, the membership
// witness yields an adjusted twin y_i' in (0:_R x_i), so x_i * y_i' = 0 in R.
struct StrongC13Report {
    bool verdict = false;
    bool minimal = false;
    std::optional<std::size_t> failing_index;
    std::vector<RingElement> adjusted_twins;
};

inline StrongC13Report strong_test_c13(const RingPtr& ring, const std::vector<RingElement>& xs,
                                       const std::vector<RingElement>& twins) {
    if (twins.size() != xs.size())
        throw Error(ErrorKind::Precondition, "strong_test_c13 requires one twin per sequence entry");
    StrongC13Report rep;
    SequenceReport seq = sequence_test(ring, xs);
    if (!seq.is_sequence) throw Error(ErrorKind::Precondition, "strong_test_c13 requires a passing sequence");
    rep.minimal = seq.minimal;
    if (!rep.minimal) return rep;

    const std::size_t l = ring->length();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Subspace ann_i = annihilator(ring, xs[i]).space;
        std::vector<RingElement> pref(xs.begin(), xs.begin() + i);
        Subspace prev = ideal_of(ring, pref).space;
        // solve y_i = a + q with a in (0:x_i), q in (x_1..x_{i-1})
        const std::size_t cols = ann_i.dim() + prev.dim();
        Matrix sys(ring->field, l, cols + 1);
        for (std::size_t c = 0; c < ann_i.dim(); ++c)
            for (std::size_t r = 0; r < l; ++r) sys(r, c) = ann_i.basis()(c, r);
        for (std::size_t c = 0; c < prev.dim(); ++c)
            for (std::size_t r = 0; r < l; ++r) sys(r, ann_i.dim() + c) = prev.basis()(c, r);
        for (std::size_t r = 0; r < l; ++r) sys(r, cols) = twins[i].coords[r];
        auto piv = rref_in_place(sys);
        if (!piv.empty() && piv.back() == cols) {  // inconsistent: y_i not in the sum
            rep.failing_index = i;
            return rep;
        }
        Vector sol(cols, Scalar::zero(ring->field));
        for (std::size_t r = 0; r < piv.size(); ++r) sol[piv[r]] = sys(r, cols);
        Vector adj(l, Scalar::zero(ring->field));
        for (std::size_t c = 0; c < ann_i.dim(); ++c)
            for (std::size_t r = 0; r < l; ++r) adj[r] += sol[c] * ann_i.basis()(c, r);
        rep.adjusted_twins.push_back({ring, std::move(adj)});
    }
    rep.verdict = true;
    return rep;
}

// Brute-force definitional check: for every subset S and j outside S,
// (x_j, y_j) must be a pair of exact zero-divisors on R/(x_S) with the given
// twin. Returns the first counterexample (subset mask, index) otherwise.
struct StrongOracleReport {
    bool verdict = false;
    std::optional<std::pair<std::uint32_t, std::size_t>> witness;  // (subset mask, failing j)
};

inline StrongOracleReport strong_test_oracle(const RingPtr& ring, const std::vector<RingElement>& xs,
                                             const std::vector<RingElement>& twins) {
    const std::size_t n = xs.size();
    if (n > 6) throw Error(ErrorKind::TooLong, "strong oracle guard: n > 6");
    if (twins.size() != n) throw Error(ErrorKind::Precondition, "strong_test_oracle requires one twin per entry");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<RingElement> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(xs[i]);
        if (sub.size() == n) continue;
        IdealInRing j = ideal_of(ring, sub);
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (1u << k)) continue;
            EzdReport rep = pair_test(ring, xs[k], j);
            bool ok = rep.verdict;
            if (ok) {
                // the given twin must be the twin on R/(x_S):
                // (y_k) + J == (J : x_k) and (x_k) + J == (J : y_k)
                Subspace yk = ideal_of(ring, {twins[k]}).space.sum(j.space);
                Subspace xk = ideal_of(ring, {xs[k]}).space.sum(j.space);
                ok = yk == annihilator(ring, xs[k], j).space && xk == annihilator(ring, twins[k], j).space;
            }
            if (!ok) return {false, std::pair(mask, k)};
        }
    }
    return {true, std::nullopt};
}

// All 2^n swaps z_i in {x_i, y_i} of a strong sequence, re-tested.
struct SwapVariant {
    std::uint32_t mask = 0;  // bit i set: z_i = twin
    std::vector<RingElement> zs;
    bool strong = false;
};

inline std::vector<SwapVariant> twin_swap_closure(const RingPtr& ring, const std::vector<RingElement>& xs,
                                                  const std::vector<RingElement>& adjusted_twins) {
    const std::size_t n = xs.size();
    if (n > 6) throw Error(ErrorKind::TooLong, "twin swap guard: n > 6");
    if (adjusted_twins.size() != n)
        throw Error(ErrorKind::Precondition, "twin_swap_closure requires adjusted twins");
    std::vector<SwapVariant> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SwapVariant var;
        var.mask = mask;
        for (std::size_t i = 0; i < n; ++i)
            var.zs.push_back((mask & (1u << i)) ? adjusted_twins[i] : xs[i]);
        SequenceReport seq = sequence_test(ring, var.zs);
        var.strong = seq.is_sequence && strong_test_c13(ring, var.zs, seq.twins).verdict;
        out.push_back(std::move(var));
    }
    return out;
}

// Periodic Tor dimensions against N = R/J, using the period-2 free
// resolution ... -> R --y--> R --x--> R -> R/(x) -> 0:
//   Tor_1 = (0:_N x)/yN,  Tor_2 = (0:_N y)/xN,  Tor_{i+2} iso Tor_i.
struct TorReport {
    std::size_t tor1 = 0;
    std::size_t tor2 = 0;
    bool all_vanish() const { return tor1 == 0 && tor2 == 0; }
};

inline TorReport tor_periodic(const RingPtr& ring, const RingElement& x, const RingElement& y,
                              const IdealInRing& j) {
    EzdReport pr = pair_test(ring, x);
    bool pair_ok = pr.verdict && (ring->mul(x, y)).is_zero() &&
                   ideal_of(ring, {y}).space == annihilator(ring, x).space;
    if (!pair_ok) throw Error(ErrorKind::Precondition, "tor_periodic requires (x,y) to be a pair on R");
    auto subquot = [&](const RingElement& a, const RingElement& b) {
        // dim (J : a)/((b) + J)
        std::size_t top = annihilator(ring, a, j).dim();
        std::size_t bot = ideal_of(ring, {b}).space.sum(j.space).dim();
        return top - bot;
    };
    return {subquot(x, y), subquot(y, x)};
}

// Exact multiplicity identity e(R) = sum over the 2^n twin-swap tuples of
// e(R/(z_1..z_n)); in the artinian case e = length.
struct D7Report {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::vector<std::size_t> summands;
    bool equal = false;
};

inline D7Report d7_check(const RingPtr& ring, const std::vector<RingElement>& xs,
                         const std::vector<RingElement>& adjusted_twins) {
    const std::size_t n = xs.size();
    if (n > 6) throw Error(ErrorKind::TooLong, "d7 guard: n > 6");
    D7Report rep;
    rep.lhs = ring->length();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<RingElement> zs;
        for (std::size_t i = 0; i < n; ++i)
            zs.push_back((mask & (1u << i)) ? adjusted_twins[i] : xs[i]);
        rep.summands.push_back(ring->length() - ideal_of(ring, zs).dim());
        rep.rhs += rep.summands.back();
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// n <= log2(e(R)) bound for strong sequences; e(R) = l(R) in dimension zero.
struct T6Report {
    std::size_t e = 0;
    std::size_t bound = 0;  // floor(log2 e)
    bool ok = false;        // n <= log2(e)
    bool tight = false;     // e == 2^n
};

inline T6Report t6_bound(const RingPtr& ring, std::size_t n) {
    T6Report rep;
    rep.e = ring->length();
    rep.bound = 0;
    while ((std::size_t{2} << rep.bound) <= rep.e) ++rep.bound;
    rep.ok = (std::size_t{1} << n) <= rep.e;
    rep.tight = (std::size_t{1} << n) == rep.e;
    return rep;
}

enum class SearchMode { pairs, sequences, minimal_sequences, strong };
enum class PoolKind { linear_forms, all_elements, given };

inline std::vector<RingElement> normalize_pool(const RingPtr& ring,
                                               const std::vector<RingElement>& given);

// Nonzero K-combinations of the variables, up to scalar (first nonzero
// coordinate normalized to 1, like every other reported witness). GF(p) only.
inline std::vector<RingElement> linear_form_pool(const RingPtr& ring) {
    if (!ring->field.is_prime_field())
        throw Error(ErrorKind::PoolTooLarge, "linear form enumeration requires a finite field");
    const std::uint64_t p = ring->field.characteristic();
    const std::size_t n = ring->nvars();
    std::vector<RingElement> pool;
    std::uint64_t size = 0;
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::uint64_t tail = 1;
        for (std::size_t k = lead + 1; k < n; ++k) {
            tail *= p;
            if (tail > 1000000) throw Error(ErrorKind::PoolTooLarge, "linear form pool too large");
        }
        size += tail;
    }
    if (size > 1000000) throw Error(ErrorKind::PoolTooLarge, "linear form pool too large");
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::vector<long long> c(n, 0);
        c[lead] = 1;
        std::size_t free_vars = n - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < free_vars; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t rem = code;
            for (std::size_t k = lead + 1; k < n; ++k) {
                c[k] = static_cast<long long>(rem % p);
                rem /= p;
            }
            RingElement e = ring->zero();
            for (std::size_t k = 0; k < n; ++k)
                if (c[k])
                    e = ring->add(e, ring->scale(ring->variable(k), Scalar::from_int(ring->field, c[k])));
            pool.push_back(std::move(e));
        }
    }
    return normalize_pool(ring, pool);
}

// Every nonzero element up to scalar; guarded to p^l <= 2^20.
inline std::vector<RingElement> all_element_pool(const RingPtr& ring) {
    if (!ring->field.is_prime_field())
        throw Error(ErrorKind::PoolTooLarge, "element enumeration requires a finite field");
    const std::uint64_t p = ring->field.characteristic();
    const std::size_t l = ring->length();
    double bits = l * std::log2(double(p));
    if (bits > 20.0) throw Error(ErrorKind::PoolTooLarge, "element pool exceeds 20-bit guard");
    std::vector<RingElement> pool;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < l; ++k) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t rem = code;
        Vector v(l, Scalar::zero(ring->field));
        long long first = -1;
        for (std::size_t k = 0; k < l; ++k) {
            v[k] = Scalar::from_int(ring->field, static_cast<long long>(rem % p));
            if (first < 0 && !v[k].is_zero()) first = static_cast<long long>(k);
            rem /= p;
        }
        if (!v[first].is_one()) continue;  // projective representative
        pool.push_back({ring, std::move(v)});
    }
    return pool;
}

inline std::vector<RingElement> normalize_pool(const RingPtr& ring, const std::vector<RingElement>& given) {
    std::vector<RingElement> pool;
    for (auto& g : given) {
        if (g.is_zero()) continue;
        RingElement e = g;
        for (auto& c : e.coords)
            if (!c.is_zero()) {
                e = ring->scale(e, c.inverse());
                break;
            }
        bool dup = false;
        for (auto& q : pool)
            if (q.coords == e.coords) {
                dup = true;
                break;
            }
        if (!dup) pool.push_back(std::move(e));
    }
    return pool;
}

// Depth-first search for pairs / sequences / strong sequences over a finite
// candidate pool, deterministic order, prefix-pruned by the pair test.
inline std::vector<std::vector<RingElement>> search(const RingPtr& ring, SearchMode mode, std::size_t len,
                                                    const std::vector<RingElement>& pool,
                                                    std::size_t max_results = 0) {
    if (mode == SearchMode::pairs) len = 1;
    if (len > 6) throw Error(ErrorKind::TooLong, "search guard: length > 6");
    std::vector<std::vector<RingElement>> results;
    std::vector<RingElement> prefix;
    std::vector<IdealInRing> ideals{zero_ideal(ring)};
    auto dfs = [&](auto&& self) -> bool {
        if (prefix.size() == len) {
            results.push_back(prefix);
            return max_results && results.size() >= max_results;
        }
        for (auto& cand : pool) {
            if (!pair_test(ring, cand, ideals.back()).verdict) continue;
            prefix.push_back(cand);
            bool keep = true;
            if (mode == SearchMode::minimal_sequences || mode == SearchMode::strong) {
                // prefixes of minimal (resp. strong) sequences are minimal
                // (resp. strong), so prune on the prefix property
                SequenceReport seq = sequence_test(ring, prefix);
                keep = seq.minimal;
                if (keep && mode == SearchMode::strong)
                    keep = strong_test_c13(ring, prefix, seq.twins).verdict;
            }
            bool stop = false;
            if (keep) {
                ideals.push_back(ideal_of(ring, prefix));
                stop = self(self);
                ideals.pop_back();
            }
            prefix.pop_back();
            if (stop) return true;
        }
        return false;
    };
    dfs(dfs);
    return results;
}

}  // namespace ezd
