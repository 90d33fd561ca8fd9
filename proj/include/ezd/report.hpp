#pragma once

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ezd/classify.hpp"
#include "ezd/koszul.hpp"
#include "ezd/ringfile.hpp"

namespace ezd {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

namespace report_detail {

inline std::string elem(const RingPtr& ring, const RingElement& a) { return ring->render_normalized(a); }

inline Json elems(const RingPtr& ring, const std::vector<RingElement>& v) {
    Json out = Json::array();
    for (auto& a : v) out.push_back(elem(ring, a));
    return out;
}

inline std::vector<std::string> split_semicolons(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline RingElement parse_element(const RingPtr& ring, const std::string& src,
                                 const std::map<std::string, RingElement>& named) {
    if (auto it = named.find(src); it != named.end()) return it->second;
    return ring->element(parse_polynomial(src, ring->var_names, ring->field, ring->order));
}

inline std::vector<RingElement> parse_elements(const RingPtr& ring, const std::string& src,
                                               const std::map<std::string, RingElement>& named) {
    std::vector<RingElement> out;
    for (auto& piece : split_semicolons(src)) out.push_back(parse_element(ring, piece, named));
    if (out.empty()) throw Error(ErrorKind::BadInput, "empty element list");
    return out;
}

}  // namespace report_detail

inline Json ring_summary(const RingPtr& ring) {
    Json j;
    j["field"] = ring->field.name();
    j["vars"] = ring->var_names;
    j["order"] = order_name(ring->order);
    j["length"] = ring->length();
    j["socle_degree"] = ring->socle_degree;
    Json hf = Json::array();
    for (std::size_t i = 0; i + 1 < ring->filtration.size(); ++i)
        hf.push_back(ring->filtration[i].dim() - ring->filtration[i + 1].dim());
    j["hilbert_function"] = hf;
    return j;
}

inline Json pair_report_json(const RingPtr& ring, const EzdReport& rep) {
    using report_detail::elem;
    Json j;
    j["x"] = elem(ring, rep.x);
    j["verdict"] = rep.verdict;
    if (rep.twin) j["twin"] = elem(ring, *rep.twin);
    j["dim_xr"] = rep.dim_xr;
    j["dim_ann"] = rep.dim_ann;
    j["reason"] = pair_failure_name(rep.reason);
    return j;
}

inline Json sequence_report_json(const RingPtr& ring, const SequenceReport& rep) {
    Json j;
    j["xs"] = report_detail::elems(ring, rep.xs);
    j["is_sequence"] = rep.is_sequence;
    if (rep.failing_index) j["failing_index"] = *rep.failing_index;
    Json steps = Json::array();
    for (auto& s : rep.steps) steps.push_back(pair_report_json(ring, s));
    j["steps"] = steps;
    if (rep.is_sequence) j["twins"] = report_detail::elems(ring, rep.twins);
    j["mu"] = rep.mu;
    j["minimal"] = rep.minimal;
    return j;
}

inline Json classify_report_json(const ClassifyReport& c) {
    Json j;
    j["length"] = c.length;
    j["hilbert_function"] = c.hilbert_function;
    j["socle_dim"] = c.socle_dim;
    j["socle_degree"] = c.socle_degree;
    j["gorenstein"] = c.gorenstein;
    j["graded"] = c.graded;
    switch (c.ci_status) {
        case CiStatus::computed: j["ci_status"] = "computed"; break;
        case CiStatus::not_graded: j["ci_status"] = "not_graded"; break;
        case CiStatus::not_minimally_embedded: j["ci_status"] = "not_minimally_embedded"; break;
    }
    if (c.ci_status == CiStatus::computed) {
        j["mu_ideal"] = c.mu_ideal;
        j["generator_degrees"] = c.generator_degrees;
        j["mu_by_degree"] = c.mu_by_degree;
        j["ci"] = c.ci;
        j["quadratic"] = c.quadratic;
        j["koszul_ci"] = c.koszul_ci;
    }
    j["e"] = c.e;
    j["log2_bound"] = c.log2_bound;
    return j;
}

inline Json t2_report_json(const RingPtr&, const T2Report& rep) {
    Json j;
    Json prefixes = Json::array();
    for (auto& p : rep.prefixes) {
        Json pj;
        pj["prefix"] = p.prefix;
        pj["membership_ok"] = p.membership_ok;
        Json hs = Json::array();
        for (auto& h : p.homology) {
            Json hj;
            hj["degree"] = h.degree;
            hj["length"] = h.length;
            hj["mu"] = h.mu;
            hj["quotient_length"] = h.quotient_len;
            hj["free"] = h.free;
            hj["rank_expected"] = h.rank_expected;
            hj["free_of_expected_rank"] = h.free_of_expected_rank();
            hs.push_back(hj);
        }
        pj["homology"] = hs;
        pj["ok"] = p.ok;
        prefixes.push_back(pj);
    }
    j["prefixes"] = prefixes;
    j["koszul_verdict"] = rep.koszul_verdict;
    j["sequential_verdict"] = rep.sequential_verdict;
    j["agree"] = rep.agree;
    return j;
}

inline Json report_envelope(const std::string& command, const std::string& file) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    if (!file.empty()) j["file"] = file;
    return j;
}

// --- commands ------------------------------------------------------------

inline Json cmd_analyze(const std::string& path, std::optional<MonomialOrder> order) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    Json j = report_envelope("analyze", path);
    j["ring"] = ring_summary(lr.ring);
    Json gb = Json::array();
    for (auto& g : lr.ring->gb.generators) gb.push_back(g.str(lr.ring->var_names));
    j["groebner_basis"] = gb;
    Json basis = Json::array();
    for (auto& m : lr.ring->basis)
        basis.push_back(Polynomial::term(lr.ring->field, m, Scalar::one(lr.ring->field), lr.ring->order)
                            .str(lr.ring->var_names));
    j["standard_monomials"] = basis;
    j["classify"] = classify_report_json(classify(lr.ring));
    return j;
}

inline Json cmd_pair(const std::string& path, const std::string& x_src, const std::string& mod_src,
                     std::optional<MonomialOrder> order) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    RingElement x = report_detail::parse_element(lr.ring, x_src, lr.named);
    std::optional<IdealInRing> mod;
    if (!mod_src.empty()) mod = ideal_of(lr.ring, report_detail::parse_elements(lr.ring, mod_src, lr.named));
    Json j = report_envelope("pair", path);
    j["ring"] = ring_summary(lr.ring);
    if (mod) j["mod"] = report_detail::elems(lr.ring, mod->generators);
    j["pair"] = pair_report_json(lr.ring, pair_test(lr.ring, x, mod));
    return j;
}

inline Json cmd_seq(const std::string& path, const std::string& xs_src, const std::string& check,
                    std::optional<MonomialOrder> order) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    auto xs = report_detail::parse_elements(lr.ring, xs_src, lr.named);
    Json j = report_envelope("seq", path);
    j["ring"] = ring_summary(lr.ring);
    SequenceReport seq = sequence_test(lr.ring, xs);
    j["sequence"] = sequence_report_json(lr.ring, seq);
    const bool all = check == "all";
    if (all || check == "minimal") j["minimal"] = seq.minimal;
    if ((all || check == "permutable") && seq.is_sequence) {
        PermutabilityReport p = permutability_test(lr.ring, xs);
        Json pj;
        pj["verdict"] = p.verdict;
        if (p.failing_permutation) pj["failing_permutation"] = *p.failing_permutation;
        j["permutable"] = pj;
    }
    if ((all || check == "strong") && seq.is_sequence) {
        StrongC13Report c13 = strong_test_c13(lr.ring, xs, seq.twins);
        Json cj;
        cj["verdict"] = c13.verdict;
        cj["minimal"] = c13.minimal;
        if (c13.failing_index) cj["failing_index"] = *c13.failing_index;
        if (c13.verdict) cj["adjusted_twins"] = report_detail::elems(lr.ring, c13.adjusted_twins);
        j["strong"] = cj;
        if (c13.verdict) {
            StrongOracleReport oracle = strong_test_oracle(lr.ring, xs, c13.adjusted_twins);
            j["strong_oracle"] = oracle.verdict;
            j["strong_agree"] = oracle.verdict == c13.verdict;
        }
    }
    return j;
}

inline Json cmd_koszul(const std::string& path, const std::string& xs_src, std::optional<MonomialOrder> order) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    auto xs = report_detail::parse_elements(lr.ring, xs_src, lr.named);
    Json j = report_envelope("koszul", path);
    j["ring"] = ring_summary(lr.ring);
    j["koszul"] = t2_report_json(lr.ring, t2_check(lr.ring, xs));
    return j;
}

inline Json cmd_tor(const std::string& path, const std::string& x_src, const std::string& y_src,
                    const std::string& mod_src, std::optional<MonomialOrder> order) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    RingElement x = report_detail::parse_element(lr.ring, x_src, lr.named);
    RingElement y = report_detail::parse_element(lr.ring, y_src, lr.named);
    IdealInRing mod = mod_src.empty() ? zero_ideal(lr.ring)
                                      : ideal_of(lr.ring, report_detail::parse_elements(lr.ring, mod_src, lr.named));
    TorReport t = tor_periodic(lr.ring, x, y, mod);
    Json j = report_envelope("tor", path);
    j["ring"] = ring_summary(lr.ring);
    j["x"] = report_detail::elem(lr.ring, x);
    j["y"] = report_detail::elem(lr.ring, y);
    j["mod"] = report_detail::elems(lr.ring, mod.generators);
    j["tor1"] = t.tor1;
    j["tor2"] = t.tor2;
    j["all_vanish"] = t.all_vanish();
    return j;
}

inline Json cmd_search(const std::string& path, const std::string& mode_text, std::size_t len,
                       const std::string& pool_text, std::optional<MonomialOrder> order,
                       std::size_t max_results = 0) {
    LoadedRing lr = load_ring(parse_ring_file(path), order);
    SearchMode mode;
    if (mode_text == "pairs")
        mode = SearchMode::pairs;
    else if (mode_text == "sequences")
        mode = SearchMode::sequences;
    else if (mode_text == "minimal")
        mode = SearchMode::minimal_sequences;
    else if (mode_text == "strong")
        mode = SearchMode::strong;
    else
        throw Error(ErrorKind::BadInput, "unknown search mode: " + mode_text);
    std::vector<RingElement> pool;
    if (pool_text == "linear")
        pool = linear_form_pool(lr.ring);
    else if (pool_text == "all")
        pool = all_element_pool(lr.ring);
    else
        throw Error(ErrorKind::BadInput, "unknown pool: " + pool_text);
    auto hits = search(lr.ring, mode, len, pool, max_results);
    Json j = report_envelope("search", path);
    j["ring"] = ring_summary(lr.ring);
    j["mode"] = mode_text;
    j["len"] = mode == SearchMode::pairs ? std::size_t{1} : len;
    j["pool"] = pool_text;
    j["pool_size"] = pool.size();
    Json results = Json::array();
    for (auto& hit : hits) results.push_back(report_detail::elems(lr.ring, hit));
    j["count"] = hits.size();
    j["results"] = results;
    return j;
}

// --- census ----------------------------------------------------------------

inline Json census_entry(const std::string& path) {
    Json entry;
    entry["file"] = std::filesystem::path(path).filename().string();
    try {
        LoadedRing lr = load_ring(parse_ring_file(path));
        const RingPtr& ring = lr.ring;
        entry["ring"] = ring_summary(ring);
        ClassifyReport cls = classify(ring);
        entry["gorenstein"] = cls.gorenstein;
        if (cls.ci_status == CiStatus::computed) entry["koszul_ci"] = cls.koszul_ci;
        const std::size_t bound = cls.log2_bound;
        entry["log2_bound"] = bound;

        std::vector<RingElement> pool;
        bool searched = true;
        try {
            pool = linear_form_pool(ring);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PoolTooLarge) throw;
            searched = false;
        }
        entry["searched"] = searched;

        bool bound_ok = true;
        bool d7_ok = true;
        bool p8_agree = true;
        bool t2_agree = true;
        std::size_t max_strong = 0;
        std::vector<RingElement> witness;

        if (searched) {
            // Strong sequences are minimal, and minimal sequences of linear
            // forms are linearly independent modulo m^2, so a linear-form
            // pool can never yield more than nvars of them. That caps both
            // the descending search and the past-the-bound sweep.
            std::size_t cap = std::min(bound, ring->nvars());
            std::size_t over = std::min<std::size_t>(bound + 1, 6);
            if (over <= ring->nvars() && !search(ring, SearchMode::strong, over, pool, 1).empty())
                bound_ok = false;
            for (std::size_t len = cap; len >= 1; --len) {
                auto hits = search(ring, SearchMode::strong, len, pool, 1);
                if (!hits.empty()) {
                    max_strong = len;
                    witness = hits[0];
                    break;
                }
            }
            entry["max_strong_length"] = max_strong;
            if (!witness.empty()) {
                entry["strong_witness"] = report_detail::elems(ring, witness);
                SequenceReport seq = sequence_test(ring, witness);
                StrongC13Report c13 = strong_test_c13(ring, witness, seq.twins);
                StrongOracleReport oracle = strong_test_oracle(ring, witness, c13.adjusted_twins);
                p8_agree = p8_agree && c13.verdict == oracle.verdict;
                D7Report d7 = d7_check(ring, witness, c13.adjusted_twins);
                d7_ok = d7.equal;
                entry["d7_lhs"] = d7.lhs;
                entry["d7_rhs"] = d7.rhs;
            }
            // cross-checks on a handful of candidates beyond the witness
            std::size_t tested = 0;
            for (auto& cand : pool) {
                if (tested >= 3) break;
                EzdReport pr = pair_test(ring, cand);
                if (!pr.verdict && pr.reason == PairFailure::zero) continue;
                if (pr.verdict) {
                    StrongC13Report c13 = strong_test_c13(ring, {cand}, {*pr.twin});
                    std::vector<RingElement> tw =
                        c13.verdict ? c13.adjusted_twins : std::vector<RingElement>{*pr.twin};
                    StrongOracleReport oracle = strong_test_oracle(ring, {cand}, tw);
                    p8_agree = p8_agree && c13.verdict == oracle.verdict;
                }
                if (ring->length() <= 32) t2_agree = t2_agree && t2_check(ring, {cand}).agree;
                ++tested;
            }
            if (!witness.empty() && witness.size() <= 4 && ring->length() <= 32)
                t2_agree = t2_agree && t2_check(ring, witness).agree;
        }

        entry["bound_ok"] = bound_ok;
        entry["d7_ok"] = d7_ok;
        entry["p8_agree"] = p8_agree;
        entry["t2_agree"] = t2_agree;
        entry["consistent"] = bound_ok && d7_ok && p8_agree && t2_agree;
    } catch (const Error& e) {
        entry["error"] = error_kind_name(e.kind());
        entry["message"] = e.what();
    }
    return entry;
}

inline Json cmd_census(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorKind::BadInput, "not a directory: " + dir);
    std::vector<std::string> files;
    for (auto& de : fs::directory_iterator(dir))
        if (de.is_regular_file() && de.path().extension() == ".ring") files.push_back(de.path().string());
    std::sort(files.begin(), files.end(),
              [](const std::string& a, const std::string& b) {
                  return fs::path(a).filename().string() < fs::path(b).filename().string();
              });
    Json j = report_envelope("census", dir);
    Json entries = Json::array();
    std::size_t consistent = 0, errors = 0;
    for (auto& f : files) {
        Json entry = census_entry(f);
        if (entry.contains("error"))
            ++errors;
        else if (entry["consistent"].get<bool>())
            ++consistent;
        entries.push_back(std::move(entry));
    }
    j["entries"] = entries;
    Json summary;
    summary["files"] = files.size();
    summary["errors"] = errors;
    summary["consistent"] = consistent;
    summary["inconsistent"] = files.size() - errors - consistent;
    j["summary"] = summary;
    j["all_consistent"] = consistent + errors == files.size();
    return j;
}

// --- rendering ---------------------------------------------------------------

namespace report_detail {

inline void render_text_rec(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            render_text_rec(v, key, out);
        }
    } else if (j.is_array()) {
        if (j.empty()) out << prefix << " = []\n";
        std::size_t i = 0;
        for (auto& v : j) render_text_rec(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out << prefix << " = " << j.dump() << "\n";
    }
}

}  // namespace report_detail

inline std::string render_report(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    if (format == "text") {
        std::ostringstream out;
        report_detail::render_text_rec(j, "", out);
        return out.str();
    }
    throw Error(ErrorKind::BadInput, "unknown format: " + format);
}

}  // namespace ezd
