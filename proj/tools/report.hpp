#pragma once

// Rendering of query results as JSON (--json) or plain text tables.
// Vertices are 1-based here and only here.

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <edgeideal/edgeideal.hpp>

namespace edgeideal::report {

using nlohmann::ordered_json;

inline ordered_json vertex_list(VertexSet s) {
    ordered_json out = ordered_json::array();
    for (int v : s) out.push_back(v + 1);
    return out;
}

inline ordered_json edge_list(const std::vector<Edge>& edges, const std::vector<int>* ambient = nullptr) {
    ordered_json out = ordered_json::array();
    for (auto [u, v] : edges) {
        if (ambient) {
            u = (*ambient)[static_cast<std::size_t>(u)];
            v = (*ambient)[static_cast<std::size_t>(v)];
        }
        out.push_back({u + 1, v + 1});
    }
    return out;
}

/// The maximal ideal is written "m", every other prime as its vertex set.
inline std::string prime_label(const SimpleGraph& g, VertexSet f) {
    return f == g.vertices() && g.vertex_count() > 0 ? "m" : format_set(f);
}

// ---------------------------------------------------------------------------
// nu

inline ordered_json nu_json(const WeightedGraph& h, const MatchingResult& r) {
    ordered_json weights = ordered_json::array();
    for (int i = 0; i < h.vertex_count(); ++i) {
        weights.push_back(std::to_string(h.ambient[static_cast<std::size_t>(i)] + 1) + ":" +
                          std::to_string(h.weight[static_cast<std::size_t>(i)]));
    }
    ordered_json out;
    out["graph"] = {{"weights", weights}, {"edges", edge_list(h.base.edges(), &h.ambient)}};
    out["nu"] = r.nu;
    out["matching"] = edge_list(r.witness.edges, &h.ambient);
    return out;
}

inline std::string nu_text(const WeightedGraph& h, const MatchingResult& r) {
    std::ostringstream out;
    out << "nu = " << r.nu << "\nmatching:";
    if (r.witness.edges.empty()) out << " (empty)";
    for (auto [u, v] : r.witness.edges) {
        out << ' ' << h.ambient[static_cast<std::size_t>(u)] + 1 << '-' << h.ambient[static_cast<std::size_t>(v)] + 1;
    }
    out << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// sat

struct SatResult {
    int t;
    ExponentVector a;
    bool in_power;
    bool in_saturation;
};

inline ordered_json sat_json(const SatResult& r) {
    ordered_json out;
    out["t"] = r.t;
    out["exponents"] = r.a.values();
    out["in_power"] = r.in_power;
    out["in_saturation"] = r.in_saturation;
    out["in_diff"] = r.in_saturation && !r.in_power;
    return out;
}

inline std::string sat_text(const SatResult& r) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream out;
    out << "x^(" << format_exponents(r.a) << "), t = " << r.t << '\n'
        << "in I^t:          " << yn(r.in_power) << '\n'
        << "in sat(I^t):     " << yn(r.in_saturation) << '\n'
        << "in sat(I^t)\\I^t: " << yn(r.in_saturation && !r.in_power) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// associated primes

/// A prime together with how it was found; oracle primes carry the colon
/// witness w with I^t : x^w = P_F.
struct PrimeRow {
    VertexSet vertices;
    PrimeKind kind;
    Evidence evidence;
    bool oracle = false;
};

inline std::vector<PrimeRow> rows_of(const std::vector<AssPrimeReport>& reports) {
    std::vector<PrimeRow> out;
    for (const auto& r : reports) out.push_back({r.prime.vertices(), r.kind, r.evidence});
    return out;
}

inline std::vector<PrimeRow> rows_of_oracle(const SimpleGraph& g,
                                            const std::map<VertexSet, ExponentVector, CanonicalLess>& primes) {
    std::vector<PrimeRow> out;
    for (const auto& [f, w] : primes) {
        const auto kind = is_minimal_cover(g, f) ? PrimeKind::minimal : PrimeKind::embedded;
        out.push_back({f, kind, WitnessEvidence{w}, true});
    }
    return out;
}

inline ordered_json evidence_json(const PrimeRow& row) {
    return std::visit(
        [&](const auto& e) -> ordered_json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, MinimalCoverEvidence>) {
                return {{"type", "minimal-cover"}};
            } else if constexpr (std::is_same_v<T, WitnessEvidence>) {
                return {{"type", row.oracle ? "colon-witness" : "saturating-vector"}, {"exponents", e.a.values()}};
            } else if constexpr (std::is_same_v<T, ShapeEvidence>) {
                return {{"type", "shape"}, {"shape", to_string(e.shape)}, {"vertices", vertex_list(e.vertices)}};
            } else {
                return {{"type", "odd-cycle-set"}, {"vertices", vertex_list(e.u)}};
            }
        },
        row.evidence);
}

inline std::string evidence_text(const PrimeRow& row) {
    return std::visit(
        [&](const auto& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, MinimalCoverEvidence>) {
                return "minimal cover";
            } else if constexpr (std::is_same_v<T, WitnessEvidence>) {
                return (row.oracle ? "colon by x^(" : "saturating a = (") + format_exponents(e.a) + ")";
            } else if constexpr (std::is_same_v<T, ShapeEvidence>) {
                return to_string(e.shape) + " on " + format_set(e.vertices);
            } else {
                return "U = " + format_set(e.u);
            }
        },
        row.evidence);
}

inline ordered_json primes_json(const std::vector<PrimeRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
        out.push_back({{"vertices", vertex_list(r.vertices)}, {"kind", to_string(r.kind)}, {"evidence", evidence_json(r)}});
    }
    return out;
}

inline ordered_json ass_json(std::optional<int> t, const std::vector<PrimeRow>& rows) {
    ordered_json out;
    if (t) out["t"] = *t;
    out["primes"] = primes_json(rows);
    return out;
}

inline std::string ass_text(const SimpleGraph& g, const std::string& title, const std::vector<PrimeRow>& rows) {
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, prime_label(g, r.vertices).size());
    std::ostringstream out;
    out << title << '\n';
    auto pad = [](std::string s, std::size_t w) { return s.append(w > s.size() ? w - s.size() : 0, ' '); };
    out << pad("prime", width) << "  " << pad("kind", 8) << "  evidence\n";
    for (const auto& r : rows) {
        out << pad(prime_label(g, r.vertices), width) << "  " << pad(to_string(r.kind), 8) << "  "
            << evidence_text(r) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// census

inline ordered_json census_json(const census::CensusReport& r, bool timing) {
    ordered_json out;
    out["n"] = r.n;
    out["t"] = r.t;
    out["graphs_checked"] = r.graphs_checked;
    ordered_json mismatches = ordered_json::array();
    for (const auto& m : r.mismatches) {
        ordered_json exp = ordered_json::array(), got = ordered_json::array();
        for (auto f : m.expected) exp.push_back(vertex_list(f));
        for (auto f : m.got) got.push_back(vertex_list(f));
        mismatches.push_back({{"edges", edge_list(m.graph.edges())},
                              {"engine", m.engine},
                              {"expected", exp},
                              {"got", got}});
    }
    out["mismatches"] = mismatches;
    out["passed"] = r.passed();
    if (timing) out["elapsed_ms"] = r.elapsed.count();
    return out;
}

inline std::string census_text(const census::CensusReport& r, bool timing) {
    std::ostringstream out;
    out << "n = " << r.n << ", t = " << r.t << ": " << r.graphs_checked << " graphs, " << r.mismatches.size()
        << " mismatches";
    if (timing) out << " (" << r.elapsed.count() << " ms)";
    out << '\n';
    for (const auto& m : r.mismatches) {
        out << "\nengine " << m.engine << " disagrees with the oracle on\n" << format_graph(m.graph);
        out << "oracle:";
        for (auto f : m.expected) out << ' ' << prime_label(m.graph, f);
        out << "\n" << m.engine << ":";
        for (auto f : m.got) out << ' ' << prime_label(m.graph, f);
        out << '\n';
    }
    return out.str();
}

} // namespace edgeideal::report
