#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "graph.hpp"
#include "saturation.hpp"

namespace edgeideal {

enum class PrimeKind { minimal, embedded };

/// Subgraph shapes whose closed neighborhoods produce the embedded primes of
/// I^2 (triangle only) and I^3 (all five).
enum class Shape {
    triangle,
    edge_and_triangle,
    two_disjoint_triangles,
    two_triangles_sharing_vertex,
    pentagon,
};

/// Cases (i)-(vi) for monomials of sat(I^3) \ I^3.
enum class SaturatingCase3 {
    triangle_221,
    edge_and_triangle,
    two_disjoint_triangles,
    two_triangles_sharing_vertex,
    pentagon,
    complete_k4,
};

inline std::string to_string(PrimeKind k) { return k == PrimeKind::minimal ? "minimal" : "embedded"; }

inline std::string to_string(Shape s) {
    switch (s) {
    case Shape::triangle: return "triangle";
    case Shape::edge_and_triangle: return "edge+triangle";
    case Shape::two_disjoint_triangles: return "two disjoint triangles";
    case Shape::two_triangles_sharing_vertex: return "two triangles sharing a vertex";
    case Shape::pentagon: return "pentagon";
    }
    return "?";
}

inline std::string to_string(SaturatingCase3 c) {
    switch (c) {
    case SaturatingCase3::triangle_221: return "(i) triangle with weights (2,2,1)";
    case SaturatingCase3::edge_and_triangle: return "(ii) edge and triangle meeting at a weight-2 vertex";
    case SaturatingCase3::two_disjoint_triangles: return "(iii) two non-adjacent triangles";
    case SaturatingCase3::two_triangles_sharing_vertex: return "(iv) two triangles meeting at a vertex";
    case SaturatingCase3::pentagon: return "(v) spanned by a pentagon";
    case SaturatingCase3::complete_k4: return "(vi) K4 with every outside vertex seeing two of its vertices";
    }
    return "?";
}

struct MinimalCoverEvidence {
    bool operator==(const MinimalCoverEvidence&) const = default;
};

/// a with Γ_a t-saturating, F minimal over N[V_a] and the core condition.
struct WitnessEvidence {
    ExponentVector a;
    bool operator==(const WitnessEvidence&) const = default;
};

struct ShapeEvidence {
    Shape shape;
    VertexSet vertices;
    bool operator==(const ShapeEvidence&) const = default;
};

/// U with an odd cycle in every component of Γ_U, F minimal over N[U].
struct StableSetEvidence {
    VertexSet u;
    bool operator==(const StableSetEvidence&) const = default;
};

using Evidence = std::variant<MinimalCoverEvidence, WitnessEvidence, ShapeEvidence, StableSetEvidence>;

struct AssPrimeReport {
    Cover prime;
    PrimeKind kind;
    Evidence evidence;
};

inline std::vector<VertexSet> prime_sets(const std::vector<AssPrimeReport>& reports) {
    std::vector<VertexSet> out;
    out.reserve(reports.size());
    for (const auto& r : reports) out.push_back(r.prime.vertices());
    return out;
}

namespace detail {

/// F ⊇ s and no vertex of F \ s can be dropped keeping a cover.
inline bool minimal_over(const SimpleGraph& g, VertexSet f, VertexSet s) {
    if (!s.subset_of(f) || !is_cover(g, f)) return false;
    for (int v : f - s) {
        if (is_cover(g, f - VertexSet::singleton(v))) return false;
    }
    return true;
}

/// ν(Γ_a − N_a(i)) >= t − deg_a(i) for all i ∈ core \ V_a.
inline bool core_condition(const SimpleGraph& g, const ExponentVector& a, int t, VertexSet core) {
    for (int i : core - a.support()) {
        if (!neighborhood_condition(g, a.values(), t, i)) return false;
    }
    return true;
}

class ReportCollector {
public:
    explicit ReportCollector(const SimpleGraph& g) : g_(g) {
        for (VertexSet f : minimal_covers_within(g, g.vertices())) {
            reports_.emplace(f, AssPrimeReport{Cover(g, f), PrimeKind::minimal, MinimalCoverEvidence{}});
        }
    }

    bool has(VertexSet f) const { return reports_.contains(f); }

    void add_embedded(VertexSet f, Evidence evidence) {
        reports_.try_emplace(f, AssPrimeReport{Cover(g_, f), PrimeKind::embedded, std::move(evidence)});
    }

    /// every F minimal over s, with the same evidence
    void add_minimal_over(VertexSet s, const Evidence& evidence) {
        for (const Cover& f : covers_minimal_over(g_, s)) add_embedded(f.vertices(), evidence);
    }

    std::vector<AssPrimeReport> take() {
        std::vector<AssPrimeReport> out;
        out.reserve(reports_.size());
        for (auto& [f, r] : reports_) out.push_back(std::move(r));
        return out;
    }

private:
    const SimpleGraph& g_;
    std::map<VertexSet, AssPrimeReport, CanonicalLess> reports_;
};

inline std::vector<VertexSet> triangles(const SimpleGraph& g) {
    std::vector<VertexSet> out;
    for (auto [u, v] : g.edges()) {
        for (int w : g.neighbors(u) & g.neighbors(v)) {
            if (w > v) out.push_back(VertexSet{u, v, w});
        }
    }
    return out;
}

/// Γ_s (|s| = 5) has a Hamiltonian cycle.
inline bool has_pentagon_on(const SimpleGraph& g, VertexSet s) {
    auto v = s.to_vector();
    if (v.size() != 5) return false;
    std::array<int, 4> rest{v[1], v[2], v[3], v[4]};
    do {
        if (g.has_edge(v[0], rest[0]) && g.has_edge(rest[0], rest[1]) && g.has_edge(rest[1], rest[2]) &&
            g.has_edge(rest[2], rest[3]) && g.has_edge(rest[3], v[0])) {
            return true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline bool no_edges_between(const SimpleGraph& g, VertexSet a, VertexSet b) {
    return !open_neighborhood(g, a).intersects(b);
}

/// Vertex sets of (not necessarily induced) subgraphs of the five I^3 shapes,
/// each tagged with the first shape it was found as.
inline std::vector<ShapeEvidence> cubic_shapes(const SimpleGraph& g) {
    std::map<VertexSet, Shape, CanonicalLess> found;
    auto tris = triangles(g);
    for (VertexSet t : tris) found.try_emplace(t, Shape::triangle);
    for (VertexSet t : tris) {
        for (int v : open_neighborhood(g, t) - t) found.try_emplace(t | VertexSet::singleton(v), Shape::edge_and_triangle);
    }
    for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            VertexSet both = tris[i] & tris[j];
            if (both.empty() && no_edges_between(g, tris[i], tris[j])) {
                found.try_emplace(tris[i] | tris[j], Shape::two_disjoint_triangles);
            } else if (both.size() == 1) {
                found.try_emplace(tris[i] | tris[j], Shape::two_triangles_sharing_vertex);
            }
        }
    }
    const VertexSet all = g.vertices();
    for (std::uint64_t bits = all.bits(); bits != 0; bits = (bits - 1) & all.bits()) {
        VertexSet s(bits);
        if (s.size() == 5 && has_pentagon_on(g, s)) found.try_emplace(s, Shape::pentagon);
    }
    std::vector<ShapeEvidence> out;
    for (auto [s, shape] : found) out.push_back(ShapeEvidence{shape, s});
    return out;
}

} // namespace detail

/// Decide whether P_F ∈ Ass(I^t). Minimal covers get the trivial certificate.
/// Otherwise searches a with V_a ⊆ core(F) (weights <= t−1, total <= 3(t−1))
/// such that Γ_a is t-saturating, F is minimal among the covers containing
/// N[V_a], and ν(Γ_a − N_a(i)) >= t − deg_a(i) on core(F) \ V_a. The first
/// witness in canonical (support, weights) order is returned; nothing means
/// the bounded space was exhausted.
inline std::optional<Evidence> is_associated(const SimpleGraph& g, const Cover& f, int t) {
    detail::require_positive_power(t);
    VertexSet core = core_of_cover(g, f);
    if (core.empty()) return Evidence{MinimalCoverEvidence{}};
    for (const ExponentVector& a : saturating_vectors(g, t, SaturatingSearch{core})) {
        if (!detail::minimal_over(g, f.vertices(), closed_neighborhood(g, a.support()))) continue;
        if (detail::core_condition(g, a, t, core)) return Evidence{WitnessEvidence{a}};
    }
    return std::nullopt;
}

/// Ass(I^t): minimal covers, plus every embedded P_F reached from a
/// t-saturating Γ_a through the covers minimal over N[V_a].
inline std::vector<AssPrimeReport> ass_primes(const SimpleGraph& g, int t) {
    detail::require_positive_power(t);
    detail::ReportCollector reports(g);
    for (const ExponentVector& a : saturating_vectors(g, t)) {
        VertexSet closed = closed_neighborhood(g, a.support());
        for (const Cover& f : covers_minimal_over(g, closed)) {
            if (reports.has(f.vertices())) continue;
            if (detail::core_condition(g, a, t, core_of_cover(g, f))) {
                reports.add_embedded(f.vertices(), WitnessEvidence{a});
            }
        }
    }
    return reports.take();
}

/// Ass(I^2): minimal covers and covers minimal over N[T] for triangles T.
inline std::vector<AssPrimeReport> ass_primes_2(const SimpleGraph& g) {
    detail::ReportCollector reports(g);
    for (VertexSet tri : detail::triangles(g)) {
        reports.add_minimal_over(closed_neighborhood(g, tri), ShapeEvidence{Shape::triangle, tri});
    }
    return reports.take();
}

/// Ass(I^3): minimal covers and covers minimal over N[S] where S spans a
/// triangle, an edge and a triangle meeting at a vertex, two non-adjacent
/// triangles, two triangles meeting at a vertex, or a pentagon.
inline std::vector<AssPrimeReport> ass_primes_3(const SimpleGraph& g) {
    detail::ReportCollector reports(g);
    for (const ShapeEvidence& shape : detail::cubic_shapes(g)) {
        reports.add_minimal_over(closed_neighborhood(g, shape.vertices), shape);
    }
    return reports.take();
}

/// Which of the six shapes x^a ∈ sat(I^3) \ I^3 takes (V_a must dominate g).
inline std::optional<SaturatingCase3> classify_3_saturating(const SimpleGraph& g, const ExponentVector& a) {
    detail::require_length(g, a);
    const VertexSet s = a.support();
    if (s.empty() || !is_dominating(g, s)) return std::nullopt;
    const auto v = s.to_vector();
    const auto sub = induced_subgraph(g, s);
    const int edges = sub.graph.edge_count();
    int twos = 0, ones = 0;
    for (int x : v) {
        if (a[x] == 1) ++ones;
        if (a[x] == 2) ++twos;
    }
    const bool unit_weights = ones == s.size();
    auto is_triangle = [&](int x, int y, int z) { return g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z); };

    if (s.size() == 3 && twos == 2 && ones == 1 && is_triangle(v[0], v[1], v[2])) {
        return SaturatingCase3::triangle_221;
    }
    if (s.size() == 4 && twos == 1 && ones == 3) {
        int heavy = *std::find_if(v.begin(), v.end(), [&](int x) { return a[x] == 2; });
        for (int pendant : s - VertexSet::singleton(heavy)) {
            auto tri = (s - VertexSet::singleton(pendant)).to_vector();
            if (g.has_edge(heavy, pendant) && is_triangle(tri[0], tri[1], tri[2])) {
                return SaturatingCase3::edge_and_triangle;
            }
        }
    }
    if (s.size() == 6 && unit_weights && edges == 6) {
        auto comps = components_within(g, s);
        if (comps.size() == 2 && comps[0].size() == 3 && comps[1].size() == 3) {
            return SaturatingCase3::two_disjoint_triangles;
        }
    }
    if (s.size() == 5 && unit_weights) {
        for (int center : v) {
            auto rest = (s - VertexSet::singleton(center)).to_vector();
            if (!VertexSet::from_list(rest).subset_of(g.neighbors(center))) continue;
            // the four others split into two adjacent pairs
            const std::array<std::array<int, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
            for (const auto& p : splits) {
                if (g.has_edge(rest[static_cast<std::size_t>(p[0])], rest[static_cast<std::size_t>(p[1])]) &&
                    g.has_edge(rest[static_cast<std::size_t>(p[2])], rest[static_cast<std::size_t>(p[3])])) {
                    return SaturatingCase3::two_triangles_sharing_vertex;
                }
            }
        }
        if (detail::has_pentagon_on(g, s)) return SaturatingCase3::pentagon;
    }
    if (s.size() == 4 && unit_weights && edges == 6) {
        bool two_each = true;
        for (int u : g.vertices() - s) {
            if ((g.neighbors(u) & s).size() < 2) two_each = false;
        }
        if (two_each) return SaturatingCase3::complete_k4;
    }
    return std::nullopt;
}

/// Weighted-graph form: h carries its ambient labels.
inline std::optional<SaturatingCase3> classify_3_saturating(const WeightedGraph& h, const SimpleGraph& ambient) {
    return classify_3_saturating(ambient, to_exponents(h, ambient.vertex_count()));
}

/// Ass^∞(I): minimal covers and covers minimal over N[U] for every U whose
/// induced components each contain an odd cycle.
inline std::vector<AssPrimeReport> ass_infinity(const SimpleGraph& g) {
    detail::ReportCollector reports(g);
    const VertexSet all = g.vertices();
    // submasks in ascending order, so evidence names the smallest U
    for (std::uint64_t bits = (0 - all.bits()) & all.bits(); bits != 0; bits = (bits - all.bits()) & all.bits()) {
        VertexSet u(bits);
        if (every_component_has_odd_cycle(g, u)) reports.add_minimal_over(closed_neighborhood(g, u), StableSetEvidence{u});
    }
    return reports.take();
}

namespace detail {

/// Largest s such that comp contains W, |W| = 2s−1, with Γ_W strongly
/// s-saturating; 0 when comp has no odd cycle.
inline int strong_seed_order(const SimpleGraph& g, VertexSet comp) {
    int largest_odd = comp.size() % 2 == 1 ? comp.size() : comp.size() - 1;
    for (int size = largest_odd; size >= 3; size -= 2) {
        for (std::uint64_t bits = comp.bits(); bits != 0; bits = (bits - 1) & comp.bits()) {
            VertexSet w(bits);
            if (w.size() != size) continue;
            int s = (size + 1) / 2;
            if (strongly_t_saturating(g, ExponentVector::indicator(g.vertex_count(), w).values(), s)) return s;
        }
    }
    return 0;
}

} // namespace detail

/// s(Γ): max over U (odd cycle in every component of Γ_U) of
/// |U| − Σ s_i + 1; 1 for bipartite graphs. Bounds astab(I) from above.
inline int s_gamma(const SimpleGraph& g) {
    int best = 1;
    std::map<std::uint64_t, int> seed_order;
    const VertexSet all = g.vertices();
    for (std::uint64_t bits = (0 - all.bits()) & all.bits(); bits != 0; bits = (bits - all.bits()) & all.bits()) {
        VertexSet u(bits);
        if (!every_component_has_odd_cycle(g, u)) continue;
        int sum = 0;
        for (VertexSet comp : components_within(g, u)) {
            auto [it, fresh] = seed_order.try_emplace(comp.bits(), 0);
            if (fresh) it->second = detail::strong_seed_order(g, comp);
            sum += it->second;
        }
        best = std::max(best, u.size() - sum + 1);
    }
    return best;
}

/// depth R/I^t > 0, i.e. the maximal ideal is not associated to I^t, decided
/// by the absence of a dominating triangle (t = 2) or of a dominating
/// subgraph of the five I^3 shapes (t = 3).
inline bool depth_positive(const SimpleGraph& g, int t) {
    if (t == 2) {
        for (VertexSet tri : detail::triangles(g)) {
            if (is_dominating(g, tri)) return false;
        }
        return true;
    }
    if (t == 3) {
        for (const ShapeEvidence& shape : detail::cubic_shapes(g)) {
            if (is_dominating(g, shape.vertices)) return false;
        }
        return true;
    }
    throw UnsupportedParameter("depth criterion only known for t = 2 and t = 3");
}

} // namespace edgeideal
