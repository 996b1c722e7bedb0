#pragma once

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace edgeideal {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 (n <= 64), adjacency as bitsets.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0 || n > kMaxVertices) {
            throw InvalidInput("vertex count " + std::to_string(n) + " outside 0..64");
        }
    }

    /// Rejects loops, out-of-range endpoints and repeated edges.
    SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
        for (auto [u, v] : edges) {
            if (has_edge_checked(u, v)) {
                throw InvalidInput("duplicate edge {" + std::to_string(u + 1) + "," +
                                   std::to_string(v + 1) + "}");
            }
            add_edge(u, v);
        }
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbors(v).size(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u + 1));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    /// Edges {u,v} with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
        }
        return out;
    }

    int edge_count() const {
        int twice = 0;
        for (int u = 0; u < n_; ++u) twice += degree(u);
        return twice / 2;
    }

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw InvalidInput("vertex " + std::to_string(v + 1) + " outside 1.." +
                               std::to_string(n_));
        }
    }
    bool has_edge_checked(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return has_edge(u, v);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// A vertex cover of a fixed ambient graph; validated on construction.
class Cover {
public:
    Cover(const SimpleGraph& g, VertexSet vertices) : vertices_(vertices) {
        if (!vertices.subset_of(g.vertices())) throw InvalidInput("cover has vertices outside the graph");
        for (auto [u, v] : g.edges()) {
            if (!vertices.contains(u) && !vertices.contains(v)) {
                throw InvalidInput(format_set(vertices) + " misses edge {" + std::to_string(u + 1) +
                                   "," + std::to_string(v + 1) + "}");
            }
        }
    }

    VertexSet vertices() const { return vertices_; }
    bool operator==(const Cover&) const = default;

private:
    VertexSet vertices_;
};

/// Induced subgraph together with the local -> ambient vertex map.
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> ambient; ///< ambient[local] = original vertex
};

// ---------------------------------------------------------------------------
// Neighborhoods, covers, domination

/// N(U): vertices adjacent to some vertex of U (may meet U).
inline VertexSet open_neighborhood(const SimpleGraph& g, VertexSet u) {
    VertexSet out;
    for (int v : u) out |= g.neighbors(v);
    return out;
}

/// N[U] = U ∪ N(U).
inline VertexSet closed_neighborhood(const SimpleGraph& g, VertexSet u) {
    return u | open_neighborhood(g, u);
}

/// Vertices of u keep their relative order.
inline InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexSet u) {
    InducedSubgraph out{SimpleGraph(u.size()), u.to_vector()};
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.ambient.size(); ++i) local[static_cast<std::size_t>(out.ambient[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < out.ambient.size(); ++i) {
        int a = out.ambient[i];
        for (int b : g.neighbors(a) & u) {
            if (a < b) out.graph.add_edge(static_cast<int>(i), local[static_cast<std::size_t>(b)]);
        }
    }
    return out;
}

inline bool is_cover(const SimpleGraph& g, VertexSet s) {
    for (int v : g.vertices() - s) {
        if (!g.neighbors(v).subset_of(s)) return false;
    }
    return true;
}

/// core(F): vertices of F with no neighbor outside F.
inline VertexSet core_of_cover(const SimpleGraph& g, const Cover& f) {
    VertexSet core;
    for (int v : f.vertices()) {
        if (g.neighbors(v).subset_of(f.vertices())) core.insert(v);
    }
    return core;
}

/// Cover with no proper sub-cover. Checked by single-vertex removal, which
/// suffices because supersets of covers are covers.
inline bool is_minimal_cover(const SimpleGraph& g, VertexSet s) {
    if (!is_cover(g, s)) return false;
    for (int v : s) {
        if (is_cover(g, s - VertexSet::singleton(v))) return false;
    }
    return true;
}

inline bool is_dominating(const SimpleGraph& g, VertexSet u) {
    for (int v : g.vertices() - u) {
        if (!g.neighbors(v).intersects(u)) return false;
    }
    return true;
}

namespace detail {

// Bron-Kerbosch with pivoting on the complement of g restricted to `allowed`;
// reports maximal independent sets of g[allowed].
inline void maximal_independent_sets(const SimpleGraph& g, VertexSet allowed, VertexSet r,
                                     VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    auto non_neighbors = [&](int v) { return allowed - g.neighbors(v) - VertexSet::singleton(v); };
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
        int score = (p & non_neighbors(u)).size();
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (int v : p - non_neighbors(pivot)) {
        VertexSet nv = non_neighbors(v);
        maximal_independent_sets(g, allowed, r | VertexSet::singleton(v), p & nv, x & nv, out);
        p.erase(v);
        x.insert(v);
    }
}

inline void sort_canonical(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

} // namespace detail

/// Minimal vertex covers of g[allowed], as subsets of `allowed`.
inline std::vector<VertexSet> minimal_covers_within(const SimpleGraph& g, VertexSet allowed) {
    std::vector<VertexSet> independent;
    detail::maximal_independent_sets(g, allowed, VertexSet{}, allowed, VertexSet{}, independent);
    std::vector<VertexSet> covers;
    covers.reserve(independent.size());
    for (VertexSet s : independent) covers.push_back(allowed - s);
    detail::sort_canonical(covers);
    return covers;
}

/// All minimal vertex covers, canonically ordered.
inline std::vector<Cover> minimal_covers(const SimpleGraph& g) {
    std::vector<Cover> out;
    for (VertexSet s : minimal_covers_within(g, g.vertices())) out.emplace_back(g, s);
    return out;
}

/// Covers F ⊇ s that are minimal among the covers containing s:
/// exactly s ∪ M for the minimal covers M of the graph induced on V \ s.
inline std::vector<Cover> covers_minimal_over(const SimpleGraph& g, VertexSet s) {
    std::vector<VertexSet> sets;
    for (VertexSet m : minimal_covers_within(g, g.vertices() - s)) sets.push_back(s | m);
    detail::sort_canonical(sets);
    std::vector<Cover> out;
    out.reserve(sets.size());
    for (VertexSet f : sets) out.emplace_back(g, f);
    return out;
}

// ---------------------------------------------------------------------------
// Components and odd cycles

/// Connected components of g[within]; each component is reported once,
/// ordered by smallest vertex.
inline std::vector<VertexSet> components_within(const SimpleGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::singleton(rest.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next = (open_neighborhood(g, frontier) & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const SimpleGraph& g) {
    return components_within(g, g.vertices());
}

/// A shortest odd cycle of g[within] as a vertex sequence (consecutive
/// vertices adjacent, last adjacent to first), or nothing if bipartite.
inline std::optional<std::vector<int>> shortest_odd_cycle_within(const SimpleGraph& g, VertexSet within) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::optional<std::vector<int>> best;
    std::vector<int> dist(n), parent(n);
    for (int root : within) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        int hit_u = -1, hit_v = -1;
        while (!queue.empty() && hit_u < 0) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u) & within) {
                auto& dv = dist[static_cast<std::size_t>(v)];
                if (dv < 0) {
                    dv = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (dv == dist[static_cast<std::size_t>(u)]) {
                    hit_u = u;
                    hit_v = v;
                    break;
                }
            }
        }
        if (hit_u < 0) continue;
        int length_bound = 2 * dist[static_cast<std::size_t>(hit_u)] + 1;
        if (best && static_cast<int>(best->size()) <= length_bound) continue;
        // climb both tree paths to their meeting point
        std::vector<int> left{hit_u}, right{hit_v};
        while (left.back() != right.back()) {
            left.push_back(parent[static_cast<std::size_t>(left.back())]);
            right.push_back(parent[static_cast<std::size_t>(right.back())]);
        }
        right.pop_back();
        std::vector<int> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        best = std::move(cycle);
    }
    return best;
}

/// Length of a shortest odd cycle; absent iff g is bipartite.
inline std::optional<int> shortest_odd_cycle(const SimpleGraph& g) {
    auto cycle = shortest_odd_cycle_within(g, g.vertices());
    if (!cycle) return std::nullopt;
    return static_cast<int>(cycle->size());
}

/// Every component of g[u] contains an odd cycle, of length <= max_length
/// when one is given.
inline bool every_component_has_odd_cycle(const SimpleGraph& g, VertexSet u,
                                          std::optional<int> max_length = std::nullopt) {
    if (u.empty()) return false;
    for (VertexSet comp : components_within(g, u)) {
        auto cycle = shortest_odd_cycle_within(g, comp);
        if (!cycle) return false;
        if (max_length && static_cast<int>(cycle->size()) > *max_length) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text formats

/// "n m" header, then m lines "u v" (1-based, u < v).
inline SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return line;
        }
        return std::nullopt;
    };
    auto header = next_line();
    if (!header) throw ParseError("empty graph file", 1);
    std::istringstream hs(*header);
    int n = -1, m = -1;
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("expected header 'n m'", line_no);
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count must be in 0..64", line_no);
    if (m < 0) throw ParseError("edge count must be non-negative", line_no);
    SimpleGraph g(n);
    for (int k = 0; k < m; ++k) {
        auto row = next_line();
        if (!row) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k), line_no + 1);
        std::istringstream rs(*row);
        int u = 0, v = 0;
        if (!(rs >> u >> v) || (rs >> extra)) throw ParseError("expected edge 'u v'", line_no);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint outside 1.." + std::to_string(n), line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        if (g.has_edge(u - 1, v - 1)) throw ParseError("duplicate edge", line_no);
        g.add_edge(u - 1, v - 1);
    }
    if (next_line()) throw ParseError("trailing content after edge list", line_no);
    return g;
}

inline SimpleGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

/// Canonical text form; inverse of parse_graph.
inline std::string format_graph(const SimpleGraph& g) {
    auto edges = g.edges();
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

/// Inline form "1-2,1-3,2-3". Vertex count is the largest label unless
/// `vertex_count` is given.
inline SimpleGraph parse_edge_list(std::string_view text, std::optional<int> vertex_count = std::nullopt) {
    std::vector<Edge> edges;
    int max_label = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t dash = item.find('-');
        if (dash == std::string_view::npos) throw ParseError("edge '" + std::string(item) + "' is not of the form u-v");
        int u = 0, v = 0;
        auto parse = [&](std::string_view s, int& out) {
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || p != s.data() + s.size() || out < 1) {
                throw ParseError("bad vertex label '" + std::string(s) + "'");
            }
        };
        parse(item.substr(0, dash), u);
        parse(item.substr(dash + 1), v);
        edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
        max_label = std::max({max_label, u, v});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    int n = vertex_count.value_or(max_label);
    if (n < max_label) throw ParseError("edge label exceeds vertex count");
    try {
        return SimpleGraph(n, edges);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

} // namespace edgeideal
