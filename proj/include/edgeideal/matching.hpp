#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace edgeideal {

/// Simple graph whose vertices carry positive integer weights. `ambient`
/// records, for each local vertex, the vertex of the graph it was cut from.
struct WeightedGraph {
    SimpleGraph base;
    std::vector<int> weight;
    std::vector<int> ambient;

    WeightedGraph() = default;

    WeightedGraph(SimpleGraph base_graph, std::vector<int> weights)
        : base(std::move(base_graph)), weight(std::move(weights)) {
        ambient.resize(weight.size());
        std::iota(ambient.begin(), ambient.end(), 0);
        validate();
    }

    WeightedGraph(SimpleGraph base_graph, std::vector<int> weights, std::vector<int> ambient_labels)
        : base(std::move(base_graph)), weight(std::move(weights)), ambient(std::move(ambient_labels)) {
        validate();
    }

    int vertex_count() const { return base.vertex_count(); }
    int total_weight() const { return std::accumulate(weight.begin(), weight.end(), 0); }

    /// deg_H(i): total weight of the neighbors of i.
    int weighted_degree(int i) const {
        int sum = 0;
        for (int j : base.neighbors(i)) sum += weight[static_cast<std::size_t>(j)];
        return sum;
    }

private:
    void validate() const {
        if (static_cast<int>(weight.size()) != base.vertex_count() || ambient.size() != weight.size()) {
            throw InvalidInput("weight vector length does not match the base graph");
        }
        for (int w : weight) {
            if (w < 1) throw InvalidInput("weighted graph vertices need weight >= 1");
        }
    }
};

/// Edge multiset, kept sorted (u < v inside each pair, pairs ascending).
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }

    std::vector<int> usage(int vertex_count) const {
        std::vector<int> used(static_cast<std::size_t>(vertex_count), 0);
        for (auto [u, v] : edges) {
            ++used[static_cast<std::size_t>(u)];
            ++used[static_cast<std::size_t>(v)];
        }
        return used;
    }

    void normalize() {
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
    }

    bool operator==(const Matching&) const = default;
};

struct MatchingResult {
    int nu = 0;
    Matching witness;
};

/// Edges all belong to the base graph and no vertex is used beyond its weight.
inline bool is_valid_matching(const WeightedGraph& h, const Matching& m) {
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count() || !h.base.has_edge(u, v)) {
            return false;
        }
    }
    auto used = m.usage(h.vertex_count());
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i] > h.weight[i]) return false;
    }
    return true;
}

namespace detail {

/// Maximum matching on a general simple graph (Edmonds' blossom algorithm,
/// BFS variant with base contraction). Stops early once `target` edges are
/// matched.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), match_(adj.size(), -1), parent_(adj.size()),
          base_(adj.size()), used_(adj.size()), blossom_(adj.size()), queue_(adj.size()) {}

    int run(int target) {
        int matched = 0;
        // greedy start
        for (int v = 0; v < n_ && matched < target; ++v) {
            if (match_[at(v)] != -1) continue;
            for (int u : adj_[at(v)]) {
                if (match_[at(u)] == -1) {
                    match_[at(u)] = v;
                    match_[at(v)] = u;
                    ++matched;
                    break;
                }
            }
        }
        for (int v = 0; v < n_ && matched < target; ++v) {
            if (match_[at(v)] != -1) continue;
            int end = find_path(v);
            if (end == -1) continue;
            ++matched;
            while (end != -1) {
                int pv = parent_[at(end)];
                int ppv = match_[at(pv)];
                match_[at(end)] = pv;
                match_[at(pv)] = end;
                end = ppv;
            }
        }
        return matched;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    static std::size_t at(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b) {
        std::vector<char> seen(at(n_), 0);
        for (;;) {
            a = base_[at(a)];
            seen[at(a)] = 1;
            if (match_[at(a)] == -1) break;
            a = parent_[at(match_[at(a)])];
        }
        for (;;) {
            b = base_[at(b)];
            if (seen[at(b)]) return b;
            b = parent_[at(match_[at(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[at(v)] != b) {
            blossom_[at(base_[at(v)])] = 1;
            blossom_[at(base_[at(match_[at(v)])])] = 1;
            parent_[at(v)] = child;
            child = match_[at(v)];
            v = parent_[at(match_[at(v)])];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[at(root)] = 1;
        int head = 0, tail = 0;
        queue_[at(tail++)] = root;
        while (head < tail) {
            int v = queue_[at(head++)];
            for (int to : adj_[at(v)]) {
                if (base_[at(v)] == base_[at(to)] || match_[at(v)] == to) continue;
                if (to == root || (match_[at(to)] != -1 && parent_[at(match_[at(to)])] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[at(base_[at(i)])]) {
                            base_[at(i)] = cur;
                            if (!used_[at(i)]) {
                                used_[at(i)] = 1;
                                queue_[at(tail++)] = i;
                            }
                        }
                    }
                } else if (parent_[at(to)] == -1) {
                    parent_[at(to)] = v;
                    if (match_[at(to)] == -1) return to;
                    used_[at(match_[at(to)])] = 1;
                    queue_[at(tail++)] = match_[at(to)];
                }
            }
        }
        return -1;
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
    std::vector<int> queue_;
};

/// min(ν, cap) for the weighted graph given by g and a weight per vertex of g
/// (zero weight = vertex absent). Weights are clipped at `cap` before the
/// clone blow-up; that leaves min(ν, cap) unchanged because a matching with
/// at most cap edges uses no vertex more than cap times.
inline int nu_capped(const SimpleGraph& g, std::span<const int> w, int cap, Matching* witness = nullptr) {
    if (cap <= 0) return 0;
    const int n = g.vertex_count();
    std::vector<int> first_clone(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        first_clone[static_cast<std::size_t>(v) + 1] =
            first_clone[static_cast<std::size_t>(v)] + std::min(w[static_cast<std::size_t>(v)], cap);
    }
    const int clones = first_clone[static_cast<std::size_t>(n)];
    std::vector<int> owner(static_cast<std::size_t>(clones));
    for (int v = 0; v < n; ++v) {
        for (int c = first_clone[static_cast<std::size_t>(v)]; c < first_clone[static_cast<std::size_t>(v) + 1]; ++c) {
            owner[static_cast<std::size_t>(c)] = v;
        }
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(clones));
    for (int c = 0; c < clones; ++c) {
        int v = owner[static_cast<std::size_t>(c)];
        for (int u : g.neighbors(v)) {
            for (int d = first_clone[static_cast<std::size_t>(u)]; d < first_clone[static_cast<std::size_t>(u) + 1]; ++d) {
                adj[static_cast<std::size_t>(c)].push_back(d);
            }
        }
    }
    BlossomMatcher matcher(adj);
    int size = matcher.run(cap);
    if (witness) {
        witness->edges.clear();
        const auto& mate = matcher.mate();
        for (int c = 0; c < clones; ++c) {
            int d = mate[static_cast<std::size_t>(c)];
            if (d > c) witness->edges.emplace_back(owner[static_cast<std::size_t>(c)], owner[static_cast<std::size_t>(d)]);
        }
        witness->normalize();
    }
    return size;
}

inline int nu_of(const SimpleGraph& g, std::span<const int> w, Matching* witness = nullptr) {
    long total = 0;
    for (int x : w) total += x;
    return nu_capped(g, w, static_cast<int>(std::min<long>(total, std::numeric_limits<int>::max())), witness);
}

} // namespace detail

/// Matching number ν(H) with a maximum matching as witness (canonical order).
/// Each vertex is replaced by weight-many clones and the clone graph is
/// matched with the blossom algorithm.
inline MatchingResult nu(const WeightedGraph& h) {
    MatchingResult out;
    out.nu = detail::nu_of(h.base, h.weight, &out.witness);
    return out;
}

/// ν(H − N): the weighted subgraph induced on the vertices outside `removed`.
inline int nu_minus(const WeightedGraph& h, VertexSet removed) {
    std::vector<int> w = h.weight;
    for (int v : removed) {
        if (v >= h.vertex_count()) throw InvalidInput("removed set has vertices outside the weighted graph");
        w[static_cast<std::size_t>(v)] = 0;
    }
    return detail::nu_of(h.base, w);
}

inline constexpr int kDefaultBruteforceCutoff = 14;

/// Independent ν: best edge multiset found by exhaustive recursion over
/// residual capacity vectors (every non-empty matching contains some edge e,
/// and removing e leaves a matching of the residual graph). Refuses inputs
/// whose total weight exceeds `cutoff`.
inline int nu_bruteforce(const WeightedGraph& h, int cutoff = kDefaultBruteforceCutoff) {
    if (h.total_weight() > cutoff) {
        throw OversizeError("total weight " + std::to_string(h.total_weight()) + " exceeds brute-force cutoff " +
                            std::to_string(cutoff));
    }
    const int k = h.vertex_count();
    // mixed radix: digit i ranges over 0..weight[i]
    std::vector<long> stride(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 0; i < k; ++i) {
        stride[static_cast<std::size_t>(i) + 1] = stride[static_cast<std::size_t>(i)] * (h.weight[static_cast<std::size_t>(i)] + 1);
    }
    const long states = stride[static_cast<std::size_t>(k)];
    const auto edges = h.base.edges();
    std::vector<signed char> best(static_cast<std::size_t>(states), 0);
    std::vector<int> digit(static_cast<std::size_t>(k), 0);
    for (long s = 0; s < states; ++s) {
        long rest = s;
        for (int i = 0; i < k; ++i) {
            digit[static_cast<std::size_t>(i)] = static_cast<int>(rest % (h.weight[static_cast<std::size_t>(i)] + 1));
            rest /= h.weight[static_cast<std::size_t>(i)] + 1;
        }
        int value = 0;
        for (auto [u, v] : edges) {
            if (digit[static_cast<std::size_t>(u)] > 0 && digit[static_cast<std::size_t>(v)] > 0) {
                long prev = s - stride[static_cast<std::size_t>(u)] - stride[static_cast<std::size_t>(v)];
                value = std::max(value, 1 + best[static_cast<std::size_t>(prev)]);
            }
        }
        best[static_cast<std::size_t>(s)] = static_cast<signed char>(value);
    }
    return best[static_cast<std::size_t>(states - 1)];
}

/// Augmenting walk of m: vertex sequence v0..vk, k odd, whose even-position
/// edges (2nd, 4th, ...) form a sub-multiset of m, and whose endpoints have
/// spare capacity (two units if v0 = vk). Swapping the odd and even edges
/// then yields a matching with one more edge.
inline std::optional<std::vector<int>> find_augmenting_walk(const WeightedGraph& h, const Matching& m) {
    if (!is_valid_matching(h, m)) throw InvalidInput("not a matching of the weighted graph");
    const int k = h.vertex_count();
    const auto used = m.usage(k);
    auto spare = [&](int v) { return h.weight[static_cast<std::size_t>(v)] - used[static_cast<std::size_t>(v)]; };

    // distinct matching edges with multiplicities
    std::vector<Edge> kinds;
    std::vector<int> count;
    for (auto e : m.edges) {
        if (kinds.empty() || kinds.back() != e) {
            kinds.push_back(e);
            count.push_back(0);
        }
        ++count.back();
    }

    std::vector<int> walk;
    std::set<std::vector<int>> dead; // {start, current, remaining counts...}

    // at `cur`, about to take an odd (free) edge
    auto search = [&](auto&& self, int start, int cur) -> bool {
        std::vector<int> key{start, cur};
        key.insert(key.end(), count.begin(), count.end());
        if (dead.contains(key)) return false;
        for (int x : h.base.neighbors(cur)) {
            walk.push_back(x);
            if (spare(x) >= (x == start ? 2 : 1)) return true;
            for (std::size_t e = 0; e < kinds.size(); ++e) {
                if (count[e] == 0) continue;
                auto [a, b] = kinds[e];
                if (a != x && b != x) continue;
                int y = a == x ? b : a;
                --count[e];
                walk.push_back(y);
                bool found = self(self, start, y);
                ++count[e];
                if (found) return true;
                walk.pop_back();
            }
            walk.pop_back();
        }
        dead.insert(std::move(key));
        return false;
    };

    for (int s = 0; s < k; ++s) {
        if (spare(s) < 1) continue;
        walk.assign(1, s);
        if (search(search, s, s)) return walk;
    }
    return std::nullopt;
}

/// True iff m admits an augmenting walk; for valid m this is equivalent to
/// |m| < ν(H).
inline bool has_augmenting_walk(const WeightedGraph& h, const Matching& m) {
    return find_augmenting_walk(h, m).has_value();
}

/// Flip the walk: add its odd edges to m, drop its even edges.
inline Matching augment(const Matching& m, const std::vector<int>& walk) {
    std::multiset<Edge> edges(m.edges.begin(), m.edges.end());
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        Edge e{std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])};
        if (i % 2 == 0) {
            edges.insert(e);
        } else {
            auto it = edges.find(e);
            if (it == edges.end()) throw InvalidInput("walk uses an even edge outside the matching");
            edges.erase(it);
        }
    }
    Matching out{{edges.begin(), edges.end()}};
    out.normalize();
    return out;
}

} // namespace edgeideal
