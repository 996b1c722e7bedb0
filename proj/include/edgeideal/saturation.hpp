#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace edgeideal {

namespace detail {

inline void require_positive_power(int t) {
    if (t < 1) throw InvalidInput("power t must be >= 1");
}

inline void require_length(const SimpleGraph& g, const ExponentVector& a) {
    if (a.size() != g.vertex_count()) throw InvalidInput("exponent vector length differs from vertex count");
}

/// deg_w(i): total weight of the neighbors of i (zero-weight vertices absent).
inline int weighted_degree(const SimpleGraph& g, std::span<const int> w, int i) {
    int sum = 0;
    for (int j : g.neighbors(i)) sum += w[static_cast<std::size_t>(j)];
    return sum;
}

/// ν(H − N_H(i)) >= t − deg_H(i), with H given by weights w over g.
inline bool neighborhood_condition(const SimpleGraph& g, std::span<const int> w, int t, int i) {
    int need = t - weighted_degree(g, w, i);
    if (need <= 0) return true;
    std::vector<int> rest(w.begin(), w.end());
    for (int j : g.neighbors(i)) rest[static_cast<std::size_t>(j)] = 0;
    return nu_capped(g, rest, need) >= need;
}

/// ν(H − j) >= t − w_j
inline bool vertex_removal_condition(const SimpleGraph& g, std::span<const int> w, int t, int j) {
    int need = t - w[static_cast<std::size_t>(j)];
    if (need <= 0) return true;
    std::vector<int> rest(w.begin(), w.end());
    rest[static_cast<std::size_t>(j)] = 0;
    return nu_capped(g, rest, need) >= need;
}

inline VertexSet weight_support(std::span<const int> w) {
    VertexSet s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0) s.insert(static_cast<int>(i));
    }
    return s;
}

inline bool t_saturating(const SimpleGraph& g, std::span<const int> w, int t) {
    if (nu_capped(g, w, t) >= t) return false;
    for (int i : weight_support(w)) {
        if (!neighborhood_condition(g, w, t, i)) return false;
    }
    return true;
}

inline bool strongly_t_saturating(const SimpleGraph& g, std::span<const int> w, int t) {
    if (nu_capped(g, w, t) >= t) return false;
    for (int j : weight_support(w)) {
        if (!vertex_removal_condition(g, w, t, j)) return false;
    }
    return true;
}

} // namespace detail

/// x^a ∈ I^t  ⇔  ν(Γ_a) >= t.
inline bool in_power(const SimpleGraph& g, const ExponentVector& a, int t) {
    detail::require_positive_power(t);
    detail::require_length(g, a);
    return detail::nu_capped(g, a.values(), t) >= t;
}

/// The neighborhood condition ν(Γ_a − N_a(i)) >= t − deg_a(i) at every
/// vertex of the ambient graph (not only the support).
inline bool neighborhood_condition_everywhere(const SimpleGraph& g, const ExponentVector& a, int t) {
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (!detail::neighborhood_condition(g, a.values(), t, i)) return false;
    }
    return true;
}

/// x^a ∈ sat(I^t). The neighborhood criterion characterizes sat(I^t) off I^t;
/// members of I^t are added back since I^t ⊆ sat(I^t).
inline bool in_saturation(const SimpleGraph& g, const ExponentVector& a, int t) {
    return in_power(g, a, t) || neighborhood_condition_everywhere(g, a, t);
}

/// x^a ∈ sat(I^t) \ I^t
inline bool in_sat_minus_power(const SimpleGraph& g, const ExponentVector& a, int t) {
    return !in_power(g, a, t) && neighborhood_condition_everywhere(g, a, t);
}

/// ν(H) < t and ν(H − N_H(i)) >= t − deg_H(i) for every vertex i of H.
inline bool is_t_saturating(const WeightedGraph& h, int t) {
    detail::require_positive_power(t);
    return detail::t_saturating(h.base, h.weight, t);
}

/// Same test for Γ_a, evaluated in place on the ambient graph.
inline bool is_t_saturating(const SimpleGraph& g, const ExponentVector& a, int t) {
    detail::require_positive_power(t);
    detail::require_length(g, a);
    return detail::t_saturating(g, a.values(), t);
}

/// ν(H) < t and ν(H − j) >= t − a_j for every vertex j of H.
inline bool is_strongly_t_saturating(const WeightedGraph& h, int t) {
    detail::require_positive_power(t);
    return detail::strongly_t_saturating(h.base, h.weight, t);
}

inline bool is_strongly_t_saturating(const SimpleGraph& g, const ExponentVector& a, int t) {
    detail::require_positive_power(t);
    detail::require_length(g, a);
    return detail::strongly_t_saturating(g, a.values(), t);
}

namespace detail {

/// Σb = 2t−1, Γ_b strongly t-saturating and ν(Γ_b) = ν(Γ_{b−e_i}) = t−1 for
/// every i ∈ V_b, where t = ν(Γ_b) + 1. Returns t, or nothing if violated.
inline std::optional<int> extension_ready(const SimpleGraph& g, const ExponentVector& b) {
    int t = nu_of(g, b.values()) + 1;
    if (b.degree() != 2 * t - 1) return std::nullopt;
    if (!strongly_t_saturating(g, b.values(), t)) return std::nullopt;
    std::vector<int> w = b.values();
    for (int i : b.support()) {
        --w[static_cast<std::size_t>(i)];
        int reduced = nu_of(g, w);
        ++w[static_cast<std::size_t>(i)];
        if (reduced != t - 1) return std::nullopt;
    }
    return t;
}

} // namespace detail

/// Add the edge {h, j} (0-based, h ∈ V_b) to a strongly t-saturating Γ_b with
/// Σb = 2t−1 and ν(Γ_b) = ν(Γ_{b−e_i}) = t−1 for all i ∈ V_b. The result
/// a = b + e_h + e_j has the same properties for t+1; both sides are checked.
inline ExponentVector extend_by_edge(const SimpleGraph& g, const ExponentVector& b, int h, int j) {
    detail::require_length(g, b);
    if (h < 0 || j < 0 || h >= g.vertex_count() || j >= g.vertex_count() || !g.has_edge(h, j)) {
        throw InvalidInput("{h,j} is not an edge of the graph");
    }
    if (b[h] == 0) throw InvalidInput("extension vertex h must lie in the support of b");
    auto t = detail::extension_ready(g, b);
    if (!t) throw InvalidInput("b is not an extendable strongly saturating weight vector");
    ExponentVector a = b;
    ++a[h];
    ++a[j];
    auto next = detail::extension_ready(g, a);
    if (next != *t + 1) throw std::logic_error("edge extension lost the strongly saturating property");
    return a;
}

/// Strongly t-saturating weights supported exactly on u, grown from the seed
/// (a vertex set of odd size 2s−1 inducing a strongly s-saturating graph) by
/// edge extensions in breadth-first order. Without `target` the result has
/// t = |u| − s + 1; a larger target keeps adding edges inside u.
inline ExponentVector build_strong(const SimpleGraph& g, VertexSet u, VertexSet seed,
                                   std::optional<int> target = std::nullopt) {
    if (!u.subset_of(g.vertices()) || !seed.subset_of(u) || seed.empty()) {
        throw InvalidInput("seed must be a non-empty subset of u");
    }
    if (components_within(g, u).size() != 1) throw InvalidInput("u must induce a connected graph");
    if (seed.size() % 2 == 0) throw InvalidInput("seed must have an odd number of vertices");
    const int s = (seed.size() + 1) / 2;
    ExponentVector a = ExponentVector::indicator(g.vertex_count(), seed);
    if (!is_strongly_t_saturating(g, a, s)) throw InvalidInput("seed does not induce a strongly saturating graph");
    const int base_t = u.size() - s + 1;
    if (target && *target < base_t) throw InvalidInput("target power below |u| - s + 1");

    // breadth-first from the seed: each new vertex is attached through the
    // edge to its discovering vertex
    std::deque<int> queue(seed.begin(), seed.end());
    VertexSet reached = seed;
    while (!queue.empty()) {
        int h = queue.front();
        queue.pop_front();
        for (int j : g.neighbors(h) & u) {
            if (reached.contains(j)) continue;
            a = extend_by_edge(g, a, h, j);
            reached.insert(j);
            queue.push_back(j);
        }
    }
    if (target) {
        auto edges = induced_subgraph(g, u).graph.edges();
        auto ambient = u.to_vector();
        for (int t = base_t; t < *target; ++t) {
            auto [x, y] = edges.front();
            a = extend_by_edge(g, a, ambient[static_cast<std::size_t>(x)], ambient[static_cast<std::size_t>(y)]);
        }
    }
    return a;
}

/// Canonical order for reported weight vectors: support first, then entries.
struct ExponentOrder {
    bool operator()(const ExponentVector& x, const ExponentVector& y) const {
        VertexSet sx = x.support(), sy = y.support();
        if (sx != sy) return CanonicalLess{}(sx, sy);
        return x < y;
    }
};

struct SaturatingSearch {
    /// restrict supports to this set (defaults to every vertex)
    std::optional<VertexSet> within;
};

/// Every a with Γ_a t-saturating. Only supports whose components each carry
/// an odd cycle of length <= 2t−1 are visited, with weights 1..t−1 and total
/// weight <= 3(t−1); these bounds lose no solutions.
inline std::vector<ExponentVector> saturating_vectors(const SimpleGraph& g, int t, SaturatingSearch opts = {}) {
    if (t < 2) return {};
    const VertexSet within = opts.within.value_or(g.vertices()) & g.vertices();
    const int max_total = 3 * (t - 1);
    std::vector<ExponentVector> out;
    std::vector<int> w(static_cast<std::size_t>(g.vertex_count()), 0);

    for (std::uint64_t bits = within.bits(); bits != 0; bits = (bits - 1) & within.bits()) {
        VertexSet support(bits);
        if (support.size() < 3 || support.size() > max_total) continue;
        if (!every_component_has_odd_cycle(g, support, 2 * t - 1)) continue;
        auto members = support.to_vector();
        for (int v : members) w[static_cast<std::size_t>(v)] = 1;
        // odometer over weights 1..t-1 with bounded total
        auto visit = [&](auto&& self, std::size_t k, int total) -> void {
            if (k == members.size()) {
                if (detail::t_saturating(g, w, t)) out.emplace_back(w);
                return;
            }
            auto& slot = w[static_cast<std::size_t>(members[k])];
            for (int x = 1; x <= t - 1 && total + x + static_cast<int>(members.size() - k - 1) <= max_total; ++x) {
                slot = x;
                self(self, k + 1, total + x);
            }
            slot = 1;
        };
        visit(visit, 0, 0);
        for (int v : members) w[static_cast<std::size_t>(v)] = 0;
    }
    std::sort(out.begin(), out.end(), ExponentOrder{});
    return out;
}

/// Facets of the degree-a complex Δ_a of I^t: the sets G \ G_a, G_a ⊆ G ⊆ V,
/// with x^{a_G} ∈ sat((I^t)_G) \ (I^t)_G. Each G is decided on the core of
/// F = V \ G: with J the edge ideal of Γ_core(F) and s = t − Σ_{F\core(F)} a_i,
/// G qualifies iff s >= 1 and a restricted to core(F) lies in sat(J^s) \ J^s.
/// A G whose complement is not a cover contains an edge, so (I^t)_G is the
/// unit ideal and G never qualifies.
inline std::vector<VertexSet> facets_delta(const SimpleGraph& g, const SignedExponentVector& a, int t) {
    detail::require_positive_power(t);
    if (a.size() != g.vertex_count()) throw InvalidInput("exponent vector length differs from vertex count");
    const VertexSet negative = a.negative_set();
    const VertexSet free = g.vertices() - negative;
    std::vector<VertexSet> facets;
    std::uint64_t sub = 0;
    do {
        VertexSet big_g = negative | VertexSet(sub);
        VertexSet f = g.vertices() - big_g;
        if (is_cover(g, f)) {
            VertexSet core = core_of_cover(g, Cover(g, f));
            int s = t;
            for (int i : f - core) s -= a[i];
            if (s >= 1) {
                auto local = induced_subgraph(g, core);
                std::vector<int> restricted;
                for (int v : local.ambient) restricted.push_back(a[v]);
                if (in_sat_minus_power(local.graph, ExponentVector(std::move(restricted)), s)) {
                    facets.push_back(big_g - negative);
                }
            }
        }
        sub = (sub - free.bits()) & free.bits();
    } while (sub != 0);
    detail::sort_canonical(facets);
    return facets;
}

} // namespace edgeideal
