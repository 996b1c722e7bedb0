#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include <edgeideal/edgeideal.hpp>

namespace fixtures {

using edgeideal::SimpleGraph;
using edgeideal::VertexSet;

inline SimpleGraph graph(const char* edges, int n = 0) {
    return n > 0 ? edgeideal::parse_edge_list(edges, n) : edgeideal::parse_edge_list(edges);
}

inline SimpleGraph triangle() { return graph("1-2,1-3,2-3"); }
inline SimpleGraph pentagon() { return graph("1-2,2-3,3-4,4-5,1-5"); }
inline SimpleGraph square() { return graph("1-2,2-3,3-4,1-4"); }
inline SimpleGraph path3() { return graph("1-2,2-3"); }
inline SimpleGraph k4() { return graph("1-2,1-3,1-4,2-3,2-4,3-4"); }
/// Triangle 123 with the path 3-4-5 hanging off it.
inline SimpleGraph tailed_triangle() { return graph("1-2,1-3,2-3,3-4,4-5"); }
/// Triangles 123 and 145 sharing vertex 1.
inline SimpleGraph bowtie() { return graph("1-2,1-3,2-3,1-4,1-5,4-5"); }

/// k triangles on vertices 3i+1..3i+3, no edges between them.
inline SimpleGraph disjoint_triangles(int k) {
    SimpleGraph g(3 * k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i, 3 * i + 2);
        g.add_edge(3 * i + 1, 3 * i + 2);
    }
    return g;
}

/// k triangles sharing vertex 0.
inline SimpleGraph shared_vertex_triangles(int k) {
    SimpleGraph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

inline SimpleGraph cycle(int len) {
    SimpleGraph g(len);
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
}

inline VertexSet set(std::initializer_list<int> one_based) {
    VertexSet s;
    for (int v : one_based) s.insert(v - 1);
    return s;
}

/// Every labeled graph on 1..max_n vertices.
inline void for_each_graph(int max_n, const std::function<void(const SimpleGraph&)>& fn) {
    for (int n = 1; n <= max_n; ++n) {
        for (std::uint64_t code = 0; code < edgeideal::census::graph_count(n); ++code) {
            fn(edgeideal::census::labeled_graph(n, code));
        }
    }
}

/// Every vector in [0, bound]^n.
inline void for_each_vector(int n, int bound, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        fn(a);
        int i = 0;
        while (i < n && a[static_cast<std::size_t>(i)] == bound) a[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return;
        ++a[static_cast<std::size_t>(i)];
    }
}

} // namespace fixtures

namespace edgeideal {
inline void PrintTo(VertexSet s, std::ostream* os) { *os << format_set(s); }
inline void PrintTo(const ExponentVector& a, std::ostream* os) { *os << "(" << format_exponents(a) << ")"; }
} // namespace edgeideal
