#include <gtest/gtest.h>

#include <queue>
#include <sstream>

#include "fixtures.hpp"

using namespace edgeideal;
using fixtures::set;

namespace {

// Brute-force references.

bool cover_by_edges(const SimpleGraph& g, VertexSet s) {
    for (auto [u, v] : g.edges()) {
        if (!s.contains(u) && !s.contains(v)) return false;
    }
    return true;
}

std::vector<VertexSet> minimal_covers_brute(const SimpleGraph& g) {
    std::vector<VertexSet> covers;
    const int n = g.vertex_count();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        VertexSet s(b);
        if (cover_by_edges(g, s)) covers.push_back(s);
    }
    std::vector<VertexSet> out;
    for (VertexSet s : covers) {
        bool minimal = true;
        for (VertexSet r : covers) {
            if (r != s && r.subset_of(s)) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<VertexSet> covers_minimal_over_brute(const SimpleGraph& g, VertexSet s) {
    std::vector<VertexSet> out;
    const int n = g.vertex_count();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        VertexSet f(b);
        if (!s.subset_of(f) || !cover_by_edges(g, f)) continue;
        bool ok = true;
        for (int v : f - s) {
            if (cover_by_edges(g, f - VertexSet::singleton(v))) ok = false;
        }
        if (ok) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool two_colorable(const SimpleGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int r = 0; r < g.vertex_count(); ++r) {
        if (color[static_cast<std::size_t>(r)] >= 0) continue;
        color[static_cast<std::size_t>(r)] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                auto& c = color[static_cast<std::size_t>(v)];
                if (c < 0) {
                    c = 1 - color[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (c == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<VertexSet> cover_sets(const std::vector<Cover>& covers) {
    std::vector<VertexSet> out;
    for (const auto& c : covers) out.push_back(c.vertices());
    return out;
}

} // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s = set({1, 3, 4});
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(1));
    EXPECT_EQ(format_set(s), "{1,3,4}");
    EXPECT_EQ(format_set(VertexSet{}), "{}");
    EXPECT_EQ((s - set({3})), set({1, 4}));
    EXPECT_TRUE(set({1}).subset_of(s));
    EXPECT_THROW(VertexSet{}.insert(64), InvalidInput);
}

TEST(VertexSet, CanonicalOrderIsLexicographicOnSortedLists) {
    std::vector<VertexSet> v{set({2, 3}), set({1, 3}), set({1, 2, 3}), set({1, 2}), set({}), set({3})};
    std::sort(v.begin(), v.end(), CanonicalLess{});
    std::vector<VertexSet> want{set({}), set({1, 2}), set({1, 2, 3}), set({1, 3}), set({2, 3}), set({3})};
    EXPECT_EQ(v, want);
}

TEST(SimpleGraph, RejectsBadEdges) {
    EXPECT_THROW(SimpleGraph(3, {{0, 0}}), InvalidInput);
    EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InvalidInput);
    EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(SimpleGraph(65), InvalidInput);
}

TEST(Neighborhoods, Examples) {
    EXPECT_EQ(open_neighborhood(fixtures::triangle(), set({1})), set({2, 3}));
    EXPECT_EQ(open_neighborhood(fixtures::path3(), set({1, 3})), set({2}));
    auto g = fixtures::tailed_triangle();
    EXPECT_EQ(open_neighborhood(g, set({1, 2, 3, 4})), set({1, 2, 3, 4, 5}));
    EXPECT_EQ(closed_neighborhood(fixtures::triangle(), set({1})), set({1, 2, 3}));
    EXPECT_EQ(closed_neighborhood(g, VertexSet{}), VertexSet{});
    EXPECT_EQ(closed_neighborhood(fixtures::bowtie(), set({2, 3})), set({1, 2, 3}));
}

TEST(InducedSubgraph, Examples) {
    auto p = induced_subgraph(fixtures::pentagon(), set({1, 2, 3}));
    EXPECT_EQ(p.graph.edge_count(), 2);
    EXPECT_EQ(p.ambient, (std::vector<int>{0, 1, 2}));
    auto g = fixtures::tailed_triangle();
    EXPECT_EQ(induced_subgraph(g, g.vertices()).graph, g);
    EXPECT_EQ(induced_subgraph(g, set({1, 2, 3})).graph, fixtures::triangle());
    auto q = induced_subgraph(g, set({3, 5}));
    EXPECT_EQ(q.graph.edge_count(), 0);
    EXPECT_EQ(q.ambient, (std::vector<int>{2, 4}));
}

TEST(Covers, Examples) {
    auto tri = fixtures::triangle();
    EXPECT_FALSE(is_cover(tri, set({1})));
    EXPECT_TRUE(is_cover(tri, set({1, 2})));
    EXPECT_TRUE(is_minimal_cover(tri, set({1, 2})));
    EXPECT_EQ(core_of_cover(tri, Cover(tri, set({1, 2}))), VertexSet{});
    EXPECT_EQ(core_of_cover(tri, Cover(tri, set({1, 2, 3}))), set({1, 2, 3}));
    auto g = fixtures::tailed_triangle();
    EXPECT_TRUE(is_cover(g, set({1, 2, 3, 4})));
    EXPECT_FALSE(is_minimal_cover(g, set({1, 2, 3, 4})));
    EXPECT_EQ(core_of_cover(g, Cover(g, set({1, 2, 3, 4}))), set({1, 2, 3}));
    EXPECT_THROW(Cover(tri, set({1})), InvalidInput);
}

TEST(Covers, MinimalCoverExamples) {
    EXPECT_EQ(cover_sets(minimal_covers(fixtures::graph("1-2"))), (std::vector<VertexSet>{set({1}), set({2})}));
    EXPECT_EQ(cover_sets(minimal_covers(fixtures::triangle())),
              (std::vector<VertexSet>{set({1, 2}), set({1, 3}), set({2, 3})}));
    auto pent = cover_sets(minimal_covers(fixtures::pentagon()));
    ASSERT_EQ(pent.size(), 5U);
    for (auto f : pent) EXPECT_EQ(f.size(), 3);
    EXPECT_EQ(cover_sets(minimal_covers(SimpleGraph(3))), (std::vector<VertexSet>{VertexSet{}}));
}

TEST(Covers, MinimalOverExamples) {
    auto g = fixtures::tailed_triangle();
    EXPECT_EQ(cover_sets(covers_minimal_over(g, set({1, 2, 3, 4}))), (std::vector<VertexSet>{set({1, 2, 3, 4})}));
    EXPECT_EQ(cover_sets(covers_minimal_over(g, g.vertices())), (std::vector<VertexSet>{g.vertices()}));
    auto tri = fixtures::triangle();
    EXPECT_EQ(cover_sets(covers_minimal_over(tri, VertexSet{})), cover_sets(minimal_covers(tri)));
}

TEST(Covers, AgreeWithSubsetEnumerationUpToSixVertices) {
    fixtures::for_each_graph(6, [](const SimpleGraph& g) {
        auto brute = minimal_covers_brute(g);
        ASSERT_EQ(cover_sets(minimal_covers(g)), brute) << format_graph(g);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.vertex_count()); ++b) {
            VertexSet f(b);
            if (!is_cover(g, f)) continue;
            // core empty exactly for minimal covers
            ASSERT_EQ(core_of_cover(g, Cover(g, f)).empty(), is_minimal_cover(g, f)) << format_graph(g);
        }
    });
}

TEST(Covers, MinimalOverAgreesWithSubsetEnumeration) {
    fixtures::for_each_graph(5, [](const SimpleGraph& g) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.vertex_count()); ++b) {
            VertexSet s(b);
            auto got = cover_sets(covers_minimal_over(g, s));
            ASSERT_EQ(got, covers_minimal_over_brute(g, s)) << format_graph(g) << format_set(s);
        }
    });
}

TEST(Components, Examples) {
    EXPECT_EQ(connected_components(fixtures::disjoint_triangles(2)).size(), 2U);
    EXPECT_EQ(connected_components(fixtures::pentagon()).size(), 1U);
    EXPECT_EQ(connected_components(SimpleGraph(3)),
              (std::vector<VertexSet>{set({1}), set({2}), set({3})}));
}

TEST(OddCycles, Examples) {
    EXPECT_EQ(shortest_odd_cycle(fixtures::triangle()), 3);
    EXPECT_EQ(shortest_odd_cycle(fixtures::pentagon()), 5);
    EXPECT_FALSE(shortest_odd_cycle(fixtures::path3()).has_value());
    EXPECT_FALSE(shortest_odd_cycle(fixtures::square()).has_value());
    EXPECT_EQ(shortest_odd_cycle(fixtures::cycle(7)), 7);
}

TEST(OddCycles, AbsentExactlyForBipartiteGraphs) {
    fixtures::for_each_graph(6, [](const SimpleGraph& g) {
        auto cyc = shortest_odd_cycle_within(g, g.vertices());
        ASSERT_EQ(!cyc.has_value(), two_colorable(g)) << format_graph(g);
        if (!cyc) return;
        // the exhibited cycle is a closed walk through distinct vertices
        const auto& c = *cyc;
        ASSERT_EQ(c.size() % 2, 1U);
        ASSERT_EQ(VertexSet::from_list(c).size(), static_cast<int>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) ASSERT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
    });
}

TEST(OddCycles, EveryComponentCheck) {
    auto g = fixtures::graph("1-2,1-3,2-3,4-5,5-6,6-7,7-8,4-8");
    EXPECT_TRUE(every_component_has_odd_cycle(g, g.vertices()));
    EXPECT_FALSE(every_component_has_odd_cycle(g, g.vertices(), 3));
    EXPECT_TRUE(every_component_has_odd_cycle(g, set({1, 2, 3}), 3));
    EXPECT_FALSE(every_component_has_odd_cycle(g, set({1, 2, 3, 4}), 3));
    EXPECT_FALSE(every_component_has_odd_cycle(g, VertexSet{}));
}

TEST(Domination, Examples) {
    auto p = fixtures::pentagon();
    EXPECT_TRUE(is_dominating(p, p.vertices()));
    auto g = fixtures::tailed_triangle();
    EXPECT_FALSE(is_dominating(g, set({1, 2, 3})));
    EXPECT_TRUE(is_dominating(g, set({1, 2, 3, 4})));
}

TEST(GraphText, RoundTrip) {
    auto g = fixtures::tailed_triangle();
    EXPECT_EQ(format_graph(g), "5 5\n1 2\n1 3\n2 3\n3 4\n4 5\n");
    EXPECT_EQ(parse_graph(format_graph(g)), g);
    EXPECT_EQ(parse_graph("3 0\n"), SimpleGraph(3));
}

TEST(GraphText, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("3 2\n1 2\n1 x\n"), 3);
    EXPECT_EQ(line_of("3 2\n1 2\n"), 3);
    EXPECT_EQ(line_of("3 1\n1 4\n"), 2);
    EXPECT_EQ(line_of("3 2\n1 2\n2 1\n"), 3);
    EXPECT_EQ(line_of("3 1\n1 2\n2 3\n"), 3);
    EXPECT_EQ(line_of("three\n"), 1);
    EXPECT_EQ(line_of(""), 1);
}

TEST(GraphText, InlineEdgeList) {
    EXPECT_EQ(fixtures::graph("1-2,2-3"), fixtures::path3());
    EXPECT_EQ(parse_edge_list("1-2", 4).vertex_count(), 4);
    EXPECT_THROW(parse_edge_list("1-2,2"), ParseError);
    EXPECT_THROW(parse_edge_list("1-2,2-1"), ParseError);
    EXPECT_THROW(parse_edge_list("1-5", 4), ParseError);
}
