#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"

using namespace edgeideal;
using fixtures::set;

namespace {

ExponentVector ones(int n) { return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::string describe(const SimpleGraph& g, const ExponentVector& a) {
    return format_graph(g) + "a = " + format_exponents(a);
}

// ν(H − N) for every N ⊆ V_a, by zeroing weights.
int nu_without(const SimpleGraph& g, ExponentVector a, VertexSet removed) {
    for (int v : removed) a[v] = 0;
    return nu(weighted_graph(g, a)).nu;
}

// Facets of Δ_a from ideal arithmetic: localize I^t at G by setting the
// variables of G to 1, saturate with respect to the remaining variables and
// test x^{a_G}.
class FacetOracle {
public:
    FacetOracle(const SimpleGraph& g, int t) : g_(g), n_(g.vertex_count()) {
        auto power = oracle::power(oracle::edge_ideal(g), t);
        gens_ = power.generators();
    }

    std::vector<VertexSet> facets(const SignedExponentVector& a) {
        std::vector<VertexSet> out;
        const VertexSet neg = a.negative_set();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_); ++b) {
            VertexSet big_g(b);
            if (!neg.subset_of(big_g)) continue;
            const auto& [local, sat] = localized(big_g);
            auto a_g = a.truncate(big_g);
            if (oracle::membership(sat, a_g) && !oracle::membership(local, a_g)) out.push_back(big_g - neg);
        }
        std::sort(out.begin(), out.end(), CanonicalLess{});
        return out;
    }

private:
    const std::pair<oracle::MonomialIdeal, oracle::MonomialIdeal>& localized(VertexSet big_g) {
        auto it = cache_.find(big_g.bits());
        if (it != cache_.end()) return it->second;
        std::vector<ExponentVector> gens;
        for (auto m : gens_) {
            for (int v : big_g) m[v] = 0;
            gens.push_back(m);
        }
        auto local = oracle::MonomialIdeal::from_exponents(n_, gens);
        auto sat = oracle::saturate_variablewise(local, g_.vertices() - big_g);
        return cache_.emplace(big_g.bits(), std::pair{local, sat}).first->second;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<ExponentVector> gens_;
    std::map<std::uint64_t, std::pair<oracle::MonomialIdeal, oracle::MonomialIdeal>> cache_;
};

} // namespace

// ---------------------------------------------------------------------------
// membership predicates

TEST(Membership, PowerExamples) {
    auto tri = fixtures::triangle();
    EXPECT_FALSE(in_power(tri, {1, 1, 1}, 2));
    EXPECT_TRUE(in_power(tri, {2, 2, 1}, 2));
    EXPECT_FALSE(in_power(tri, {0, 0, 0}, 1));
    EXPECT_THROW(in_power(tri, {1, 1, 1}, 0), InvalidInput);
    EXPECT_THROW(in_power(tri, {1, 1}, 1), InvalidInput);
}

TEST(Membership, SaturationExamples) {
    auto tri = fixtures::triangle();
    EXPECT_TRUE(in_saturation(tri, {1, 1, 1}, 2));
    EXPECT_TRUE(in_saturation(tri, {2, 2, 1}, 2));
    for (int t = 1; t <= 3; ++t) EXPECT_FALSE(in_saturation(tri, {0, 0, 0}, t));
    EXPECT_FALSE(in_saturation(fixtures::tailed_triangle(), {1, 1, 1, 0, 0}, 2));
}

TEST(Membership, DifferenceExamples) {
    EXPECT_TRUE(in_sat_minus_power(fixtures::pentagon(), ones(5), 3));
    EXPECT_TRUE(in_sat_minus_power(fixtures::triangle(), {1, 1, 1}, 2));
    EXPECT_FALSE(in_sat_minus_power(fixtures::triangle(), {2, 2, 1}, 2));
    // a dominating (2t-1)-cycle
    EXPECT_TRUE(in_sat_minus_power(fixtures::cycle(7), ones(7), 4));
    EXPECT_FALSE(in_sat_minus_power(fixtures::cycle(7), ones(7), 3));
}

TEST(Membership, AgreesWithIdealArithmeticUpToFourVertices) {
    fixtures::for_each_graph(4, [](const SimpleGraph& g) {
        if (g.edge_count() == 0) return;
        for (int t = 1; t <= 3; ++t) {
            auto power = oracle::power(oracle::edge_ideal(g), t);
            auto sat = oracle::saturate(power);
            fixtures::for_each_vector(g.vertex_count(), 3, [&](const std::vector<int>& v) {
                ExponentVector a(v);
                ASSERT_EQ(in_power(g, a, t), oracle::membership(power, a)) << describe(g, a) << " t=" << t;
                ASSERT_EQ(in_saturation(g, a, t), oracle::membership(sat, a)) << describe(g, a) << " t=" << t;
            });
        }
    });
}

// Members of sat(I^t) \ I^t have a dominating support and degree <= 3(t-1).
TEST(Membership, DominatingSupportAndDegreeBound) {
    fixtures::for_each_graph(5, [](const SimpleGraph& g) {
        for (int t = 2; t <= 3; ++t) {
            fixtures::for_each_vector(g.vertex_count(), t, [&](const std::vector<int>& v) {
                ExponentVector a(v);
                if (!in_sat_minus_power(g, a, t)) return;
                ASSERT_TRUE(is_dominating(g, a.support())) << describe(g, a);
                ASSERT_LE(a.degree(), 3 * (t - 1)) << describe(g, a);
            });
        }
    });
}

TEST(Membership, DisjointTrianglesAttainDegreeBound) {
    for (int t = 2; t <= 4; ++t) {
        auto g = fixtures::disjoint_triangles(t - 1);
        auto a = ones(g.vertex_count());
        EXPECT_TRUE(in_sat_minus_power(g, a, t));
        EXPECT_EQ(a.degree(), 3 * (t - 1));
    }
}

// ---------------------------------------------------------------------------
// saturating weighted graphs

TEST(Saturating, Examples) {
    auto tri = fixtures::triangle();
    EXPECT_TRUE(is_t_saturating(tri, {1, 1, 1}, 2));
    EXPECT_FALSE(is_t_saturating(tri, {1, 1, 1}, 3));
    EXPECT_TRUE(is_t_saturating(tri, {2, 2, 1}, 3));
    EXPECT_TRUE(is_t_saturating(WeightedGraph(tri, {2, 2, 1}), 3));
}

TEST(Saturating, StrongExamples) {
    for (int t = 2; t <= 5; ++t) {
        auto g = fixtures::disjoint_triangles(t - 1);
        EXPECT_TRUE(is_strongly_t_saturating(g, ones(g.vertex_count()), t)) << t;
        EXPECT_TRUE(is_strongly_t_saturating(fixtures::cycle(2 * t - 1), ones(2 * t - 1), t)) << t;
    }
    auto pendant = fixtures::graph("1-2,1-3,2-3,1-4");
    EXPECT_TRUE(is_strongly_t_saturating(pendant, {2, 1, 1, 1}, 3));
    EXPECT_FALSE(is_strongly_t_saturating(pendant, {1, 1, 1, 1}, 3));
}

TEST(Saturating, VectorExamples) {
    EXPECT_EQ(saturating_vectors(fixtures::triangle(), 2), (std::vector<ExponentVector>{{1, 1, 1}}));
    for (int t = 1; t <= 4; ++t) EXPECT_TRUE(saturating_vectors(fixtures::graph("1-2,2-3,3-4,4-5"), t).empty());
    auto k4 = saturating_vectors(fixtures::k4(), 3);
    EXPECT_NE(std::find(k4.begin(), k4.end(), ExponentVector{1, 1, 1, 1}), k4.end());
}

TEST(Saturating, RestrictedSearch) {
    auto g = fixtures::bowtie();
    auto within = saturating_vectors(g, 2, {set({1, 2, 3})});
    EXPECT_EQ(within, (std::vector<ExponentVector>{{1, 1, 1, 0, 0}}));
    EXPECT_EQ(saturating_vectors(g, 2).size(), 2U);
}

// The pruned search equals the plain definition over a wider box:
// [0, 3t]^n for n <= 4, and [0, t]^n at n = 5.
TEST(Saturating, PrunedSearchIsComplete) {
    fixtures::for_each_graph(5, [](const SimpleGraph& g) {
        for (int t = 2; t <= 3; ++t) {
            const int bound = g.vertex_count() <= 4 ? 3 * t : t;
            std::vector<ExponentVector> plain;
            fixtures::for_each_vector(g.vertex_count(), bound, [&](const std::vector<int>& v) {
                ExponentVector a(v);
                if (a.degree() > 0 && is_t_saturating(g, a, t)) plain.push_back(a);
            });
            std::sort(plain.begin(), plain.end(), ExponentOrder{});
            ASSERT_EQ(saturating_vectors(g, t), plain) << format_graph(g) << "t=" << t;
        }
    });
}

TEST(Saturating, StructuralProperties) {
    fixtures::for_each_graph(5, [](const SimpleGraph& g) {
        for (int t = 2; t <= 3; ++t) {
            for (const auto& a : saturating_vectors(g, t)) {
                auto h = weighted_graph(g, a);
                const int nu_h = nu(h).nu;
                ASSERT_EQ(nu_h, t - 1) << describe(g, a);
                ASSERT_TRUE(every_component_has_odd_cycle(g, a.support(), 2 * t - 1)) << describe(g, a);
                for (int i = 0; i < h.vertex_count(); ++i) {
                    const int ai = h.weight[static_cast<std::size_t>(i)];
                    ASSERT_LT(ai, std::min(h.weighted_degree(i), nu_h + 1)) << describe(g, a);
                    for (int j : h.base.neighbors(i)) {
                        if (h.base.degree(j) == 1) ASSERT_GE(ai, 2) << describe(g, a);
                    }
                }
            }
        }
    });
}

// With t = ν(H)+1 and t_i = ν(H_i)+1 per component, H is (strongly)
// t-saturating iff every component is (strongly) t_i-saturating.
TEST(Saturating, ComponentwiseCharacterization) {
    fixtures::for_each_graph(5, [](const SimpleGraph& g) {
        fixtures::for_each_vector(g.vertex_count(), 2, [&](const std::vector<int>& v) {
            ExponentVector a(v);
            if (a.degree() == 0) return;
            const int t = nu(weighted_graph(g, a)).nu + 1;
            bool each = true, each_strong = true;
            for (VertexSet comp : components_within(g, a.support())) {
                ExponentVector part(g.vertex_count());
                for (int i : comp) part[i] = a[i];
                const int ti = nu(weighted_graph(g, part)).nu + 1;
                each = each && is_t_saturating(g, part, ti);
                each_strong = each_strong && is_strongly_t_saturating(g, part, ti);
            }
            ASSERT_EQ(is_t_saturating(g, a, t), each) << describe(g, a);
            ASSERT_EQ(is_strongly_t_saturating(g, a, t), each_strong) << describe(g, a);
        });
    });
}

TEST(Saturating, StrongImpliesDeletionBoundAndSaturating) {
    int strong_found = 0;
    fixtures::for_each_graph(5, [&](const SimpleGraph& g) {
        fixtures::for_each_vector(g.vertex_count(), 2, [&](const std::vector<int>& v) {
            ExponentVector a(v);
            if (a.degree() == 0) return;
            const int t = nu(weighted_graph(g, a)).nu + 1;
            if (!is_strongly_t_saturating(g, a, t)) return;
            ++strong_found;
            const VertexSet va = a.support();
            // an isolated vertex of H passes the strong test but never the
            // plain one (its neighborhood condition asks for ν(H) >= t)
            bool isolated = false;
            for (int i : va) isolated = isolated || !g.neighbors(i).intersects(va);
            ASSERT_EQ(is_t_saturating(g, a, t), !isolated) << describe(g, a);
            for (std::uint64_t b = va.bits(); b != 0; b = (b - 1) & va.bits()) {
                int removed_weight = 0;
                for (int j : VertexSet(b)) removed_weight += a[j];
                ASSERT_GE(nu_without(g, a, VertexSet(b)), t - removed_weight) << describe(g, a);
            }
        });
    });
    EXPECT_GT(strong_found, 0);
}

// ---------------------------------------------------------------------------
// edge extension

TEST(EdgeExtension, PendantExamples) {
    auto g = fixtures::graph("1-2,1-3,2-3,1-4");
    auto a = extend_by_edge(g, {1, 1, 1, 0}, 0, 3);
    EXPECT_EQ(a, (ExponentVector{2, 1, 1, 1}));
    EXPECT_TRUE(is_strongly_t_saturating(g, a, 3));
    EXPECT_EQ(nu(weighted_graph(g, a)).nu, 2);
    for (int j = 0; j < 4; ++j) {
        EXPECT_GE(nu_without(g, a, VertexSet::singleton(j)), 3 - a[j]);
    }
    auto b = extend_by_edge(g, a, 0, 3);
    EXPECT_EQ(b, (ExponentVector{3, 1, 1, 2}));
    EXPECT_TRUE(is_strongly_t_saturating(g, b, 4));
}

TEST(EdgeExtension, RejectsBadInput) {
    auto g = fixtures::graph("1-2,1-3,2-3,1-4");
    EXPECT_THROW(extend_by_edge(g, {1, 1, 1, 0}, 3, 0), InvalidInput);  // h outside V_b
    EXPECT_THROW(extend_by_edge(g, {1, 1, 1, 0}, 1, 3), InvalidInput);  // not an edge
    EXPECT_THROW(extend_by_edge(g, {1, 1, 0, 1}, 0, 2), InvalidInput);  // not saturating
}

TEST(BuildStrong, Examples) {
    auto bow = fixtures::bowtie();
    auto a = build_strong(bow, bow.vertices(), set({1, 2, 3}));
    EXPECT_EQ(a.degree(), 7);
    EXPECT_EQ(a.support(), bow.vertices());
    EXPECT_TRUE(is_strongly_t_saturating(bow, a, 4));

    auto tri = fixtures::triangle();
    EXPECT_EQ(build_strong(tri, tri.vertices(), tri.vertices()), (ExponentVector{1, 1, 1}));

    auto pendant = fixtures::graph("1-2,1-3,2-3,1-4");
    auto p = build_strong(pendant, pendant.vertices(), set({1, 2, 3}));
    EXPECT_EQ(p, (ExponentVector{2, 1, 1, 1}));
    EXPECT_TRUE(is_strongly_t_saturating(pendant, p, 3));

    auto deeper = build_strong(pendant, pendant.vertices(), set({1, 2, 3}), 5);
    EXPECT_EQ(deeper.degree(), 9);
    EXPECT_TRUE(is_strongly_t_saturating(pendant, deeper, 5));
}

TEST(BuildStrong, RejectsBadInput) {
    auto g = fixtures::graph("1-2,1-3,2-3,4-5");
    EXPECT_THROW(build_strong(g, g.vertices(), set({1, 2, 3})), InvalidInput);         // disconnected
    auto path = fixtures::graph("1-2,2-3,3-4");
    EXPECT_THROW(build_strong(path, path.vertices(), set({1, 2, 3})), InvalidInput);   // seed not saturating
    EXPECT_THROW(build_strong(path, path.vertices(), set({1, 2})), InvalidInput);      // even seed
}

// ---------------------------------------------------------------------------
// degree complex facets

TEST(Facets, Examples) {
    EXPECT_EQ(facets_delta(fixtures::triangle(), {1, 1, 1}, 2), (std::vector<VertexSet>{VertexSet{}}));
    auto g = fixtures::tailed_triangle();
    auto f = facets_delta(g, {1, 1, 1, 0, -1}, 2);
    EXPECT_NE(std::find(f.begin(), f.end(), VertexSet{}), f.end());
    EXPECT_TRUE(facets_delta(fixtures::triangle(), {5, 5, 5}, 2).empty());
}

TEST(Facets, AgreeWithLocalizedIdealArithmetic) {
    fixtures::for_each_graph(4, [](const SimpleGraph& g) {
        if (g.edge_count() == 0) return;
        for (int t = 1; t <= 3; ++t) {
            FacetOracle reference(g, t);
            fixtures::for_each_vector(g.vertex_count(), 3, [&](const std::vector<int>& v) {
                std::vector<int> shifted = v;
                for (int& x : shifted) --x;  // entries in -1..2
                SignedExponentVector a(shifted);
                ASSERT_EQ(facets_delta(g, a, t), reference.facets(a))
                    << format_graph(g) << "a = " << format_exponents(a) << " t=" << t;
            });
        }
    });
}

TEST(Exponents, ParsingAndTruncation) {
    EXPECT_EQ(parse_exponents("1,0,2"), (ExponentVector{1, 0, 2}));
    EXPECT_THROW(parse_exponents("1,-1"), ParseError);
    EXPECT_THROW(parse_exponents("1,,2"), ParseError);
    EXPECT_THROW(parse_exponents(""), ParseError);
    auto s = parse_signed_exponents("1,1,1,0,-1");
    EXPECT_EQ(s.negative_set(), set({5}));
    EXPECT_EQ(s.truncate(set({4, 5})), (ExponentVector{1, 1, 1, 0, 0}));
    EXPECT_THROW(s.truncate(set({4})), InvalidInput);
    EXPECT_THROW(ExponentVector({1, -1}), InvalidInput);
}
