#include <gtest/gtest.h>

#include <set>

#include "berge/generators.hpp"
#include "berge/reduction.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InternalProofFailure;
}

bool subset_of(const std::vector<Vertex>& s, std::span<const Vertex> e) {
    return std::includes(e.begin(), e.end(), s.begin(), s.end());
}

void expect_cycles(const Hypergraph& h, const std::vector<BergeCycleWitness>& cs, std::size_t first) {
    auto edges = edges_of(h);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        std::vector<int> spine(cs[j].spine.begin(), cs[j].spine.end()), ids(cs[j].edges.begin(), cs[j].edges.end());
        EXPECT_TRUE(oracle::valid_cycle(edges, spine, ids)) << "cycle " << j;
        EXPECT_EQ(cs[j].length(), first + j);
    }
}

void expect_run(const Hypergraph& h, const ConsecutiveRun& run, std::size_t k) {
    ASSERT_EQ(run.cycles.size(), k);
    expect_cycles(h, run.cycles, run.cycles.front().length());
    EXPECT_LE(run.shortest(), run.shortest_bound);
    EXPECT_TRUE(verify_run(h, run));
}

// Union of K_4^(3) copies glued along shared vertices plus random noise triples.
Hypergraph noisy_3graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
    auto es = random_linear(n, 3, 8 * n, seed).edge_list();
    std::set<std::vector<Vertex>> seen(es.begin(), es.end());
    Rng rng(seed + 17);
    for (std::size_t j = 0; j < extra; ++j) {
        std::vector<Vertex> e{static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)),
                              static_cast<Vertex>(rng.below(n))};
        std::sort(e.begin(), e.end());
        if (e[0] != e[1] && e[1] != e[2] && seen.insert(e).second)
            es.push_back(e);
    }
    return Hypergraph(n, es, 3);
}

void audit_split(const Hypergraph& h, std::size_t k, const DeltaSplit& split) {
    if (auto* dc = std::get_if<DenseCore>(&split)) {
        const auto& g = dc->core.graph;
        ASSERT_GT(g.edge_count(), 0u);
        auto sh = shadow(g, *g.uniformity() - 1);
        for (const auto& c : sh.covers)
            EXPECT_GE(c.size(), k + 1);
        return;
    }
    const auto& s = std::get<SunflowerSlice>(split);
    ASSERT_EQ(s.edges.size(), s.marks.size());
    std::set<std::vector<Vertex>> distinct(s.marks.begin(), s.marks.end());
    EXPECT_EQ(distinct.size(), s.marks.size());
    for (std::size_t j = 0; j < s.edges.size(); ++j) {
        EXPECT_TRUE(subset_of(s.marks[j], h.edge(s.edges[j])));
        for (std::size_t l = j + 1; l < s.edges.size(); ++l)
            EXPECT_FALSE(subset_of(s.marks[j], h.edge(s.edges[l])));
    }
    // every edge is placed or contains a mark
    std::set<EdgeIndex> placed(s.edges.begin(), s.edges.end());
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        bool hit = placed.count(e) > 0;
        for (const auto& m : s.marks)
            hit = hit || subset_of(m, h.edge(e));
        EXPECT_TRUE(hit) << "edge " << e;
    }
    EXPECT_GE(k * s.edges.size(), h.edge_count());
}

} // namespace

TEST(DeltaSplit, CompleteGivesCore) {
    auto split = delta_system_split(complete_r(5, 3), 1);
    ASSERT_TRUE(std::holds_alternative<DenseCore>(split));
    EXPECT_EQ(std::get<DenseCore>(split).core.graph.edge_count(), 10u);
}

TEST(DeltaSplit, FanoIsAllSlice) {
    auto h = make_h(7, oracle::fano());
    auto split = delta_system_split(h, 1);
    ASSERT_TRUE(std::holds_alternative<SunflowerSlice>(split));
    EXPECT_EQ(std::get<SunflowerSlice>(split).edges.size(), 7u);
    audit_split(h, 1, split);
}

// Marks are distinct, yet a mark need not have co-degree 1 among the slice edges.
TEST(DeltaSplit, MarkCodegreeCanExceedOne) {
    auto h = make_h(7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
    auto split = delta_system_split(h, 1);
    audit_split(h, 1, split);
    const auto& s = std::get<SunflowerSlice>(split);
    std::size_t worst = 0;
    for (const auto& m : s.marks) {
        std::size_t c = 0;
        for (EdgeIndex e : s.edges)
            c += subset_of(m, h.edge(e));
        worst = std::max(worst, c);
    }
    EXPECT_EQ(worst, 2u);
}

TEST(DeltaSplit, RandomInvariants) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t r = 3 + seed % 2;
        const std::size_t k = 1 + seed % 3;
        auto es = oracle::random_hypergraph(9, static_cast<int>(r), 0.15 + 0.1 * (seed % 5), seed);
        if (es.empty())
            continue;
        auto h = make_h(9, es);
        audit_split(h, k, delta_system_split(h, k));
    }
}

TEST(DeltaSplit, Errors) {
    auto h = make_h(7, oracle::fano());
    EXPECT_EQ(kind_of([&] { delta_system_split(h, 0); }), ErrorKind::InvalidParameters);
    auto mixed = make_h(4, {{0, 1, 2}, {0, 3}});
    EXPECT_EQ(kind_of([&] { delta_system_split(mixed, 1); }), ErrorKind::PreconditionUnmet);
}

TEST(TightPath, EveryLengthThreeToM) {
    for (std::size_t r : {3, 4, 5})
        for (std::size_t m = 3; m <= 12; ++m) {
            auto h = tight_path(m + 1, r);
            std::vector<Vertex> vs(m + r);
            std::iota(vs.begin(), vs.end(), 0);
            auto p = make_tight_path(h, vs);
            ASSERT_EQ(p.length(), m + 1);
            auto cs = tight_path_cycles(h, p);
            ASSERT_EQ(cs.size(), m - 2) << "r " << r << " m " << m;
            expect_cycles(h, cs, 3);
        }
}

TEST(TightPath, Errors) {
    auto h = tight_path(5, 3);
    EXPECT_EQ(kind_of([&] { make_tight_path(h, {0, 1, 3}); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([&] { make_tight_path(h, {0, 1, 1}); }), ErrorKind::PreconditionUnmet);
    auto short_path = make_tight_path(h, {0, 1, 2, 3, 4});
    EXPECT_EQ(kind_of([&] { tight_path_cycles(h, short_path); }), ErrorKind::PreconditionUnmet);
}

TEST(MinCodegree, CompleteGraphs) {
    for (std::size_t n = 5; n <= 8; ++n)
        for (std::size_t k = 1; k + 3 <= n; ++k) {
            auto h = complete_r(n, 3);
            EXPECT_EQ(min_codegree(h), n - 2);
            auto cs = min_codegree_cycles(h, k);
            ASSERT_EQ(cs.size(), k);
            expect_cycles(h, cs, 3);
        }
    auto h4 = complete_r(8, 4);
    auto cs = min_codegree_cycles(h4, 4);
    ASSERT_EQ(cs.size(), 4u);
    expect_cycles(h4, cs, 3);
}

// Dense random instances: whenever the co-degree condition holds, lengths 3..k+2 appear.
TEST(MinCodegree, RandomDense) {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto h = make_h(9, oracle::random_hypergraph(9, 3, 0.8 + 0.004 * static_cast<double>(seed), seed));
        const std::size_t d = min_codegree(h);
        if (d < 2)
            continue;
        for (std::size_t k = 1; k < d; ++k) {
            auto cs = min_codegree_cycles(h, k);
            ASSERT_EQ(cs.size(), k);
            expect_cycles(h, cs, 3);
        }
        ++checked;
    }
    EXPECT_GE(checked, 40);
}

TEST(MinCodegree, Errors) {
    auto h = make_h(7, oracle::fano());
    EXPECT_EQ(kind_of([&] { min_codegree_cycles(h, 1); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([&] { min_codegree_cycles(h, 0); }), ErrorKind::InvalidParameters);
}

TEST(General3, DenseCoreRoute) {
    for (std::size_t k = 1; k <= 4; ++k) {
        General3Report rep;
        auto run = find_general3(complete_r(9, 3), k, &rep);
        ASSERT_TRUE(run.has_value());
        EXPECT_TRUE(rep.dense_core);
        EXPECT_EQ(run->route, "codegree");
        EXPECT_EQ(run->shortest(), 3u);
        expect_run(complete_r(9, 3), *run, k);
    }
}

TEST(General3, SliceRoutes) {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto h = noisy_3graph(60, 200, seed);
        const std::size_t k = 1 + seed % 3;
        General3Report rep;
        auto run = find_general3(h, k, &rep);
        EXPECT_FALSE(rep.dense_core);
        EXPECT_EQ(rep.g1_size + rep.g2_size, rep.slice_size);
        EXPECT_LE(rep.conflict_max_degree, 3u);
        EXPECT_GE(4 * rep.independent, rep.g2_size);
        if (rep.g1_size > 0)
            EXPECT_GE(rep.good, rep.good_required);
        if (run) {
            expect_run(h, *run, k);
            ++found;
        }
    }
    EXPECT_EQ(found, 30);
}

TEST(General3, EvenRoute) {
    // triples {x_i, y_j, z_ij} and {x_i, w_(i+j), z_ij} over a pool w, plus two
    // private triples on each {x_i, z_ij}
    const Vertex a = 12;
    std::vector<std::vector<Vertex>> es;
    Vertex next = 3 * a;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < a; ++j) {
            const Vertex z = next++;
            es.push_back({i, a + j, z});
            es.push_back({i, 2 * a + (i + j) % a, z});
            for (int t = 0; t < 2; ++t)
                es.push_back({i, z, next++});
        }
    Hypergraph h(next, es, 3);
    General3Report rep;
    auto run = find_general3(h, 2, &rep);
    EXPECT_GT(rep.g1_size, 0u);
    EXPECT_GE(rep.good, rep.good_required);
    ASSERT_TRUE(run.has_value());
    EXPECT_EQ(run->route, "general3-even");
    expect_run(h, *run, 2);
}

TEST(General3, Errors) {
    EXPECT_EQ(kind_of([&] { find_general3(complete_r(5, 4), 1); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([&] { find_general3(complete_r(5, 3), 0); }), ErrorKind::InvalidParameters);
    EXPECT_FALSE(find_general3(Hypergraph(3, {}, 3), 1).has_value());
}

TEST(GeneralR, CoreAndLift) {
    std::size_t depth = 0;
    auto run = find_general_r(complete_r(9, 5), 2, &depth);
    ASSERT_TRUE(run.has_value());
    EXPECT_EQ(depth, 1u);
    expect_run(complete_r(9, 5), *run, 2);

    // a 4-graph whose marks are a linear 3-graph: each STS triple gets a private fourth vertex
    auto sts = steiner_triple(127);
    std::vector<std::vector<Vertex>> es;
    for (EdgeIndex e = 0; e < sts.edge_count(); ++e) {
        auto ev = sts.edge(e);
        es.push_back({ev[0], ev[1], ev[2], static_cast<Vertex>(127 + e)});
    }
    Hypergraph h(127 + sts.edge_count(), es, 4);
    depth = 0;
    auto lifted = find_general_r(h, 2, &depth);
    ASSERT_TRUE(lifted.has_value());
    EXPECT_GE(depth, 2u);
    EXPECT_EQ(lifted->route.rfind("lift/", 0), 0u);
    expect_run(h, *lifted, 2);
}

TEST(EvenCycles, CompleteBipartite) {
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::size_t s = 6 * k;
        std::vector<GraphEdge> es;
        for (Vertex i = 0; i < s; ++i)
            for (Vertex j = 0; j < s; ++j)
                es.push_back({i, static_cast<Vertex>(s + j)});
        Graph g(2 * s, es);
        auto run = consecutive_even_cycles(g, k);
        ASSERT_TRUE(run.has_value());
        ASSERT_EQ(run->cycles.size(), k);
        for (std::size_t j = 0; j < k; ++j) {
            EXPECT_TRUE(is_graph_cycle(g, run->cycles[j].vertices));
            EXPECT_EQ(run->cycles[j].length(), 4 + 2 * j);
        }
        EXPECT_TRUE(verify_even_run(g, *run));
    }
}

TEST(EvenCycles, RandomDenseBipartite) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t k = 1 + seed % 2;
        auto inc = bipartite_incidence(40, 40, 0.4 + 0.01 * static_cast<double>(seed % 10), seed);
        std::vector<GraphEdge> es;
        for (EdgeIndex e = 0; e < inc.edge_count(); ++e)
            es.push_back({inc.edge(e)[0], inc.edge(e)[1]});
        Graph g(inc.vertex_count(), es);
        std::size_t active = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            active += g.degree(v) > 0;
        if (2 * g.edge_count() < 8 * k * active)
            continue;
        auto run = consecutive_even_cycles(g, k);
        ASSERT_TRUE(run.has_value()) << "seed " << seed;
        EXPECT_TRUE(verify_even_run(g, *run));
    }
}

TEST(EvenCycles, Errors) {
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    EXPECT_EQ(kind_of([&] { consecutive_even_cycles(c6, 1); }), ErrorKind::PreconditionUnmet);
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(kind_of([&] { consecutive_even_cycles(tri, 1); }), ErrorKind::PreconditionUnmet);
    EXPECT_EQ(kind_of([&] { consecutive_even_cycles(c6, 0); }), ErrorKind::InvalidParameters);
}
