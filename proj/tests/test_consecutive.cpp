#include <gtest/gtest.h>

#include "berge/consecutive.hpp"
#include "berge/generators.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

// Independent check: k witnesses, consecutive lengths, each a valid Berge cycle.
void expect_run(const Hypergraph& h, const ConsecutiveRun& run, std::size_t k) {
    auto edges = edges_of(h);
    ASSERT_EQ(run.cycles.size(), k);
    EXPECT_EQ(run.k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& c = run.cycles[j];
        std::vector<int> spine(c.spine.begin(), c.spine.end()), ids(c.edges.begin(), c.edges.end());
        EXPECT_TRUE(oracle::valid_cycle(edges, spine, ids)) << "cycle " << j;
        if (j > 0)
            EXPECT_EQ(c.length(), run.cycles[j - 1].length() + 1);
    }
    EXPECT_LE(run.shortest(), run.shortest_bound);
    EXPECT_TRUE(verify_run(h, run));
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InternalProofFailure;
}

std::optional<std::size_t> heavy_level(const Skeleton& s, const LevelEdgeClasses& c, std::size_t k) {
    for (std::size_t i = 1; i <= s.height(); ++i)
        if (c.a(i) > 0 && c.a(i) >= (k + 2) * s.level_size(i))
            return i;
    return std::nullopt;
}

} // namespace

TEST(HeavyA, SteinerSystem) {
    auto h = steiner_triple(127);
    auto s = build_skeleton(h, 0);
    auto c = classify_levels(h, s);
    auto i = heavy_level(s, c, 2);
    ASSERT_TRUE(i.has_value());
    auto run = cycles_from_heavy_a(h, s, c, *i, 2);
    expect_run(h, run, 2);
    EXPECT_EQ(run.shortest_bound, 2 * *i);
}

TEST(HeavyA, PreconditionFails) {
    auto h = make_h(7, oracle::fano());
    auto s = build_skeleton(h, 0);
    for (std::size_t i = 0; i <= s.height() + 1; ++i)
        EXPECT_EQ(kind_of([&] { cycles_from_heavy_a(h, s, i, 2); }), ErrorKind::PreconditionUnmet);
    auto nl = make_h(4, {{0, 1, 2}, {0, 1, 3}});
    auto s2 = build_skeleton(nl, 0);
    EXPECT_EQ(kind_of([&] { cycles_from_heavy_a(nl, s2, 1, 1); }), ErrorKind::NotLinear);
}

// Random heavy fixtures: relabeled Steiner systems with random roots.
TEST(HeavyA, RandomFixturesRespectBound) {
    const std::size_t sizes[] = {63, 69, 75, 79, 81, 85, 87, 91, 93, 97};
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = sizes[seed % 10];
        const std::size_t k = 1 + seed % 3;
        auto h = relabel(steiner_triple(n), seed);
        auto s = build_skeleton(h, static_cast<Vertex>((seed * 31) % n));
        auto c = classify_levels(h, s);
        auto i = heavy_level(s, c, k);
        if (!i)
            continue;
        auto run = cycles_from_heavy_a(h, s, c, *i, k);
        expect_run(h, run, k);
        EXPECT_LE(run.shortest(), 2 * *i);
        ++checked;
    }
    EXPECT_GE(checked, 40);
}

TEST(BC, MonochromaticRoute) {
    for (auto [q, k] : {std::pair<std::size_t, std::size_t>{45, 2}, {57, 3}}) {
        auto h = mono_fixture(q);
        auto s = build_skeleton(h, 0);
        auto c = classify_levels(h, s);
        EXPECT_FALSE(heavy_level(s, c, k).has_value());
        auto out = cycles_or_bound_bc(h, s, c, 2, k);
        ASSERT_TRUE(std::holds_alternative<ConsecutiveRun>(out));
        const auto& run = std::get<ConsecutiveRun>(out);
        EXPECT_EQ(run.route.rfind("BC-mono", 0), 0u);
        expect_run(h, run, k);
        EXPECT_EQ(run.shortest_bound, 6u);
    }
}

TEST(BC, LadderRoute) {
    for (auto [t, k] : {std::pair<std::size_t, std::size_t>{5, 1}, {7, 2}, {9, 3}}) {
        auto h = ladder_fixture(t);
        auto s = build_skeleton(h, 0);
        auto out = cycles_or_bound_bc(h, s, 2, k);
        ASSERT_TRUE(std::holds_alternative<ConsecutiveRun>(out));
        const auto& run = std::get<ConsecutiveRun>(out);
        EXPECT_EQ(run.route, "BC-ladder");
        expect_run(h, run, k);
    }
}

TEST(BC, SparseGivesCertificate) {
    auto h = make_h(7, oracle::fano());
    auto s = build_skeleton(h, 0);
    auto c = classify_levels(h, s);
    for (std::size_t i = 1; i <= s.height(); ++i) {
        auto out = cycles_or_bound_bc(h, s, c, i, 3);
        ASSERT_TRUE(std::holds_alternative<BCBoundCertificate>(out));
        const auto& cert = std::get<BCBoundCertificate>(out);
        EXPECT_EQ(cert.counted, c.b(i) + c.c(i));
        EXPECT_TRUE(cert.holds());
    }
}

// The dichotomy is total on random linear 3-graphs, and certificates count correctly.
TEST(BC, DichotomyOnRandomLinear) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 15 + seed % 40;
        const std::size_t k = 1 + seed % 3;
        auto h = random_linear(n, 3, n * (2 + seed % 8), seed);
        if (h.edge_count() == 0)
            continue;
        auto s = build_skeleton(h, h.edge(0)[0]);
        auto c = classify_levels(h, s);
        for (std::size_t i = 1; i <= s.height(); ++i) {
            BCOutcome out;
            ASSERT_NO_THROW(out = cycles_or_bound_bc(h, s, c, i, k)) << "seed " << seed << " level " << i;
            if (auto* run = std::get_if<ConsecutiveRun>(&out)) {
                expect_run(h, *run, k);
                EXPECT_LE(run->shortest(), 2 * i + 2);
            } else {
                const auto& cert = std::get<BCBoundCertificate>(out);
                EXPECT_EQ(cert.counted, c.b(i) + c.c(i));
                EXPECT_LE(2 * cert.counted, (7 * k + 2) * s.level_size(i) + (5 * k + 4) * s.level_size(i + 1));
            }
        }
    }
}

TEST(Sweep, AboveThresholdAlwaysFinds) {
    // |H| >= 7(k+1)n, i.e. average degree >= 21(k+1)
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{127, 2}, {133, 2}, {169, 3}}) {
        const std::size_t need = 7 * (k + 1) * n;
        auto h = thinned_sts(n, steiner_triple(n).edge_count() - need, n + k);
        ASSERT_GE(h.edge_count(), need);
        auto run = skeleton_sweep(h, k);
        ASSERT_TRUE(run.has_value());
        expect_run(h, *run, k);
    }
}

TEST(Sweep, BelowThresholdVerifiesWhateverIsReturned) {
    auto h = make_h(7, oracle::fano());
    auto run = skeleton_sweep(h, 2);
    if (run)
        expect_run(h, *run, 2);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_linear(30 + seed, 3, 3 * (30 + seed), seed);
        for (std::size_t k : {1, 2, 4}) {
            std::vector<SweepStep> trace;
            auto r = skeleton_sweep(g, k, &trace);
            if (r)
                expect_run(g, *r, k);
            // the loop deletes at least one edge per step and never more than exist
            std::size_t removed = 0;
            for (const auto& st : trace) {
                EXPECT_GT(st.incident, 0u);
                EXPECT_LT(st.incident, 7 * (k + 1) * st.tree_size);
                removed += st.incident;
            }
            EXPECT_LE(removed, g.edge_count());
            if (!r)
                EXPECT_EQ(removed, g.edge_count());
        }
    }
}

TEST(Sweep, Errors) {
    auto nl = make_h(4, {{0, 1, 2}, {0, 1, 3}});
    EXPECT_EQ(kind_of([&] { skeleton_sweep(nl, 2); }), ErrorKind::NotLinear);
    auto h = make_h(7, oracle::fano());
    EXPECT_EQ(kind_of([&] { skeleton_sweep(h, 0); }), ErrorKind::InvalidParameters);
}

TEST(LinearR, AffineGeometryFourUniform) {
    // AG(4,4): 256 points on 85 lines each, so d = 85 >= 28(k+1) for k = 2
    auto lines = oracle::affine_lines_gf4(4);
    ASSERT_TRUE(oracle::linear(lines));
    auto h = make_h(256, lines);
    ASSERT_EQ(h.edge_count(), 5440u);
    auto run = find_linear_r(h, 2);
    ASSERT_TRUE(run.has_value());
    expect_run(h, *run, 2);
}

TEST(LinearR, LiftKeepsSpines) {
    auto h = relabel(make_h(256, oracle::affine_lines_gf4(4)), 3);
    std::vector<std::vector<Vertex>> triples;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        triples.push_back({h.edge(e)[0], h.edge(e)[1], h.edge(e)[2]});
    Hypergraph t(h.vertex_count(), triples, 3);
    auto direct = skeleton_sweep(t, 2);
    auto lifted = find_linear_r(h, 2);
    ASSERT_TRUE(direct && lifted);
    ASSERT_EQ(direct->cycles.size(), lifted->cycles.size());
    for (std::size_t j = 0; j < direct->cycles.size(); ++j)
        EXPECT_EQ(direct->cycles[j].spine, lifted->cycles[j].spine);
    expect_run(h, *lifted, 2);
}

TEST(LinearR, Errors) {
    auto nl = make_h(5, {{0, 1, 2, 3}, {0, 1, 2, 4}});
    EXPECT_EQ(kind_of([&] { find_linear_r(nl, 2); }), ErrorKind::NotLinear);
    auto g = make_h(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(kind_of([&] { find_linear_r(g, 1); }), ErrorKind::PreconditionUnmet);
}
