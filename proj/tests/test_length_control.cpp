#include <gtest/gtest.h>

#include "berge/generators.hpp"
#include "berge/length_control.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

void expect_controlled(const Hypergraph& h, const ConsecutiveRun& run, std::size_t k, std::size_t height) {
    auto edges = edges_of(h);
    ASSERT_EQ(run.cycles.size(), k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& c = run.cycles[j];
        std::vector<int> spine(c.spine.begin(), c.spine.end()), ids(c.edges.begin(), c.edges.end());
        EXPECT_TRUE(oracle::valid_cycle(edges, spine, ids));
        if (j > 0)
            EXPECT_EQ(c.length(), run.cycles[j - 1].length() + 1);
    }
    EXPECT_LE(run.shortest(), 2 * height);
}

} // namespace

TEST(LengthControl, ThresholdIsExact) {
    // n = 8, h = 3: 18*8*2 + 42*8 = 624; n = 9, h = 2: 18*27 + 42*9 = 864
    EXPECT_TRUE(detail::above_growth_threshold(624, 8, 1, 3));
    EXPECT_FALSE(detail::above_growth_threshold(623, 8, 1, 3));
    EXPECT_TRUE(detail::above_growth_threshold(864, 9, 1, 2));
    EXPECT_FALSE(detail::above_growth_threshold(863, 9, 1, 2));
    EXPECT_TRUE(detail::above_growth_threshold(1728, 9, 2, 2));
    EXPECT_FALSE(detail::above_growth_threshold(1727, 9, 2, 2));
}

TEST(LengthControl, AboveThresholdHeightThree) {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1489, 1}, {3909, 2}}) {
        auto h = steiner_triple(n);
        auto res = length_controlled_search(h, k, 3);
        EXPECT_TRUE(res.report.above_threshold);
        EXPECT_GE(static_cast<double>(res.report.core_min_degree), res.report.degree_target);
        ASSERT_TRUE(res.run.has_value());
        expect_controlled(h, *res.run, k, 3);
    }
}

TEST(LengthControl, JustBelowThreshold) {
    // STS(1483) misses the h = 3, k = 1 threshold; whatever comes back still obeys 2h
    auto h = steiner_triple(1483);
    auto res = length_controlled_search(h, 1, 3);
    EXPECT_FALSE(res.report.above_threshold);
    if (res.run)
        expect_controlled(h, *res.run, 1, 3);
}

TEST(LengthControl, ReportOnSparseInputs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 20 + seed;
        auto h = random_linear(n, 3, 2 * n, seed);
        const std::size_t k = 1 + seed % 3, height = 2 + seed % 3;
        auto res = length_controlled_search(h, k, height);
        const auto& rep = res.report;
        EXPECT_FALSE(rep.above_threshold);
        EXPECT_EQ(rep.edges, h.edge_count());
        if (res.run) {
            expect_controlled(h, *res.run, k, height);
            EXPECT_TRUE(rep.levels.empty());
            continue;
        }
        EXPECT_EQ(rep.levels.size(), rep.core_edges ? height - 1 : 0u);
        for (const auto& e : rep.levels) {
            if (e.size > 0)
                EXPECT_DOUBLE_EQ(e.ratio, static_cast<double>(e.next_size) / static_cast<double>(e.size));
            EXPECT_EQ(e.a_certified, e.a <= 2 * k * e.size);
            EXPECT_EQ(e.bc_certified, e.bc <= 4 * k * (e.size + e.next_size));
        }
    }
}

TEST(LengthControl, Errors) {
    auto nl = make_h(4, {{0, 1, 2}, {0, 1, 3}});
    EXPECT_THROW(length_controlled_search(nl, 1, 2), Error);
    auto h = steiner_triple(7);
    try {
        length_controlled_search(h, 0, 2);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidParameters);
    }
    try {
        length_controlled_search(h, 1, 0);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidParameters);
    }
}
