#include <gtest/gtest.h>

#include "berge/turan.hpp"
#include "helpers.hpp"

using namespace berge;

namespace {

// True when some (size)-subset of K_n^(3) has no Berge cycle of length ell.
bool free_subset_exists(int n, int ell, std::size_t size) {
    auto all = oracle::complete(n, 3);
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    const int m = static_cast<int>(all.size());
    while (true) {
        std::vector<oracle::Edge> es;
        for (int i : pick)
            es.push_back(all[static_cast<std::size_t>(i)]);
        if (!oracle::has_berge_cycle(n, es, ell))
            return true;
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - static_cast<int>(size) + i)
            --i;
        if (i < 0)
            return false;
        ++pick[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

void expect_exact(const TuranRecord& rec) {
    ASSERT_TRUE(rec.exact);
    EXPECT_EQ(rec.extremal.edge_count(), rec.value);
    const int n = static_cast<int>(rec.n), ell = static_cast<int>(rec.ell);
    EXPECT_FALSE(oracle::has_berge_cycle(n, edges_of(rec.extremal), ell));
}

} // namespace

TEST(Turan, FanoIsExtremalForTwoCycles) {
    auto rec = turan_exhaustive(7, 3, 2, 100'000'000);
    expect_exact(rec);
    EXPECT_EQ(rec.value, 7u);
    // a linear 3-graph on 7 points with 7 triples is a Steiner triple system
    EXPECT_TRUE(rec.extremal.is_linear());
    for (Vertex v = 0; v < 7; ++v)
        EXPECT_EQ(rec.extremal.degree(v), 3u);
    // 8 triples would need 24 > 21 pairs
    EXPECT_GT(8 * 3, 7 * 6 / 2);
}

// Values frozen after the first run and cross-checked by brute force over subsets.
TEST(Turan, PinnedValues) {
    struct Case {
        std::size_t n, ell, value;
    };
    for (auto c : {Case{4, 3, 2}, Case{5, 3, 3}, Case{6, 3, 4}, Case{5, 2, 2}, Case{6, 2, 4}}) {
        auto rec = turan_exhaustive(c.n, 3, c.ell, 100'000'000);
        expect_exact(rec);
        EXPECT_EQ(rec.value, c.value) << "n " << c.n << " l " << c.ell;
        EXPECT_TRUE(free_subset_exists(static_cast<int>(c.n), static_cast<int>(c.ell), c.value));
        EXPECT_FALSE(free_subset_exists(static_cast<int>(c.n), static_cast<int>(c.ell), c.value + 1));
    }
}

TEST(Turan, LargerDeskValues) {
    EXPECT_EQ(turan_exhaustive(8, 3, 2, 100'000'000).value, 8u);
    auto sts9 = turan_exhaustive(9, 3, 2, 100'000'000);
    expect_exact(sts9);
    EXPECT_EQ(sts9.value, 12u);
    auto seven = turan_exhaustive(7, 3, 3, 100'000'000);
    expect_exact(seven);
    EXPECT_EQ(seven.value, 6u);
}

TEST(Turan, BudgetGivesLowerBound) {
    auto full = turan_exhaustive(7, 3, 3, 100'000'000);
    auto cut = turan_exhaustive(7, 3, 3, 20);
    EXPECT_FALSE(cut.exact);
    EXPECT_LE(cut.value, full.value);
    EXPECT_EQ(cut.extremal.edge_count(), cut.value);
    EXPECT_FALSE(oracle::has_berge_cycle(7, edges_of(cut.extremal), 3));
}

TEST(Turan, Errors) {
    EXPECT_THROW(turan_exhaustive(10, 3, 2, 1000), Error);
    EXPECT_THROW(turan_exhaustive(5, 3, 1, 1000), Error);
    EXPECT_THROW(turan_exhaustive(2, 3, 2, 1000), Error);
}
