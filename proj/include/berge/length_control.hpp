#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "berge/consecutive.hpp"
#include "berge/error.hpp"
#include "berge/hypergraph.hpp"
#include "berge/skeleton.hpp"

namespace berge {

/// One level of the skeleton in a length-controlled search.
struct LevelGrowthEntry {
    std::size_t level = 0;
    std::size_t size = 0;       ///< |L_i|
    std::size_t next_size = 0;  ///< |L_{i+1}|
    std::size_t a = 0;
    std::size_t bc = 0;              ///< |B_i| + |C_i|
    bool a_certified = false;        ///< |A_i| <= 2k|L_i|
    bool bc_certified = false;       ///< |B_i u C_i| <= 4k|L_i| + 4k|L_{i+1}|
    double ratio = 0;                ///< |L_{i+1}| / |L_i|
    bool grows = false;              ///< |L_{i+1}| >= |L_i| * n^(1/h), exact
};

struct LevelGrowthReport {
    std::size_t n = 0, k = 0, h = 0, edges = 0;
    double threshold = 0;  ///< 18k n^(1+1/h) + 42kn
    bool above_threshold = false;
    double degree_target = 0;  ///< 18k n^(1/h) + 42k
    std::size_t core_vertices = 0, core_edges = 0, core_min_degree = 0;
    Vertex root = kNoVertex;
    std::size_t height = 0;
    std::vector<LevelGrowthEntry> levels;
    bool all_certified = false;  ///< every level 1..h-1 and A_h certified
    std::string outcome;
};

struct LengthControlResult {
    std::optional<ConsecutiveRun> run;
    LevelGrowthReport report;
};

namespace detail {

using Wide = unsigned __int128;

inline Wide ipow(Wide b, std::size_t e) {
    Wide out = 1;
    while (e--)
        out *= b;
    return out;
}

// |H| >= 18k n^(1+1/h) + 42kn  <=>  (|H| - 42kn)^h >= (18k)^h n^(h+1)
inline bool above_growth_threshold(std::size_t edges, std::size_t n, std::size_t k, std::size_t h) {
    const Wide lin = static_cast<Wide>(42) * k * n;
    if (edges < lin)
        return false;
    const Wide slack = edges - lin;
    long double lhs = std::pow(static_cast<long double>(slack), static_cast<long double>(h));
    long double rhs = std::pow(18.0L * k, static_cast<long double>(h)) * std::pow(static_cast<long double>(n), static_cast<long double>(h + 1));
    if (h > 4 || lhs < rhs * 0.999L || lhs > rhs * 1.001L)
        return lhs >= rhs;
    return ipow(slack, h) >= ipow(static_cast<Wide>(18) * k, h) * ipow(n, h + 1);
}

} // namespace detail

/**
 * Skeleton of the minimum-degree core with levels 1..h inspected: heavy A_i
 * gives a run with shortest length <= 2i, B_i u C_i at i < h gives one with
 * shortest length <= 2i+2. Levels that certify are checked for the forced
 * growth |L_{i+1}| >= n^(1/h) |L_i|.
 */
inline LengthControlResult length_controlled_search(const Hypergraph& h, std::size_t k, std::size_t height) {
    detail::require_linear3(h);
    if (k == 0 || height == 0)
        throw Error(ErrorKind::InvalidParameters, "k and h must be positive");
    LengthControlResult res;
    auto& rep = res.report;
    const std::size_t n = h.vertex_count();
    rep.n = n;
    rep.k = k;
    rep.h = height;
    rep.edges = h.edge_count();
    const double root_n = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(height));
    rep.threshold = 18.0 * static_cast<double>(k) * static_cast<double>(n) * root_n + 42.0 * static_cast<double>(k * n);
    rep.degree_target = 18.0 * static_cast<double>(k) * root_n + 42.0 * static_cast<double>(k);
    rep.above_threshold = detail::above_growth_threshold(h.edge_count(), n, k, height);

    // peel only when some vertex sits below d(H)/3, sparing a copy of large inputs
    bool peel = false;
    for (Vertex v = 0; v < n && !peel; ++v)
        peel = h.degree(v) * n < h.edge_count();
    Subhypergraph core;
    if (peel) {
        core = min_degree_subgraph(h);
    } else {
        core.vertex_origin.resize(n);
        std::iota(core.vertex_origin.begin(), core.vertex_origin.end(), 0);
        core.edge_origin.resize(h.edge_count());
        std::iota(core.edge_origin.begin(), core.edge_origin.end(), 0);
    }
    const Hypergraph& g = peel ? core.graph : h;
    rep.core_vertices = g.vertex_count();
    rep.core_edges = g.edge_count();
    if (g.edge_count() == 0) {
        rep.outcome = "empty core";
        return res;
    }
    rep.core_min_degree = g.edge_count();
    Vertex root = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        rep.core_min_degree = std::min(rep.core_min_degree, g.degree(v));
        if (g.degree(v) > g.degree(root))
            root = v;
    }
    rep.root = core.vertex_origin[root];

    auto s = build_skeleton(g, root);
    auto cls = classify_levels(g, s);
    rep.height = s.height();
    auto finish = [&](ConsecutiveRun run, const char* where) {
        run = detail::lift_run(std::move(run), core.edge_origin);
        detail::finish_run(h, run, where);
        rep.outcome = "run via " + run.route;
        res.run = std::move(run);
        return res;
    };
    for (std::size_t i = 1; i <= std::min(height, s.height()); ++i)
        if (cls.a(i) > 0 && cls.a(i) >= (k + 2) * s.level_size(i))
            return finish(cycles_from_heavy_a(g, s, cls, i, k), "length control, heavy A");
    for (std::size_t i = 1; i < height && i <= s.height(); ++i) {
        auto out = cycles_or_bound_bc(g, s, cls, i, k);
        if (auto* run = std::get_if<ConsecutiveRun>(&out))
            return finish(std::move(*run), "length control, B and C");
    }

    // every level certified its bound: log the growth it forces
    rep.all_certified = true;
    for (std::size_t i = 1; i <= height; ++i) {
        const std::size_t li = s.level_size(i);
        const bool a_ok = cls.a(i) <= 2 * k * li;
        if (i == height) {
            rep.all_certified = rep.all_certified && a_ok;
            break;
        }
        LevelGrowthEntry e;
        e.level = i;
        e.size = li;
        e.next_size = s.level_size(i + 1);
        e.a = cls.a(i);
        e.bc = cls.b(i) + cls.c(i);
        e.a_certified = a_ok;
        e.bc_certified = e.bc <= 4 * k * (e.size + e.next_size);
        e.ratio = li ? static_cast<double>(e.next_size) / static_cast<double>(li) : 0.0;
        e.grows = li > 0 && detail::ipow(e.next_size, height) >= detail::ipow(li, height) * n;
        rep.all_certified = rep.all_certified && e.a_certified && e.bc_certified;
        rep.levels.push_back(e);
    }
    if (!rep.above_threshold) {
        rep.outcome = "below threshold, no run";
        return res;
    }
    if (!rep.all_certified) {
        rep.outcome = "uncertified level, no run";
        return res;
    }
    for (const auto& e : rep.levels)
        if (!e.grows)
            proof_failure("level " + std::to_string(e.level) + " certifies but grows by " + std::to_string(e.ratio) +
                          " < n^(1/h)");
    proof_failure("forced growth gives |L_h| >= n on " + std::to_string(n) + " vertices");
}

} // namespace berge
