#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "berge/erdos_gallai.hpp"
#include "berge/error.hpp"
#include "berge/graph.hpp"
#include "berge/paths.hpp"
#include "berge/skeleton.hpp"

namespace berge {

/// k graph cycles whose lengths are consecutive even numbers.
struct EvenCycleRun {
    std::size_t k = 0;
    std::vector<GraphCycle> cycles;  ///< sorted by length, step 2
    std::size_t shortest_bound = 0;  ///< twice the height of the BFS tree used
};

inline bool verify_even_run(const Graph& g, const EvenCycleRun& run) {
    if (run.k == 0 || run.cycles.size() != run.k)
        return false;
    for (std::size_t j = 0; j < run.cycles.size(); ++j) {
        const auto& c = run.cycles[j].vertices;
        if (!is_graph_cycle(g, c) || c.size() % 2 != 0)
            return false;
        if (j > 0 && c.size() != run.cycles[j - 1].vertices.size() + 2)
            return false;
    }
    return run.cycles.front().length() <= run.shortest_bound;
}

namespace detail {

// x ... y closed by the tree paths from r* (y may sit one level below the path's level)
inline GraphCycle close_in_tree(const std::vector<Vertex>& parent, const AncestorColoring& f,
                                const std::vector<Vertex>& mid) {
    auto X = f.path_from_root(parent, mid.front());
    auto Y = f.path_from_root(parent, mid.back());
    GraphCycle c;
    c.vertices = X;
    c.vertices.insert(c.vertices.end(), mid.begin() + 1, mid.end());
    for (std::size_t j = Y.size() - 1; j-- > 1;)
        c.vertices.push_back(Y[j]);
    return c;
}

} // namespace detail

/**
 * Bipartite G with d(G) >= 6k: a BFS tree from a maximum-degree vertex of
 * the densest component, then per level pair (L_i, L_{i+1}) and per
 * component F of the edges between them, either a long special path over
 * the monochromatic edges of the ancestor coloring or a long path over the
 * others. Every level failing forces d < 8k in that component, so for
 * 6k <= d < 8k the result may be empty.
 */
inline std::optional<EvenCycleRun> consecutive_even_cycles(const Graph& g, std::size_t k) {
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    if (!g.bipartition())
        precondition("graph is not bipartite");
    const std::size_t n = g.vertex_count();
    std::size_t active = 0;
    for (Vertex v = 0; v < n; ++v)
        active += g.degree(v) > 0;
    if (g.edge_count() == 0 || 2 * g.edge_count() < 6 * k * active)
        precondition("average degree below 6k");

    // densest component, then its maximum-degree vertex
    auto comp = g.components();
    std::vector<std::size_t> ce, cv;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            continue;
        if (comp[v] >= cv.size()) {
            cv.resize(comp[v] + 1, 0);
            ce.resize(comp[v] + 1, 0);
        }
        ++cv[comp[v]];
        ce[comp[v]] += g.degree(v);
    }
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < cv.size(); ++c)
        if (cv[c] > 0 && (best == static_cast<std::size_t>(-1) || ce[c] * cv[best] > ce[best] * cv[c]))
            best = c;
    Vertex root = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
        if (comp[v] == best && g.degree(v) > 0 && (root == kNoVertex || g.degree(v) > g.degree(root)))
            root = v;

    std::array<Vertex, 1> src{root};
    auto [level, parent] = g.bfs(src);
    std::size_t height = 0;
    for (Vertex v = 0; v < n; ++v)
        if (level[v] != kNoLevel)
            height = std::max(height, level[v]);

    auto attempt = [&](std::size_t i, const std::vector<GraphEdge>& fe) -> std::optional<EvenCycleRun> {
        std::vector<Vertex> vs;
        for (auto [a, b] : fe) {
            vs.push_back(a);
            vs.push_back(b);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return level[v] == i; }) < 2)
            return std::nullopt;
        AncestorColoring f;
        try {
            f = ancestor_frame(parent, level, vs);
        } catch (const Error& e) {
            proof_failure(std::string("ancestor frame of a level component: ") + e.what());
        }
        std::vector<GraphEdge> mono, rest;
        for (auto e : fe)
            (f.color[e.first] == f.color[e.second] ? mono : rest).push_back(e);

        EvenCycleRun run;
        run.k = k;
        run.shortest_bound = 2 * height;
        if (2 * mono.size() >= (2 * k + 1) * vs.size() && !rest.empty()) {
            std::vector<std::pair<GraphEdge, int>> colored;
            for (auto e : mono)
                colored.push_back({e, 1});
            for (auto e : rest)
                colored.push_back({e, 2});
            auto sp = special_path(ColoredGraph(n, colored), 2 * k, 1);
            const auto& v = sp.vertices;
            // u in L_i: stop at L_i vertices v_2, v_4, ...; else at v_1, v_3, ...
            const std::size_t first = level[v[0]] == i ? 2 : 1;
            for (std::size_t l = first; l < first + 2 * k; l += 2) {
                std::vector<Vertex> mid(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l) + 1);
                run.cycles.push_back(detail::close_in_tree(parent, f, mid));
            }
        } else {
            auto lg = detail::local_graph(n, rest);
            if (rest.empty() || 2 * rest.size() <= (2 * k - 1) * lg.graph.vertex_count())
                return std::nullopt;
            auto p = eg_long_path(lg.graph, 2 * k - 1);
            std::vector<Vertex> z;
            for (Vertex v : p.vertices)
                z.push_back(lg.origin[v]);
            if (level[z[0]] != i)
                z.erase(z.begin());
            // odd prefixes end in L_{i+1} with the opposite color
            for (std::size_t l = 1; l < 2 * k; l += 2) {
                std::vector<Vertex> mid(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(l) + 1);
                run.cycles.push_back(detail::close_in_tree(parent, f, mid));
            }
        }
        std::sort(run.cycles.begin(), run.cycles.end(),
                  [](const auto& a, const auto& b) { return a.length() < b.length(); });
        if (!verify_even_run(g, run))
            proof_failure("assembled even cycles do not verify at level " + std::to_string(i));
        return run;
    };

    for (std::size_t i = 1; i < height; ++i) {
        std::vector<GraphEdge> between;
        for (const auto& e : g.edges())
            if (comp[e.first] == best) {
                auto a = level[e.first], b = level[e.second];
                if (std::min(a, b) == i && std::max(a, b) == i + 1)
                    between.push_back(e);
            }
        if (between.empty())
            continue;
        auto lg = detail::local_graph(n, between);
        auto fc = lg.graph.components();
        std::vector<std::vector<GraphEdge>> parts;
        for (auto [a, b] : lg.graph.edges()) {
            auto c = fc[a];
            if (c >= parts.size())
                parts.resize(c + 1);
            parts[c].push_back({lg.origin[a], lg.origin[b]});
        }
        for (const auto& fe : parts)
            if (!fe.empty())
                if (auto run = attempt(i, fe))
                    return run;
    }
    if (ce[best] >= 8 * k * cv[best])
        proof_failure("no level of the BFS tree yields a run although d >= 8k");
    return std::nullopt;
}

} // namespace berge
