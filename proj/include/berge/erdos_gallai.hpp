#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "berge/error.hpp"
#include "berge/graph.hpp"

namespace berge {

/// Simple path in a 2-graph; length counts edges.
struct GraphPath {
    std::vector<Vertex> vertices;
    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Simple cycle in a 2-graph (closing edge implied); length counts edges.
struct GraphCycle {
    std::vector<Vertex> vertices;
    std::size_t length() const { return vertices.size(); }
};

namespace detail {

/// Vertex mask plus live degrees over a Graph.
struct Induced {
    const Graph* g;
    std::vector<char> alive;
    std::vector<std::size_t> deg;

    explicit Induced(const Graph& graph) : g(&graph), alive(graph.vertex_count(), 1), deg(graph.vertex_count()) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            deg[v] = graph.degree(v);
    }

    void restrict_to(const std::vector<char>& keep) {
        for (Vertex v = 0; v < g->vertex_count(); ++v)
            alive[v] = alive[v] && keep[v];
        for (Vertex v = 0; v < g->vertex_count(); ++v) {
            deg[v] = 0;
            if (alive[v])
                for (Vertex w : g->neighbors(v))
                    deg[v] += alive[w];
        }
    }

    void kill(Vertex v) {
        alive[v] = 0;
        for (Vertex w : g->neighbors(v))
            if (alive[w])
                --deg[w];
    }

    /// Deletes vertices with 2*deg <= m until none remain.
    void peel(std::size_t m) {
        std::vector<Vertex> stack;
        std::vector<char> queued(g->vertex_count(), 0);
        for (Vertex v = 0; v < g->vertex_count(); ++v)
            if (alive[v] && 2 * deg[v] <= m) {
                stack.push_back(v);
                queued[v] = 1;
            }
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            kill(v);
            for (Vertex w : g->neighbors(v))
                if (alive[w] && !queued[w] && 2 * deg[w] <= m) {
                    queued[w] = 1;
                    stack.push_back(w);
                }
        }
    }

    std::size_t vertex_count() const {
        return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
    }

    std::size_t edge_count() const {
        std::size_t s = 0;
        for (Vertex v = 0; v < g->vertex_count(); ++v)
            if (alive[v])
                s += deg[v];
        return s / 2;
    }

    /// Live components as vertex lists, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<std::vector<Vertex>> out;
        std::vector<char> seen(g->vertex_count(), 0);
        for (Vertex s = 0; s < g->vertex_count(); ++s) {
            if (!alive[s] || seen[s])
                continue;
            std::vector<Vertex> comp{s}, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g->neighbors(v))
                    if (alive[w] && !seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::size_t edges_within(const std::vector<Vertex>& vs) const {
        std::size_t s = 0;
        for (Vertex v : vs)
            s += deg[v];
        return s / 2;
    }
};

/// Index i with a ~ path[i+1] and b ~ path[i] (a, b the two ends), if any.
inline std::optional<std::size_t> find_crossing(const Graph& g, const std::vector<Vertex>& path) {
    const std::size_t s = path.size();
    if (s < 2)
        return std::nullopt;
    for (std::size_t i = 0; i + 1 < s; ++i)
        if (g.has_edge(path.front(), path[i + 1]) && g.has_edge(path.back(), path[i]))
            return i;
    return std::nullopt;
}

/// The cycle path[0..i] path[s-1..i+1] built from a crossing at i.
inline std::vector<Vertex> crossing_cycle(const std::vector<Vertex>& path, std::size_t i) {
    std::vector<Vertex> cyc(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = path.size(); j-- > i + 1;)
        cyc.push_back(path[j]);
    return cyc;
}

/**
 * Grows a path inside the live subgraph from `start`: extend at either end
 * while possible; when both ends are stuck and a crossing closes the path
 * into a cycle, reopen it next to an outside neighbour. On return either
 * the path spans its component or the end degrees sum to less than the
 * number of path vertices.
 */
inline std::vector<Vertex> grow_path(const Induced& live, Vertex start) {
    const Graph& g = *live.g;
    std::vector<char> on(g.vertex_count(), 0);
    std::deque<Vertex> path{start};
    on[start] = 1;
    while (true) {
        bool grew = false;
        for (Vertex w : g.neighbors(path.back()))
            if (live.alive[w] && !on[w]) {
                path.push_back(w);
                on[w] = 1;
                grew = true;
                break;
            }
        if (grew)
            continue;
        for (Vertex w : g.neighbors(path.front()))
            if (live.alive[w] && !on[w]) {
                path.push_front(w);
                on[w] = 1;
                grew = true;
                break;
            }
        if (grew)
            continue;
        std::vector<Vertex> p(path.begin(), path.end());
        std::vector<Vertex> cyc;
        if (p.size() >= 3 && g.has_edge(p.front(), p.back()))
            cyc = p;
        else if (auto i = find_crossing(g, p))
            cyc = crossing_cycle(p, *i);
        if (cyc.empty())
            return p;
        // reopen the cycle at a vertex with an outside neighbour
        bool reopened = false;
        for (std::size_t j = 0; j < cyc.size() && !reopened; ++j)
            for (Vertex w : g.neighbors(cyc[j]))
                if (live.alive[w] && !on[w]) {
                    path.clear();
                    for (std::size_t t = 1; t <= cyc.size(); ++t)
                        path.push_back(cyc[(j + t) % cyc.size()]);
                    path.push_back(w);
                    on[w] = 1;
                    reopened = true;
                    break;
                }
        if (!reopened)
            return p;
    }
}

/// Best cycle closable from a path whose end neighbourhoods lie on the path.
inline std::vector<Vertex> close_path(const Graph& g, const std::vector<Vertex>& p) {
    const std::size_t s = p.size();
    if (s >= 3 && g.has_edge(p.front(), p.back()))
        return p;
    if (auto i = find_crossing(g, p))
        return crossing_cycle(p, *i);
    std::vector<std::size_t> pos(g.vertex_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < s; ++i)
        pos[p[i]] = i;
    std::vector<std::size_t> X, Y;  // neighbours of the front / back, by position
    for (Vertex w : g.neighbors(p.front()))
        if (pos[w] != static_cast<std::size_t>(-1))
            X.push_back(pos[w]);
    for (Vertex w : g.neighbors(p.back()))
        if (pos[w] != static_cast<std::size_t>(-1))
            Y.push_back(pos[w]);
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());
    std::vector<Vertex> best;
    if (!X.empty() && X.back() >= 2)
        best.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(X.back()) + 1);
    if (!Y.empty() && Y.front() + 2 < s && s - Y.front() > best.size())
        best.assign(p.begin() + static_cast<std::ptrdiff_t>(Y.front()), p.end());
    // v0..v_i, v_end, v_{end-1}..v_j, back to v0, for i < j with v_i ~ end, v_j ~ front
    std::size_t best_gap = static_cast<std::size_t>(-1), bi = 0, bj = 0;
    for (std::size_t i : Y) {
        auto it = std::upper_bound(X.begin(), X.end(), i);
        if (it != X.end() && *it - i < best_gap) {
            best_gap = *it - i;
            bi = i;
            bj = *it;
        }
    }
    if (best_gap != static_cast<std::size_t>(-1) && s + 1 - best_gap > best.size()) {
        std::vector<Vertex> cyc(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(bi) + 1);
        for (std::size_t j = s; j-- > bj;)
            cyc.push_back(p[j]);
        if (cyc.size() >= 3)
            best = std::move(cyc);
    }
    return best;
}

/// Biconnected blocks of the live subgraph as vertex lists (Hopcroft-Tarjan).
inline std::vector<std::vector<Vertex>> blocks(const Induced& live) {
    const Graph& g = *live.g;
    const std::size_t n = g.vertex_count();
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, none), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<Vertex>> out;
    std::size_t timer = 0;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (!live.alive[root] || disc[root] != none)
            continue;
        std::vector<Frame> stack{{root, kNoVertex, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (!live.alive[w] || w == f.parent)
                    continue;
                if (disc[w] == none) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent == kNoVertex)
                continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                std::vector<Vertex> block;
                while (true) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(a);
                    block.push_back(b);
                    if (a == parent && b == v)
                        break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                out.push_back(std::move(block));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Exhaustive search for a cycle of at least `target` edges in the live subgraph.
inline std::optional<std::vector<Vertex>> exact_long_cycle(const Induced& live, std::size_t target,
                                                           std::uint64_t budget) {
    const Graph& g = *live.g;
    std::vector<char> on(g.vertex_count(), 0);
    std::vector<Vertex> path;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    auto dfs = [&](auto&& self) -> bool {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        Vertex last = path.back();
        if (path.size() >= target && path.size() >= 3 && g.has_edge(last, path.front()))
            return true;
        for (Vertex w : g.neighbors(last)) {
            if (!live.alive[w] || on[w] || w < path.front())
                continue;
            on[w] = 1;
            path.push_back(w);
            if (self(self))
                return true;
            path.pop_back();
            on[w] = 0;
            if (out_of_budget)
                return false;
        }
        return false;
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (!live.alive[s])
            continue;
        path.assign(1, s);
        on[s] = 1;
        bool hit = dfs(dfs);
        on[s] = 0;
        if (hit)
            return path;
        if (out_of_budget)
            return std::nullopt;
    }
    return std::nullopt;
}

/// Any cycle of the live subgraph (DFS back edge), if one exists.
inline std::optional<std::vector<Vertex>> any_cycle(const Induced& live) {
    const Graph& g = *live.g;
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<std::size_t> depth(n, static_cast<std::size_t>(-1));
    for (Vertex root = 0; root < n; ++root) {
        if (!live.alive[root] || depth[root] != static_cast<std::size_t>(-1))
            continue;
        depth[root] = 0;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto nb = g.neighbors(v);
            if (next == nb.size()) {
                stack.pop_back();
                continue;
            }
            Vertex w = nb[next++];
            if (!live.alive[w] || w == parent[v])
                continue;
            if (depth[w] == static_cast<std::size_t>(-1)) {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.emplace_back(w, 0);
            } else if (depth[w] < depth[v]) {
                std::vector<Vertex> cyc;
                for (Vertex x = v; x != w; x = parent[x])
                    cyc.push_back(x);
                cyc.push_back(w);
                return cyc;
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * A path of length at least m+1 in any graph with more than mn/2 edges.
 * Vertices of degree at most m/2 are peeled (density survives), then a path
 * is grown in a dense component of the core by end extension and crossing
 * rotations.
 */
inline GraphPath eg_long_path(const Graph& g, std::size_t m) {
    const std::size_t n = g.vertex_count();
    if (2 * g.edge_count() <= m * n)
        precondition("path bound needs more than mn/2 edges");
    detail::Induced live(g);
    live.peel(m);
    for (const auto& comp : live.components()) {
        if (2 * live.edges_within(comp) <= m * comp.size())
            continue;
        auto p = detail::grow_path(live, comp.front());
        if (p.size() < m + 2)
            proof_failure("path grown in the peeled core is shorter than m+1");
        return GraphPath{std::move(p)};
    }
    proof_failure("peeled core has no component above the path density");
}

/**
 * A cycle of length at least m+1 in any graph with more than m(n-1)/2 edges.
 * Alternates peeling low-degree vertices with descending into a dense block
 * until a 2-connected core remains, then closes grown paths into cycles.
 * An exhaustive search backs up the constructive route. For m <= 2 any
 * cycle is returned.
 */
inline GraphCycle eg_long_cycle(const Graph& g, std::size_t m, std::uint64_t exact_budget = 50'000'000) {
    const std::size_t n = g.vertex_count();
    detail::Induced live(g);
    if (m <= 2) {
        if (auto c = detail::any_cycle(live))
            return GraphCycle{std::move(*c)};
        precondition("graph is a forest");
    }
    if (n == 0 || 2 * g.edge_count() <= m * (n - 1))
        precondition("cycle bound needs more than m(n-1)/2 edges");

    while (true) {
        live.peel(m);
        auto bl = detail::blocks(live);
        const std::vector<Vertex>* dense = nullptr;
        for (const auto& b : bl) {
            std::size_t e = 0;
            std::vector<char> in(n, 0);
            for (Vertex v : b)
                in[v] = 1;
            for (Vertex v : b)
                for (Vertex w : g.neighbors(v))
                    e += (v < w && in[w] && live.alive[w]);
            if (2 * e > m * (b.size() - 1)) {
                dense = &b;
                break;
            }
        }
        if (!dense)
            proof_failure("no block keeps the cycle density");
        if (dense->size() == live.vertex_count())
            break;
        std::vector<char> keep(n, 0);
        for (Vertex v : *dense)
            keep[v] = 1;
        live.restrict_to(keep);
    }

    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v)
        if (live.alive[v])
            core.push_back(v);
    std::vector<Vertex> best;
    const std::size_t tries = std::min<std::size_t>(core.size(), 32);
    for (std::size_t t = 0; t < tries && best.size() < m + 1; ++t) {
        auto p = detail::grow_path(live, core[t * core.size() / tries]);
        auto c = detail::close_path(g, p);
        if (c.size() > best.size())
            best = std::move(c);
    }
    if (best.size() >= m + 1)
        return GraphCycle{std::move(best)};
    if (auto c = detail::exact_long_cycle(live, m + 1, exact_budget))
        return GraphCycle{std::move(*c)};
    proof_failure("no cycle of length m+1 found in the 2-connected core");
}

} // namespace berge
