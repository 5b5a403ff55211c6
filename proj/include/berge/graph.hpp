#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

using GraphEdge = std::pair<Vertex, Vertex>;

inline GraphEdge make_edge(Vertex a, Vertex b) { return a < b ? GraphEdge{a, b} : GraphEdge{b, a}; }

/// Simple undirected 2-graph on 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::vector<GraphEdge> edges) : n_(n), adj_(n) {
        for (auto& e : edges) {
            if (e.first == e.second)
                throw Error(ErrorKind::InvalidEdge, "loop in 2-graph");
            if (e.first >= n || e.second >= n)
                throw Error(ErrorKind::VertexOutOfRange, "2-graph vertex out of range");
            e = make_edge(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (auto [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end());
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a >= n_ || b >= n_)
            return false;
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    /// Component id per vertex; components numbered by smallest vertex.
    std::vector<std::size_t> components() const {
        std::vector<std::size_t> comp(n_, static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] != static_cast<std::size_t>(-1))
                continue;
            comp[s] = next;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj_[v])
                    if (comp[w] == static_cast<std::size_t>(-1)) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return comp;
    }

    /// 0/1 side per vertex if bipartite.
    std::optional<std::vector<int>> bipartition() const {
        std::vector<int> side(n_, -1);
        for (Vertex s = 0; s < n_; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj_[v]) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    } else if (side[w] == side[v]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return side;
    }

    /// BFS distances and parents from a set of sources (kNoVertex when unreached).
    std::pair<std::vector<std::size_t>, std::vector<Vertex>> bfs(std::span<const Vertex> sources) const {
        constexpr auto inf = static_cast<std::size_t>(-1);
        std::vector<std::size_t> dist(n_, inf);
        std::vector<Vertex> parent(n_, kNoVertex);
        std::queue<Vertex> q;
        for (Vertex s : sources)
            if (dist[s] == inf) {
                dist[s] = 0;
                q.push(s);
            }
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adj_[v])
                if (dist[w] == inf) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                }
        }
        return {dist, parent};
    }

    /// Average degree 2e/n as an exact rational.
    Rational average_degree() const {
        return {static_cast<std::int64_t>(2 * edges_.size()), static_cast<std::int64_t>(n_ == 0 ? 1 : n_)};
    }

private:
    std::size_t n_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// The 2-shadow of H as a Graph.
inline Graph shadow_graph(const Hypergraph& h) {
    std::vector<GraphEdge> edges;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                edges.emplace_back(e[a], e[b]);
    }
    return Graph(h.vertex_count(), std::move(edges));
}

/// Checks that `path` is a simple path in g.
inline bool is_graph_path(const Graph& g, std::span<const Vertex> path) {
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            return false;
    return true;
}

/// Checks that `cycle` (closing edge implied) is a simple cycle of length >= 3 in g.
inline bool is_graph_cycle(const Graph& g, std::span<const Vertex> cycle) {
    return cycle.size() >= 3 && is_graph_path(g, cycle) && g.has_edge(cycle.back(), cycle.front());
}

namespace detail {

/// Compact graph on the endpoints of `pairs`, with the local -> global vertex map.
struct LocalGraph {
    Graph graph;
    std::vector<Vertex> origin;
};

inline LocalGraph local_graph(std::size_t n, const std::vector<GraphEdge>& pairs) {
    std::vector<Vertex> local(n, kNoVertex);
    LocalGraph out;
    for (auto [a, b] : pairs)
        for (Vertex v : {a, b})
            if (local[v] == kNoVertex) {
                local[v] = 0;
                out.origin.push_back(v);
            }
    std::sort(out.origin.begin(), out.origin.end());
    for (std::size_t j = 0; j < out.origin.size(); ++j)
        local[out.origin[j]] = static_cast<Vertex>(j);
    std::vector<GraphEdge> es;
    for (auto [a, b] : pairs)
        es.push_back(make_edge(local[a], local[b]));
    out.graph = Graph(out.origin.size(), es);
    return out;
}

} // namespace detail

} // namespace berge
