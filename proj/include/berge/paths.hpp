#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "berge/erdos_gallai.hpp"
#include "berge/error.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

namespace berge {

/// A 2-graph whose edges carry color 1 or 2; color[i] belongs to graph.edges()[i].
struct ColoredGraph {
    Graph graph;
    std::vector<int> color;

    ColoredGraph() = default;
    ColoredGraph(std::size_t n, const std::vector<std::pair<GraphEdge, int>>& colored) {
        std::vector<GraphEdge> es;
        for (auto& [e, c] : colored)
            es.push_back(e);
        graph = Graph(n, es);
        color.assign(graph.edge_count(), 0);
        for (auto& [e, c] : colored) {
            if (c != 1 && c != 2)
                throw Error(ErrorKind::InvalidParameters, "edge colors must be 1 or 2");
            color[index(e.first, e.second)] = c;
        }
    }

    std::size_t index(Vertex a, Vertex b) const {
        auto e = make_edge(a, b);
        auto it = std::lower_bound(graph.edges().begin(), graph.edges().end(), e);
        return static_cast<std::size_t>(it - graph.edges().begin());
    }

    int color_of(Vertex a, Vertex b) const { return color[index(a, b)]; }
};

struct ColoredPath {
    std::vector<Vertex> vertices;
    std::vector<int> colors;  ///< colors[i] is the color of vertices[i]vertices[i+1]
    std::size_t length() const { return colors.size(); }
};

/// Consecutive hyperedges meet in exactly one vertex, all other pairs are disjoint.
struct LinearPathWitness {
    std::vector<EdgeIndex> edges;
    Vertex start = kNoVertex;  ///< endpoint in the first edge
    Vertex end = kNoVertex;    ///< endpoint in the last edge
    std::size_t length() const { return edges.size(); }
};

inline bool is_linear_path(const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
    auto common = [&](EdgeIndex a, EdgeIndex b) {
        auto x = h.edge(a), y = h.edge(b);
        std::size_t c = 0;
        for (Vertex v : x)
            c += std::binary_search(y.begin(), y.end(), v);
        return c;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (common(edges[i], edges[j]) != (j == i + 1 ? 1u : 0u))
                return false;
    return true;
}

/// Endpoint checks: start lies only in the first edge, end only in the last.
inline bool linear_path_endpoints_ok(const Hypergraph& h, const LinearPathWitness& w) {
    if (w.edges.empty())
        return false;
    auto count = [&](Vertex v) {
        std::size_t c = 0;
        for (EdgeIndex e : w.edges)
            c += h.edge_contains(e, v);
        return c;
    };
    return h.edge_contains(w.edges.front(), w.start) && h.edge_contains(w.edges.back(), w.end) &&
           count(w.start) == 1 && count(w.end) == 1 && (w.edges.size() > 1 || w.start != w.end);
}

namespace detail {

/// Vertices of non-zero degree in g.
inline std::vector<Vertex> graph_support(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            out.push_back(v);
    return out;
}

inline bool support_connected(const Graph& g) {
    auto sup = graph_support(g);
    if (sup.empty())
        return false;
    auto comp = g.components();
    return std::all_of(sup.begin(), sup.end(), [&](Vertex v) { return comp[v] == comp[sup.front()]; });
}

inline ColoredPath colored(const ColoredGraph& g, std::vector<Vertex> vs) {
    ColoredPath p{std::move(vs), {}};
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        p.colors.push_back(g.color_of(p.vertices[i], p.vertices[i + 1]));
    return p;
}

/// Extends the tail of a path greedily along edges of color `c`.
inline void extend_tail(const ColoredGraph& g, std::vector<Vertex>& path, int c) {
    std::vector<char> on(g.graph.vertex_count(), 0);
    for (Vertex v : path)
        on[v] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex w : g.graph.neighbors(path.back()))
            if (!on[w] && g.color_of(path.back(), w) == c) {
                on[w] = 1;
                path.push_back(w);
                grew = true;
                break;
            }
    }
}

} // namespace detail

/**
 * A path of length at least p whose first edge has the minor color and
 * whose remaining edges have the main color (reported as colors 2 and 1).
 * The main color defaults to the class with more edges, ties to color 1.
 * Requires G connected on its non-isolated vertices, both colors present
 * and d(G_main) >= p+1 measured over those vertices.
 */
inline ColoredPath special_path(const ColoredGraph& cg, std::size_t p, std::optional<int> main_color = std::nullopt) {
    const Graph& g = cg.graph;
    auto support = detail::graph_support(g);
    const std::size_t n = support.size();
    std::size_t count1 = static_cast<std::size_t>(std::count(cg.color.begin(), cg.color.end(), 1));
    std::size_t count2 = g.edge_count() - count1;
    if (count1 == 0 || count2 == 0)
        precondition("both colors must be present");
    if (!detail::support_connected(g))
        precondition("colored graph is not connected");
    const int main = main_color.value_or(count1 >= count2 ? 1 : 2);
    const int minor = 3 - main;
    const std::size_t main_edges = main == 1 ? count1 : count2;
    // p <= 1 needs only a minor edge, so the density condition is waived there
    if (p >= 2 && 2 * main_edges < (p + 1) * n)
        precondition("main color class is too sparse");

    auto relabel = [&](ColoredPath path) {
        for (int& c : path.colors)
            c = c == main ? 1 : 2;
        return path;
    };

    // the lexicographically least minor edge xy
    GraphEdge xy{kNoVertex, kNoVertex};
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (cg.color[i] == minor) {
            xy = g.edges()[i];
            break;
        }
    const Vertex x = xy.first, y = xy.second;

    if (p <= 2) {
        // a minor edge followed by main edges, found directly
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (cg.color[i] != minor)
                continue;
            auto [a, b] = g.edges()[i];
            for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
                std::vector<Vertex> path{s, t};
                detail::extend_tail(cg, path, main);
                if (path.size() >= p + 1)
                    return relabel(detail::colored(cg, std::move(path)));
            }
        }
        proof_failure("special path: no minor edge continues into the main class");
    }

    // G'_1 = G_main - x, compacted onto support \ {x}
    std::vector<Vertex> local(g.vertex_count(), kNoVertex), origin;
    for (Vertex v : support)
        if (v != x) {
            local[v] = static_cast<Vertex>(origin.size());
            origin.push_back(v);
        }
    std::vector<GraphEdge> main_edges_local;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edges()[i];
        if (cg.color[i] == main && a != x && b != x)
            main_edges_local.emplace_back(local[a], local[b]);
    }
    Graph g1(origin.size(), main_edges_local);
    GraphCycle cyc = eg_long_cycle(g1, p - 1);
    std::vector<Vertex> c;
    for (Vertex v : cyc.vertices)
        c.push_back(origin[v]);
    if (c.size() < p)
        proof_failure("special path: cycle shorter than p");

    // shortest path in G from {x, y} to V(C)
    std::vector<char> on_c(g.vertex_count(), 0);
    for (Vertex v : c)
        on_c[v] = 1;
    std::vector<Vertex> sources{x, y};
    auto [dist, parent] = g.bfs(sources);
    Vertex z = kNoVertex;
    for (Vertex v : c)
        if (dist[v] != static_cast<std::size_t>(-1) && (z == kNoVertex || dist[v] < dist[z] ||
                                                         (dist[v] == dist[z] && v < z)))
            z = v;
    if (z == kNoVertex)
        proof_failure("special path: cycle unreachable from the minor edge");
    std::vector<Vertex> to_z;  // s ... z
    for (Vertex v = z; v != kNoVertex; v = parent[v])
        to_z.push_back(v);
    std::reverse(to_z.begin(), to_z.end());

    // walk around C from z, dropping the edge z z'
    const std::size_t zi = static_cast<std::size_t>(std::find(c.begin(), c.end(), z) - c.begin());
    std::vector<Vertex> around;
    for (std::size_t t = 1; t < c.size(); ++t)
        around.push_back(c[(zi + t) % c.size()]);

    std::size_t last_minor = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i + 1 < to_z.size(); ++i)
        if (cg.color_of(to_z[i], to_z[i + 1]) == minor)
            last_minor = i;

    std::vector<Vertex> path;
    if (last_minor == static_cast<std::size_t>(-1)) {
        path.push_back(to_z.front() == x ? y : x);
        path.insert(path.end(), to_z.begin(), to_z.end());
    } else {
        path.assign(to_z.begin() + static_cast<std::ptrdiff_t>(last_minor), to_z.end());
    }
    path.insert(path.end(), around.begin(), around.end());
    auto out = relabel(detail::colored(cg, std::move(path)));
    if (out.length() < p || out.colors.front() != 2 ||
        std::count(out.colors.begin(), out.colors.end(), 2) != 1)
        proof_failure("special path: assembled path violates the color pattern");
    return out;
}

namespace detail {

/// Multi-source BFS in the shadow of h from X to the first vertex of Y.
inline std::optional<std::vector<Vertex>> shadow_path(const Hypergraph& h, const std::vector<Vertex>& X,
                                                      const std::vector<char>& in_y) {
    const std::size_t n = h.vertex_count();
    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    for (Vertex v : X)
        if (!seen[v]) {
            seen[v] = 1;
            q.push(v);
        }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (in_y[v]) {
            std::vector<Vertex> path;
            for (Vertex w = v; w != kNoVertex; w = parent[w])
                path.push_back(w);
            std::reverse(path.begin(), path.end());
            return path;
        }
        Vertex prev = kNoVertex;
        for (const auto& pe : h.pair_entries(v)) {
            if (pe.other == prev)
                continue;
            prev = pe.other;
            if (!seen[pe.other]) {
                seen[pe.other] = 1;
                parent[pe.other] = v;
                q.push(pe.other);
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Linear path whose first edge meets X and last edge meets Y, lifted from
 * a shortest (X,Y)-path in the shadow. start is in X, end is in Y.
 */
inline LinearPathWitness linear_xy_path(const Hypergraph& h, const std::vector<Vertex>& X,
                                        const std::vector<Vertex>& Y) {
    if (X.empty() || Y.empty())
        precondition("X and Y must be nonempty");
    std::vector<char> in_y(h.vertex_count(), 0);
    for (Vertex v : Y) {
        if (v >= h.vertex_count())
            throw Error(ErrorKind::VertexOutOfRange, "Y vertex out of range");
        in_y[v] = 1;
    }
    for (Vertex v : X) {
        if (v >= h.vertex_count())
            throw Error(ErrorKind::VertexOutOfRange, "X vertex out of range");
        if (in_y[v])
            precondition("X and Y must be disjoint");
    }
    if (!h.is_linear())
        throw Error(ErrorKind::NotLinear, "linear (X,Y)-path needs a linear hypergraph");
    auto sp = detail::shadow_path(h, X, in_y);
    if (!sp)
        throw Error(ErrorKind::Disconnected, "no shadow path from X to Y");
    LinearPathWitness w;
    for (std::size_t i = 0; i + 1 < sp->size(); ++i)
        w.edges.push_back(*h.first_cover((*sp)[i], (*sp)[i + 1]));
    w.start = sp->front();
    w.end = sp->back();
    if (!is_linear_path(h, w.edges))
        proof_failure("lifted shortest shadow path is not a linear path");
    return w;
}

/**
 * Linear path of length at least p whose first edge has the minor color and
 * all other edges the main color (reported as 2 and 1). `color[i]` is the
 * color of edge i. Requires H linear and connected, both colors present and
 * d(H_main) >= r(r-1)(p-1) + 2r over the non-isolated vertices.
 */
inline LinearPathWitness special_linear_path(const Hypergraph& h, const std::vector<int>& color, std::size_t p,
                                             std::optional<int> main_color = std::nullopt) {
    if (!h.is_linear())
        throw Error(ErrorKind::NotLinear, "special linear path needs a linear hypergraph");
    const std::size_t r = h.uniformity().value_or(0);
    if (r < 2)
        precondition("special linear path needs a uniform hypergraph");
    if (color.size() != h.edge_count())
        throw Error(ErrorKind::InvalidParameters, "one color per edge required");
    if (!is_connected(h))
        precondition("hypergraph is not connected");
    auto active = active_vertices(h);
    const std::size_t n = active.size();
    std::size_t count1 = static_cast<std::size_t>(std::count(color.begin(), color.end(), 1));
    std::size_t count2 = h.edge_count() - count1;
    if (count1 == 0 || count2 == 0)
        precondition("both colors must be present");
    const int main = main_color.value_or(count1 >= count2 ? 1 : 2);
    const std::size_t main_count = main == 1 ? count1 : count2;
    // r|H_1|/n >= r(r-1)(p-1) + 2r
    if (main_count < ((r - 1) * (p == 0 ? 0 : p - 1) + 2) * n)
        precondition("main color class is too sparse");

    EdgeIndex hedge = kNoEdge;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        if (color[i] != main) {
            hedge = i;
            break;
        }
    auto hv = h.edge(hedge);
    const Vertex u = hv.front();

    // H' = H_main without the other r-1 vertices of h, then its min-degree core H''
    std::vector<char> banned(h.vertex_count(), 0);
    for (Vertex v : hv)
        if (v != u)
            banned[v] = 1;
    std::vector<EdgeIndex> keep;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        if (color[i] != main)
            continue;
        auto e = h.edge(i);
        if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return banned[v]; }))
            keep.push_back(i);
    }
    std::vector<Vertex> kept_vertices;
    for (Vertex v : active)
        if (!banned[v])
            kept_vertices.push_back(v);
    auto hprime = restrict_edges(h, keep, true, kept_vertices);
    auto core = min_degree_subgraph(hprime.graph);
    std::vector<char> in_core_v(h.vertex_count(), 0), in_core_e(h.edge_count(), 0);
    for (Vertex j = 0; j < core.graph.vertex_count(); ++j)
        if (core.graph.degree(j) > 0)
            in_core_v[hprime.vertex_origin[core.vertex_origin[j]]] = 1;
    for (EdgeIndex e : core.edge_origin)
        in_core_e[hprime.edge_origin[e]] = 1;
    const std::size_t need_deg = (r - 1) * (p == 0 ? 0 : p - 1) + 2;

    // seed good path
    std::vector<EdgeIndex> q;
    Vertex z = kNoVertex;
    if (in_core_v[u]) {
        q = {hedge};
        z = u;
    } else {
        std::vector<Vertex> X(hv.begin(), hv.end()), Y;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (in_core_v[v])
                Y.push_back(v);
        if (Y.empty())
            proof_failure("special linear path: empty min-degree core");
        auto lp = linear_xy_path(h, X, Y);
        std::size_t last_minor = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < lp.edges.size(); ++i)
            if (color[lp.edges[i]] != main)
                last_minor = i;
        if (last_minor == static_cast<std::size_t>(-1)) {
            q.push_back(hedge);
            q.insert(q.end(), lp.edges.begin(), lp.edges.end());
        } else {
            q.assign(lp.edges.begin() + static_cast<std::ptrdiff_t>(last_minor), lp.edges.end());
        }
        z = lp.end;
    }

    // grow along H'' at the endpoint z
    std::vector<char> on(h.vertex_count(), 0);
    for (EdgeIndex e : q)
        for (Vertex v : h.edge(e))
            on[v] = 1;
    while (q.size() < p) {
        EdgeIndex next = kNoEdge;
        std::size_t core_degree = 0;
        for (EdgeIndex e : h.incident(z)) {
            if (!in_core_e[e])
                continue;
            ++core_degree;
            if (next != kNoEdge || e == q.back())
                continue;
            auto ev = h.edge(e);
            if (std::none_of(ev.begin(), ev.end(), [&](Vertex v) { return v != z && on[v]; }))
                next = e;
        }
        if (next == kNoEdge || core_degree < need_deg)
            proof_failure("special linear path: no disjoint core edge at the endpoint");
        q.push_back(next);
        Vertex nz = kNoVertex;
        for (Vertex v : h.edge(next)) {
            if (v != z && nz == kNoVertex)
                nz = v;
            on[v] = 1;
        }
        z = nz;
    }

    LinearPathWitness w{q, kNoVertex, z};
    for (Vertex v : h.edge(q.front())) {
        bool only_first = q.size() == 1 ? v != z : !h.edge_contains(q[1], v);
        if (only_first) {
            w.start = v;
            break;
        }
    }
    if (!is_linear_path(h, w.edges) || !linear_path_endpoints_ok(h, w) || color[w.edges.front()] == main ||
        std::any_of(w.edges.begin() + 1, w.edges.end(), [&](EdgeIndex e) { return color[e] != main; }))
        proof_failure("special linear path: assembled path is malformed");
    return w;
}

struct Ladder {
    Vertex u = kNoVertex;
    std::vector<BergePathWitness> paths;  ///< paths[l-1] has length l, from u into V2
};

/**
 * For a linear 3-partite 3-graph with d(H) >= 3p/2, a vertex u in V1 and
 * extendable paths of every length 1..p from u ending in V2. `part[v]` is
 * 0, 1, 2 for V1, V2, V3.
 */
inline Ladder tripartite_ladder(const Hypergraph& h, const std::vector<int>& part, std::size_t p) {
    if (h.uniformity() != 3u && h.edge_count() > 0)
        throw Error(ErrorKind::NotTripartite, "tripartite ladder needs a 3-graph");
    if (part.size() != h.vertex_count())
        throw Error(ErrorKind::NotTripartite, "partition size mismatch");
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        int seen[3] = {0, 0, 0};
        for (Vertex v : h.edge(i)) {
            if (part[v] < 0 || part[v] > 2)
                throw Error(ErrorKind::NotTripartite, "part index out of range");
            ++seen[part[v]];
        }
        if (seen[0] != 1 || seen[1] != 1 || seen[2] != 1)
            throw Error(ErrorKind::NotTripartite, "edge is not transversal");
    }
    if (!h.is_linear())
        throw Error(ErrorKind::NotLinear, "tripartite ladder needs a linear 3-graph");
    const std::size_t n = active_vertices(h).size();
    if (p == 0 || h.edge_count() == 0)
        precondition("tripartite ladder needs p >= 1 and a nonempty H");
    if (p == 1) {
        // one edge suffices: its V1 vertex to its V2 vertex
        Vertex a = kNoVertex, b = kNoVertex;
        for (Vertex v : h.edge(0)) {
            if (part[v] == 0)
                a = v;
            if (part[v] == 1)
                b = v;
        }
        return Ladder{a, {BergePathWitness{{a, b}, {0}}}};
    }
    if (2 * h.edge_count() < p * n)
        precondition("tripartite ladder needs d(H) >= 3p/2");

    // projection onto V1 u V3, compacted
    std::vector<Vertex> local(h.vertex_count(), kNoVertex), origin;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (part[v] != 1 && h.degree(v) > 0) {
            local[v] = static_cast<Vertex>(origin.size());
            origin.push_back(v);
        }
    std::vector<GraphEdge> ge;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        Vertex a = kNoVertex, b = kNoVertex;
        for (Vertex v : h.edge(i)) {
            if (part[v] == 0)
                a = v;
            if (part[v] == 2)
                b = v;
        }
        ge.emplace_back(local[a], local[b]);
    }
    Graph g(origin.size(), ge);
    auto path = eg_long_path(g, p).vertices;
    if (part[origin[path.front()]] != 0)
        path.erase(path.begin());
    if (path.size() < p + 1)
        proof_failure("tripartite ladder: projected path too short");

    Ladder out;
    out.u = origin[path.front()];
    for (std::size_t l = 1; l <= p; ++l) {
        BergePathWitness w;
        for (std::size_t i = 0; i < l; ++i) {
            w.spine.push_back(origin[path[i]]);
            w.edges.push_back(*h.first_cover(origin[path[i]], origin[path[i + 1]]));
        }
        Vertex last = kNoVertex;
        for (Vertex v : h.edge(w.edges.back()))
            if (part[v] == 1)
                last = v;
        w.spine.push_back(last);
        if (!verify_path(h, w))
            proof_failure("tripartite ladder: path does not extend");
        out.paths.push_back(std::move(w));
    }
    return out;
}

} // namespace berge
