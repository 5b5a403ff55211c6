#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "berge/consecutive.hpp"
#include "berge/error.hpp"
#include "berge/even_cycles.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

namespace berge {

// ---------------------------------------------------------------------------
// Delta-system split

/// Sub-hypergraph in which every (r-1)-set inside an edge has co-degree >= k+1.
struct DenseCore {
    Subhypergraph core;
};

/// Edges placed by the greedy, each with its marked (r-1)-subset. Marks are
/// pairwise distinct and no edge placed later contains an earlier mark.
struct SunflowerSlice {
    std::vector<EdgeIndex> edges;
    std::vector<std::vector<Vertex>> marks;
};

using DeltaSplit = std::variant<DenseCore, SunflowerSlice>;

/**
 * Greedy: while some remaining edge has an (r-1)-subset of co-degree <= k
 * in the remainder, take the least such (edge, subset), place the edge in
 * the slice marked by that subset, and delete every remaining edge
 * containing the subset.
 */
inline DeltaSplit delta_system_split(const Hypergraph& h, std::size_t k) {
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    const auto r = h.uniformity();
    if (h.edge_count() == 0)
        return SunflowerSlice{};
    if (!r || *r < 2)
        precondition("delta-system split needs a uniform hypergraph with r >= 2");
    const Shadow sh = shadow(h, *r - 1);
    // per edge, its (r-1)-subsets as shadow ids in lexicographic order
    std::vector<std::vector<std::size_t>> subsets(h.edge_count());
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        detail::for_each_subset(h.edge(e), *r - 1, [&](std::span<const Vertex> s) {
            std::vector<Vertex> key(s.begin(), s.end());
            auto it = std::lower_bound(sh.edges.begin(), sh.edges.end(), key);
            subsets[e].push_back(static_cast<std::size_t>(it - sh.edges.begin()));
        });
    std::vector<std::size_t> cod(sh.edges.size());
    for (std::size_t s = 0; s < cod.size(); ++s)
        cod[s] = sh.covers[s].size();
    std::vector<char> alive(h.edge_count(), 1);
    std::set<std::pair<EdgeIndex, std::size_t>> queue;  // (edge, rank of subset)
    auto enqueue = [&](std::size_t s) {
        for (EdgeIndex f : sh.covers[s])
            if (alive[f]) {
                auto rank = static_cast<std::size_t>(std::find(subsets[f].begin(), subsets[f].end(), s) - subsets[f].begin());
                queue.insert({f, rank});
            }
    };
    for (std::size_t s = 0; s < cod.size(); ++s)
        if (cod[s] <= k)
            enqueue(s);

    SunflowerSlice slice;
    while (!queue.empty()) {
        auto [e, rank] = *queue.begin();
        queue.erase(queue.begin());
        if (!alive[e])
            continue;
        const std::size_t mark = subsets[e][rank];
        slice.edges.push_back(e);
        slice.marks.push_back(sh.edges[mark]);
        for (EdgeIndex f : sh.covers[mark]) {
            if (!alive[f])
                continue;
            alive[f] = 0;
            for (std::size_t s : subsets[f])
                if (--cod[s] == k)
                    enqueue(s);
        }
    }
    std::vector<EdgeIndex> rest;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (alive[e])
            rest.push_back(e);
    if (!rest.empty())
        return DenseCore{restrict_edges(h, rest)};
    return slice;
}

/// Minimum co-degree over the (r-1)-sets that lie in some edge (0 for an empty graph).
inline std::size_t min_codegree(const Hypergraph& h) {
    const auto r = h.uniformity();
    if (h.edge_count() == 0)
        return 0;
    if (!r || *r < 2)
        precondition("co-degree needs a uniform hypergraph with r >= 2");
    auto sh = shadow(h, *r - 1);
    std::size_t best = h.edge_count();
    for (const auto& c : sh.covers)
        best = std::min(best, c.size());
    return best;
}

// ---------------------------------------------------------------------------
// Tight paths

/// Vertex sequence v_1..v_{m+r-1} whose r-windows e_1..e_m are edges of H.
struct TightPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeIndex> edges;  ///< edges[i] = index of {v_{i+1}, ..., v_{i+r}}
    std::size_t length() const { return edges.size(); }
};

inline TightPath make_tight_path(const Hypergraph& h, std::vector<Vertex> vertices) {
    const auto r = h.uniformity();
    if (!r || vertices.size() < *r)
        precondition("tight path needs at least r vertices of a uniform hypergraph");
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        precondition("tight path vertices must be distinct");
    TightPath p;
    p.vertices = std::move(vertices);
    for (std::size_t i = 0; i + *r <= p.vertices.size(); ++i) {
        std::vector<Vertex> w(p.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                              p.vertices.begin() + static_cast<std::ptrdiff_t>(i + *r));
        std::sort(w.begin(), w.end());
        auto e = h.find_edge(w);
        if (!e)
            precondition("window " + std::to_string(i + 1) + " of the tight path is not an edge");
        p.edges.push_back(*e);
    }
    return p;
}

/**
 * A tight path of length m+1 (m >= 3) holds Berge cycles of every length
 * 3..m; the cycle of length t-1 zigzags over even then odd positions.
 */
inline std::vector<BergeCycleWitness> tight_path_cycles(const Hypergraph& h, const TightPath& p) {
    if (p.length() < 4)
        precondition("tight path must have length at least 4");
    if (!h.uniformity() || *h.uniformity() < 3)
        precondition("tight path cycles need r >= 3");
    const std::size_t m = p.length() - 1;
    auto v = [&](std::size_t pos) { return p.vertices[pos - 1]; };
    auto f = [&](std::size_t j) { return p.edges[j - 1]; };
    std::vector<BergeCycleWitness> out;
    for (std::size_t t = 4; t <= m + 1; ++t) {
        std::vector<std::size_t> spine, edges;
        if (t % 2 == 0) {
            for (std::size_t a = 2; a <= t; a += 2)
                spine.push_back(a);
            for (std::size_t a = t - 1; a >= 3; a -= 2)
                spine.push_back(a);
            for (std::size_t a = 2; a + 2 <= t; a += 2)
                edges.push_back(a);
            for (std::size_t a = t - 1; a >= 3; a -= 2)
                edges.push_back(a);
        } else {
            for (std::size_t a = 2; a <= t - 1; a += 2)
                spine.push_back(a);
            for (std::size_t a = t; a >= 3; a -= 2)
                spine.push_back(a);
            for (std::size_t a = 2; a + 3 <= t; a += 2)
                edges.push_back(a);
            edges.push_back(t - 1);
            for (std::size_t a = t - 2; a >= 3; a -= 2)
                edges.push_back(a);
        }
        edges.push_back(1);
        BergeCycleWitness w;
        for (auto a : spine)
            w.spine.push_back(v(a));
        for (auto j : edges)
            w.edges.push_back(f(j));
        if (auto ok = verify_cycle(h, w); !ok)
            proof_failure("tight path cycle of length " + std::to_string(t - 1) + " does not verify");
        out.push_back(std::move(w));
    }
    return out;
}

/**
 * delta_{r-1}(H) >= k+1: Berge cycles of every length 3..k+2, from a tight
 * path that cannot be extended at its end.
 */
inline std::vector<BergeCycleWitness> min_codegree_cycles(const Hypergraph& h, std::size_t k) {
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    const auto r = h.uniformity();
    if (h.edge_count() == 0 || !r || *r < 3)
        precondition("needs a nonempty r-graph with r >= 3");
    const Shadow sh = shadow(h, *r - 1);
    for (const auto& c : sh.covers)
        if (c.size() < k + 1)
            precondition("minimum (r-1)-co-degree below k+1");
    auto covers_of = [&](std::vector<Vertex> s) -> const std::vector<EdgeIndex>& {
        std::sort(s.begin(), s.end());
        auto it = std::lower_bound(sh.edges.begin(), sh.edges.end(), s);
        return sh.covers[static_cast<std::size_t>(it - sh.edges.begin())];
    };

    // grow a tight path from edge 0 until its last r-1 vertices admit no new vertex
    std::vector<Vertex> vs(h.edge(0).begin(), h.edge(0).end());
    std::vector<char> on(h.vertex_count(), 0);
    for (Vertex x : vs)
        on[x] = 1;
    while (true) {
        std::vector<Vertex> last(vs.end() - static_cast<std::ptrdiff_t>(*r - 1), vs.end());
        Vertex next = kNoVertex;
        for (EdgeIndex f : covers_of(last))
            for (Vertex x : h.edge(f))
                if (!on[x]) {
                    next = x;
                    break;
                }
        if (next == kNoVertex)
            break;
        vs.push_back(next);
        on[next] = 1;
    }
    const TightPath p = make_tight_path(h, vs);
    const std::size_t m = p.length();
    if (m < k + 1)
        proof_failure("maximal tight path shorter than k+1");

    std::vector<BergeCycleWitness> out;
    if (m >= 4)
        for (auto& w : tight_path_cycles(h, p))
            if (w.length() <= k + 2)
                out.push_back(std::move(w));
    if (m - 1 < k + 2) {
        // m is k+1 or k+2; S = {v_{m+1}, ..., v_{m+r-1}}
        auto v = [&](std::size_t pos) { return p.vertices[pos - 1]; };
        auto e = [&](std::size_t j) { return p.edges[j - 1]; };
        std::vector<Vertex> S(p.vertices.begin() + static_cast<std::ptrdiff_t>(m), p.vertices.end());
        auto f = [&](std::size_t j) -> std::optional<EdgeIndex> {
            auto key = S;
            key.push_back(v(j));
            std::sort(key.begin(), key.end());
            return h.find_edge(key);
        };
        // spine positions `keep` of 1..top, path edges e_j for each kept j but the last,
        // closed by S + v_first
        auto build = [&](const std::vector<std::size_t>& keep) {
            BergeCycleWitness w;
            for (auto a : keep)
                w.spine.push_back(v(a));
            for (std::size_t j = 0; j + 1 < keep.size(); ++j)
                w.edges.push_back(e(keep[j]));
            auto close = f(keep.front());
            if (!close)
                proof_failure("closing edge S + v_" + std::to_string(keep.front()) + " is missing");
            w.edges.push_back(*close);
            if (auto ok = verify_cycle(h, w); !ok)
                proof_failure("co-degree cycle of length " + std::to_string(w.length()) + " does not verify");
            return w;
        };
        std::vector<std::vector<std::size_t>> spines;
        if (m == k + 1) {
            std::vector<std::size_t> a, b;
            for (std::size_t j = 1; j <= k + 2; ++j)
                a.push_back(j);
            for (std::size_t j = 2; j <= k + 2; ++j)
                b.push_back(j);
            spines = {a, b};
        } else {
            std::size_t miss = k + 2;
            for (std::size_t j = 1; j <= k + 2; ++j)
                if (!f(j)) {
                    miss = j;
                    break;
                }
            std::vector<std::size_t> a;
            for (std::size_t j = 1; j <= k + 3; ++j)
                if (j != miss)
                    a.push_back(j);
            std::vector<std::size_t> b(a.begin() + 1, a.end());
            spines = {a, b};
        }
        for (const auto& sp : spines)
            if (sp.size() >= 3 && sp.size() <= k + 2)
                out.push_back(build(sp));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.length() < b.length(); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.length() == b.length(); }),
              out.end());
    if (out.size() != k || out.front().length() != 3)
        proof_failure("co-degree cycles do not cover every length 3..k+2");
    return out;
}

// ---------------------------------------------------------------------------
// General 3-graphs and r-graphs

/// What the general finders did, for reports and audits.
struct General3Report {
    bool dense_core = false;
    std::size_t slice_size = 0;
    std::size_t g1_size = 0;           ///< slice edges with a high non-marked pair
    std::size_t g2_size = 0;
    std::size_t good = 0;              ///< good edges of the derandomized selection
    std::size_t good_required = 0;     ///< ceil(4|G_1|/27)
    std::size_t conflict_max_degree = 0;
    std::size_t independent = 0;      ///< size of the linear sub-3-graph of G_2
    std::string route;
};

namespace detail {

// Max-cut bipartite subgraph: greedy placement, then single-vertex flips.
inline std::vector<GraphEdge> max_cut_edges(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::size_t same[2] = {0, 0};
        for (Vertex u : g.neighbors(v))
            if (u < v)
                ++same[side[u]];
        side[v] = same[0] > same[1] ? 1 : 0;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            std::size_t same = 0;
            for (Vertex u : g.neighbors(v))
                same += side[u] == side[v];
            if (2 * same > g.degree(v)) {
                side[v] ^= 1;
                changed = true;
            }
        }
    }
    std::vector<GraphEdge> out;
    for (auto e : g.edges())
        if (side[e.first] != side[e.second])
            out.push_back(e);
    return out;
}

// Case 1: marked pairs of the good edges form a graph; even cycles there lift
// to Berge cycles of length l and, through a high pair, l+1.
inline std::optional<ConsecutiveRun> general3_case1(const Hypergraph& h, std::size_t k,
                                                    const std::vector<EdgeIndex>& g1,
                                                    const std::map<std::pair<Vertex, Vertex>, std::size_t>& cod,
                                                    const std::map<EdgeIndex, GraphEdge>& mark_of,
                                                    General3Report& rep) {
    const std::size_t n = h.vertex_count();
    // conditional expectations over "v in S" (probability 2/3), in thirds
    std::vector<int> state(n, -1);  // -1 unset, 1 in, 0 out
    std::vector<std::vector<EdgeIndex>> at(n);
    for (EdgeIndex e : g1)
        for (Vertex v : h.edge(e))
            at[v].push_back(e);
    auto p_in = [&](Vertex v) { return state[v] < 0 ? 2 : state[v] * 3; };
    auto p_out = [&](Vertex v) { return state[v] < 0 ? 1 : (1 - state[v]) * 3; };
    auto weight = [&](EdgeIndex e) {
        auto [a, b] = mark_of.at(e);
        Vertex c = third_vertex(h, e, a, b);
        return p_in(a) * p_in(b) * p_out(c);
    };
    for (Vertex v = 0; v < n; ++v) {
        if (at[v].empty())
            continue;
        long long w_in = 0, w_out = 0;
        state[v] = 1;
        for (EdgeIndex e : at[v])
            w_in += weight(e);
        state[v] = 0;
        for (EdgeIndex e : at[v])
            w_out += weight(e);
        state[v] = w_in >= w_out ? 1 : 0;
    }
    std::vector<GraphEdge> pairs;
    std::map<GraphEdge, EdgeIndex> owner;
    for (EdgeIndex e : g1)
        if (weight(e) == 27) {
            pairs.push_back(mark_of.at(e));
            owner[mark_of.at(e)] = e;
        }
    rep.good = pairs.size();
    rep.good_required = (4 * g1.size() + 26) / 27;
    if (rep.good < rep.good_required)
        proof_failure("derandomized selection falls below 4/27 of G_1");
    if (pairs.empty())
        return std::nullopt;

    auto lg = local_graph(n, pairs);
    auto cut = max_cut_edges(lg.graph);
    Graph bip(lg.graph.vertex_count(), cut);
    const std::size_t half = (k + 1) / 2;
    std::size_t active = 0;
    for (Vertex v = 0; v < bip.vertex_count(); ++v)
        active += bip.degree(v) > 0;
    if (bip.edge_count() == 0 || 2 * bip.edge_count() < 6 * half * active)
        return std::nullopt;
    auto even = consecutive_even_cycles(bip, half);
    if (!even)
        return std::nullopt;

    ConsecutiveRun run;
    run.k = k;
    run.shortest_bound = even->shortest_bound;
    run.route = "general3-even";
    for (const auto& gc : even->cycles) {
        std::vector<Vertex> u;
        for (Vertex x : gc.vertices)
            u.push_back(lg.origin[x]);
        const std::size_t l = u.size();
        BergeCycleWitness base;
        base.spine = u;
        for (std::size_t j = 0; j < l; ++j)
            base.edges.push_back(owner.at(make_edge(u[j], u[(j + 1) % l])));
        if (!verify_cycle(h, base))
            proof_failure("lifted even cycle does not verify");
        run.cycles.push_back(base);

        // detour u_j -> w -> u_{j+1} through the third vertex w of a cycle edge
        std::optional<BergeCycleWitness> longer;
        for (std::size_t j = 0; j < l && !longer; ++j) {
            const Vertex a = u[j], b = u[(j + 1) % l];
            const EdgeIndex e = base.edges[j];
            const Vertex w = third_vertex(h, e, a, b);
            for (Vertex pivot : {a, b}) {
                auto key = std::minmax(pivot, w);
                auto it = cod.find({key.first, key.second});
                if (it == cod.end() || it->second < 3)
                    continue;
                for (EdgeIndex g : h.pair_cover(pivot, w)) {
                    if (g == e)
                        continue;
                    BergeCycleWitness c;
                    c.spine = u;
                    c.spine.insert(c.spine.begin() + static_cast<std::ptrdiff_t>(j) + 1, w);
                    c.edges = base.edges;
                    c.edges[j] = pivot == a ? g : e;
                    c.edges.insert(c.edges.begin() + static_cast<std::ptrdiff_t>(j) + 1, pivot == a ? e : g);
                    if (verify_cycle(h, c)) {
                        longer = std::move(c);
                        break;
                    }
                }
                if (longer)
                    break;
            }
        }
        if (!longer)
            proof_failure("no high pair extends an even cycle by one");
        run.cycles.push_back(std::move(*longer));
    }
    std::sort(run.cycles.begin(), run.cycles.end(),
              [](const auto& a, const auto& b) { return a.length() < b.length(); });
    run.cycles.resize(k);
    finish_run(h, run, "general 3-graph, even cycle route");
    return run;
}

} // namespace detail

/**
 * Any 3-graph: dense core gives lengths 3..k+2; otherwise the slice is split
 * by high pairs into an even-cycle route and a linear route through the
 * skeleton sweep.
 */
inline std::optional<ConsecutiveRun> find_general3(const Hypergraph& h, std::size_t k,
                                                   General3Report* report = nullptr) {
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    if (h.edge_count() > 0 && h.uniformity() != 3u)
        precondition("needs a 3-graph");
    General3Report local;
    General3Report& rep = report ? *report : local;
    rep = {};
    if (h.edge_count() == 0)
        return std::nullopt;

    auto split = delta_system_split(h, k);
    if (auto* dc = std::get_if<DenseCore>(&split)) {
        rep.dense_core = true;
        rep.route = "codegree";
        ConsecutiveRun run;
        run.k = k;
        run.shortest_bound = 3;
        run.route = "codegree";
        run.cycles = min_codegree_cycles(dc->core.graph, k);
        run = detail::lift_run(std::move(run), dc->core.edge_origin);
        detail::finish_run(h, run, "dense core");
        return run;
    }
    const auto& slice = std::get<SunflowerSlice>(split);
    rep.slice_size = slice.edges.size();
    std::map<std::pair<Vertex, Vertex>, std::size_t> cod;
    std::map<EdgeIndex, GraphEdge> mark_of;
    for (std::size_t j = 0; j < slice.edges.size(); ++j) {
        auto ev = h.edge(slice.edges[j]);
        ++cod[{ev[0], ev[1]}];
        ++cod[{ev[0], ev[2]}];
        ++cod[{ev[1], ev[2]}];
        mark_of[slice.edges[j]] = make_edge(slice.marks[j][0], slice.marks[j][1]);
    }
    std::vector<EdgeIndex> g1, g2;
    for (EdgeIndex e : slice.edges) {
        auto ev = h.edge(e);
        auto mk = mark_of[e];
        bool high = false;
        for (auto [a, b] : {std::pair{ev[0], ev[1]}, std::pair{ev[0], ev[2]}, std::pair{ev[1], ev[2]}})
            if (std::pair{a, b} != mk && cod[{a, b}] >= 3)
                high = true;
        (high ? g1 : g2).push_back(e);
    }
    rep.g1_size = g1.size();
    rep.g2_size = g2.size();

    if (!g1.empty())
        if (auto run = detail::general3_case1(h, k, g1, cod, mark_of, rep)) {
            rep.route = run->route;
            return run;
        }

    if (g2.empty())
        return std::nullopt;
    // conflict graph on G_2: two edges adjacent when they share a pair
    std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> by_pair;
    for (std::size_t j = 0; j < g2.size(); ++j) {
        auto ev = h.edge(g2[j]);
        by_pair[{ev[0], ev[1]}].push_back(j);
        by_pair[{ev[0], ev[2]}].push_back(j);
        by_pair[{ev[1], ev[2]}].push_back(j);
    }
    std::vector<std::vector<std::size_t>> adj(g2.size());
    for (auto& [pr, list] : by_pair)
        for (std::size_t a : list)
            for (std::size_t b : list)
                if (a != b)
                    adj[a].push_back(b);
    std::vector<char> blocked(g2.size(), 0);
    std::vector<EdgeIndex> linear;
    for (std::size_t j = 0; j < g2.size(); ++j) {
        std::sort(adj[j].begin(), adj[j].end());
        adj[j].erase(std::unique(adj[j].begin(), adj[j].end()), adj[j].end());
        rep.conflict_max_degree = std::max(rep.conflict_max_degree, adj[j].size());
    }
    for (std::size_t j = 0; j < g2.size(); ++j) {
        if (blocked[j])
            continue;
        linear.push_back(g2[j]);
        for (std::size_t b : adj[j])
            blocked[b] = 1;
    }
    rep.independent = linear.size();
    auto sub = restrict_edges(h, linear);
    auto run = skeleton_sweep(sub.graph, k);
    if (!run)
        return std::nullopt;
    run = detail::lift_run(std::move(*run), sub.edge_origin);
    run->route = "general3-linear/" + run->route;
    rep.route = run->route;
    detail::finish_run(h, *run, "general 3-graph, linear route");
    return run;
}

/**
 * r-graphs, r >= 3: a dense core gives lengths 3..k+2; otherwise the marks
 * of the slice form an extendable (r-1)-graph, handled recursively and
 * lifted back to the source edges.
 */
inline std::optional<ConsecutiveRun> find_general_r(const Hypergraph& h, std::size_t k, std::size_t* depth = nullptr) {
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    if (h.edge_count() == 0)
        return std::nullopt;
    const auto r = h.uniformity();
    if (!r || *r < 3)
        precondition("needs a uniform hypergraph with r >= 3");
    if (depth)
        ++*depth;
    if (*r == 3)
        return find_general3(h, k);
    auto split = delta_system_split(h, k);
    if (auto* dc = std::get_if<DenseCore>(&split)) {
        ConsecutiveRun run;
        run.k = k;
        run.shortest_bound = 3;
        run.route = "codegree";
        run.cycles = min_codegree_cycles(dc->core.graph, k);
        run = detail::lift_run(std::move(run), dc->core.edge_origin);
        detail::finish_run(h, run, "dense core");
        return run;
    }
    const auto& slice = std::get<SunflowerSlice>(split);
    Hypergraph g(h.vertex_count(), slice.marks, *r - 1);
    std::vector<EdgeIndex> origin(g.edge_count());
    for (std::size_t j = 0; j < slice.marks.size(); ++j)
        origin[*g.find_edge(slice.marks[j])] = slice.edges[j];
    auto run = find_general_r(g, k, depth);
    if (!run)
        return std::nullopt;
    run = detail::lift_run(std::move(*run), origin);
    run->route = "lift/" + run->route;
    detail::finish_run(h, *run, "lift from the marked (r-1)-graph");
    return run;
}

} // namespace berge
