#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berge/erdos_gallai.hpp"
#include "berge/error.hpp"
#include "berge/hypergraph.hpp"
#include "berge/paths.hpp"
#include "berge/skeleton.hpp"
#include "berge/witness.hpp"

namespace berge {

/// k Berge cycles of consecutive lengths a, a+1, ..., a+k-1.
struct ConsecutiveRun {
    std::size_t k = 0;
    std::vector<BergeCycleWitness> cycles;  ///< sorted by length
    std::size_t shortest_bound = 0;
    std::string route;                      ///< which construction produced it

    std::size_t shortest() const { return cycles.empty() ? 0 : cycles.front().length(); }
    std::vector<std::size_t> lengths() const {
        std::vector<std::size_t> out;
        for (const auto& c : cycles)
            out.push_back(c.length());
        return out;
    }
};

/// All witnesses verify, there are k of them, lengths are consecutive and a <= shortest_bound.
inline bool verify_run(const Hypergraph& h, const ConsecutiveRun& run) {
    if (run.k == 0 || run.cycles.size() != run.k)
        return false;
    for (std::size_t j = 0; j < run.cycles.size(); ++j) {
        if (!verify_cycle(h, run.cycles[j]))
            return false;
        if (j > 0 && run.cycles[j].length() != run.cycles[j - 1].length() + 1)
            return false;
    }
    return run.shortest() <= run.shortest_bound;
}

/// Level-i bound for B_i and C_i, stored doubled to stay integral.
struct BCBoundCertificate {
    std::size_t level = 0;
    std::size_t counted = 0;      ///< |B_i| + |C_i|
    std::size_t twice_bound = 0;  ///< (7k+2)|L_i| + (5k+4)|L_{i+1}|
    bool holds() const { return 2 * counted <= twice_bound; }
};

namespace detail {

inline void finish_run(const Hypergraph& h, ConsecutiveRun& run, const std::string& step) {
    std::sort(run.cycles.begin(), run.cycles.end(),
              [](const auto& a, const auto& b) { return a.length() < b.length(); });
    for (const auto& c : run.cycles)
        if (auto v = verify_cycle(h, c); !v)
            proof_failure(step + ": assembled cycle does not verify (" + std::string(to_string(v.fault)) + ")");
    if (!verify_run(h, run))
        proof_failure(step + ": lengths are not " + std::to_string(run.k) + " consecutive values within the bound");
}

/**
 * Closes a path x ... y between two differently colored vertices of a frame
 * with the tree paths from r* down to x and to y. Tree pairs use psi.
 */
inline BergeCycleWitness close_through_tree(const Skeleton& s, const AncestorColoring& f,
                                            const std::vector<Vertex>& mid, const std::vector<EdgeIndex>& mid_edges) {
    auto X = f.path_from_root(s.parent, mid.front());
    auto Y = f.path_from_root(s.parent, mid.back());
    BergeCycleWitness w;
    w.spine = X;
    for (std::size_t j = 1; j < X.size(); ++j)
        w.edges.push_back(s.psi[X[j]]);
    w.spine.insert(w.spine.end(), mid.begin() + 1, mid.end());
    w.edges.insert(w.edges.end(), mid_edges.begin(), mid_edges.end());
    for (std::size_t j = Y.size() - 1; j >= 1; --j) {
        if (j > 1)
            w.spine.push_back(Y[j - 1]);
        w.edges.push_back(s.psi[Y[j]]);
    }
    return w;
}

inline void require_linear3(const Hypergraph& h) {
    if (h.edge_count() > 0 && h.uniformity() != 3u)
        precondition("needs a 3-graph");
    if (!h.is_linear())
        throw Error(ErrorKind::NotLinear, "needs a linear hypergraph");
}

inline Vertex third_vertex(const Hypergraph& h, EdgeIndex e, Vertex a, Vertex b) {
    for (Vertex v : h.edge(e))
        if (v != a && v != b)
            return v;
    return kNoVertex;
}

} // namespace detail

/**
 * Heavy A_i: k cycles of consecutive lengths starting at 2(i - i') <= 2i,
 * where i' is the level of the common ancestor of the co-neighbours.
 */
inline ConsecutiveRun cycles_from_heavy_a(const Hypergraph& h, const Skeleton& s, const LevelEdgeClasses& cls,
                                          std::size_t i, std::size_t k) {
    detail::require_linear3(h);
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    const std::size_t ni = s.level_size(i);
    if (i == 0 || cls.a(i) == 0 || cls.a(i) < (k + 2) * ni)
        precondition("|A_i| >= (k+2)|L_i| fails at level " + std::to_string(i));

    // projection onto L_i; linearity makes pairs distinct
    std::vector<GraphEdge> pairs;
    std::vector<EdgeIndex> pair_edge;
    std::vector<Vertex> co;
    for (EdgeIndex e : cls.A[i]) {
        std::vector<Vertex> in_i;
        Vertex w = kNoVertex;
        for (Vertex v : h.edge(e))
            (s.level[v] == i ? in_i.push_back(v) : void(w = v));
        pairs.push_back(make_edge(in_i[0], in_i[1]));
        pair_edge.push_back(e);
        co.push_back(w);
    }
    std::vector<std::vector<Vertex>> as_edges;
    for (auto [a, b] : pairs)
        as_edges.push_back({a, b});
    Hypergraph proj(h.vertex_count(), as_edges, 2);
    // proj sorts its edges; map back by lookup
    std::vector<std::size_t> slot(pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        std::array<Vertex, 2> key{pairs[j].first, pairs[j].second};
        slot[*proj.find_edge(key)] = j;
    }

    std::optional<std::vector<EdgeIndex>> chosen;
    for (auto& comp : edge_components(proj)) {
        std::vector<Vertex> vs;
        for (EdgeIndex pe : comp)
            for (Vertex v : proj.edge(pe))
                vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (comp.size() >= (k + 2) * vs.size()) {
            chosen = comp;
            break;
        }
    }
    if (!chosen)
        proof_failure("no component of the A_i projection reaches average degree 2k+4");

    std::vector<Vertex> S;
    for (EdgeIndex pe : *chosen)
        S.push_back(co[slot[pe]]);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.size() < 2)
        proof_failure("co-neighbour set of the dense component is a single vertex");
    AncestorColoring f;
    try {
        f = ancestor_frame(s, S);
    } catch (const Error& e) {
        proof_failure(std::string("ancestor frame of the co-neighbours: ") + e.what());
    }

    std::vector<std::pair<GraphEdge, int>> colored_pairs;
    for (EdgeIndex pe : *chosen) {
        auto j = slot[pe];
        colored_pairs.push_back({pairs[j], f.color[co[j]]});
    }
    ColoredGraph cg(h.vertex_count(), colored_pairs);
    ColoredPath sp = special_path(cg, k + 1);
    if (sp.length() < k + 1)
        proof_failure("special path shorter than k+1");

    auto pair_slot = [&](Vertex a, Vertex b) {
        std::array<Vertex, 2> key{std::min(a, b), std::max(a, b)};
        return slot[*proj.find_edge(key)];
    };
    const auto& v = sp.vertices;  // u, v_1, ..., v_{k+1}
    const auto first = pair_slot(v[0], v[1]);
    const Vertex x = co[first];

    ConsecutiveRun run;
    run.k = k;
    run.shortest_bound = 2 * i;
    run.route = "A";
    for (std::size_t l = 1; l <= k; ++l) {
        const auto last = pair_slot(v[l], v[l + 1]);
        std::vector<Vertex> mid{x};
        std::vector<EdgeIndex> mid_edges{pair_edge[first]};
        for (std::size_t j = 1; j <= l; ++j) {
            mid.push_back(v[j]);
            if (j < l)
                mid_edges.push_back(pair_edge[pair_slot(v[j], v[j + 1])]);
        }
        mid.push_back(co[last]);
        mid_edges.push_back(pair_edge[last]);
        if (f.color[x] == f.color[co[last]])
            proof_failure("ends of the special path have co-neighbours of one color");
        run.cycles.push_back(detail::close_through_tree(s, f, mid, mid_edges));
    }
    detail::finish_run(h, run, "heavy A_i");
    return run;
}

inline ConsecutiveRun cycles_from_heavy_a(const Hypergraph& h, const Skeleton& s, std::size_t i, std::size_t k) {
    return cycles_from_heavy_a(h, s, classify_levels(h, s), i, k);
}

using BCOutcome = std::variant<ConsecutiveRun, BCBoundCertificate>;

namespace detail {

// One component of B_i u C_i; returns a run when one of the dense routes applies.
inline std::optional<ConsecutiveRun> bc_component(const Hypergraph& h, const Skeleton& s, std::size_t i, std::size_t k,
                                                  const std::vector<EdgeIndex>& comp) {
    std::vector<Vertex> vs;
    for (EdgeIndex e : comp)
        for (Vertex v : h.edge(e))
            vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    AncestorColoring f;
    try {
        f = ancestor_frame(s, vs);
    } catch (const Error& e) {
        proof_failure(std::string("ancestor frame of a B_i/C_i component: ") + e.what());
    }
    std::size_t ni = 0, nj = 0;
    for (Vertex v : vs)
        (s.level[v] == i ? ni : nj) += 1;

    auto mono = [&](EdgeIndex e) {
        auto ev = h.edge(e);
        return std::all_of(ev.begin(), ev.end(), [&](Vertex v) { return f.color[v] == f.color[ev[0]]; });
    };
    std::vector<EdgeIndex> M, N;
    for (EdgeIndex e : comp)
        (mono(e) ? M : N).push_back(e);

    ConsecutiveRun run;
    run.k = k;
    run.shortest_bound = 2 * i + 2;

    // monochromatic mass: special linear path, first edge outside M
    if (M.size() > (2 * k + 2) * (ni + nj)) {
        auto sub = restrict_edges(h, comp, true);
        std::vector<int> color(sub.graph.edge_count());
        for (EdgeIndex j = 0; j < sub.graph.edge_count(); ++j)
            color[j] = mono(sub.edge_origin[j]) ? 1 : 2;
        auto lp = special_linear_path(sub.graph, color, k + 1, 1);
        std::vector<EdgeIndex> pe;
        for (EdgeIndex j : lp.edges)
            pe.push_back(sub.edge_origin[j]);
        if (pe.size() < k + 1)
            proof_failure("special linear path shorter than k+1");
        auto meet = [&](EdgeIndex a, EdgeIndex b) {
            for (Vertex v : h.edge(a))
                if (h.edge_contains(b, v))
                    return v;
            proof_failure("consecutive path edges are disjoint");
        };
        std::vector<Vertex> joint;  // joint[j] = e_{j+1} meet e_{j+2}
        for (std::size_t j = 0; j + 1 < pe.size(); ++j)
            joint.push_back(meet(pe[j], pe[j + 1]));
        const int alpha = f.color[joint[0]];
        Vertex x = kNoVertex;
        for (Vertex v : h.edge(pe[0]))
            if (v != joint[0] && f.color[v] != alpha) {
                x = v;
                break;
            }
        if (x == kNoVertex)
            proof_failure("first edge of the special linear path is monochromatic");
        const bool x_low = s.level[x] == i + 1;
        // endpoint of the length-l prefix inside L_i, away from the previous joint
        auto tail = [&](std::size_t l) {
            if (l == 1)
                return joint[0];
            for (Vertex v : h.edge(pe[l - 1]))
                if (v != joint[l - 2] && s.level[v] == i)
                    return v;
            proof_failure("path edge has no free vertex in L_i");
        };
        const std::size_t lo = x_low ? 1 : 2;
        for (std::size_t l = lo; l < lo + k; ++l) {
            std::vector<Vertex> mid{x};
            for (std::size_t j = 0; j + 1 < l; ++j)
                mid.push_back(joint[j]);
            mid.push_back(tail(l));
            std::vector<EdgeIndex> me(pe.begin(), pe.begin() + static_cast<std::ptrdiff_t>(l));
            run.cycles.push_back(close_through_tree(s, f, mid, me));
        }
        run.route = x_low ? "BC-mono-low" : "BC-mono";
        return run;
    }

    // pair classes of the non-monochromatic edges
    std::vector<EdgeIndex> N1, N2, N3;
    for (EdgeIndex e : N) {
        std::size_t c1 = 0, c2 = 0;
        for (Vertex v : h.edge(e))
            if (s.level[v] == i)
                (f.color[v] == 1 ? c1 : c2) += 1;
        if (c1 == 2)
            N1.push_back(e);
        else if (c2 == 2)
            N2.push_back(e);
        else if (c1 == 1 && c2 == 1)
            N3.push_back(e);
        else
            proof_failure("non-monochromatic edge fits no pair class");
    }

    for (int c : {1, 2}) {
        const auto& Nc = c == 1 ? N1 : N2;
        if (Nc.empty())
            continue;
        std::vector<GraphEdge> pairs;
        std::vector<EdgeIndex> owner;
        for (EdgeIndex e : Nc) {
            std::vector<Vertex> in;
            for (Vertex v : h.edge(e))
                if (s.level[v] == i && f.color[v] == c)
                    in.push_back(v);
            pairs.push_back(make_edge(in[0], in[1]));
            owner.push_back(e);
        }
        auto lg = local_graph(h.vertex_count(), pairs);
        if (2 * lg.graph.edge_count() <= (k - 1) * lg.graph.vertex_count())
            continue;
        auto gp = eg_long_path(lg.graph, k - 1);
        std::vector<Vertex> y;
        for (Vertex v : gp.vertices)
            y.push_back(lg.origin[v]);
        auto edge_of = [&](Vertex a, Vertex b) {
            auto key = make_edge(a, b);
            return owner[static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), key) - pairs.begin())];
        };
        const EdgeIndex e0 = edge_of(y[0], y[1]);
        const Vertex x = third_vertex(h, e0, y[0], y[1]);
        for (std::size_t l = 1; l <= k; ++l) {
            std::vector<Vertex> mid{x};
            std::vector<EdgeIndex> me{e0};
            for (std::size_t j = 1; j <= l; ++j) {
                mid.push_back(y[j]);
                if (j < l)
                    me.push_back(edge_of(y[j], y[j + 1]));
            }
            run.cycles.push_back(close_through_tree(s, f, mid, me));
        }
        run.route = "BC-pairs";
        return run;
    }

    if (!N3.empty()) {
        auto sub = restrict_edges(h, N3, true);
        if (2 * sub.graph.edge_count() > k * sub.vertex_origin.size()) {
            std::vector<int> part(sub.vertex_origin.size());
            for (std::size_t j = 0; j < part.size(); ++j) {
                Vertex v = sub.vertex_origin[j];
                part[j] = s.level[v] == i ? f.color[v] - 1 : 2;
            }
            auto ladder = tripartite_ladder(sub.graph, part, k);
            for (std::size_t l = 1; l <= k; ++l) {
                const auto& pw = ladder.paths[l - 1];
                std::vector<Vertex> mid;
                std::vector<EdgeIndex> me;
                for (Vertex v : pw.spine)
                    mid.push_back(sub.vertex_origin[v]);
                for (EdgeIndex e : pw.edges)
                    me.push_back(sub.edge_origin[e]);
                run.cycles.push_back(close_through_tree(s, f, mid, me));
            }
            run.route = "BC-ladder";
            return run;
        }
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Either k cycles of consecutive lengths starting at most 2i+2 built from
 * B_i u C_i, or the certificate that |B_i u C_i| is small.
 */
inline BCOutcome cycles_or_bound_bc(const Hypergraph& h, const Skeleton& s, const LevelEdgeClasses& cls,
                                    std::size_t i, std::size_t k) {
    detail::require_linear3(h);
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    std::vector<EdgeIndex> bc;
    if (i < cls.B.size())
        bc.insert(bc.end(), cls.B[i].begin(), cls.B[i].end());
    if (i < cls.C.size())
        bc.insert(bc.end(), cls.C[i].begin(), cls.C[i].end());
    if (!bc.empty()) {
        auto sub = restrict_edges(h, bc);
        for (auto& local : edge_components(sub.graph)) {
            std::vector<EdgeIndex> comp;
            for (EdgeIndex e : local)
                comp.push_back(sub.edge_origin[e]);
            if (auto run = detail::bc_component(h, s, i, k, comp)) {
                detail::finish_run(h, *run, "B_i/C_i route " + run->route);
                return *run;
            }
        }
    }
    BCBoundCertificate cert;
    cert.level = i;
    cert.counted = bc.size();
    cert.twice_bound = (7 * k + 2) * s.level_size(i) + (5 * k + 4) * s.level_size(i + 1);
    if (!cert.holds())
        proof_failure("B_i/C_i count exceeds its bound although no route applies");
    return cert;
}

inline BCOutcome cycles_or_bound_bc(const Hypergraph& h, const Skeleton& s, std::size_t i, std::size_t k) {
    return cycles_or_bound_bc(h, s, classify_levels(h, s), i, k);
}

namespace detail {

inline ConsecutiveRun lift_run(ConsecutiveRun run, const std::vector<EdgeIndex>& edge_origin) {
    for (auto& c : run.cycles)
        for (auto& e : c.edges)
            e = edge_origin[e];
    return run;
}

} // namespace detail

/// Per-iteration trace of the sweep.
struct SweepStep {
    Vertex root = kNoVertex;
    std::size_t tree_size = 0;
    std::size_t height = 0;
    std::size_t incident = 0;  ///< edges meeting V(T), deleted when no route applies
};

/**
 * Builds skeletons and tries the level routes; when every level certifies,
 * deletes V(T) with its incident edges and repeats. Returns the first run,
 * or nothing once the edges are used up.
 */
inline std::optional<ConsecutiveRun> skeleton_sweep(const Hypergraph& h, std::size_t k,
                                                    std::vector<SweepStep>* trace = nullptr) {
    detail::require_linear3(h);
    if (k == 0)
        throw Error(ErrorKind::InvalidParameters, "k must be positive");
    std::vector<char> alive(h.edge_count(), 1);
    while (true) {
        std::vector<EdgeIndex> keep;
        for (EdgeIndex e = 0; e < h.edge_count(); ++e)
            if (alive[e])
                keep.push_back(e);
        if (keep.empty())
            return std::nullopt;
        auto sub = restrict_edges(h, keep);
        const Hypergraph& g = sub.graph;

        // root: smallest vertex of the densest component
        Vertex root = kNoVertex;
        std::size_t best_e = 0, best_v = 1;
        for (auto& comp : edge_components(g)) {
            std::vector<Vertex> vs;
            for (EdgeIndex e : comp)
                for (Vertex v : g.edge(e))
                    vs.push_back(v);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            if (root == kNoVertex || comp.size() * best_v > best_e * vs.size()) {
                root = vs.front();
                best_e = comp.size();
                best_v = vs.size();
            }
        }

        auto s = build_skeleton(g, root);
        auto cls = classify_levels(g, s);
        for (std::size_t i = 1; i <= s.height(); ++i)
            if (cls.a(i) > 0 && cls.a(i) >= (k + 2) * s.level_size(i))
                return detail::lift_run(cycles_from_heavy_a(g, s, cls, i, k), sub.edge_origin);
        for (std::size_t i = 1; i <= s.height(); ++i) {
            auto out = cycles_or_bound_bc(g, s, cls, i, k);
            if (auto* run = std::get_if<ConsecutiveRun>(&out))
                return detail::lift_run(std::move(*run), sub.edge_origin);
        }

        SweepStep step{root, s.size(), s.height(), 0};
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            auto ev = g.edge(e);
            if (std::any_of(ev.begin(), ev.end(), [&](Vertex v) { return s.in_tree(v); })) {
                ++step.incident;
                alive[sub.edge_origin[e]] = 0;
            }
        }
        if (trace)
            trace->push_back(step);
        if (step.incident >= 7 * (k + 1) * s.size())
            proof_failure("every level certifies but " + std::to_string(step.incident) +
                          " edges meet a skeleton on " + std::to_string(s.size()) + " vertices");
    }
}

/**
 * Linear r-graphs, r >= 3: keeps the lexicographically least 3-subset of
 * each edge, sweeps the resulting linear 3-graph and maps the witness edges
 * back to their source edges.
 */
inline std::optional<ConsecutiveRun> find_linear_r(const Hypergraph& h, std::size_t k) {
    if (!h.is_linear())
        throw Error(ErrorKind::NotLinear, "needs a linear hypergraph");
    if (h.edge_count() == 0)
        return std::nullopt;
    const auto r = h.uniformity();
    if (!r || *r < 3)
        precondition("needs a uniform hypergraph with edges of size at least 3");
    if (*r == 3)
        return skeleton_sweep(h, k);
    std::vector<std::vector<Vertex>> triples;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        auto ev = h.edge(e);
        triples.push_back({ev[0], ev[1], ev[2]});
    }
    Hypergraph t(h.vertex_count(), triples, 3);
    std::vector<EdgeIndex> origin(h.edge_count());
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        origin[*t.find_edge(triples[e])] = e;
    auto run = skeleton_sweep(t, k);
    if (!run)
        return std::nullopt;
    return detail::lift_run(std::move(*run), origin);
}

} // namespace berge
