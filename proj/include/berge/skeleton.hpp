#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

inline constexpr std::size_t kNoLevel = static_cast<std::size_t>(-1);

struct Attachment {
    Vertex vertex;
    std::size_t level;
    EdgeIndex via;  ///< kNoEdge for the root
};

/**
 * Maximal extendable skeleton: a BFS-like tree in the shadow whose tree
 * edges u-v map injectively to hyperedges psi(uv) containing both ends.
 */
struct Skeleton {
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;          ///< kNoVertex for the root and for non-tree vertices
    std::vector<EdgeIndex> psi;          ///< hyperedge of the tree edge parent[v]-v
    std::vector<std::size_t> level;      ///< kNoLevel outside the tree
    std::vector<std::vector<Vertex>> levels;
    std::vector<Attachment> log;         ///< attachment order
    std::vector<char> tree_edge;         ///< per hyperedge: is it some psi(uv)

    bool in_tree(Vertex v) const { return level[v] != kNoLevel; }
    std::size_t height() const { return levels.empty() ? 0 : levels.size() - 1; }
    std::size_t size() const { return log.size(); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (const auto& a : log)
            out.push_back(a.vertex);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t level_size(std::size_t i) const { return i < levels.size() ? levels[i].size() : 0; }
};

/**
 * Modified breadth-first search from `root`: the queue head u takes its
 * unprocessed incident edges in index order; an edge with a vertex outside
 * the tree attaches the smallest such vertex through it, otherwise it is
 * only marked processed.
 */
inline Skeleton build_skeleton(const Hypergraph& h, Vertex root) {
    const std::size_t n = h.vertex_count();
    if (root >= n)
        throw Error(ErrorKind::VertexOutOfRange, "skeleton root out of range");
    Skeleton s;
    s.root = root;
    s.parent.assign(n, kNoVertex);
    s.psi.assign(n, kNoEdge);
    s.level.assign(n, kNoLevel);
    s.tree_edge.assign(h.edge_count(), 0);
    std::vector<char> processed(h.edge_count(), 0);

    s.level[root] = 0;
    s.levels.push_back({root});
    s.log.push_back({root, 0, kNoEdge});
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (EdgeIndex e : h.incident(u)) {
            if (processed[e])
                continue;
            processed[e] = 1;
            Vertex fresh = kNoVertex;
            for (Vertex v : h.edge(e))
                if (!s.in_tree(v)) {
                    fresh = v;  // edges are sorted, so this is the smallest
                    break;
                }
            if (fresh == kNoVertex)
                continue;
            const std::size_t lv = s.level[u] + 1;
            s.level[fresh] = lv;
            s.parent[fresh] = u;
            s.psi[fresh] = e;
            s.tree_edge[e] = 1;
            if (s.levels.size() <= lv)
                s.levels.emplace_back();
            s.levels[lv].push_back(fresh);
            s.log.push_back({fresh, lv, e});
            queue.push_back(fresh);
        }
    }
    for (auto& l : s.levels)
        std::sort(l.begin(), l.end());
    return s;
}

/// A_i, B_i, C_i over the non-tree hyperedges meeting the tree, indexed by level.
struct LevelEdgeClasses {
    std::vector<std::vector<EdgeIndex>> A, B, C;
    std::vector<EdgeIndex> residual;

    std::size_t a(std::size_t i) const { return i < A.size() ? A[i].size() : 0; }
    std::size_t b(std::size_t i) const { return i < B.size() ? B[i].size() : 0; }
    std::size_t c(std::size_t i) const { return i < C.size() ? C[i].size() : 0; }
};

/**
 * Classifies every non-tree hyperedge that meets V(T): B_i if inside L_i,
 * C_i if two vertices in L_i and one in L_{i+1}, A_i if one in L_{i-1} and
 * two in L_i. Anything else is a classification failure.
 */
inline LevelEdgeClasses classify_levels(const Hypergraph& h, const Skeleton& s) {
    if (h.uniformity() != 3u && h.edge_count() > 0)
        precondition("level classification needs a 3-graph");
    LevelEdgeClasses out;
    const std::size_t levels = s.levels.size() + 1;
    out.A.resize(levels);
    out.B.resize(levels);
    out.C.resize(levels);
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        if (s.tree_edge[e])
            continue;
        auto ev = h.edge(e);
        if (std::none_of(ev.begin(), ev.end(), [&](Vertex v) { return s.in_tree(v); }))
            continue;
        if (std::any_of(ev.begin(), ev.end(), [&](Vertex v) { return !s.in_tree(v); })) {
            out.residual.push_back(e);
            continue;
        }
        std::size_t lo = kNoLevel;
        for (Vertex v : ev)
            lo = std::min(lo, s.level[v]);
        std::size_t at_lo = 0, at_next = 0;
        for (Vertex v : ev) {
            at_lo += s.level[v] == lo;
            at_next += s.level[v] == lo + 1;
        }
        if (at_lo == 3)
            out.B[lo].push_back(e);
        else if (at_lo == 2 && at_next == 1)
            out.C[lo].push_back(e);
        else if (at_lo == 1 && at_next == 2)
            out.A[lo + 1].push_back(e);
        else
            out.residual.push_back(e);
    }
    if (!out.residual.empty())
        throw Error(ErrorKind::ClassificationFailure,
                    std::to_string(out.residual.size()) + " hyperedge(s) fit no level class");
    return out;
}

/**
 * Frame below the deepest common ancestor r* of a vertex set W in a rooted
 * tree: T* is the union of the tree paths from r* to W, and each vertex of
 * T* below r* gets color 1 if it descends from the smallest child s_1 of r*
 * in T*, else color 2.
 */
struct AncestorColoring {
    Vertex r_star = kNoVertex;
    std::size_t r_level = 0;
    std::vector<Vertex> t_star;  ///< sorted vertices of T*
    std::vector<int> color;      ///< per vertex: 0 outside T* \ {r*}, else 1 or 2
    Vertex s1 = kNoVertex;

    /// Tree path from r* down to v (inclusive at both ends).
    std::vector<Vertex> path_from_root(const std::vector<Vertex>& parent, Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex x = v; x != r_star; x = parent[x])
            out.push_back(x);
        out.push_back(r_star);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

/// Generic version over parent/level arrays; level == kNoLevel marks vertices outside the tree.
inline AncestorColoring ancestor_frame(const std::vector<Vertex>& parent, const std::vector<std::size_t>& level,
                                       const std::vector<Vertex>& W) {
    for (Vertex w : W)
        if (w >= level.size() || level[w] == kNoLevel)
            throw Error(ErrorKind::WNotInTree, "vertex " + std::to_string(w) + " is not in the tree");
    if (W.size() < 2)
        throw Error(ErrorKind::DegenerateFrame, "frame needs at least two vertices");
    auto lca = [&](Vertex a, Vertex b) {
        while (level[a] > level[b])
            a = parent[a];
        while (level[b] > level[a])
            b = parent[b];
        while (a != b) {
            a = parent[a];
            b = parent[b];
        }
        return a;
    };
    Vertex r = W.front();
    for (Vertex w : W)
        r = lca(r, w);

    AncestorColoring out;
    out.r_star = r;
    out.r_level = level[r];
    out.color.assign(level.size(), 0);
    std::vector<Vertex> top(level.size(), kNoVertex);
    std::vector<Vertex> children;
    std::vector<Vertex> tstar{r};
    std::vector<char> seen(level.size(), 0);
    seen[r] = 1;
    for (Vertex w : W) {
        std::vector<Vertex> chain;
        Vertex x = w;
        while (!seen[x]) {
            chain.push_back(x);
            x = parent[x];
        }
        Vertex t = x == r ? (chain.empty() ? kNoVertex : chain.back()) : top[x];
        if (x == r && !chain.empty())
            children.push_back(chain.back());
        for (Vertex c : chain) {
            seen[c] = 1;
            top[c] = t;
            tstar.push_back(c);
        }
    }
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    if (children.size() < 2)
        throw Error(ErrorKind::DegenerateFrame, "W lies on a single branch below its common ancestor");
    out.s1 = children.front();
    std::sort(tstar.begin(), tstar.end());
    out.t_star = tstar;
    for (Vertex v : tstar)
        if (v != r)
            out.color[v] = top[v] == out.s1 ? 1 : 2;
    return out;
}

inline AncestorColoring ancestor_frame(const Skeleton& s, const std::vector<Vertex>& W) {
    return ancestor_frame(s.parent, s.level, W);
}

} // namespace berge
