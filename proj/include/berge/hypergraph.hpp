#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/error.hpp"

namespace berge {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr EdgeIndex kNoEdge = static_cast<EdgeIndex>(-1);

/// Exact non-negative rational; all density thresholds are compared with it.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

/// Neighbour record in the pair index: `other` shares hyperedge `edge` with the owner.
struct PairEntry {
    Vertex other;
    EdgeIndex edge;
    friend bool operator<(const PairEntry& a, const PairEntry& b) {
        return a.other != b.other ? a.other < b.other : a.edge < b.edge;
    }
};

/**
 * Simple hypergraph over the dense vertex ids 0..n-1.
 *
 * Edges are stored sorted internally and the edge list is kept in
 * lexicographic order, so edge indices are canonical for a given edge set.
 * Storage is flat (CSR) so that Steiner systems with millions of triples fit.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges,
               std::optional<std::size_t> declared_uniformity = std::nullopt)
        : n_(n) {
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (e.size() < 2)
                throw Error(ErrorKind::InvalidEdge, "edge with fewer than two vertices");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw Error(ErrorKind::InvalidEdge, "edge repeats a vertex");
            if (e.back() >= n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "vertex " + std::to_string(e.back()) + " >= n=" + std::to_string(n));
            if (declared_uniformity && e.size() != *declared_uniformity)
                throw Error(ErrorKind::EdgeSizeMismatch,
                            "edge of size " + std::to_string(e.size()) + " in a " +
                                std::to_string(*declared_uniformity) + "-graph");
        }
        std::sort(edges.begin(), edges.end());
        if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
            throw Error(ErrorKind::DuplicateEdge, "edge {" + join(*it) + "} listed twice");

        if (declared_uniformity) {
            uniformity_ = declared_uniformity;
        } else if (!edges.empty()) {
            const auto r = edges.front().size();
            if (std::all_of(edges.begin(), edges.end(), [r](const auto& e) { return e.size() == r; }))
                uniformity_ = r;
        }
        build(edges);
    }

    /// r-uniform hypergraph from m*r consecutive vertex ids, without per-edge allocations.
    static Hypergraph from_flat(std::size_t n, std::size_t r, std::vector<Vertex> flat) {
        if (r < 2 || flat.size() % r != 0)
            throw Error(ErrorKind::InvalidEdge, "flat edge list must hold r >= 2 ids per edge");
        const std::size_t m = flat.size() / r;
        for (std::size_t i = 0; i < m; ++i) {
            auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * r);
            std::sort(first, first + static_cast<std::ptrdiff_t>(r));
            if (std::adjacent_find(first, first + static_cast<std::ptrdiff_t>(r)) != first + static_cast<std::ptrdiff_t>(r))
                throw Error(ErrorKind::InvalidEdge, "edge repeats a vertex");
            if (first[static_cast<std::ptrdiff_t>(r) - 1] >= n)
                throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(first[static_cast<std::ptrdiff_t>(r) - 1]) +
                                                             " >= n=" + std::to_string(n));
        }
        std::vector<std::uint32_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        auto at = [&](std::uint32_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(std::size_t{i} * r); };
        auto less = [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(at(a), at(a) + static_cast<std::ptrdiff_t>(r), at(b), at(b) + static_cast<std::ptrdiff_t>(r));
        };
        std::sort(order.begin(), order.end(), less);
        for (std::size_t i = 1; i < m; ++i)
            if (!less(order[i - 1], order[i]))
                throw Error(ErrorKind::DuplicateEdge, "edge listed twice");
        Hypergraph h;
        h.n_ = n;
        h.uniformity_ = r;
        h.flat_.reserve(flat.size());
        h.offsets_.reserve(m + 1);
        h.offsets_.assign(1, 0);
        for (auto i : order) {
            h.flat_.insert(h.flat_.end(), at(i), at(i) + static_cast<std::ptrdiff_t>(r));
            h.offsets_.push_back(static_cast<std::uint32_t>(h.flat_.size()));
        }
        std::vector<std::uint32_t>().swap(order);
        std::vector<Vertex>().swap(flat);
        h.index();
        return h;
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::optional<std::size_t> uniformity() const { return uniformity_; }

    std::span<const Vertex> edge(EdgeIndex i) const {
        return {flat_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::vector<Vertex> edge_vector(EdgeIndex i) const {
        auto e = edge(i);
        return {e.begin(), e.end()};
    }

    std::vector<std::vector<Vertex>> edge_list() const {
        std::vector<std::vector<Vertex>> out;
        out.reserve(edge_count());
        for (EdgeIndex i = 0; i < edge_count(); ++i)
            out.push_back(edge_vector(i));
        return out;
    }

    std::span<const EdgeIndex> incident(Vertex v) const {
        return {incidence_.data() + inc_offsets_[v], inc_offsets_[v + 1] - inc_offsets_[v]};
    }

    std::size_t degree(Vertex v) const { return inc_offsets_[v + 1] - inc_offsets_[v]; }

    /// Every (other, edge) with {v, other} inside edge, sorted by other then edge.
    std::span<const PairEntry> pair_entries(Vertex v) const {
        return {pairs_.data() + pair_offsets_[v], pair_offsets_[v + 1] - pair_offsets_[v]};
    }

    /// Sorted indices of the hyperedges containing both u and v.
    std::vector<EdgeIndex> pair_cover(Vertex u, Vertex v) const {
        std::vector<EdgeIndex> out;
        if (u == v || u >= n_ || v >= n_)
            return out;
        auto entries = pair_entries(u);
        auto lo = std::lower_bound(entries.begin(), entries.end(), PairEntry{v, 0});
        for (; lo != entries.end() && lo->other == v; ++lo)
            out.push_back(lo->edge);
        return out;
    }

    /// Smallest-index hyperedge containing the pair, if any.
    std::optional<EdgeIndex> first_cover(Vertex u, Vertex v) const {
        if (u == v || u >= n_ || v >= n_)
            return std::nullopt;
        auto entries = pair_entries(u);
        auto lo = std::lower_bound(entries.begin(), entries.end(), PairEntry{v, 0});
        if (lo != entries.end() && lo->other == v)
            return lo->edge;
        return std::nullopt;
    }

    std::size_t pair_codegree(Vertex u, Vertex v) const {
        if (u == v || u >= n_ || v >= n_)
            return 0;
        auto entries = pair_entries(u);
        auto range = std::equal_range(entries.begin(), entries.end(), PairEntry{v, 0},
                                      [](const PairEntry& a, const PairEntry& b) { return a.other < b.other; });
        return static_cast<std::size_t>(range.second - range.first);
    }

    bool edge_contains(EdgeIndex i, Vertex v) const {
        auto e = edge(i);
        return std::binary_search(e.begin(), e.end(), v);
    }

    /// Number of hyperedges containing the given vertex set.
    std::size_t codegree(std::span<const Vertex> set) const {
        if (set.empty())
            return edge_count();
        Vertex pivot = set.front();
        for (Vertex v : set) {
            if (v >= n_)
                return 0;
            if (degree(v) < degree(pivot))
                pivot = v;
        }
        std::size_t count = 0;
        for (EdgeIndex i : incident(pivot)) {
            auto e = edge(i);
            if (std::all_of(set.begin(), set.end(),
                            [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); }))
                ++count;
        }
        return count;
    }

    std::optional<EdgeIndex> find_edge(std::span<const Vertex> sorted_vertices) const {
        EdgeIndex lo = 0, hi = static_cast<EdgeIndex>(edge_count());
        while (lo < hi) {
            EdgeIndex mid = lo + (hi - lo) / 2;
            auto e = edge(mid);
            if (std::lexicographical_compare(e.begin(), e.end(), sorted_vertices.begin(), sorted_vertices.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < edge_count()) {
            auto e = edge(lo);
            if (std::equal(e.begin(), e.end(), sorted_vertices.begin(), sorted_vertices.end()))
                return lo;
        }
        return std::nullopt;
    }

    /// True iff every vertex pair has co-degree at most one.
    bool is_linear() const {
        for (Vertex v = 0; v < n_; ++v) {
            auto entries = pair_entries(v);
            for (std::size_t i = 1; i < entries.size(); ++i)
                if (entries[i].other == entries[i - 1].other)
                    return false;
        }
        return true;
    }

    std::size_t max_edge_size() const {
        std::size_t best = 0;
        for (EdgeIndex i = 0; i < edge_count(); ++i)
            best = std::max(best, edge(i).size());
        return best;
    }

    /// Sum of edge sizes divided by n, as an exact rational.
    Rational average_degree() const {
        return {static_cast<std::int64_t>(flat_.size()), static_cast<std::int64_t>(n_ == 0 ? 1 : n_)};
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.uniformity_ == b.uniformity_ && a.flat_ == b.flat_ && a.offsets_ == b.offsets_;
    }

private:
    static std::string join(const std::vector<Vertex>& e) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += (i ? "," : "") + std::to_string(e[i]);
        return s;
    }

    void build(const std::vector<std::vector<Vertex>>& edges) {
        offsets_.assign(1, 0);
        for (const auto& e : edges) {
            flat_.insert(flat_.end(), e.begin(), e.end());
            offsets_.push_back(static_cast<std::uint32_t>(flat_.size()));
        }
        index();
    }

    // incidence and pair index from flat_ and offsets_
    void index() {
        inc_offsets_.assign(n_ + 1, 0);
        pair_offsets_.assign(n_ + 1, 0);
        const std::size_t m = edge_count();
        for (EdgeIndex i = 0; i < m; ++i)
            for (Vertex v : edge(i)) {
                ++inc_offsets_[v + 1];
                pair_offsets_[v + 1] += static_cast<std::uint32_t>(edge(i).size() - 1);
            }
        std::partial_sum(inc_offsets_.begin(), inc_offsets_.end(), inc_offsets_.begin());
        std::partial_sum(pair_offsets_.begin(), pair_offsets_.end(), pair_offsets_.begin());
        incidence_.resize(inc_offsets_.back());
        pairs_.resize(pair_offsets_.back());
        std::vector<std::uint32_t> inc_fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
        std::vector<std::uint32_t> pair_fill(pair_offsets_.begin(), pair_offsets_.end() - 1);
        for (EdgeIndex i = 0; i < m; ++i) {
            const auto e = edge(i);
            for (Vertex v : e) {
                incidence_[inc_fill[v]++] = i;
                for (Vertex w : e)
                    if (w != v)
                        pairs_[pair_fill[v]++] = PairEntry{w, i};
            }
        }
        for (Vertex v = 0; v < n_; ++v)
            std::sort(pairs_.begin() + pair_offsets_[v], pairs_.begin() + pair_offsets_[v + 1]);
    }

    std::size_t n_ = 0;
    std::optional<std::size_t> uniformity_;
    std::vector<Vertex> flat_;
    std::vector<std::uint32_t> offsets_;
    std::vector<EdgeIndex> incidence_;
    std::vector<std::uint32_t> inc_offsets_{0};
    std::vector<PairEntry> pairs_;
    std::vector<std::uint32_t> pair_offsets_{0};
};

// ---------------------------------------------------------------------------
// .hg text format

/// Parses the `.hg` edge-list format: a header "r n m" (r = 0 when
/// non-uniform) followed by m lines of vertex ids.
inline Hypergraph parse(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            std::string line(text.substr(start, end - start));
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            lines.push_back(std::move(line));
            start = end + 1;
        }
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
        lines.pop_back();

    auto read_numbers = [](const std::string& line, std::size_t lineno) {
        std::vector<std::uint64_t> out;
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorKind::MalformedLine, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
            try {
                out.push_back(std::stoull(tok));
            } catch (const std::out_of_range&) {
                throw Error(ErrorKind::MalformedLine, "line " + std::to_string(lineno) + ": number too large");
            }
        }
        return out;
    };

    if (lines.empty())
        throw Error(ErrorKind::MalformedLine, "missing header");
    auto header = read_numbers(lines[0], 1);
    if (header.size() != 3)
        throw Error(ErrorKind::MalformedLine, "line 1: header must be 'r n m'");
    const std::uint64_t r = header[0], n = header[1], m = header[2];
    if (n > kNoVertex)
        throw Error(ErrorKind::MalformedLine, "line 1: vertex count too large");
    if (lines.size() - 1 != m)
        throw Error(ErrorKind::MalformedLine, "expected " + std::to_string(m) + " edge lines, found " +
                                                  std::to_string(lines.size() - 1));
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto nums = read_numbers(lines[i], i + 1);
        if (nums.empty())
            throw Error(ErrorKind::MalformedLine, "line " + std::to_string(i + 1) + ": empty edge");
        std::vector<Vertex> e;
        for (auto x : nums) {
            if (x >= n)
                throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(i + 1) + ": vertex " +
                                                             std::to_string(x) + " >= n=" + std::to_string(n));
            e.push_back(static_cast<Vertex>(x));
        }
        if (r != 0 && e.size() != r)
            throw Error(ErrorKind::EdgeSizeMismatch, "line " + std::to_string(i + 1) + ": expected " +
                                                         std::to_string(r) + " vertices");
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<std::size_t>(n), std::move(edges),
                      r == 0 ? std::nullopt : std::optional<std::size_t>(r));
}

/// Canonical serialization: sorted edges, LF endings, no trailing whitespace.
inline std::string serialize(const Hypergraph& h) {
    std::string out = std::to_string(h.uniformity().value_or(0)) + " " + std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(e[j]);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degrees and shadows

struct DegreeProfile {
    std::vector<std::size_t> per_vertex_degree;
    Rational average_degree;
    std::size_t min_degree = 0;
    bool is_linear = true;
};

inline DegreeProfile profile(const Hypergraph& h) {
    DegreeProfile p;
    p.per_vertex_degree.resize(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        p.per_vertex_degree[v] = h.degree(v);
    p.average_degree = h.average_degree();
    p.min_degree = p.per_vertex_degree.empty()
                       ? 0
                       : *std::min_element(p.per_vertex_degree.begin(), p.per_vertex_degree.end());
    p.is_linear = h.is_linear();
    return p;
}

struct Shadow {
    std::size_t k = 0;
    std::vector<std::vector<Vertex>> edges;
    std::vector<std::vector<EdgeIndex>> covers;
};

namespace detail {

template <typename Fn>
void for_each_subset(std::span<const Vertex> set, std::size_t k, Fn&& fn) {
    if (k > set.size())
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = set[idx[i]];
        fn(std::span<const Vertex>(subset));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == set.size() - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/// The k-shadow with, for each k-set, the sorted hyperedges covering it.
inline Shadow shadow(const Hypergraph& h, std::size_t k) {
    if (k == 0 || k >= h.max_edge_size())
        throw Error(ErrorKind::ArityTooLarge, "shadow arity " + std::to_string(k) + " must be below the max edge size");
    std::vector<std::pair<std::vector<Vertex>, EdgeIndex>> all;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        detail::for_each_subset(h.edge(i), k, [&](std::span<const Vertex> s) {
            all.emplace_back(std::vector<Vertex>(s.begin(), s.end()), i);
        });
    std::sort(all.begin(), all.end());
    Shadow out;
    out.k = k;
    for (auto& [set, edge] : all) {
        if (out.edges.empty() || out.edges.back() != set) {
            out.edges.push_back(set);
            out.covers.emplace_back();
        }
        out.covers.back().push_back(edge);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sub-hypergraphs

/// A sub-hypergraph together with the maps back to its parent's ids.
struct Subhypergraph {
    Hypergraph graph;
    std::vector<Vertex> vertex_origin;   ///< local vertex -> parent vertex
    std::vector<EdgeIndex> edge_origin;  ///< local edge -> parent edge
};

/// Keeps the listed edges. With `compact` the vertex ids are renumbered
/// (order preserving) over `vertices`, or over the covered vertices when
/// `vertices` is empty; otherwise the parent's id space is kept.
inline Subhypergraph restrict_edges(const Hypergraph& h, std::vector<EdgeIndex> keep, bool compact = false,
                                    std::vector<Vertex> vertices = {}) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    Subhypergraph sub;
    std::vector<Vertex> local(h.vertex_count(), kNoVertex);
    if (compact) {
        if (vertices.empty())
            for (EdgeIndex i : keep)
                for (Vertex v : h.edge(i))
                    vertices.push_back(v);
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (std::size_t j = 0; j < vertices.size(); ++j)
            local[vertices[j]] = static_cast<Vertex>(j);
        sub.vertex_origin = vertices;
    } else {
        sub.vertex_origin.resize(h.vertex_count());
        std::iota(sub.vertex_origin.begin(), sub.vertex_origin.end(), 0);
        std::iota(local.begin(), local.end(), 0);
    }
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(keep.size());
    for (EdgeIndex i : keep) {
        std::vector<Vertex> e;
        for (Vertex v : h.edge(i)) {
            if (local[v] == kNoVertex)
                throw Error(ErrorKind::VertexOutOfRange, "kept edge leaves the vertex set");
            e.push_back(local[v]);
        }
        edges.push_back(std::move(e));
    }
    sub.graph = Hypergraph(compact ? sub.vertex_origin.size() : h.vertex_count(), std::move(edges), h.uniformity());
    sub.edge_origin = std::move(keep);
    return sub;
}

/// Vertices of positive degree.
inline std::vector<Vertex> active_vertices(const Hypergraph& h) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0)
            out.push_back(v);
    return out;
}

/// Connected components (in the shadow) of the edge set, each as a sorted
/// list of edge indices; components are ordered by their smallest vertex.
inline std::vector<std::vector<EdgeIndex>> edge_components(const Hypergraph& h) {
    std::vector<Vertex> parent(h.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 1; j < e.size(); ++j) {
            Vertex a = find(e[0]), b = find(e[j]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<EdgeIndex>> by_root(h.vertex_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        by_root[find(h.edge(i)[0])].push_back(i);
    std::vector<std::vector<EdgeIndex>> out;
    for (auto& c : by_root)
        if (!c.empty())
            out.push_back(std::move(c));
    return out;
}

/// Connectivity of the shadow over the non-isolated vertices.
inline bool is_connected(const Hypergraph& h) {
    return edge_components(h).size() <= 1;
}

/**
 * Peels vertices of degree below d(H)/r until none is left, returning the
 * compacted core. The invariant |H'| >= |V(H')| * d(H)/r is kept at every
 * step, so d(H') >= d(H) and delta(H') >= d(H)/r on return.
 */
inline Subhypergraph min_degree_subgraph(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    std::vector<EdgeIndex> all(m);
    std::iota(all.begin(), all.end(), 0);
    if (m == 0 || n == 0)
        return restrict_edges(h, all, true, active_vertices(h));

    const std::size_t r = h.uniformity().value_or(0);
    if (r == 0)
        precondition("min_degree_subgraph needs a uniform hypergraph");

    // deg < d(H)/r  <=>  deg * n < |H|
    auto below = [&](std::size_t deg) { return static_cast<unsigned __int128>(deg) * n < m; };

    std::vector<std::size_t> deg(n);
    std::vector<char> alive_vertex(n, 1), alive_edge(m, 1);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = h.degree(v);
        if (below(deg[v])) {
            alive_vertex[v] = 0;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeIndex e : h.incident(v)) {
            if (!alive_edge[e])
                continue;
            alive_edge[e] = 0;
            for (Vertex w : h.edge(e)) {
                --deg[w];
                if (alive_vertex[w] && below(deg[w])) {
                    alive_vertex[w] = 0;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<EdgeIndex> keep;
    for (EdgeIndex e = 0; e < m; ++e)
        if (alive_edge[e])
            keep.push_back(e);
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < n; ++v)
        if (alive_vertex[v])
            verts.push_back(v);
    return restrict_edges(h, keep, true, verts);
}

struct PartiteSubgraph {
    Subhypergraph sub;              ///< transversal edges, parent vertex ids kept
    std::vector<std::size_t> part;  ///< part index per vertex, in [0, r)
};

/**
 * r-partite sub-hypergraph with at least r!/r^r of the edges. Vertices are
 * assigned one at a time (order shuffled by `seed`) to the part maximising
 * the conditional expectation of the number of transversal edges, so the
 * bound holds deterministically.
 */
inline PartiteSubgraph r_partite_subgraph(const Hypergraph& h, std::uint64_t seed = 0) {
    const std::size_t n = h.vertex_count();
    PartiteSubgraph out;
    out.part.assign(n, 0);
    if (h.edge_count() == 0) {
        out.sub = restrict_edges(h, {});
        return out;
    }
    const std::size_t r = h.uniformity().value_or(0);
    if (r < 2)
        precondition("r_partite_subgraph needs a uniform hypergraph");

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::uint64_t state = seed;
        for (std::size_t i = n; i > 1; --i) {
            state ^= state >> 12, state ^= state << 25, state ^= state >> 27;
            std::size_t j = (state * 2685821657736338717ULL) % i;
            std::swap(order[i - 1], order[j]);
        }
    }
    std::vector<std::int64_t> pow_r(r + 1, 1), fact(r + 1, 1);
    for (std::size_t i = 1; i <= r; ++i) {
        pow_r[i] = pow_r[i - 1] * static_cast<std::int64_t>(r);
        fact[i] = fact[i - 1] * static_cast<std::int64_t>(i);
    }
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assigned(n, kUnassigned);

    // Conditional expectation of "edge is transversal", scaled by r^r.
    auto weight = [&](EdgeIndex e) -> std::int64_t {
        std::vector<char> used(r, 0);
        std::size_t a = 0;
        for (Vertex v : h.edge(e)) {
            if (assigned[v] == kUnassigned)
                continue;
            if (used[assigned[v]])
                return 0;
            used[assigned[v]] = 1;
            ++a;
        }
        return fact[r - a] * pow_r[a];
    };

    for (Vertex v : order) {
        std::size_t best_part = 0;
        std::int64_t best = -1;
        for (std::size_t p = 0; p < r; ++p) {
            assigned[v] = p;
            std::int64_t total = 0;
            for (EdgeIndex e : h.incident(v))
                total += weight(e);
            if (total > best) {
                best = total;
                best_part = p;
            }
        }
        assigned[v] = best_part;
    }
    std::vector<EdgeIndex> keep;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (weight(e) != 0)
            keep.push_back(e);
    out.part = assigned;
    out.sub = restrict_edges(h, keep);
    return out;
}

} // namespace berge
