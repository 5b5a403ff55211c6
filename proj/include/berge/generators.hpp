#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Seeded generator with its own bounded sampling, so streams are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

/// All r-subsets of 0..n-1.
inline Hypergraph complete_r(std::size_t n, std::size_t r) {
    if (r < 2 || r > n)
        throw Error(ErrorKind::InvalidParameters, "complete r-graph needs 2 <= r <= n");
    std::vector<std::vector<Vertex>> edges;
    std::vector<Vertex> cur(r);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        edges.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return Hypergraph(n, std::move(edges), r);
}

/**
 * Steiner triple system on n points: Bose construction for n = 3 (mod 6),
 * Skolem construction for n = 1 (mod 6).
 */
inline Hypergraph steiner_triple(std::size_t n) {
    std::vector<Vertex> flat;
    auto add = [&flat](Vertex a, Vertex b, Vertex c) {
        flat.push_back(a);
        flat.push_back(b);
        flat.push_back(c);
    };
    if (n % 6 == 3) {
        const std::size_t v = n / 3;  // odd
        const std::size_t half = (v + 1) / 2;
        auto id = [v](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + (i % 3) * v); };
        for (std::size_t x = 0; x < v; ++x)
            add(id(x, 0), id(x, 1), id(x, 2));
        for (std::size_t x = 0; x < v; ++x)
            for (std::size_t y = x + 1; y < v; ++y) {
                std::size_t z = ((x + y) * half) % v;
                for (std::size_t i = 0; i < 3; ++i)
                    add(id(x, i), id(y, i), id(z, i + 1));
            }
    } else if (n % 6 == 1) {
        const std::size_t t = n / 6;
        const std::size_t q = 2 * t;
        const Vertex inf = static_cast<Vertex>(3 * q);
        auto id = [q](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + (i % 3) * q); };
        // half-idempotent commutative quasigroup on Z_2t
        auto op = [q, t](std::size_t x, std::size_t y) {
            std::size_t s = (x + y) % q;
            return s % 2 == 0 ? s / 2 : s / 2 + t;
        };
        for (std::size_t x = 0; x < t; ++x)
            add(id(x, 0), id(x, 1), id(x, 2));
        for (std::size_t x = 0; x < t; ++x)
            for (std::size_t i = 0; i < 3; ++i)
                add(inf, id(x + t, i), id(x, i + 1));
        for (std::size_t x = 0; x < q; ++x)
            for (std::size_t y = x + 1; y < q; ++y)
                for (std::size_t i = 0; i < 3; ++i)
                    add(id(x, i), id(y, i), id(op(x, y), i + 1));
    } else {
        throw Error(ErrorKind::InvalidParameters,
                    "Steiner triple systems need n = 1 or 3 (mod 6), got " + std::to_string(n));
    }
    return Hypergraph::from_flat(n, 3, std::move(flat));
}

/// Tight path of length m: edges {i, ..., i+r-1} for i < m on m+r-1 vertices.
inline Hypergraph tight_path(std::size_t m, std::size_t r) {
    if (m == 0 || r < 2)
        throw Error(ErrorKind::InvalidParameters, "tight path needs m >= 1 and r >= 2");
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Vertex> e(r);
        std::iota(e.begin(), e.end(), static_cast<Vertex>(i));
        edges.push_back(std::move(e));
    }
    return Hypergraph(m + r - 1, std::move(edges), r);
}

/**
 * Random linear r-graph: candidate r-sets in seeded order, each kept when
 * none of its pairs is used yet, until m edges are placed. Small instances
 * scan every r-set; larger ones sample. May fall short of m.
 */
inline Hypergraph random_linear(std::size_t n, std::size_t r, std::size_t m, std::uint64_t seed) {
    if (r < 2 || r > n)
        throw Error(ErrorKind::InvalidParameters, "random linear r-graph needs 2 <= r <= n");
    Rng rng(seed);
    std::vector<char> used(n * n, 0);
    std::vector<std::vector<Vertex>> edges;
    auto try_add = [&](std::vector<Vertex> e) {
        std::sort(e.begin(), e.end());
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                if (used[e[a] * n + e[b]])
                    return;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                used[e[a] * n + e[b]] = 1;
        edges.push_back(std::move(e));
    };
    double total = 1;
    for (std::size_t i = 0; i < r; ++i)
        total = total * static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (total <= 200000) {
        auto all = complete_r(n, r).edge_list();
        rng.shuffle(all);
        for (auto& e : all) {
            if (edges.size() >= m)
                break;
            try_add(std::move(e));
        }
    } else {
        const std::size_t attempts = 200 * m + 10000;
        for (std::size_t a = 0; a < attempts && edges.size() < m; ++a) {
            std::vector<Vertex> e;
            while (e.size() < r) {
                Vertex v = static_cast<Vertex>(rng.below(n));
                if (std::find(e.begin(), e.end(), v) == e.end())
                    e.push_back(v);
            }
            try_add(std::move(e));
        }
    }
    return Hypergraph(n, std::move(edges), r);
}

/// Random bipartite 2-graph between parts {0..a-1} and {a..a+b-1}, each pair with probability p.
inline Hypergraph bipartite_incidence(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
    if (a == 0 || b == 0 || p < 0 || p > 1)
        throw Error(ErrorKind::InvalidParameters, "bipartite graph needs nonempty parts and p in [0,1]");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            if (p >= 1 || rng.chance(p))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    return Hypergraph(a + b, std::move(edges), 2);
}

/// Applies a seeded random vertex permutation.
inline Hypergraph relabel(const Hypergraph& h, std::uint64_t seed) {
    std::vector<Vertex> perm(h.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    auto edges = h.edge_list();
    for (auto& e : edges)
        for (auto& v : e)
            v = perm[v];
    return Hypergraph(h.vertex_count(), std::move(edges), h.uniformity());
}

enum class Family { CompleteR, SteinerTriple, RandomLinearR, TightPath, BipartiteIncidence };

struct GeneratorSpec {
    Family family = Family::CompleteR;
    std::size_t n = 0;   ///< vertices (first part size for bipartite)
    std::size_t r = 3;
    std::size_t m = 0;   ///< edges, path length, or second part size
    double p = 1.0;
    std::uint64_t seed = 0;
};

inline Hypergraph generate(const GeneratorSpec& s) {
    switch (s.family) {
    case Family::CompleteR: return complete_r(s.n, s.r);
    case Family::SteinerTriple: return steiner_triple(s.n);
    case Family::RandomLinearR: return random_linear(s.n, s.r, s.m, s.seed);
    case Family::TightPath: return tight_path(s.m, s.r);
    case Family::BipartiteIncidence: return bipartite_incidence(s.n, s.m, s.p, s.seed);
    }
    throw Error(ErrorKind::InvalidParameters, "unknown family");
}

} // namespace berge
