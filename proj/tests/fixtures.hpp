#pragma once

// Hand-built linear 3-graphs that steer the skeleton routes.

#include <vector>

#include "berge/generators.hpp"
#include "berge/hypergraph.hpp"

/// Root 0, one child 1 whose q children carry a Steiner triple system:
/// level 2 is dense in monochromatic B-edges while A stays empty.
inline berge::Hypergraph mono_fixture(std::size_t q) {
    using berge::Vertex;
    std::vector<std::vector<Vertex>> es;
    const Vertex x0 = 2, y0 = static_cast<Vertex>(2 + q), pend = static_cast<Vertex>(2 + 2 * q);
    es.push_back({0, 1, pend});
    for (Vertex j = 0; j < q; ++j)
        es.push_back({1, x0 + j, y0 + j});
    auto sts = berge::steiner_triple(q);
    for (berge::EdgeIndex e = 0; e < sts.edge_count(); ++e) {
        auto ev = sts.edge(e);
        es.push_back({x0 + ev[0], x0 + ev[1], x0 + ev[2]});
    }
    return berge::Hypergraph(pend + 1, es, 3);
}

/// Two branches below the root with t level-2 vertices each, joined through
/// a Latin square {p_a, q_b, z_(a+b mod t)}: C_2 is all of the ladder type.
inline berge::Hypergraph ladder_fixture(std::size_t t) {
    using berge::Vertex;
    std::vector<std::vector<Vertex>> es;
    const Vertex T = static_cast<Vertex>(t);
    const Vertex P = 5, Q = P + T, Pp = Q + T, Qp = Pp + T, Z = Qp + T;
    es.push_back({0, 1, 3});
    es.push_back({0, 2, 4});
    for (Vertex j = 0; j < T; ++j) {
        es.push_back({1, P + j, Pp + j});
        es.push_back({2, Q + j, Qp + j});
    }
    for (Vertex a = 0; a < T; ++a)
        for (Vertex b = 0; b < T; ++b)
            es.push_back({P + a, Q + b, Z + (a + b) % T});
    return berge::Hypergraph(Z + T, es, 3);
}

/// Relabeled STS(n) with `drop` random edges removed.
inline berge::Hypergraph thinned_sts(std::size_t n, std::size_t drop, std::uint64_t seed) {
    auto h = berge::relabel(berge::steiner_triple(n), seed);
    auto edges = h.edge_list();
    berge::Rng rng(seed ^ 0x5bd1e995u);
    rng.shuffle(edges);
    edges.resize(edges.size() - std::min(drop, edges.size()));
    return berge::Hypergraph(n, edges, 3);
}
