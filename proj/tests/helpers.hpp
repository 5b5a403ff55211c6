#pragma once

#include <vector>

#include "berge/hypergraph.hpp"
#include "oracles.hpp"

inline berge::Hypergraph make_h(std::size_t n, const std::vector<oracle::Edge>& edges) {
    std::vector<std::vector<berge::Vertex>> es;
    for (const auto& e : edges)
        es.emplace_back(e.begin(), e.end());
    return berge::Hypergraph(n, es);
}

inline std::vector<oracle::Edge> edges_of(const berge::Hypergraph& h) {
    std::vector<oracle::Edge> out;
    for (berge::EdgeIndex i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}
