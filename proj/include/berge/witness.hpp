#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "berge/error.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Spine v_1..v_l plus hyperedges e_1..e_l with {v_i, v_{i+1}} in e_i (indices mod l).
struct BergeCycleWitness {
    std::vector<Vertex> spine;
    std::vector<EdgeIndex> edges;

    std::size_t length() const { return spine.size(); }
    friend bool operator==(const BergeCycleWitness&, const BergeCycleWitness&) = default;
};

/// Spine v_1..v_{l+1} plus hyperedges e_1..e_l with {v_i, v_{i+1}} in e_i.
struct BergePathWitness {
    std::vector<Vertex> spine;
    std::vector<EdgeIndex> edges;

    std::size_t length() const { return edges.size(); }
    friend bool operator==(const BergePathWitness&, const BergePathWitness&) = default;
};

enum class WitnessFault {
    None,
    TooShort,
    LengthMismatch,
    VertexOutOfRange,
    SpineNotDistinct,
    EdgeIndexInvalid,
    EdgesNotDistinct,
    PairNotContained,
};

inline std::string_view to_string(WitnessFault f) {
    switch (f) {
    case WitnessFault::None: return "None";
    case WitnessFault::TooShort: return "TooShort";
    case WitnessFault::LengthMismatch: return "LengthMismatch";
    case WitnessFault::VertexOutOfRange: return "VertexOutOfRange";
    case WitnessFault::SpineNotDistinct: return "SpineNotDistinct";
    case WitnessFault::EdgeIndexInvalid: return "EdgeIndexInvalid";
    case WitnessFault::EdgesNotDistinct: return "EdgesNotDistinct";
    case WitnessFault::PairNotContained: return "PairNotContained";
    }
    return "Unknown";
}

struct Verdict {
    WitnessFault fault = WitnessFault::None;
    std::size_t position = 0;  ///< offending spine/edge position when meaningful

    explicit operator bool() const { return fault == WitnessFault::None; }
};

namespace detail {

template <typename T>
bool all_distinct(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline Verdict verify_walk(const Hypergraph& h, const std::vector<Vertex>& spine,
                           const std::vector<EdgeIndex>& edges, bool closed) {
    for (std::size_t i = 0; i < spine.size(); ++i)
        if (spine[i] >= h.vertex_count())
            return {WitnessFault::VertexOutOfRange, i};
    if (!all_distinct(spine))
        return {WitnessFault::SpineNotDistinct, 0};
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] >= h.edge_count())
            return {WitnessFault::EdgeIndexInvalid, i};
    if (!all_distinct(edges))
        return {WitnessFault::EdgesNotDistinct, 0};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Vertex a = spine[i];
        Vertex b = closed ? spine[(i + 1) % spine.size()] : spine[i + 1];
        if (!h.edge_contains(edges[i], a) || !h.edge_contains(edges[i], b))
            return {WitnessFault::PairNotContained, i};
    }
    return {};
}

} // namespace detail

inline Verdict verify_cycle(const Hypergraph& h, const BergeCycleWitness& w) {
    if (w.spine.size() < 2)
        return {WitnessFault::TooShort, 0};
    if (w.spine.size() != w.edges.size())
        return {WitnessFault::LengthMismatch, 0};
    return detail::verify_walk(h, w.spine, w.edges, true);
}

inline Verdict verify_path(const Hypergraph& h, const BergePathWitness& w) {
    if (w.spine.empty())
        return {WitnessFault::TooShort, 0};
    if (w.spine.size() != w.edges.size() + 1)
        return {WitnessFault::LengthMismatch, 0};
    return detail::verify_walk(h, w.spine, w.edges, false);
}

/// Injection psi from 2-graph edges into hyperedges with pair(i) inside psi(i).
struct Extension {
    std::vector<GraphEdge> pairs;
    std::vector<EdgeIndex> mapping;
};

/**
 * Finds an extension of the pairs into distinct hyperedges by augmenting
 * paths (Kuhn), scanning pairs and covers in sorted order. Returns nullopt
 * when no injection exists.
 */
inline std::optional<Extension> extend(const Hypergraph& h, const std::vector<GraphEdge>& pairs) {
    const std::size_t g = pairs.size();
    std::vector<std::vector<EdgeIndex>> covers(g);
    for (std::size_t i = 0; i < g; ++i) {
        covers[i] = h.pair_cover(pairs[i].first, pairs[i].second);
        if (covers[i].empty())
            throw Error(ErrorKind::EdgeNotInShadow, "pair {" + std::to_string(pairs[i].first) + "," +
                                                        std::to_string(pairs[i].second) + "} not in the shadow");
    }
    Extension ext{pairs, std::vector<EdgeIndex>(g, kNoEdge)};
    if (g > h.edge_count())
        return std::nullopt;

    // Only hyperedges touched by some cover list matter; index them locally.
    std::vector<EdgeIndex> touched;
    for (auto& c : covers)
        touched.insert(touched.end(), c.begin(), c.end());
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    auto local = [&](EdgeIndex e) {
        return static_cast<std::size_t>(std::lower_bound(touched.begin(), touched.end(), e) - touched.begin());
    };
    std::vector<std::vector<std::size_t>> adj(g);
    for (std::size_t i = 0; i < g; ++i)
        for (EdgeIndex e : covers[i])
            adj[i].push_back(local(e));

    std::vector<std::size_t> owner(touched.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> seen(touched.size(), 0);
    std::size_t stamp = 0;

    for (std::size_t root = 0; root < g; ++root) {
        ++stamp;
        // iterative augmenting-path DFS
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        std::vector<std::size_t> via;  // edge slot chosen at each depth
        bool found = false;
        while (!stack.empty() && !found) {
            auto& [u, next] = stack.back();
            if (next == adj[u].size()) {
                stack.pop_back();
                if (!via.empty())
                    via.pop_back();
                continue;
            }
            std::size_t slot = adj[u][next++];
            if (seen[slot] == stamp)
                continue;
            seen[slot] = stamp;
            via.push_back(slot);
            if (owner[slot] == static_cast<std::size_t>(-1)) {
                found = true;
            } else {
                stack.emplace_back(owner[slot], 0);
            }
        }
        if (!found)
            return std::nullopt;
        for (std::size_t d = 0; d < via.size(); ++d)
            owner[via[d]] = stack[d].first;
    }
    for (std::size_t slot = 0; slot < touched.size(); ++slot)
        if (owner[slot] != static_cast<std::size_t>(-1))
            ext.mapping[owner[slot]] = touched[slot];
    return ext;
}

/// Pairs of consecutive spine vertices, closing the cycle when `closed`.
inline std::vector<GraphEdge> spine_pairs(const std::vector<Vertex>& spine, bool closed) {
    std::vector<GraphEdge> out;
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
        out.push_back(make_edge(spine[i], spine[i + 1]));
    if (closed && spine.size() >= 2)
        out.push_back(make_edge(spine.back(), spine.front()));
    return out;
}

/// Turns a spine into a cycle witness by matching, if the spine is extendable.
inline std::optional<BergeCycleWitness> cycle_from_spine(const Hypergraph& h, const std::vector<Vertex>& spine) {
    if (spine.size() < 2)
        return std::nullopt;
    auto pairs = spine_pairs(spine, true);
    for (auto [a, b] : pairs)
        if (!h.first_cover(a, b))
            return std::nullopt;
    auto ext = extend(h, pairs);
    if (!ext)
        return std::nullopt;
    return BergeCycleWitness{spine, ext->mapping};
}

inline std::optional<BergePathWitness> path_from_spine(const Hypergraph& h, const std::vector<Vertex>& spine) {
    auto pairs = spine_pairs(spine, false);
    for (auto [a, b] : pairs)
        if (!h.first_cover(a, b))
            return std::nullopt;
    auto ext = extend(h, pairs);
    if (!ext)
        return std::nullopt;
    return BergePathWitness{spine, ext->mapping};
}

// ---------------------------------------------------------------------------
// JSON lines

inline nlohmann::ordered_json to_json(const BergeCycleWitness& w) {
    nlohmann::ordered_json j;
    j["type"] = "berge-cycle";
    j["length"] = w.length();
    j["spine"] = w.spine;
    j["edges"] = w.edges;
    return j;
}

inline nlohmann::ordered_json to_json(const BergePathWitness& w) {
    nlohmann::ordered_json j;
    j["type"] = "berge-path";
    j["length"] = w.length();
    j["spine"] = w.spine;
    j["edges"] = w.edges;
    return j;
}

/// Parses one JSON line of type berge-cycle; the length field must agree with the spine.
inline BergeCycleWitness cycle_from_json(const nlohmann::json& j) {
    try {
        if (j.at("type").get<std::string>() != "berge-cycle")
            throw Error(ErrorKind::MalformedLine, "witness type is not berge-cycle");
        BergeCycleWitness w{j.at("spine").get<std::vector<Vertex>>(), j.at("edges").get<std::vector<EdgeIndex>>()};
        if (j.at("length").get<std::size_t>() != w.spine.size())
            throw Error(ErrorKind::MalformedLine, "length field disagrees with spine");
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedLine, e.what());
    }
}

} // namespace berge
