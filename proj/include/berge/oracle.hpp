#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/witness.hpp"

namespace berge {

/// Hard cap on search nodes, shared across calls that receive the same object.
struct SearchBudget {
    std::uint64_t limit = 100'000'000;
    std::uint64_t used = 0;
    bool exhausted = false;

    bool spend() {
        if (used >= limit) {
            exhausted = true;
            return false;
        }
        ++used;
        return true;
    }
};

namespace detail {

/// Incremental bipartite matching of spine pairs into hyperedges.
class PairMatcher {
public:
    explicit PairMatcher(const Hypergraph& h) : h_(h), owner_(h.edge_count(), kNone), seen_(h.edge_count(), 0) {}

    /// Adds a pair; returns false (and leaves state unchanged) if the matching cannot grow.
    bool push(Vertex a, Vertex b) {
        pairs_.push_back(h_.pair_cover(a, b));
        match_.push_back(kNoEdge);
        ++stamp_;
        if (augment(pairs_.size() - 1))
            return true;
        pairs_.pop_back();
        match_.pop_back();
        return false;
    }

    void pop() {
        if (match_.back() != kNoEdge)
            owner_[match_.back()] = kNone;
        pairs_.pop_back();
        match_.pop_back();
    }

    const std::vector<EdgeIndex>& matching() const { return match_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    bool augment(std::size_t p) {
        for (EdgeIndex e : pairs_[p]) {
            if (seen_[e] == stamp_)
                continue;
            seen_[e] = stamp_;
            if (owner_[e] == kNone || augment(owner_[e])) {
                owner_[e] = p;
                match_[p] = e;
                return true;
            }
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<std::vector<EdgeIndex>> pairs_;
    std::vector<EdgeIndex> match_;
    std::vector<std::size_t> owner_;
    std::vector<std::uint64_t> seen_;
    std::uint64_t stamp_ = 0;
};

class CycleSearch {
public:
    CycleSearch(const Hypergraph& h, const Graph& shadow, std::size_t len, SearchBudget& budget)
        : h_(h), g_(shadow), len_(len), budget_(budget), matcher_(h), used_(h.vertex_count(), 0) {}

    std::optional<BergeCycleWitness> run() {
        for (Vertex first = 0; first < h_.vertex_count(); ++first) {
            if (g_.degree(first) < 2 && len_ > 2)
                continue;
            if (g_.degree(first) == 0)
                continue;
            spine_.assign(1, first);
            used_[first] = 1;
            bool hit = dfs();
            used_[first] = 0;
            if (hit)
                return BergeCycleWitness{spine_, matcher_.matching()};
            if (budget_.exhausted)
                return std::nullopt;
        }
        return std::nullopt;
    }

private:
    bool dfs() {
        if (!budget_.spend())
            return false;
        const Vertex first = spine_.front();
        const Vertex last = spine_.back();
        if (spine_.size() == len_) {
            // reflection canonical: second vertex below the last one
            if (len_ > 2 && spine_[1] > last)
                return false;
            if (!g_.has_edge(last, first))
                return false;
            if (matcher_.push(last, first))
                return true;
            return false;
        }
        for (Vertex next : g_.neighbors(last)) {
            if (next <= first || used_[next])
                continue;
            if (!matcher_.push(last, next))
                continue;
            used_[next] = 1;
            spine_.push_back(next);
            if (dfs())
                return true;
            spine_.pop_back();
            used_[next] = 0;
            matcher_.pop();
            if (budget_.exhausted)
                return false;
        }
        return false;
    }

    const Hypergraph& h_;
    const Graph& g_;
    std::size_t len_;
    SearchBudget& budget_;
    PairMatcher matcher_;
    std::vector<char> used_;
    std::vector<Vertex> spine_;
};

} // namespace detail

/**
 * Exhaustive search for a Berge cycle of the given length. Spines are
 * enumerated with their minimum vertex first and the second vertex below
 * the last, so each cycle is visited once per vertex sequence class.
 * Returns nullopt when none exists or when the budget ran out (check
 * budget.exhausted to tell the two apart).
 */
inline std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h, std::size_t len, SearchBudget& budget,
                                                         const Graph* shadow = nullptr) {
    if (len < 2 || len > h.vertex_count() || len > h.edge_count())
        return std::nullopt;
    Graph local;
    if (!shadow) {
        local = shadow_graph(h);
        shadow = &local;
    }
    return detail::CycleSearch(h, *shadow, len, budget).run();
}

struct CycleSpectrum {
    std::vector<std::size_t> lengths;
    std::map<std::size_t, BergeCycleWitness> witnesses;
    std::size_t searched_up_to = 0;  ///< largest length whose class was fully decided
    bool budget_exhausted = false;

    bool contains(std::size_t len) const { return witnesses.count(len) != 0; }
};

/// Berge cycle lengths 3..max_len present in h, each with a stored witness.
inline CycleSpectrum oracle_spectrum(const Hypergraph& h, std::size_t max_len, std::uint64_t budget_nodes) {
    if (max_len > h.vertex_count())
        precondition("max_len exceeds the vertex count");
    CycleSpectrum out;
    SearchBudget budget{budget_nodes};
    Graph g = shadow_graph(h);
    for (std::size_t len = 3; len <= max_len; ++len) {
        auto w = find_berge_cycle(h, len, budget, &g);
        if (budget.exhausted) {
            out.budget_exhausted = true;
            break;
        }
        if (w) {
            out.lengths.push_back(len);
            out.witnesses.emplace(len, std::move(*w));
        }
        out.searched_up_to = len;
    }
    return out;
}

} // namespace berge
