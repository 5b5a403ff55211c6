#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "berge/error.hpp"
#include "berge/generators.hpp"
#include "berge/hypergraph.hpp"
#include "berge/oracle.hpp"

namespace berge {

/// Largest BC_l-free r-graph on n vertices found by the exhaustive search.
struct TuranRecord {
    std::size_t n = 0, r = 0, ell = 0;
    std::size_t value = 0;  ///< exact when `exact`, else a lower bound
    bool exact = false;
    Hypergraph extremal;
    std::uint64_t nodes = 0;
};

namespace detail {

class TuranSearch {
public:
    TuranSearch(std::size_t n, std::size_t r, std::size_t ell, std::uint64_t budget)
        : n_(n), r_(r), ell_(ell), limit_(budget), all_(complete_r(n, r)), touched_(n, 0), pair_used_(n * n, 0) {}

    TuranRecord run() {
        dfs(0, 0);
        TuranRecord rec;
        rec.n = n_;
        rec.r = r_;
        rec.ell = ell_;
        rec.value = best_.size();
        rec.exact = !exhausted_;
        std::vector<std::vector<Vertex>> es;
        for (EdgeIndex e : best_)
            es.push_back(all_.edge_vector(e));
        rec.extremal = Hypergraph(n_, es, r_);
        rec.nodes = nodes_;
        return rec;
    }

private:
    // remaining candidates could not beat the incumbent
    bool hopeless(std::size_t pos) const {
        std::size_t room = all_.edge_count() - pos;
        if (ell_ == 2) {
            std::size_t free_pairs = 0;
            for (Vertex a = 0; a < n_; ++a)
                for (Vertex b = a + 1; b < n_; ++b)
                    free_pairs += !pair_used_[a * n_ + b];
            room = std::min(room, free_pairs / (r_ * (r_ - 1) / 2));
        }
        return chosen_.size() + room <= best_.size();
    }

    // new vertices of e must be the smallest untouched ones
    bool canonical(std::span<const Vertex> e) const {
        std::size_t next = first_untouched_;
        for (Vertex v : e)
            if (!touched_[v]) {
                if (v != next)
                    return false;
                ++next;
            }
        return true;
    }

    bool stays_free(EdgeIndex e) {
        if (ell_ == 2) {
            auto ev = all_.edge(e);
            for (std::size_t i = 0; i < ev.size(); ++i)
                for (std::size_t j = i + 1; j < ev.size(); ++j)
                    if (pair_used_[ev[i] * n_ + ev[j]])
                        return false;
            return true;
        }
        std::vector<std::vector<Vertex>> es;
        for (EdgeIndex f : chosen_)
            es.push_back(all_.edge_vector(f));
        es.push_back(all_.edge_vector(e));
        Hypergraph g(n_, es, r_);
        SearchBudget inner{oracle_limit_};
        auto w = find_berge_cycle(g, ell_, inner);
        if (inner.exhausted)
            exhausted_ = true;
        return !w && !inner.exhausted;
    }

    void dfs(std::size_t pos, int) {
        if (exhausted_)
            return;
        if (++nodes_ > limit_) {
            exhausted_ = true;
            return;
        }
        if (chosen_.size() > best_.size())
            best_ = chosen_;
        if (pos == all_.edge_count() || hopeless(pos))
            return;
        const auto e = static_cast<EdgeIndex>(pos);
        auto ev = all_.edge(e);
        if (canonical(ev) && stays_free(e)) {
            const std::size_t saved = first_untouched_;
            std::vector<Vertex> fresh;
            for (Vertex v : ev)
                if (!touched_[v]) {
                    touched_[v] = 1;
                    fresh.push_back(v);
                }
            first_untouched_ += fresh.size();
            mark_pairs(ev, 1);
            chosen_.push_back(e);
            dfs(pos + 1, 0);
            chosen_.pop_back();
            mark_pairs(ev, 0);
            for (Vertex v : fresh)
                touched_[v] = 0;
            first_untouched_ = saved;
        }
        // a nonempty optimum can be relabeled to contain the first edge
        if (pos > 0 || !chosen_.empty())
            dfs(pos + 1, 0);
    }

    void mark_pairs(std::span<const Vertex> ev, char value) {
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                pair_used_[ev[i] * n_ + ev[j]] = value;
    }

    std::size_t n_, r_, ell_;
    std::uint64_t limit_;
    std::uint64_t oracle_limit_ = 10'000'000;
    Hypergraph all_;
    std::vector<char> touched_;
    std::vector<char> pair_used_;
    std::size_t first_untouched_ = 0;
    std::vector<EdgeIndex> chosen_, best_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace detail

/**
 * ex_r(n, BC_l) by branch and bound over the edges of K_n^(r) in lex order.
 * Included edges must bring in the smallest untouched vertices, which every
 * isomorphism class admits. On budget exhaustion the record holds the best
 * graph found as a lower bound with `exact` false.
 */
inline TuranRecord turan_exhaustive(std::size_t n, std::size_t r, std::size_t ell, std::uint64_t budget) {
    if (r < 2 || ell < 2 || n < r)
        throw Error(ErrorKind::InvalidParameters, "need r >= 2, l >= 2 and n >= r");
    if (r == 3 && n > 9)
        precondition("exhaustive search is limited to n <= 9 for r = 3");
    return detail::TuranSearch(n, r, ell, budget).run();
}

} // namespace berge
