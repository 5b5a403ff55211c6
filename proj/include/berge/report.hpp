#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge/consecutive.hpp"
#include "berge/error.hpp"
#include "berge/length_control.hpp"
#include "berge/oracle.hpp"
#include "berge/skeleton.hpp"
#include "berge/turan.hpp"
#include "berge/witness.hpp"

namespace berge {

/// First broken invariant of a run, or ok.
struct RunAudit {
    bool ok = true;
    std::string invariant;
};

/**
 * Checks a run and names the first invariant it breaks. `bound` is checked
 * only when nonzero, so bare witness files can be audited too.
 */
inline RunAudit audit_cycles(const Hypergraph& h, const std::vector<BergeCycleWitness>& cycles, std::size_t k,
                             std::size_t bound) {
    if (k == 0 || cycles.size() != k)
        return {false, "CycleCount: expected " + std::to_string(k) + " cycles, got " + std::to_string(cycles.size())};
    for (std::size_t j = 0; j < cycles.size(); ++j) {
        if (auto v = verify_cycle(h, cycles[j]); !v)
            return {false, std::string(to_string(v.fault)) + " in cycle " + std::to_string(j) + " at position " +
                               std::to_string(v.position)};
        if (j > 0 && cycles[j].length() != cycles[j - 1].length() + 1)
            return {false, "NotConsecutive: cycle " + std::to_string(j) + " has length " +
                               std::to_string(cycles[j].length())};
    }
    if (bound && cycles.front().length() > bound)
        return {false, "ShortestAboveBound: " + std::to_string(cycles.front().length()) + " > " + std::to_string(bound)};
    return {};
}

inline RunAudit audit_run(const Hypergraph& h, const ConsecutiveRun& run) {
    return audit_cycles(h, run.cycles, run.k, run.shortest_bound);
}

inline std::string run_csv(const ConsecutiveRun& run) {
    std::ostringstream out;
    out << "index,length,shortest_bound,route\n";
    for (std::size_t j = 0; j < run.cycles.size(); ++j)
        out << j << ',' << run.cycles[j].length() << ',' << run.shortest_bound << ',' << run.route << '\n';
    return out.str();
}

inline std::string witness_jsonl(const std::vector<BergeCycleWitness>& cycles) {
    std::string out;
    for (const auto& c : cycles)
        out += to_json(c).dump() + '\n';
    return out;
}

/// Cycles from JSON lines; blank lines are skipped.
inline std::vector<BergeCycleWitness> cycles_from_jsonl(const std::string& text) {
    std::vector<BergeCycleWitness> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::MalformedLine, "line " + std::to_string(number) + ": " + e.what());
        }
        out.push_back(cycle_from_json(j));
    }
    return out;
}

struct RunReport {
    std::string csv;
    std::string jsonl;
};

/// CSV and witness lines for a run that verifies; VerificationFailure names the broken invariant otherwise.
inline RunReport report_run(const ConsecutiveRun& run, const Hypergraph& h) {
    if (auto a = audit_run(h, run); !a.ok)
        throw Error(ErrorKind::VerificationFailure, a.invariant);
    return {run_csv(run), witness_jsonl(run.cycles)};
}

inline std::string skeleton_csv(const Skeleton& s, const LevelEdgeClasses& cls) {
    std::ostringstream out;
    out << "i,|L_i|,|A_i|,|B_i|,|C_i|\n";
    for (std::size_t i = 0; i <= s.height(); ++i)
        out << i << ',' << s.level_size(i) << ',' << cls.a(i) << ',' << cls.b(i) << ',' << cls.c(i) << '\n';
    return out.str();
}

inline std::string spectrum_csv(const CycleSpectrum& sp) {
    std::ostringstream out;
    out << "length,present\n";
    for (std::size_t len = 3; len <= sp.searched_up_to; ++len)
        out << len << ',' << (sp.contains(len) ? 1 : 0) << '\n';
    return out.str();
}

namespace detail {

inline std::string fixed(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << x;
    return out.str();
}

} // namespace detail

inline std::string growth_csv(const LevelGrowthReport& rep) {
    std::ostringstream out;
    out << "level,L_i,L_next,A_i,BC_i,a_certified,bc_certified,ratio,grows\n";
    for (const auto& e : rep.levels)
        out << e.level << ',' << e.size << ',' << e.next_size << ',' << e.a << ',' << e.bc << ',' << e.a_certified
            << ',' << e.bc_certified << ',' << detail::fixed(e.ratio) << ',' << e.grows << '\n';
    return out.str();
}

inline nlohmann::ordered_json to_json(const LevelGrowthReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["h"] = rep.h;
    j["edges"] = rep.edges;
    j["threshold"] = detail::fixed(rep.threshold);
    j["above_threshold"] = rep.above_threshold;
    j["degree_target"] = detail::fixed(rep.degree_target);
    j["core_vertices"] = rep.core_vertices;
    j["core_edges"] = rep.core_edges;
    j["core_min_degree"] = rep.core_min_degree;
    j["height"] = rep.height;
    j["all_certified"] = rep.all_certified;
    j["outcome"] = rep.outcome;
    return j;
}

inline nlohmann::ordered_json to_json(const TuranRecord& rec) {
    nlohmann::ordered_json j;
    j["n"] = rec.n;
    j["r"] = rec.r;
    j["ell"] = rec.ell;
    j["value"] = rec.value;
    j["exact"] = rec.exact;
    j["nodes"] = rec.nodes;
    j["extremal"] = rec.extremal.edge_list();
    return j;
}

} // namespace berge
