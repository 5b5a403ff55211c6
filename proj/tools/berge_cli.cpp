// berge: generators, consecutive-cycle finders and reports on the command line.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "berge/consecutive.hpp"
#include "berge/generators.hpp"
#include "berge/hypergraph.hpp"
#include "berge/length_control.hpp"
#include "berge/oracle.hpp"
#include "berge/reduction.hpp"
#include "berge/report.hpp"
#include "berge/skeleton.hpp"
#include "berge/turan.hpp"

namespace {

using namespace berge;

enum Exit { kOk = 0, kVerification = 1, kPrecondition = 2, kBudget = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidParameters, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::InvalidParameters, "cannot write " + path);
    out << text;
}

int exit_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::VerificationFailure:
    case ErrorKind::InternalProofFailure: return kVerification;
    case ErrorKind::BudgetExhausted: return kBudget;
    default: return kPrecondition;
    }
}

struct GenArgs {
    std::string family = "steiner", output;
    std::size_t n = 7, r = 3, m = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
    static const std::map<std::string, Family> families = {
        {"complete", Family::CompleteR},          {"steiner", Family::SteinerTriple},
        {"random-linear", Family::RandomLinearR}, {"tight-path", Family::TightPath},
        {"bipartite", Family::BipartiteIncidence}};
    GeneratorSpec spec;
    spec.family = families.at(a.family);
    spec.n = a.n;
    spec.r = a.r;
    spec.m = a.m;
    spec.p = a.p;
    spec.seed = a.seed;
    write_out(a.output, serialize(generate(spec)));
    return kOk;
}

struct FindArgs {
    std::string input, mode = "auto", witnesses, csv, growth;
    std::size_t k = 1, height = 0;
    std::uint64_t seed = 0;
};

std::optional<ConsecutiveRun> dispatch(const Hypergraph& h, const std::string& mode, std::size_t k) {
    const auto r = h.uniformity();
    std::string m = mode;
    if (m == "auto") {
        if (!r || *r < 3)
            precondition("auto mode needs an r-graph with r >= 3");
        if (h.is_linear())
            m = *r == 3 ? "linear3" : "linearR";
        else
            m = *r == 3 ? "general3" : "generalR";
    }
    if (m == "linear3")
        return skeleton_sweep(h, k);
    if (m == "linearR")
        return find_linear_r(h, k);
    if (m == "general3")
        return find_general3(h, k);
    return find_general_r(h, k);
}

int run_find(const FindArgs& a) {
    const Hypergraph h = parse(read_file(a.input));
    std::optional<ConsecutiveRun> run;
    if (a.height > 0) {
        auto res = length_controlled_search(h, a.k, a.height);
        if (!a.growth.empty())
            write_out(a.growth, growth_csv(res.report));
        std::cerr << to_json(res.report).dump() << '\n';
        run = std::move(res.run);
    } else {
        run = dispatch(h, a.mode, a.k);
    }
    if (!run) {
        std::cerr << "no run: the input is below what the construction needs\n";
        return kPrecondition;
    }
    auto rep = report_run(*run, h);
    write_out(a.csv, rep.csv);
    if (!a.witnesses.empty())
        write_out(a.witnesses, rep.jsonl);
    return kOk;
}

int run_skeleton(const std::string& input, Vertex root, const std::string& output) {
    const Hypergraph h = parse(read_file(input));
    auto s = build_skeleton(h, root);
    write_out(output, skeleton_csv(s, classify_levels(h, s)));
    return kOk;
}

int run_spectrum(const std::string& input, std::size_t max_len, std::uint64_t budget, const std::string& output) {
    const Hypergraph h = parse(read_file(input));
    auto sp = oracle_spectrum(h, max_len ? max_len : h.vertex_count(), budget);
    write_out(output, spectrum_csv(sp));
    if (sp.budget_exhausted) {
        std::cerr << "budget exhausted after length " << sp.searched_up_to << '\n';
        return kBudget;
    }
    return kOk;
}

int run_turan(std::size_t n, std::size_t r, std::size_t ell, std::uint64_t budget, const std::string& output) {
    auto rec = turan_exhaustive(n, r, ell, budget);
    write_out(output, to_json(rec).dump() + '\n');
    if (!rec.exact) {
        std::cerr << "budget exhausted: " << rec.value << " is a lower bound\n";
        return kBudget;
    }
    return kOk;
}

int run_verify(const std::string& input, const std::string& witnesses, std::size_t k, std::size_t bound) {
    const Hypergraph h = parse(read_file(input));
    auto cycles = cycles_from_jsonl(read_file(witnesses));
    auto audit = audit_cycles(h, cycles, k ? k : cycles.size(), bound);
    if (!audit.ok) {
        std::cout << "FAIL " << audit.invariant << '\n';
        return kVerification;
    }
    std::cout << "OK " << cycles.size() << " cycles\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge cycles of consecutive lengths"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a generated hypergraph in .hg format");
    g->add_option("--family", gen.family, "complete, steiner, random-linear, tight-path or bipartite")
        ->check(CLI::IsMember({"complete", "steiner", "random-linear", "tight-path", "bipartite"}));
    g->add_option("--n", gen.n, "vertices (first part for bipartite)");
    g->add_option("--r", gen.r, "uniformity");
    g->add_option("--m", gen.m, "edges, path length or second part");
    g->add_option("--p", gen.p, "edge probability for bipartite");
    g->add_option("--seed", gen.seed, "random seed");
    g->add_option("--output,-o", gen.output, "output file (stdout by default)");

    FindArgs find;
    auto* f = app.add_subcommand("find", "find k Berge cycles of consecutive lengths");
    f->add_option("--input,-i", find.input, ".hg file")->required();
    f->add_option("--k", find.k, "number of consecutive lengths")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    f->add_option("--mode", find.mode)->check(CLI::IsMember({"linear3", "linearR", "general3", "generalR", "auto"}));
    f->add_option("--emit-witnesses", find.witnesses, "JSON-lines witness file");
    f->add_option("--csv", find.csv, "CSV report (stdout by default)");
    f->add_option("--height", find.height, "run the length-controlled search with this h");
    f->add_option("--growth", find.growth, "level growth CSV for --height");
    f->add_option("--seed", find.seed, "unused by the finders, accepted for uniform scripts");

    std::string sk_input, sk_output;
    Vertex sk_root = 0;
    auto* sk = app.add_subcommand("skeleton", "level sizes and A/B/C class sizes as CSV");
    sk->add_option("--input,-i", sk_input)->required();
    sk->add_option("--root", sk_root);
    sk->add_option("--output,-o", sk_output);

    std::string sp_input, sp_output;
    std::size_t sp_max = 0;
    std::uint64_t sp_budget = 100'000'000;
    auto* sp = app.add_subcommand("spectrum", "Berge cycle lengths present, by exhaustive search");
    sp->add_option("--input,-i", sp_input)->required();
    sp->add_option("--max-len", sp_max, "largest length searched (n by default)");
    sp->add_option("--budget", sp_budget, "search node limit");
    sp->add_option("--output,-o", sp_output);

    std::size_t tn = 7, tr = 3, tl = 2;
    std::uint64_t t_budget = 100'000'000;
    std::string t_output;
    auto* t = app.add_subcommand("turan", "exact Turan number for Berge cycles at desk scale");
    t->add_option("--n", tn);
    t->add_option("--r", tr);
    t->add_option("--ell", tl, "forbidden cycle length");
    t->add_option("--budget", t_budget, "branch-and-bound node limit");
    t->add_option("--output,-o", t_output);

    std::string v_input, v_witnesses;
    std::size_t v_k = 0, v_bound = 0;
    auto* v = app.add_subcommand("verify", "check a witness file against a hypergraph");
    v->add_option("--input,-i", v_input)->required();
    v->add_option("--witnesses,-w", v_witnesses)->required();
    v->add_option("--k", v_k, "expected number of cycles (all lines by default)");
    v->add_option("--bound", v_bound, "upper bound on the shortest length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kPrecondition;
    }

    try {
        if (*g)
            return run_gen(gen);
        if (*f)
            return run_find(find);
        if (*sk)
            return run_skeleton(sk_input, sk_root, sk_output);
        if (*sp)
            return run_spectrum(sp_input, sp_max, sp_budget, sp_output);
        if (*t)
            return run_turan(tn, tr, tl, t_budget, t_output);
        return run_verify(v_input, v_witnesses, v_k, v_bound);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_for(e.kind());
    }
}
