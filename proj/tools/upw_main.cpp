// Command-line front door: verify / construct / bounds / search / estimate /
// score over the library. Results go to stdout (text or a byte-stable JSON
// report), progress notes to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "upw/analytics.hpp"
#include "upw/bounds.hpp"
#include "upw/containment.hpp"
#include "upw/subseq.hpp"
#include "upw/superperm.hpp"
#include "upw/ucycle.hpp"
#include "upw/version.hpp"
#include "upw/zigzag.hpp"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_budget = 4,
    exit_verification = 5,
};

struct Options {
    std::string format = "text";
    int workers = 0;
    upw::SearchBudget budget;
    std::uint64_t seed = 1;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    double elapsed_ms = 0.0;

    void emit(const Options& opt) const {
        if (opt.format == "machine") {
            json j;
            j["command"] = command;
            j["inputs"] = inputs;
            j["results"] = results;
            // Kept null so machine reports stay byte-stable across runs;
            // wall-clock timing is text-mode only.
            j["timing_ms"] = nullptr;
            j["version"] = upw::version;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "command: " << command << "\n";
        for (const auto& [key, value] : inputs.items())
            std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
        std::cout << "results:\n";
        for (const auto& [key, value] : results.items())
            std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
        std::printf("timing: %.1f ms\n", elapsed_ms);
    }
};

// Accepts a literal word or @path. Fixture files may carry "n=<k>" header
// lines and "cyclic:" prefixes; the first word line is used.
upw::Word read_word_argument(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return upw::parse_word(arg);
    std::ifstream in(arg.substr(1));
    if (!in) throw upw::parse_error("cannot open file: " + arg.substr(1));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (std::isalpha(static_cast<unsigned char>(line[0])) &&
            line.find('=') != std::string::npos)
            continue;  // header lines like n=4
        if (line.rfind("cyclic:", 0) == 0) line = line.substr(7);
        return upw::parse_word(line);
    }
    throw upw::parse_error("no word found in file: " + arg.substr(1));
}

json witness_json(const upw::Word& w) {
    return upw::to_string(w);
}

std::string flavor_word(const upw::Word& w) { return upw::display_string(w); }

int run_verify(const std::string& flavor, const std::string& alphabet,
               int n, const std::string& word_arg, int max_missing, Report& report) {
    const upw::Word host = read_word_argument(word_arg);
    report.inputs["flavor"] = flavor;
    report.inputs["alphabet"] = alphabet;
    report.inputs["n"] = n;
    report.inputs["word"] = upw::to_string(host);

    int bound = 0;
    if (alphabet == "n") bound = n;
    else if (alphabet == "n+1") bound = n + 1;
    else if (alphabet == "unbounded") bound = 0;
    else throw upw::precondition_error("alphabet must be n, n+1 or unbounded");
    if (bound > 0 && host.max_letter() > bound)
        throw upw::precondition_error("word letters exceed the declared alphabet");

    const auto mode = flavor == "factor" ? upw::ContainmentMode::factor
                                         : upw::ContainmentMode::subsequence;
    if (flavor != "factor" && flavor != "subsequence")
        throw upw::precondition_error("flavor must be factor or subsequence");

    const auto missing = upw::missing_patterns(host, n, mode);
    report.results["universal"] = missing.empty();
    report.results["missing_count"] = missing.size();
    json listed = json::array();
    for (std::size_t i = 0; i < missing.size() && i < static_cast<std::size_t>(max_missing); ++i)
        listed.push_back(upw::to_string(missing[i]));
    report.results["missing"] = listed;
    return missing.empty() ? exit_ok : exit_verification;
}

int run_construct(const Options& opt, const std::string& kind, int n, int k, int alphabet,
                  Report& report) {
    report.inputs["kind"] = kind;
    report.inputs["n"] = n;
    if (kind == "at-superperm") {
        const upw::Word w = upw::at_superpermutation(n);
        if (!upw::is_superpermutation(w, n)) return exit_verification;
        report.results["word"] = flavor_word(w);
        report.results["length"] = w.size();
        return exit_ok;
    }
    if (kind == "miller") {
        const upw::Word w = upw::miller_word(n);
        if (n <= upw::max_pattern_length &&
            !upw::is_universal(w, n, upw::ContainmentMode::subsequence))
            return exit_verification;
        report.results["word"] = upw::to_string(w);
        report.results["length"] = w.size();
        return exit_ok;
    }
    if (kind == "zeta") {
        const upw::Permutation zeta = upw::zeta_permutation(n);
        const upw::Word z = upw::zigzag_word(n);
        if (!upw::order_homomorphic(z, zeta.word())) return exit_verification;
        report.results["word"] = upw::to_string(zeta);
        report.results["length"] = zeta.size();
        return exit_ok;
    }
    if (kind == "universal-perm") {
        const upw::Permutation u = upw::universal_permutation(n);
        if (n <= 8 && !upw::is_universal(u.word(), n, upw::ContainmentMode::subsequence))
            return exit_verification;
        report.results["word"] = upw::to_string(u);
        report.results["length"] = u.size();
        return exit_ok;
    }
    if (kind == "debruijn") {
        report.inputs["k"] = k;
        const upw::CyclicWord w = upw::generate_debruijn(n, k);
        if (!upw::is_debruijn(w, n, k)) return exit_verification;
        report.results["word"] = flavor_word(w.word);
        report.results["length"] = w.size();
        report.results["count"] = upw::debruijn_count(n, k).str();
        return exit_ok;
    }
    if (kind == "ucycle-search") {
        const int a = alphabet > 0 ? alphabet : n + 1;
        report.inputs["alphabet"] = a;
        const auto found =
            upw::search_perm_ucycle(n, a, opt.budget.long_run ? 0 : opt.budget.max_nodes);
        report.results["found"] = found.has_value();
        if (found) {
            if (!upw::is_perm_ucycle(*found, n)) return exit_verification;
            report.results["word"] = flavor_word(found->word);
            report.results["linearization"] = flavor_word(upw::ucycle_to_word(*found, n));
        }
        return exit_ok;
    }
    throw upw::precondition_error("unknown construct kind: " + kind);
}

json bounds_row_json(const upw::BoundsRow& row) {
    json entries = json::array();
    for (const auto& e : row.entries) {
        json item;
        item["name"] = e.name;
        item["kind"] = upw::to_string(e.kind);
        item["value"] = e.value;
        item["valid_from"] = e.valid_from;
        if (!e.note.empty()) item["note"] = e.note;
        entries.push_back(item);
    }
    return entries;
}

int run_bounds(const std::string& flavor, int n, Report& report) {
    report.inputs["n"] = n;
    report.inputs["flavor"] = flavor;
    const auto want = [&](const std::string& key) { return flavor == "all" || flavor == key; };
    json rows = json::object();
    const auto report_row = [&](const upw::BoundsRow& row) { rows[row.flavor] = bounds_row_json(row); };
    if (want("factor-n")) report_row(upw::superperm_bounds_row(n));
    if (want("factor-n1")) report_row(upw::factor_n_plus_1_bounds_row(n));
    if (want("factor-p")) report_row(upw::factor_unbounded_bounds_row(n));
    if (want("subseq-n")) report_row(upw::restricted_bounds_row(n));
    if (want("subseq-n1")) report_row(upw::subseq_n_plus_1_bounds_row(n));
    if (want("subseq-p")) report_row(upw::superpattern_bounds_row(n));
    if (rows.empty()) throw upw::precondition_error("unknown bounds flavor: " + flavor);
    report.results["bounds"] = rows;
    return exit_ok;
}

int run_search(const Options& opt, const std::string& kind, int n, Report& report) {
    report.inputs["kind"] = kind;
    report.inputs["n"] = n;
    upw::SearchOutcome outcome;
    if (kind == "superperm") outcome = upw::search_shortest_superperm(n, opt.budget);
    else if (kind == "subseq") outcome = upw::search_shortest_restricted(n, opt.budget);
    else if (kind == "superpattern") outcome = upw::search_shortest_superpattern(n, opt.budget);
    else throw upw::precondition_error("unknown search kind: " + kind);
    report.results["optimal_length"] = outcome.optimal_length;
    report.results["witness"] = witness_json(outcome.witness);
    report.results["exhaustive"] = outcome.exhaustive;
    report.results["nodes_expanded"] = outcome.nodes_expanded;
    std::cerr << "search " << kind << " n=" << n << ": best " << outcome.optimal_length
              << ", nodes " << outcome.nodes_expanded << "\n";
    return outcome.exhaustive ? exit_ok : exit_budget;
}

int run_estimate(const Options& opt, const std::string& kind, int n, int m,
                 std::uint64_t samples, int m_max, Report& report) {
    report.inputs["kind"] = kind;
    report.inputs["n"] = n;
    report.inputs["samples"] = samples;
    report.inputs["seed"] = opt.seed;
    if (kind == "t") {
        const int t = upw::t_threshold(n, samples, opt.seed);
        report.results["t"] = t;
        report.results["alon_reference"] = static_cast<double>(n) * n / 4.0;
        return exit_ok;
    }
    if (kind == "proportion") {
        report.inputs["m"] = m;
        const auto est = upw::estimate_universal_proportion(n, m, samples, opt.seed);
        report.results["proportion"] = est.proportion;
        report.results["hits"] = est.hits;
        report.results["samples"] = est.samples;
        report.results["exact"] = est.exact;
        return exit_ok;
    }
    if (kind == "curve") {
        // CSV on stdout, one row per length.
        std::cout << "n,m,proportion,exact\n";
        for (int len = 0; len <= m_max; ++len) {
            const auto est = upw::estimate_universal_proportion(n, len, samples, opt.seed);
            std::printf("%d,%d,%.9f,%d\n", n, len, est.proportion, est.exact ? 1 : 0);
        }
        return exit_ok;
    }
    throw upw::precondition_error("unknown estimate kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal permutation words: verification, construction, bounds and search"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--workers", opt.workers, "worker threads (0 = hardware default)");
    app.add_option("--budget-nodes", opt.budget.max_nodes, "search node budget");
    app.add_option("--budget-seconds", opt.budget.max_seconds, "search time budget");
    app.add_option("--seed", opt.seed, "sampling seed");
    app.add_flag("--long-run", opt.budget.long_run, "allow known long-running instances");

    std::string flavor = "factor", alphabet = "unbounded", word_arg, kind;
    int n = 1, k = 2, alphabet_size = 0, max_missing = 10, m = 0, m_max = 40;
    std::uint64_t samples = 10000;

    auto* verify = app.add_subcommand("verify", "check a word for universality");
    verify->add_option("--flavor", flavor, "factor or subsequence")->required();
    verify->add_option("--alphabet", alphabet, "n, n+1 or unbounded")->required();
    verify->add_option("-n,--n", n, "pattern length")->required();
    verify->add_option("word", word_arg, "word (or @file)")->required();
    verify->add_option("--max-missing", max_missing, "cap on listed missing patterns");

    auto* construct = app.add_subcommand("construct", "build a named object, self-verified");
    construct->add_option("kind", kind,
                          "at-superperm | miller | zeta | universal-perm | debruijn | ucycle-search")
        ->required();
    construct->add_option("-n,--n", n, "order")->required();
    construct->add_option("-k,--k", k, "alphabet size for debruijn");
    construct->add_option("--alphabet", alphabet_size, "alphabet size for ucycle-search");

    auto* bounds = app.add_subcommand("bounds", "print the six-flavor bounds table");
    bounds->add_option("-n,--n", n, "pattern length")->required();
    std::string bounds_flavor = "all";
    bounds->add_option("--flavor", bounds_flavor,
                       "all | factor-n | factor-n1 | factor-p | subseq-n | subseq-n1 | subseq-p");

    auto* search = app.add_subcommand("search", "exact shortest-object search");
    search->add_option("kind", kind, "superperm | subseq | superpattern")->required();
    search->add_option("-n,--n", n, "pattern length")->required();

    auto* estimate = app.add_subcommand("estimate", "universality proportion estimation");
    estimate->add_option("kind", kind, "t | proportion | curve")->required();
    estimate->add_option("-n,--n", n, "pattern length")->required();
    estimate->add_option("-m,--m", m, "host length (proportion)");
    estimate->add_option("--samples", samples, "sample count per length");
    estimate->add_option("--m-max", m_max, "largest host length (curve)");

    auto* score_cmd = app.add_subcommand("score", "zigzag embedding score of a word");
    score_cmd->add_option("word", word_arg, "word (or @file)")->required();

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (opt.workers > 0) omp_set_num_threads(opt.workers);
#endif

    Report report;
    const auto t0 = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (verify->parsed()) {
            report.command = "verify";
            code = run_verify(flavor, alphabet, n, word_arg, max_missing, report);
        } else if (construct->parsed()) {
            report.command = "construct";
            code = run_construct(opt, kind, n, k, alphabet_size, report);
        } else if (bounds->parsed()) {
            report.command = "bounds";
            code = run_bounds(bounds_flavor, n, report);
        } else if (search->parsed()) {
            report.command = "search";
            code = run_search(opt, kind, n, report);
        } else if (estimate->parsed()) {
            report.command = "estimate";
            const int ret = run_estimate(opt, kind, n, m, samples, m_max, report);
            if (kind == "curve") return ret;  // CSV already emitted
            code = ret;
        } else if (score_cmd->parsed()) {
            report.command = "score";
            const upw::Word w = read_word_argument(word_arg);
            report.inputs["word"] = upw::to_string(w);
            report.results["score"] = upw::score(w);
        }
    } catch (const upw::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const upw::budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const upw::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.emit(opt);
    return code;
}
