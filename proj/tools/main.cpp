#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "zeroforce/bounds.hpp"
#include "zeroforce/extremal.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/graph6.hpp"
#include "zeroforce/harness.hpp"
#include "zeroforce/json_io.hpp"
#include "zeroforce/prooftrace.hpp"

namespace {

// Generator specs win over graph6: the generator grammar is a small closed set
// of names, so a collision would need a graph6 record spelling one of them out.
zf::Graph load_graph(const std::string& text) {
    try {
        return zf::generate(text);
    } catch (const zf::ParseError&) {
    }
    try {
        return zf::parse_graph6(text);
    } catch (const zf::ParseError& e) {
        throw zf::ParseError(std::string("--graph is neither a generator spec nor graph6: ") +
                             e.what());
    }
}

zf::VertexSet parse_set(const std::string& csv, int n) {
    zf::VertexSet s(n);
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string token = csv.substr(pos, comma - pos);
        pos = comma + 1;
        std::size_t first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        std::size_t last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        long long v;
        try {
            std::size_t used;
            v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw zf::ParseError("--set entry is not an integer: " + token);
        }
        if (v < 0 || v >= n) throw zf::DomainError("--set vertex out of range: " + token);
        s.set(static_cast<int>(v));
    }
    return s;
}

int cmd_simulate(const std::string& graph_arg, const std::string& set_arg) {
    zf::Graph g = load_graph(graph_arg);
    zf::ForcingTrace t = zf::closure(g, parse_set(set_arg, g.order()));
    zf::Json j = zf::trace_to_json(t);
    j["final"] = t.final.to_vector();
    j["forced_all"] = t.final.count() == g.order();
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_solve(const std::string& graph_arg, std::uint64_t budget) {
    zf::Graph g = load_graph(graph_arg);
    std::cout << zf::result_to_json(zf::forcing_number_exact(g, budget)).dump(2) << '\n';
    return 0;
}

int cmd_analyze(const std::string& graph_arg, const std::string& set_arg, int window) {
    zf::Graph g = load_graph(graph_arg);
    zf::ForcingTrace t = zf::closure(g, parse_set(set_arg, g.order()));
    if (t.steps.empty()) {
        std::cerr << "analyze: the process never fires from this set; nothing to decompose\n";
        return 1;
    }
    zf::Girth gir = zf::girth(g);
    const int steps = static_cast<int>(t.steps.size());
    int L = window;
    if (L == 0) L = gir ? std::min(*gir - 2, steps) : steps;
    if (L < 1 || L > steps) {
        std::cerr << "analyze: --window must be between 1 and " << steps << '\n';
        return 1;
    }
    zf::Decomposition dec = zf::decompose(g, t, L);
    zf::Json j = zf::decomposition_to_json(dec, zf::check_claims(g, dec));
    j["window_truncated"] = gir.has_value() && *gir - 2 > steps;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::vector<std::string>& inputs, const zf::CorpusOptions& opt,
               const std::string& out_path, std::string csv_path) {
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "verify: cannot open " << out_path << " for writing\n";
            return 1;
        }
        out = &out_file;
        if (csv_path.empty()) {
            csv_path = out_path;
            std::size_t dot = csv_path.find_last_of('.');
            if (dot != std::string::npos && csv_path.find('/', dot) == std::string::npos)
                csv_path.resize(dot);
            csv_path += ".csv";
        }
    }
    std::ofstream csv_file;
    if (!csv_path.empty()) {
        csv_file.open(csv_path);
        if (!csv_file) {
            std::cerr << "verify: cannot open " << csv_path << " for writing\n";
            return 1;
        }
    }
    zf::CorpusSummary s =
        zf::verify_corpus(inputs, opt, *out, csv_file.is_open() ? &csv_file : nullptr);
    return s.violation_proven_range > 0 ? 2 : 0;
}

int cmd_extremal(int n) {
    zf::ExtremalResult r = zf::max_c3c4_free(n);
    std::cout << r.max_edges << '\n';
    for (const zf::Graph& w : r.witnesses) std::cout << zf::encode_graph6(w) << '\n';
    return 0;
}

int cmd_bounds(int delta, int girth) {
    zf::Json j{{"delta", delta},
               {"girth", girth},
               {"girth_degree_bound", zf::girth_degree_bound(delta, girth)},
               {"davila_kenter_threshold",
                girth >= 7 ? zf::Json(zf::davila_kenter_threshold(delta, girth)) : zf::Json(nullptr)}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forcing-number toolkit: simulate, solve, and check girth bounds"};
    app.require_subcommand(1);

    std::string graph_arg, set_arg, out_path, csv_path;
    std::uint64_t budget = zf::kDefaultSolverBudget;
    int window = 0, extremal_n = 0, delta = 0, girth = 0;
    std::vector<std::string> inputs;
    zf::CorpusOptions corpus;

    CLI::App* simulate = app.add_subcommand("simulate", "Run the forcing process from a set");
    simulate->add_option("--graph", graph_arg, "generator spec or graph6 record")->required();
    simulate->add_option("--set", set_arg, "comma-separated initial vertices")->required();

    CLI::App* solve = app.add_subcommand("solve", "Exact forcing number with certificate");
    solve->add_option("--graph", graph_arg)->required();
    solve->add_option("--budget", budget, "closure-evaluation limit");

    CLI::App* analyze = app.add_subcommand("analyze", "Window decomposition and claim checks");
    analyze->add_option("--graph", graph_arg)->required();
    analyze->add_option("--set", set_arg)->required();
    analyze->add_option("--window", window, "window length (default min(girth-2, steps))");

    CLI::App* verify = app.add_subcommand("verify", "Check the girth bound over a corpus");
    verify->add_option("--input", inputs, "graph6/edge-list files or gen:<spec>")->required();
    verify->add_option("--min-delta", corpus.min_delta);
    verify->add_option("--girth-min", corpus.girth_min);
    verify->add_option("--girth-max", corpus.girth_max);
    verify->add_option("--budget", corpus.budget);
    verify->add_option("--workers", corpus.workers)->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "JSON-lines report path, or - for stdout")->required();
    verify->add_option("--csv", csv_path, "summary path (default: report path with .csv)");

    CLI::App* extremal = app.add_subcommand("extremal", "Max edges without 3- or 4-cycles");
    extremal->add_option("--n", extremal_n)->required();

    CLI::App* bounds = app.add_subcommand("bounds", "Bound formulas for given delta and girth");
    bounds->add_option("--delta", delta)->required();
    bounds->add_option("--girth", girth)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(graph_arg, set_arg);
        if (solve->parsed()) return cmd_solve(graph_arg, budget);
        if (analyze->parsed()) return cmd_analyze(graph_arg, set_arg, window);
        if (verify->parsed()) return cmd_verify(inputs, corpus, out_path, csv_path);
        if (extremal->parsed()) return cmd_extremal(extremal_n);
        if (bounds->parsed()) return cmd_bounds(delta, girth);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
