#include "zeroforce/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "zeroforce/bounds.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/graph6.hpp"

namespace zf {

std::string to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::kHoldsProven: return "HOLDS_PROVEN";
        case ReportStatus::kHoldsConjectured: return "HOLDS_CONJECTURED";
        case ReportStatus::kViolationProvenRange: return "VIOLATION_PROVEN_RANGE";
        case ReportStatus::kViolationConjectured: return "VIOLATION_CONJECTURED";
        case ReportStatus::kUndecided: return "UNDECIDED";
        case ReportStatus::kSkipped: return "SKIPPED";
        case ReportStatus::kError: return "ERROR";
    }
    return "ERROR";
}

std::optional<long long> BoundReport::margin() const {
    if (!forcing || forcing->status != SolverStatus::kExact || !conj_bound) return std::nullopt;
    return forcing->lo - *conj_bound;
}

Json report_to_json(const BoundReport& r) {
    if (r.status == ReportStatus::kError)
        return {{"id", r.id}, {"status", "ERROR"}, {"reason", r.reason}};
    Json j{{"id", r.id},
           {"n", r.n},
           {"m", r.m},
           {"delta", r.delta},
           {"Delta", r.Delta},
           {"girth", r.girth_value ? Json(*r.girth_value) : Json("INFINITE")},
           {"forcing", r.forcing ? result_to_json(*r.forcing) : Json(nullptr)},
           {"conj_bound", r.conj_bound ? Json(*r.conj_bound) : Json("NOT_APPLICABLE")},
           {"status", to_string(r.status)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

std::string summary_to_csv(const CorpusSummary& s) {
    std::ostringstream out;
    out << "total,holds_proven,holds_conjectured,violation_proven_range,"
           "violation_conjectured,undecided,skipped,error,worst_margin,runtime_seconds\n";
    out << s.total << ',' << s.holds_proven << ',' << s.holds_conjectured << ','
        << s.violation_proven_range << ',' << s.violation_conjectured << ',' << s.undecided << ','
        << s.skipped << ',' << s.error << ',';
    if (s.worst_margin) out << *s.worst_margin;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s.runtime_seconds);
    out << ',' << buf << '\n';
    return out.str();
}

namespace {

BoundReport analyze_one(const Graph& g, std::string id, std::uint64_t budget,
                        const CorpusOptions* filters) {
    BoundReport r;
    r.id = std::move(id);
    r.n = g.order();
    DegreeStats stats = degree_stats(g);
    r.m = stats.m;
    r.delta = stats.delta;
    r.Delta = stats.Delta;
    r.girth_value = girth(g);

    if (r.delta < 2 || !r.girth_value) {
        r.status = ReportStatus::kSkipped;
        r.reason = r.delta < 2 ? "min_degree_below_2" : "acyclic";
        return r;
    }
    if (filters) {
        if (r.delta < filters->min_delta) {
            r.status = ReportStatus::kSkipped;
            r.reason = "filtered:min_delta";
            return r;
        }
        if ((filters->girth_min && *r.girth_value < *filters->girth_min) ||
            (filters->girth_max && *r.girth_value > *filters->girth_max)) {
            r.status = ReportStatus::kSkipped;
            r.reason = "filtered:girth_range";
            return r;
        }
    }

    r.conj_bound = girth_degree_bound(r.delta, *r.girth_value);
    r.forcing = forcing_number_exact(g, budget);
    const bool proven_range = *r.girth_value <= 10;
    if (r.forcing->lo >= *r.conj_bound)
        r.status = proven_range ? ReportStatus::kHoldsProven : ReportStatus::kHoldsConjectured;
    else if (r.forcing->hi < *r.conj_bound)
        r.status =
            proven_range ? ReportStatus::kViolationProvenRange : ReportStatus::kViolationConjectured;
    else
        r.status = ReportStatus::kUndecided;
    return r;
}

struct Task {
    std::string id;
    std::optional<Graph> graph;
    std::string error;
};

void add_file_tasks(const std::string& path, std::vector<Task>& tasks) {
    std::ifstream in(path);
    if (!in) {
        tasks.push_back({path, std::nullopt, "cannot open file"});
        return;
    }
    if (path.ends_with(".g6")) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line == "\r") continue;
            std::string id = path + ":" + std::to_string(lineno);
            try {
                tasks.push_back({id, parse_graph6(line), ""});
            } catch (const std::exception& e) {
                tasks.push_back({id, std::nullopt, e.what()});
            }
        }
        return;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        tasks.push_back({path, parse_edge_list(buf.str()), ""});
    } catch (const std::exception& e) {
        tasks.push_back({path, std::nullopt, e.what()});
    }
}

}  // namespace

BoundReport verify_graph(const Graph& g, std::uint64_t budget, std::string id) {
    return analyze_one(g, std::move(id), budget, nullptr);
}

CorpusSummary verify_corpus(const std::vector<std::string>& inputs, const CorpusOptions& opt,
                            std::ostream& jsonl_out, std::ostream* csv_out) {
    auto started = std::chrono::steady_clock::now();

    std::vector<Task> tasks;
    for (const std::string& input : inputs) {
        if (input.starts_with("gen:")) {
            std::string spec = input.substr(4);
            try {
                tasks.push_back({spec, generate(spec), ""});
            } catch (const std::exception& e) {
                tasks.push_back({spec, std::nullopt, e.what()});
            }
        } else {
            add_file_tasks(input, tasks);
        }
    }

    std::vector<BoundReport> reports(tasks.size());
    auto run_task = [&](std::size_t i) {
        const Task& t = tasks[i];
        if (!t.graph) {
            reports[i].id = t.id;
            reports[i].status = ReportStatus::kError;
            reports[i].reason = t.error;
        } else {
            reports[i] = analyze_one(*t.graph, t.id, opt.budget, &opt);
        }
    };

    const int workers = std::max(1, opt.workers);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    CorpusSummary s;
    for (const BoundReport& r : reports) {
        jsonl_out << report_to_json(r).dump() << '\n';
        ++s.total;
        switch (r.status) {
            case ReportStatus::kHoldsProven: ++s.holds_proven; break;
            case ReportStatus::kHoldsConjectured: ++s.holds_conjectured; break;
            case ReportStatus::kViolationProvenRange: ++s.violation_proven_range; break;
            case ReportStatus::kViolationConjectured: ++s.violation_conjectured; break;
            case ReportStatus::kUndecided: ++s.undecided; break;
            case ReportStatus::kSkipped: ++s.skipped; break;
            case ReportStatus::kError: ++s.error; break;
        }
        if (auto m = r.margin(); m && (!s.worst_margin || *m < *s.worst_margin))
            s.worst_margin = m;
    }
    s.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (csv_out) *csv_out << summary_to_csv(s);
    return s;
}

}  // namespace zf
