#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zeroforce/graph.hpp"
#include "zeroforce/json_io.hpp"
#include "zeroforce/solver.hpp"

namespace zf {

// SKIPPED covers both inapplicable graphs (minimum degree < 2 or acyclic)
// and graphs excluded by corpus filters; the reason field tells them apart.
// ERROR marks unreadable or unparsable corpus entries.
enum class ReportStatus {
    kHoldsProven,
    kHoldsConjectured,
    kViolationProvenRange,
    kViolationConjectured,
    kUndecided,
    kSkipped,
    kError,
};

std::string to_string(ReportStatus s);

struct BoundReport {
    std::string id;
    int n = 0;
    std::int64_t m = 0;
    int delta = 0;
    int Delta = 0;
    Girth girth_value;                            // nullopt = INFINITE
    std::optional<ForcingNumberResult> forcing;   // absent when not solved
    std::optional<long long> conj_bound;          // absent = NOT_APPLICABLE
    ReportStatus status = ReportStatus::kError;
    std::string reason;                           // skip or error detail

    // F - conj_bound when the forcing number is exact and the bound applies.
    std::optional<long long> margin() const;
};

Json report_to_json(const BoundReport& r);

struct CorpusSummary {
    std::uint64_t total = 0;
    std::uint64_t holds_proven = 0;
    std::uint64_t holds_conjectured = 0;
    std::uint64_t violation_proven_range = 0;
    std::uint64_t violation_conjectured = 0;
    std::uint64_t undecided = 0;
    std::uint64_t skipped = 0;
    std::uint64_t error = 0;
    std::optional<long long> worst_margin;
    double runtime_seconds = 0.0;
};

std::string summary_to_csv(const CorpusSummary& s);

// Stats, girth, solver under budget, then the girth-degree bound verdict.
// Girth <= 10 outcomes are theorem-backed (PROVEN range); above that the
// bound is only conjectured, so violations there are findings, not bugs.
BoundReport verify_graph(const Graph& g, std::uint64_t budget = kDefaultSolverBudget,
                         std::string id = "");

struct CorpusOptions {
    int min_delta = 0;
    std::optional<int> girth_min;
    std::optional<int> girth_max;
    std::uint64_t budget = kDefaultSolverBudget;
    int workers = 1;
};

// Inputs are "gen:<spec>" generator entries, .g6 files (one record per
// line), or edge-list files (one graph per file). Unreadable entries become
// ERROR records and processing continues. One JSON line per record, in
// input order regardless of worker count, then a CSV summary if requested.
CorpusSummary verify_corpus(const std::vector<std::string>& inputs, const CorpusOptions& opt,
                            std::ostream& jsonl_out, std::ostream* csv_out = nullptr);

}  // namespace zf
