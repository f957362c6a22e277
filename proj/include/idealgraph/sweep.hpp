#pragma once

#include <string>
#include <vector>

#include "idealgraph/report.hpp"

namespace idealgraph {

enum class CaseFilter { All, Reduced, NonReduced, Mixed };

// Parses "all" / "reduced" / "nonreduced" / "mixed"; throws std::invalid_argument.
CaseFilter parse_case_filter(std::string_view text);

// All canonical specs (factors sorted non-increasing, one representative per
// permutation class) whose graph fits in max_vertices, ordered by vertex
// count, then factor count, then factor tuple.
std::vector<RingSpec> enumerate_canonical_specs(int max_vertices);

struct SweepError {
  std::string spec_text;
  std::string message;
};

struct SweepOutcome {
  std::vector<VerificationReport> reports;
  std::vector<SweepError> errors;
};

SweepOutcome run_sweep(int max_vertices, CaseFilter filter,
                       const AnalyzeOptions& options);

// Per-claim PASS/FAIL/... counts plus any per-spec errors, as a fixed-format
// text block.
std::string sweep_summary(const SweepOutcome& outcome);

bool sweep_has_must_hold_failure(const SweepOutcome& outcome);

}  // namespace idealgraph
