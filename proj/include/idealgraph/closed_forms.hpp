#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealgraph/ring.hpp"

namespace idealgraph {

// Which closed-form family a ring spec falls under. m = non-field factors,
// n = field factors. Single-factor rings are complete-graph degenerates that
// no formula family covers.
enum class CaseTag { Reduced, NonReduced, Mixed, Uncovered };

std::string_view to_string(CaseTag tag);

// Closed-form values for one spec. These are predictions to be adjudicated:
// the analysis pipeline always computes ground truth independently and
// compares. clique_order_claimed carries the catalog value verbatim even
// where it disagrees with the direct count (mixed case); the counted value
// sits alongside it and computation decides.
struct ClosedFormPrediction {
  CaseTag case_tag = CaseTag::Uncovered;
  long long vertex_count = 0;
  std::optional<long long> beta;
  std::optional<long long> sdim;
  std::optional<long long> clique_order_claimed;
  std::optional<long long> clique_order_counted;
  std::string applicability_notes;
};

CaseTag classify(const RingSpec& spec);
ClosedFormPrediction predict(const RingSpec& spec);

// Formula primitives, exposed so boundary behavior can be probed outside the
// constructible-spec space.
long long reduced_beta(int fields);
long long reduced_sdim(int fields);
long long nonreduced_beta(int chains);
long long nonreduced_sdim(const std::vector<int>& chain_lengths);
long long nonreduced_clique_order(const std::vector<int>& chain_lengths);
long long mixed_beta(int chains, int fields);
long long mixed_sdim(const std::vector<int>& chain_lengths, int fields);
long long mixed_clique_order_claimed(const std::vector<int>& chain_lengths,
                                     int fields);
long long mixed_clique_order_counted(const std::vector<int>& chain_lengths);

// Where the case formulas meet: the mixed formula specialises exactly to the
// non-reduced one at zero fields, and undershoots the all-fields formula by
// one at zero chains. The gap is recorded, not reconciled.
struct BoundaryReport {
  bool mixed_matches_nonreduced_at_zero_fields = false;
  bool reduced_exceeds_mixed_by_one_at_zero_chains = false;
  long long reduced_two_fields_value = 0;
};

BoundaryReport boundary_consistency();

}  // namespace idealgraph
