#include "idealgraph/closed_forms.hpp"

#include <cassert>

namespace idealgraph {

namespace {

long long pow2(int k) {
  assert(k >= 0 && k < 62);
  return 1LL << k;
}

long long prod_plus(const std::vector<int>& chain_lengths, int offset) {
  long long p = 1;
  for (int n : chain_lengths) p *= n + offset;
  return p;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Reduced: return "REDUCED";
    case CaseTag::NonReduced: return "NONREDUCED";
    case CaseTag::Mixed: return "MIXED";
    case CaseTag::Uncovered: return "UNCOVERED";
  }
  return "UNCOVERED";
}

CaseTag classify(const RingSpec& spec) {
  if (spec.factor_count() < 2) return CaseTag::Uncovered;
  const int m = spec.chain_count();
  const int n = spec.field_count();
  if (m == 0) return CaseTag::Reduced;
  if (n == 0) return CaseTag::NonReduced;
  return CaseTag::Mixed;
}

long long reduced_beta(int fields) { return pow2(fields - 1) - 1; }

long long reduced_sdim(int fields) {
  return pow2(fields) - pow2(fields - 1) - 1;
}

long long nonreduced_beta(int chains) { return pow2(chains - 1); }

long long nonreduced_sdim(const std::vector<int>& chain_lengths) {
  return prod_plus(chain_lengths, 2) - nonreduced_beta(static_cast<int>(chain_lengths.size())) - 2;
}

long long nonreduced_clique_order(const std::vector<int>& chain_lengths) {
  return prod_plus(chain_lengths, 1) - 1;
}

long long mixed_beta(int chains, int fields) { return pow2(chains + fields - 1); }

long long mixed_sdim(const std::vector<int>& chain_lengths, int fields) {
  return prod_plus(chain_lengths, 2) * pow2(fields) -
         mixed_beta(static_cast<int>(chain_lengths.size()), fields) - 2;
}

long long mixed_clique_order_claimed(const std::vector<int>& chain_lengths,
                                     int fields) {
  return prod_plus(chain_lengths, 1) * pow2(fields);
}

long long mixed_clique_order_counted(const std::vector<int>& chain_lengths) {
  // vertices with every component non-zero: fields are pinned to their whole
  // factor, chains pick any of n_i + 1 non-zero levels, minus the unit ideal
  return prod_plus(chain_lengths, 1) - 1;
}

ClosedFormPrediction predict(const RingSpec& spec) {
  ClosedFormPrediction p;
  p.case_tag = classify(spec);
  p.vertex_count = static_cast<long long>(spec.vertex_count());

  const std::vector<int> chains = spec.chain_lengths();
  const int m = spec.chain_count();
  const int n = spec.field_count();

  switch (p.case_tag) {
    case CaseTag::Reduced:
      p.beta = reduced_beta(n);
      p.sdim = reduced_sdim(n);
      p.applicability_notes = "all factors are fields; all-fields closed forms apply";
      if (n == 2) {
        p.applicability_notes +=
            "; base graph is disconnected, values follow the unreachable-distance convention";
      }
      break;
    case CaseTag::NonReduced:
      p.beta = nonreduced_beta(m);
      p.sdim = nonreduced_sdim(chains);
      p.clique_order_claimed = nonreduced_clique_order(chains);
      p.clique_order_counted = nonreduced_clique_order(chains);
      p.applicability_notes = "all factors are chain non-fields; closed forms apply";
      break;
    case CaseTag::Mixed:
      p.beta = mixed_beta(m, n);
      p.sdim = mixed_sdim(chains, n);
      p.clique_order_claimed = mixed_clique_order_claimed(chains, n);
      p.clique_order_counted = mixed_clique_order_counted(chains);
      p.applicability_notes =
          "chain and field factors present; the claimed clique order prod(n_i+1)*2^n "
          "disagrees with the zero-free vertex count prod(n_i+1)-1, computation decides";
      break;
    case CaseTag::Uncovered:
      p.applicability_notes =
          "single-factor ring: the graph is complete and no closed form applies";
      break;
  }
  return p;
}

BoundaryReport boundary_consistency() {
  BoundaryReport r;

  r.mixed_matches_nonreduced_at_zero_fields = true;
  const std::vector<std::vector<int>> chain_samples = {
      {1, 1}, {2, 2}, {1, 2}, {3, 1}, {1, 1, 1}, {2, 2, 2}, {3, 2, 1}};
  for (const auto& chains : chain_samples) {
    if (mixed_sdim(chains, 0) != nonreduced_sdim(chains)) {
      r.mixed_matches_nonreduced_at_zero_fields = false;
    }
  }

  r.reduced_exceeds_mixed_by_one_at_zero_chains = true;
  for (int n = 2; n <= 10; ++n) {
    if (reduced_sdim(n) - mixed_sdim({}, n) != 1) {
      r.reduced_exceeds_mixed_by_one_at_zero_chains = false;
    }
  }

  r.reduced_two_fields_value = reduced_sdim(2);
  return r;
}

}  // namespace idealgraph
