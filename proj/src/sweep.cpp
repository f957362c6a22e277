#include "idealgraph/sweep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "idealgraph/errors.hpp"

namespace idealgraph {

CaseFilter parse_case_filter(std::string_view text) {
  if (text == "all") return CaseFilter::All;
  if (text == "reduced") return CaseFilter::Reduced;
  if (text == "nonreduced") return CaseFilter::NonReduced;
  if (text == "mixed") return CaseFilter::Mixed;
  throw std::invalid_argument("unknown case filter: " + std::string(text));
}

namespace {

bool filter_matches(CaseFilter filter, CaseTag tag) {
  switch (filter) {
    case CaseFilter::All: return true;
    case CaseFilter::Reduced: return tag == CaseTag::Reduced;
    case CaseFilter::NonReduced: return tag == CaseTag::NonReduced;
    case CaseFilter::Mixed: return tag == CaseTag::Mixed;
  }
  return false;
}

void extend(std::vector<int>& factors, unsigned long long ideal_product,
            unsigned long long max_ideals, std::vector<RingSpec>& out) {
  if (!factors.empty()) out.push_back(RingSpec(factors));
  // non-increasing continuations keep one representative per multiset
  int cap = factors.empty() ? static_cast<int>(max_ideals / 2) - 2  // single factor bound
                            : factors.back();
  for (int next = 0; next <= cap; ++next) {
    auto step = static_cast<unsigned long long>(next) + 2;
    if (ideal_product > max_ideals / step) continue;
    factors.push_back(next);
    extend(factors, ideal_product * step, max_ideals, out);
    factors.pop_back();
  }
}

}  // namespace

std::vector<RingSpec> enumerate_canonical_specs(int max_vertices) {
  std::vector<RingSpec> out;
  if (max_vertices < 0) return out;
  auto max_ideals = static_cast<unsigned long long>(max_vertices) + 2;
  std::vector<int> factors;
  extend(factors, 1, max_ideals, out);

  std::sort(out.begin(), out.end(), [](const RingSpec& a, const RingSpec& b) {
    if (a.vertex_count() != b.vertex_count()) {
      return a.vertex_count() < b.vertex_count();
    }
    if (a.factor_count() != b.factor_count()) {
      return a.factor_count() < b.factor_count();
    }
    return a.factors < b.factors;
  });
  return out;
}

SweepOutcome run_sweep(int max_vertices, CaseFilter filter,
                       const AnalyzeOptions& options) {
  SweepOutcome outcome;
  for (const RingSpec& spec : enumerate_canonical_specs(max_vertices)) {
    if (!filter_matches(filter, classify(spec))) continue;
    try {
      outcome.reports.push_back(analyze(spec, options));
    } catch (const std::exception& e) {
      outcome.errors.push_back({spec.to_text(), e.what()});
    }
  }
  return outcome;
}

std::string sweep_summary(const SweepOutcome& outcome) {
  std::ostringstream out;
  out << "specs analysed : " << outcome.reports.size() << "\n";

  std::map<std::string, std::map<ClaimStatus, int>> counts;
  for (const auto& report : outcome.reports) {
    for (const auto& claim : report.claims) {
      ++counts[claim.id][claim.status];
    }
  }
  out << "claim summary  :\n";
  for (const auto& def : kClaimCatalog) {
    const auto& per = counts[def.id];
    auto count_of = [&](ClaimStatus s) {
      auto it = per.find(s);
      return it == per.end() ? 0 : it->second;
    };
    out << "  " << def.id << (def.must_hold ? " [must hold] " : "             ")
        << count_of(ClaimStatus::Pass) << " pass, " << count_of(ClaimStatus::Fail)
        << " fail, " << count_of(ClaimStatus::Convention) << " convention, "
        << count_of(ClaimStatus::NotApplicable) << " n/a"
        << "  (" << def.title << ")\n";
  }

  std::vector<std::string> failing;
  for (const auto& report : outcome.reports) {
    for (const auto& claim : report.claims) {
      if (claim.status == ClaimStatus::Fail) {
        failing.push_back(report.spec.to_text() + " " + claim.id + ": " + claim.detail);
      }
    }
  }
  if (!failing.empty()) {
    out << "failed claims  :\n";
    for (const auto& line : failing) out << "  " << line << "\n";
  }
  if (!outcome.errors.empty()) {
    out << "errors         :\n";
    for (const auto& err : outcome.errors) {
      out << "  " << err.spec_text << ": " << err.message << "\n";
    }
  }
  return out.str();
}

bool sweep_has_must_hold_failure(const SweepOutcome& outcome) {
  return std::any_of(outcome.reports.begin(), outcome.reports.end(),
                     has_must_hold_failure);
}

}  // namespace idealgraph
