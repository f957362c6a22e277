#include "idealgraph/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "idealgraph/errors.hpp"
#include "idealgraph/graph_io.hpp"

namespace idealgraph {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::NotApplicable: return "NOT_APPLICABLE";
    case ClaimStatus::Convention: return "CONVENTION";
  }
  return "NOT_APPLICABLE";
}

bool claim_must_hold(std::string_view id) {
  for (const auto& def : kClaimCatalog) {
    if (id == def.id) return def.must_hold;
  }
  return false;
}

namespace {

// Everything the claim checks need in one place.
struct PipelineState {
  const RingSpec& spec;
  const std::vector<IdealVector>& vertices;
  const SrgGraph& sr;
  const std::vector<std::vector<int>>& srg_components;
  const std::vector<int>& class_of;          // class index per vertex
  const std::vector<Bitset>& class_members;  // vertices per class
  Bitset zero_free;                          // vertices with nzc == 0
  bool base_connected = true;
  CaseTag tag = CaseTag::Uncovered;
};

// A holding claim is only as strong as the distance convention it rests on;
// over a disconnected base graph we report CONVENTION instead of PASS.
ClaimStatus pass_status(const PipelineState& st) {
  return st.base_connected ? ClaimStatus::Pass : ClaimStatus::Convention;
}

ClaimCheck check_support(const PipelineState& st) {
  ClaimCheck c{"C1", ClaimStatus::NotApplicable, ""};
  if (st.tag == CaseTag::Uncovered) {
    c.detail = "no claim for single-factor rings";
    return c;
  }
  const int n = st.sr.base.vertex_count();
  const int support = static_cast<int>(st.sr.mmd_support.size());
  if (support == n) {
    c.status = pass_status(st);
    c.detail = "all " + std::to_string(n) + " vertices lie in an MMD pair";
  } else {
    c.status = ClaimStatus::Fail;
    std::string isolated;
    for (int v = 0; v < n; ++v) {
      if (st.sr.srg.degree(v) == 0) {
        if (!isolated.empty()) isolated += ", ";
        isolated += to_text(st.vertices[static_cast<std::size_t>(v)]);
      }
    }
    c.detail = "only " + std::to_string(support) + " of " + std::to_string(n) +
               " vertices lie in an MMD pair; isolated: " + isolated;
  }
  return c;
}

ClaimCheck check_edge_rule(const PipelineState& st) {
  ClaimCheck c{"C2", ClaimStatus::NotApplicable, ""};
  if (st.tag == CaseTag::Uncovered) {
    c.detail = "no claim for single-factor rings";
    return c;
  }
  const int n = st.sr.base.vertex_count();
  const Bitset all = Bitset::full(n);
  for (int u = 0; u < n; ++u) {
    // expected srg row: classmates plus base non-neighbors, minus u itself
    Bitset expected = st.class_members[static_cast<std::size_t>(st.class_of[static_cast<std::size_t>(u)])];
    expected |= all.and_not(st.sr.base.neighbors(u));
    expected.reset(u);
    if (!(expected == st.sr.srg.neighbors(u))) {
      Bitset diff = expected;
      diff ^= st.sr.srg.neighbors(u);
      int v = diff.first_set();
      c.status = ClaimStatus::Fail;
      c.detail = "pair " + to_text(st.vertices[static_cast<std::size_t>(u)]) + ", " +
                 to_text(st.vertices[static_cast<std::size_t>(v)]) +
                 " violates the edge characterisation";
      return c;
    }
  }
  c.status = pass_status(st);
  c.detail = "verified over all " + std::to_string(n * (n - 1) / 2) + " vertex pairs";
  return c;
}

ClaimCheck check_complement_identity(const PipelineState& st) {
  ClaimCheck c{"C3", ClaimStatus::NotApplicable, ""};
  if (st.tag != CaseTag::Reduced) {
    c.detail = "applies to all-fields rings only";
    return c;
  }
  Graph comp = complement_graph(st.sr.base);
  if (comp == st.sr.srg) {
    c.status = pass_status(st);
    c.detail = "srg equals the base complement (" +
               std::to_string(comp.edge_count()) + " edges)";
  } else {
    c.status = ClaimStatus::Fail;
    c.detail = "srg has " + std::to_string(st.sr.srg.edge_count()) +
               " edges, base complement has " + std::to_string(comp.edge_count());
  }
  return c;
}

ClaimCheck check_decomposition(const PipelineState& st) {
  ClaimCheck c{"C4", ClaimStatus::NotApplicable, ""};
  if (st.tag != CaseTag::NonReduced && st.tag != CaseTag::Mixed) {
    c.detail = "applies to rings with at least one chain factor and two factors";
    return c;
  }
  std::string sizes = "[";
  for (std::size_t i = 0; i < st.srg_components.size(); ++i) {
    if (i > 0) sizes += ", ";
    sizes += std::to_string(st.srg_components[i].size());
  }
  sizes += "]";
  if (st.srg_components.size() != 2) {
    c.status = ClaimStatus::Fail;
    c.detail = "expected 2 srg components, found " +
               std::to_string(st.srg_components.size()) + " " + sizes;
    return c;
  }
  const std::vector<int> zero_free_ids = st.zero_free.to_indices();
  int zf_comp = -1;
  for (std::size_t i = 0; i < st.srg_components.size(); ++i) {
    if (st.srg_components[i] == zero_free_ids) zf_comp = static_cast<int>(i);
  }
  if (zf_comp < 0) {
    c.status = ClaimStatus::Fail;
    c.detail = "no srg component coincides with the zero-free stratum; components " + sizes;
    return c;
  }
  if (!is_clique(st.sr.srg, zero_free_ids)) {
    c.status = ClaimStatus::Fail;
    c.detail = "zero-free stratum component is not a clique; components " + sizes;
    return c;
  }
  c.status = pass_status(st);
  c.detail = "components " + sizes + "; zero-free stratum is a clique of order " +
             std::to_string(zero_free_ids.size()) + ", remainder is connected";
  return c;
}

ClaimCheck check_beta(const PipelineState& st, const ClosedFormPrediction& pred,
                      int beta) {
  ClaimCheck c{"C5", ClaimStatus::NotApplicable, ""};
  if (!pred.beta.has_value()) {
    c.detail = "no closed form for this case";
    return c;
  }
  if (beta == *pred.beta) {
    c.status = pass_status(st);
    c.detail = "independence number " + std::to_string(beta) + " matches the closed form";
  } else {
    c.status = ClaimStatus::Fail;
    c.detail = "independence number " + std::to_string(beta) + ", closed form says " +
               std::to_string(*pred.beta);
  }
  return c;
}

ClaimCheck check_sdim(const PipelineState& st, const ClosedFormPrediction& pred,
                      int sdim) {
  ClaimCheck c{"C6", ClaimStatus::NotApplicable, ""};
  if (!pred.sdim.has_value()) {
    c.detail = "no closed form for this case";
    return c;
  }
  if (sdim == *pred.sdim) {
    c.status = pass_status(st);
    c.detail = "sdim " + std::to_string(sdim) + " matches the closed form";
  } else {
    c.status = ClaimStatus::Fail;
    c.detail = "sdim " + std::to_string(sdim) + ", closed form says " +
               std::to_string(*pred.sdim);
  }
  return c;
}

ClaimCheck check_clique_order(const PipelineState& st,
                              const ClosedFormPrediction& pred) {
  ClaimCheck c{"C7", ClaimStatus::NotApplicable, ""};
  if (!pred.clique_order_claimed.has_value()) {
    c.detail = "no clique-order claim for this case";
    return c;
  }
  const long long observed = st.zero_free.count();
  c.detail = "zero-free stratum order " + std::to_string(observed) + "; claimed " +
             std::to_string(*pred.clique_order_claimed) + ", counted " +
             std::to_string(*pred.clique_order_counted);
  c.status = observed == *pred.clique_order_claimed ? pass_status(st)
                                                    : ClaimStatus::Fail;
  return c;
}

OracleSection run_oracle(const SrgGraph& sr, int pipeline_sdim, int cap) {
  OracleSection o;
  if (sr.base.vertex_count() > cap) {
    o.status = OracleSection::Status::CapExceeded;
    return o;
  }
  if (!is_connected(sr.base)) {
    o.status = OracleSection::Status::NotApplicable;
    return o;
  }
  o.status = OracleSection::Status::Ok;
  BruteForceResult brute = brute_min_strong_resolving(sr.base, sr.dist, cap);
  o.brute_sdim = brute.size;
  o.brute_metric_dimension = brute_metric_dimension(sr.base, sr.dist, cap);
  o.agreement = brute.size == pipeline_sdim;
  return o;
}

}  // namespace

VerificationReport analyze(const RingSpec& spec, const AnalyzeOptions& options) {
  VerificationReport report;
  report.spec = spec;
  report.tag = classify(spec);

  const std::vector<IdealVector> vertices =
      enumerate_vertices(spec, options.vertex_budget);
  const int n = static_cast<int>(vertices.size());

  Graph base(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!is_zero_ideal(intersect(vertices[static_cast<std::size_t>(u)],
                                   vertices[static_cast<std::size_t>(v)]))) {
        base.add_edge(u, v);
      }
    }
  }

  SrgGraph sr = build_srg(std::move(base));
  const std::vector<std::vector<int>> srg_comps = components(sr.srg);

  // zero-pattern classes, indexed in first-seen vertex order
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<Bitset> class_members;
  {
    std::map<std::uint64_t, int> index_of_pattern;
    for (int v = 0; v < n; ++v) {
      std::uint64_t mask = zero_pattern(vertices[static_cast<std::size_t>(v)]).zero_mask;
      auto [it, inserted] = index_of_pattern.try_emplace(
          mask, static_cast<int>(class_members.size()));
      if (inserted) class_members.emplace_back(n);
      class_of[static_cast<std::size_t>(v)] = it->second;
      class_members[static_cast<std::size_t>(it->second)].set(v);
    }
  }

  PipelineState st{spec, vertices, sr, srg_comps, class_of, class_members,
                   Bitset(n)};
  for (int v = 0; v < n; ++v) {
    if (nzc(vertices[static_cast<std::size_t>(v)]) == 0) st.zero_free.set(v);
  }
  st.base_connected = is_connected(sr.base);
  st.tag = report.tag;

  report.cover = max_independent_set(sr.srg, options.solver_node_budget);
  if (!verify_witness(sr.srg, report.cover)) {
    throw std::logic_error("solver produced an inconsistent witness");
  }

  ComputedSection& c = report.computed;
  c.vertex_count = n;
  c.edge_count = sr.base.edge_count();
  c.connected = st.base_connected;
  c.diameter = diameter(sr.base, sr.dist);
  c.srg_edge_count = sr.srg.edge_count();
  c.mmd_support_size = static_cast<int>(sr.mmd_support.size());
  for (const auto& comp : srg_comps) {
    c.srg_component_sizes.push_back(static_cast<int>(comp.size()));
  }
  for (const auto& comp : srg_comps) {
    if (is_clique(sr.srg, comp)) {
      int order = static_cast<int>(comp.size());
      if (!c.clique_component_order || order > *c.clique_component_order) {
        c.clique_component_order = order;
      }
    }
  }
  c.zero_free_stratum_size = st.zero_free.count();
  c.beta = report.cover.independence_number;
  c.alpha = report.cover.cover_number;
  c.sdim = c.alpha;

  report.predicted = predict(spec);

  report.claims.push_back(check_support(st));
  report.claims.push_back(check_edge_rule(st));
  report.claims.push_back(check_complement_identity(st));
  report.claims.push_back(check_decomposition(st));
  report.claims.push_back(check_beta(st, report.predicted, c.beta));
  report.claims.push_back(check_sdim(st, report.predicted, c.sdim));
  report.claims.push_back(check_clique_order(st, report.predicted));

  if (options.run_oracle) {
    report.oracle = run_oracle(sr, c.sdim, options.oracle_cap);
  }
  return report;
}

bool has_must_hold_failure(const VerificationReport& report) {
  for (const auto& claim : report.claims) {
    if (claim.status == ClaimStatus::Fail && claim_must_hold(claim.id)) {
      return true;
    }
  }
  return false;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["spec"] = report.spec.to_text();
  j["case"] = std::string(to_string(report.tag));

  json computed;
  const ComputedSection& c = report.computed;
  computed["vertex_count"] = c.vertex_count;
  computed["edge_count"] = c.edge_count;
  computed["connected"] = c.connected;
  computed["diameter"] = c.diameter ? json(*c.diameter) : json(nullptr);
  computed["srg_edge_count"] = c.srg_edge_count;
  computed["mmd_support_size"] = c.mmd_support_size;
  computed["srg_component_sizes"] = c.srg_component_sizes;
  computed["clique_component_order"] =
      c.clique_component_order ? json(*c.clique_component_order) : json(nullptr);
  computed["zero_free_stratum_size"] = c.zero_free_stratum_size;
  computed["beta"] = c.beta;
  computed["alpha"] = c.alpha;
  computed["sdim"] = c.sdim;
  j["computed"] = std::move(computed);

  json solver;
  solver["nodes_explored"] = report.cover.stats.nodes_explored;
  solver["reductions_applied"] = report.cover.stats.reductions_applied;
  solver["witness_independent"] = report.cover.witness_independent;
  solver["witness_cover"] = report.cover.witness_cover;
  j["solver"] = std::move(solver);

  json predicted;
  const ClosedFormPrediction& p = report.predicted;
  predicted["vertex_count"] = p.vertex_count;
  predicted["beta"] = p.beta ? json(*p.beta) : json(nullptr);
  predicted["sdim"] = p.sdim ? json(*p.sdim) : json(nullptr);
  predicted["clique_order_claimed"] =
      p.clique_order_claimed ? json(*p.clique_order_claimed) : json(nullptr);
  predicted["clique_order_counted"] =
      p.clique_order_counted ? json(*p.clique_order_counted) : json(nullptr);
  predicted["applicability"] = p.applicability_notes;
  j["predicted"] = std::move(predicted);

  json claims = json::array();
  for (const auto& claim : report.claims) {
    json one;
    one["id"] = claim.id;
    one["status"] = std::string(to_string(claim.status));
    one["detail"] = claim.detail;
    claims.push_back(std::move(one));
  }
  j["claims"] = std::move(claims);

  if (report.oracle) {
    json o;
    switch (report.oracle->status) {
      case OracleSection::Status::Ok: o["status"] = "OK"; break;
      case OracleSection::Status::NotApplicable: o["status"] = "NOT_APPLICABLE"; break;
      case OracleSection::Status::CapExceeded: o["status"] = "CAP_EXCEEDED"; break;
    }
    o["brute_sdim"] =
        report.oracle->brute_sdim ? json(*report.oracle->brute_sdim) : json(nullptr);
    o["brute_metric_dimension"] = report.oracle->brute_metric_dimension
                                      ? json(*report.oracle->brute_metric_dimension)
                                      : json(nullptr);
    o["agreement"] =
        report.oracle->agreement ? json(*report.oracle->agreement) : json(nullptr);
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

std::string report_to_human(const VerificationReport& report) {
  std::ostringstream out;
  const ComputedSection& c = report.computed;
  out << "ring spec   : " << report.spec.to_text() << "  [" << to_string(report.tag)
      << "]\n";
  out << "base graph  : " << c.vertex_count << " vertices, " << c.edge_count
      << " edges, diameter ";
  if (c.diameter) {
    out << *c.diameter;
  } else {
    out << "infinite";
  }
  out << "\n";
  out << "srg         : " << c.srg_edge_count << " edges, mmd support "
      << c.mmd_support_size << "/" << c.vertex_count << ", components [";
  for (std::size_t i = 0; i < c.srg_component_sizes.size(); ++i) {
    if (i > 0) out << ", ";
    out << c.srg_component_sizes[i];
  }
  out << "]\n";
  out << "cover       : beta " << c.beta << ", alpha " << c.alpha << " (nodes "
      << report.cover.stats.nodes_explored << ", reductions "
      << report.cover.stats.reductions_applied << ")\n";
  out << "sdim        : " << c.sdim;
  if (report.predicted.sdim) {
    out << " (closed form " << *report.predicted.sdim << ")";
  } else {
    out << " (no closed form)";
  }
  out << "\n";
  out << "claims      :\n";
  for (const auto& claim : report.claims) {
    out << "  " << claim.id << " " << to_string(claim.status) << "  " << claim.detail
        << "\n";
  }
  if (report.oracle) {
    out << "oracle      : ";
    switch (report.oracle->status) {
      case OracleSection::Status::Ok:
        out << "brute sdim " << *report.oracle->brute_sdim << ", brute metric dim "
            << *report.oracle->brute_metric_dimension << ", agreement "
            << (*report.oracle->agreement ? "yes" : "NO");
        break;
      case OracleSection::Status::NotApplicable:
        out << "not applicable (disconnected base graph)";
        break;
      case OracleSection::Status::CapExceeded:
        out << "skipped (vertex count above oracle cap)";
        break;
    }
    out << "\n";
  }
  return out.str();
}

std::string csv_header() {
  std::string h = "spec,case,vertices,base_edges,diameter,srg_edges,mmd_support,"
                  "beta,alpha,sdim,predicted_sdim,oracle_sdim";
  for (const auto& def : kClaimCatalog) {
    h += ",";
    h += def.id;
  }
  return h;
}

std::string report_to_csv_row(const VerificationReport& report) {
  const ComputedSection& c = report.computed;
  std::string row = "\"" + report.spec.to_text() + "\"," +
                    std::string(to_string(report.tag)) + "," +
                    std::to_string(c.vertex_count) + "," +
                    std::to_string(c.edge_count) + ",";
  row += c.diameter ? std::to_string(*c.diameter) : std::string("inf");
  row += "," + std::to_string(c.srg_edge_count) + "," +
         std::to_string(c.mmd_support_size) + "," + std::to_string(c.beta) + "," +
         std::to_string(c.alpha) + "," + std::to_string(c.sdim) + ",";
  row += report.predicted.sdim ? std::to_string(*report.predicted.sdim) : std::string();
  row += ",";
  if (report.oracle && report.oracle->brute_sdim) {
    row += std::to_string(*report.oracle->brute_sdim);
  }
  for (const auto& claim : report.claims) {
    row += ",";
    row += to_string(claim.status);
  }
  return row;
}

}  // namespace idealgraph
