#pragma once

#include <cstdint>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

inline constexpr std::uint64_t kDefaultSolverNodeBudget = 10'000'000;

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t reductions_applied = 0;
};

// Exact maximum independent set / minimum vertex cover pair. The two witness
// sets partition the vertices, so independence_number + cover_number always
// equals the vertex count.
struct CoverResult {
  int independence_number = 0;  // beta
  int cover_number = 0;         // alpha
  std::vector<int> witness_independent;
  std::vector<int> witness_cover;
  SolverStats stats;
};

// Branch and reduce: component decomposition, degree-0/1 reductions, clique
// detection, greedy clique-cover upper bound, branching on the max-degree
// vertex with lowest-index tie-break. Fully deterministic; throws
// SolverBudgetError instead of ever returning a bound.
CoverResult max_independent_set(const Graph& g,
                                std::uint64_t node_budget = kDefaultSolverNodeBudget);

// Re-checks both witnesses against the adjacency structure.
bool verify_witness(const Graph& g, const CoverResult& result);

}  // namespace idealgraph
