#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace idealgraph {

// Requested object exceeds a configured size limit (vertex budget, oracle cap).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation requires a connected graph.
class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact solver ran out of its search-node budget. Carries the partial stats;
// there is deliberately no "best effort" result.
class SolverBudgetError : public std::runtime_error {
 public:
  SolverBudgetError(const std::string& message, std::uint64_t nodes,
                    std::uint64_t reductions)
      : std::runtime_error(message),
        nodes_explored(nodes),
        reductions_applied(reductions) {}

  std::uint64_t nodes_explored;
  std::uint64_t reductions_applied;
};

}  // namespace idealgraph
