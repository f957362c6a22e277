#pragma once

#include <optional>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

inline constexpr int kDefaultOracleCap = 12;

// The strong resolving graph lives on the same vertex index space as its base
// graph; its edges are exactly the mutually-maximally-distant pairs. All base
// vertices are kept, isolated or not; mmd_support lists those incident to at
// least one edge, so "every vertex is in some MMD pair" stays a checkable
// claim rather than an assumption.
struct SrgGraph {
  Graph base;
  DistanceMatrix dist;
  Graph srg;
  std::vector<int> mmd_support;
};

// u, v are mutually maximally distant when no neighbor of either is farther
// from the other than d(u, v). Unreachable distances dominate every finite
// one, so a cross-component pair is MMD and a finite d(u, v) fails against an
// unreachable neighbor distance.
bool is_mmd(const DistanceMatrix& dist, const Graph& g, int u, int v);

SrgGraph build_srg(const Graph& base);
SrgGraph build_srg(const Graph& base, DistanceMatrix dist);

// w strongly resolves (u, v) when one of them lies on a shortest w-path to
// the other. nullopt when any pairwise distance is unreachable.
std::optional<bool> strongly_resolves(const DistanceMatrix& dist, int w, int u,
                                      int v);

struct BruteForceResult {
  int size = 0;
  std::vector<int> witness;  // lexicographically smallest minimum witness
};

// Exact minimum strong resolving set by subset enumeration. Independent of
// the srg/vertex-cover pipeline; used to cross-check it.
// Throws DisconnectedGraphError / CapacityError.
BruteForceResult brute_min_strong_resolving(const Graph& g,
                                            const DistanceMatrix& dist,
                                            int cap = kDefaultOracleCap);

// Exact metric dimension by subset enumeration, same preconditions.
int brute_metric_dimension(const Graph& g, const DistanceMatrix& dist,
                           int cap = kDefaultOracleCap);

}  // namespace idealgraph
