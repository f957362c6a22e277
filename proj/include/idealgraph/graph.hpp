#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idealgraph/bitset.hpp"

namespace idealgraph {

// Dense undirected graph over vertex indices 0..n-1, adjacency as packed bit
// rows. Symmetric, irreflexive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph complete(int vertex_count);

  int vertex_count() const { return n_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const Bitset& neighbors(int v) const;

  int edge_count() const;
  // Pairs (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

// Hop distance with an explicit unreachable value that orders above every
// finite distance and never enters arithmetic.
struct Dist {
  static constexpr std::uint32_t kInfiniteRaw = 0xFFFFFFFFu;

  std::uint32_t raw = kInfiniteRaw;

  static Dist infinite() { return Dist{}; }
  static Dist hops(int h);

  bool unreachable() const { return raw == kInfiniteRaw; }
  int value() const;  // finite hop count; asserts reachability

  friend auto operator<=>(const Dist&, const Dist&) = default;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int vertex_count);

  int vertex_count() const { return n_; }
  Dist at(int u, int v) const;

  // Builder access; cells default to unreachable, diagonal to zero.
  void set_hops(int u, int v, int hops);

  static constexpr std::uint16_t kUnreachableCell = 0xFFFF;
  std::uint16_t raw_cell(int u, int v) const { return cells_[index(u, v)]; }

 private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint16_t> cells_;
};

// Exact unweighted shortest paths, one BFS per source.
DistanceMatrix all_pairs_distances(const Graph& g);

Graph complement_graph(const Graph& g);

// Subgraph induced by `keep` (distinct, in-range ids); vertex i of the result
// is keep[i]. Throws std::out_of_range / std::invalid_argument on bad input.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

// Largest finite distance; nullopt when the graph is disconnected. Graphs on
// zero or one vertex have diameter 0.
std::optional<int> diameter(const Graph& g, const DistanceMatrix& dist);

bool is_clique(const Graph& g, const std::vector<int>& ids);
bool is_clique_subset(const Graph& g, const Bitset& subset);

}  // namespace idealgraph
