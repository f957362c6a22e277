#include "idealgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace idealgraph {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  assert(vertex_count >= 0);
  adj_.assign(static_cast<std::size_t>(n_), Bitset(n_));
}

Graph Graph::complete(int vertex_count) {
  Graph g(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    g.adj_[static_cast<std::size_t>(v)] = Bitset::full(vertex_count);
    g.adj_[static_cast<std::size_t>(v)].reset(v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[static_cast<std::size_t>(u)].set(v);
  adj_[static_cast<std::size_t>(v)].set(u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  return u != v && adj_[static_cast<std::size_t>(u)].test(v);
}

int Graph::degree(int v) const { return neighbors(v).count(); }

const Bitset& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    adj_[static_cast<std::size_t>(u)].for_each_set([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Dist Dist::hops(int h) {
  assert(h >= 0 && static_cast<std::uint32_t>(h) < kInfiniteRaw);
  return Dist{static_cast<std::uint32_t>(h)};
}

int Dist::value() const {
  assert(!unreachable());
  return static_cast<int>(raw);
}

DistanceMatrix::DistanceMatrix(int vertex_count) : n_(vertex_count) {
  cells_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
                kUnreachableCell);
  for (int v = 0; v < n_; ++v) cells_[index(v, v)] = 0;
}

std::size_t DistanceMatrix::index(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(v);
}

Dist DistanceMatrix::at(int u, int v) const {
  std::uint16_t cell = cells_[index(u, v)];
  return cell == kUnreachableCell ? Dist::infinite() : Dist::hops(cell);
}

void DistanceMatrix::set_hops(int u, int v, int hops) {
  assert(hops >= 0 && hops < kUnreachableCell);
  cells_[index(u, v)] = static_cast<std::uint16_t>(hops);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dm(n);
  for (int s = 0; s < n; ++s) {
    Bitset visited(n);
    Bitset frontier(n);
    visited.set(s);
    frontier.set(s);
    int level = 0;
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each_set([&](int v) { next |= g.neighbors(v); });
      next.subtract(visited);
      if (next.none()) break;
      ++level;
      next.for_each_set([&](int w) { dm.set_hops(s, w, level); });
      visited |= next;
      frontier = std::move(next);
    }
  }
  return dm;
}

Graph complement_graph(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    // the complemented row also contains u itself; u < v filters it out
    g.neighbors(u).complemented().for_each_set([&](int v) {
      if (u < v) c.add_edge(u, v);
    });
  }
  return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  const int n = g.vertex_count();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= n) throw std::out_of_range("induced vertex out of range");
    if (position[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("induced vertex list has duplicates");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Graph sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.neighbors(keep[i]).for_each_set([&](int w) {
      int j = position[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
    });
  }
  return sub;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  Bitset seen(n);
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    Bitset comp(n);
    Bitset frontier(n);
    comp.set(s);
    frontier.set(s);
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each_set([&](int v) { next |= g.neighbors(v); });
      next.subtract(comp);
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(comp.to_indices());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<int> diameter(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.vertex_count();
  int best = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Dist d = dist.at(u, v);
      if (d.unreachable()) return std::nullopt;
      best = std::max(best, d.value());
    }
  }
  return best;
}

bool is_clique(const Graph& g, const std::vector<int>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!g.has_edge(ids[i], ids[j])) return false;
    }
  }
  return true;
}

bool is_clique_subset(const Graph& g, const Bitset& subset) {
  const int members = subset.count();
  bool ok = true;
  subset.for_each_set([&](int v) {
    if (g.neighbors(v).intersection_count(subset) != members - 1) ok = false;
  });
  return ok;
}

}  // namespace idealgraph
