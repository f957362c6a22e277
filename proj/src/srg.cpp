#include "idealgraph/srg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "idealgraph/errors.hpp"

namespace idealgraph {

bool is_mmd(const DistanceMatrix& dist, const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("MMD needs two distinct vertices");
  const Dist duv = dist.at(u, v);
  auto side_holds = [&](int a, int b) {
    bool ok = true;
    g.neighbors(a).for_each_set([&](int w) {
      if (dist.at(b, w) > duv) ok = false;
    });
    return ok;
  };
  return side_holds(u, v) && side_holds(v, u);
}

namespace {

// For each vertex v and each realised distance value t, the set of vertices
// strictly farther from v than t (unreachable counts as farther than
// everything finite). Lets the all-pairs MMD sweep run on whole bit rows.
struct FartherSets {
  std::vector<std::uint16_t> values;          // sorted distinct off-diagonal cells
  std::vector<std::vector<Bitset>> farther;   // [v][value index]

  int value_index(std::uint16_t raw) const {
    auto it = std::lower_bound(values.begin(), values.end(), raw);
    return static_cast<int>(it - values.begin());
  }
};

FartherSets build_farther_sets(const DistanceMatrix& dist) {
  const int n = dist.vertex_count();
  FartherSets fs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) fs.values.push_back(dist.raw_cell(u, v));
    }
  }
  std::sort(fs.values.begin(), fs.values.end());
  fs.values.erase(std::unique(fs.values.begin(), fs.values.end()), fs.values.end());

  const int k = static_cast<int>(fs.values.size());
  fs.farther.assign(static_cast<std::size_t>(n),
                    std::vector<Bitset>(static_cast<std::size_t>(k), Bitset(n)));
  for (int v = 0; v < n; ++v) {
    // bucket by exact value, then suffix-union from the largest down
    std::vector<Bitset> bucket(static_cast<std::size_t>(k), Bitset(n));
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      bucket[static_cast<std::size_t>(fs.value_index(dist.raw_cell(v, w)))].set(w);
    }
    auto& rows = fs.farther[static_cast<std::size_t>(v)];
    for (int i = k - 2; i >= 0; --i) {
      rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i + 1)];
      rows[static_cast<std::size_t>(i)] |= bucket[static_cast<std::size_t>(i + 1)];
    }
  }
  return fs;
}

}  // namespace

SrgGraph build_srg(const Graph& base) {
  return build_srg(base, all_pairs_distances(base));
}

SrgGraph build_srg(const Graph& base, DistanceMatrix dist) {
  const int n = base.vertex_count();
  SrgGraph out{base, std::move(dist), Graph(n), {}};

  if (n >= 2) {
    FartherSets fs = build_farther_sets(out.dist);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        int t = fs.value_index(out.dist.raw_cell(u, v));
        const Bitset& far_from_v = fs.farther[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        const Bitset& far_from_u = fs.farther[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)];
        if (!base.neighbors(u).intersects(far_from_v) &&
            !base.neighbors(v).intersects(far_from_u)) {
          out.srg.add_edge(u, v);
        }
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (out.srg.degree(v) > 0) out.mmd_support.push_back(v);
  }
  return out;
}

std::optional<bool> strongly_resolves(const DistanceMatrix& dist, int w, int u,
                                      int v) {
  const Dist wu = dist.at(w, u);
  const Dist wv = dist.at(w, v);
  const Dist uv = dist.at(u, v);
  if (wu.unreachable() || wv.unreachable() || uv.unreachable()) {
    return std::nullopt;
  }
  return wu.value() == wv.value() + uv.value() ||
         wv.value() == wu.value() + uv.value();
}

namespace {

// Lexicographically ordered k-subsets of 0..n-1.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void require_oracle_preconditions(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw CapacityError(std::string(what) + ": graph has " +
                        std::to_string(g.vertex_count()) +
                        " vertices, oracle cap is " + std::to_string(cap));
  }
  if (!is_connected(g)) {
    throw DisconnectedGraphError(std::string(what) + ": graph is disconnected");
  }
}

}  // namespace

BruteForceResult brute_min_strong_resolving(const Graph& g,
                                            const DistanceMatrix& dist,
                                            int cap) {
  require_oracle_preconditions(g, cap, "brute_min_strong_resolving");
  const int n = g.vertex_count();

  auto resolves_all = [&](const std::vector<int>& set) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool resolved = false;
        for (int w : set) {
          if (strongly_resolves(dist, w, u, v).value()) {
            resolved = true;
            break;
          }
        }
        if (!resolved) return false;
      }
    }
    return true;
  };

  for (int k = 0; k <= n; ++k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      if (resolves_all(combo)) return {k, combo};
    } while (k > 0 && next_combination(combo, n));
  }
  return {n, {}};  // unreachable: the full vertex set always resolves
}

int brute_metric_dimension(const Graph& g, const DistanceMatrix& dist, int cap) {
  require_oracle_preconditions(g, cap, "brute_metric_dimension");
  const int n = g.vertex_count();

  auto resolving = [&](const std::vector<int>& set) {
    Bitset in_set(n);
    for (int w : set) in_set.set(w);
    for (int u = 0; u < n; ++u) {
      if (in_set.test(u)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (in_set.test(v)) continue;
        bool split = false;
        for (int w : set) {
          if (dist.raw_cell(w, u) != dist.raw_cell(w, v)) {
            split = true;
            break;
          }
        }
        if (!split) return false;
      }
    }
    return true;
  };

  for (int k = 0; k <= n; ++k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      if (resolving(combo)) return k;
    } while (k > 0 && next_combination(combo, n));
  }
  return n;
}

}  // namespace idealgraph
