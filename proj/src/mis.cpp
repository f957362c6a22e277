#include "idealgraph/mis.hpp"

#include <utility>
#include <vector>

#include "idealgraph/errors.hpp"

namespace idealgraph {

namespace {

class Solver {
 public:
  Solver(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget) {}

  CoverResult run() {
    Bitset best = solve(Bitset::full(n_));
    CoverResult r;
    r.independence_number = best.count();
    r.cover_number = n_ - r.independence_number;
    r.witness_independent = best.to_indices();
    for (int v = 0; v < n_; ++v) {
      if (!best.test(v)) r.witness_cover.push_back(v);
    }
    r.stats = {nodes_, reductions_};
    return r;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw SolverBudgetError("independent-set search exceeded the node budget of " +
                                  std::to_string(budget_),
                              nodes_, reductions_);
    }
  }

  int degree_in(const Bitset& pool, int v) const {
    return g_.neighbors(v).intersection_count(pool);
  }

  // Safe greedy moves: an isolated vertex always extends an optimum, and for
  // a degree-1 vertex some optimum contains it rather than its neighbor.
  void reduce(Bitset& pool, Bitset& chosen) {
    bool changed = true;
    while (changed) {
      changed = false;
      int pendant = -1;
      Bitset snapshot = pool;
      snapshot.for_each_set([&](int v) {
        int d = degree_in(pool, v);
        if (d == 0) {
          chosen.set(v);
          pool.reset(v);
          ++reductions_;
          changed = true;
        } else if (d == 1 && pendant < 0) {
          pendant = v;
        }
      });
      if (!changed && pendant >= 0) {
        int u = (g_.neighbors(pendant) & pool).first_set();
        chosen.set(pendant);
        pool.reset(pendant);
        pool.reset(u);
        ++reductions_;
        changed = true;
      }
    }
  }

  std::vector<Bitset> split_components(const Bitset& pool) const {
    std::vector<Bitset> comps;
    Bitset rest = pool;
    while (rest.any()) {
      Bitset comp(n_);
      Bitset frontier(n_);
      int s = rest.first_set();
      comp.set(s);
      frontier.set(s);
      while (frontier.any()) {
        Bitset next(n_);
        frontier.for_each_set([&](int v) { next |= g_.neighbors(v); });
        next &= pool;
        next.subtract(comp);
        comp |= next;
        frontier = std::move(next);
      }
      comps.push_back(comp);
      rest.subtract(comp);
    }
    return comps;
  }

  bool clique_pool(const Bitset& pool) const {
    const int members = pool.count();
    bool ok = true;
    pool.for_each_set([&](int v) {
      if (degree_in(pool, v) != members - 1) ok = false;
    });
    return ok;
  }

  // Initial incumbent: repeatedly take a minimum-degree vertex.
  Bitset greedy_independent(Bitset pool) const {
    Bitset out(n_);
    while (pool.any()) {
      int best_v = -1;
      int best_d = n_ + 1;
      pool.for_each_set([&](int v) {
        int d = degree_in(pool, v);
        if (d < best_d) {
          best_d = d;
          best_v = v;
        }
      });
      out.set(best_v);
      pool.subtract(g_.neighbors(best_v));
      pool.reset(best_v);
    }
    return out;
  }

  // Any partition of the pool into cliques bounds the independent set by its
  // class count. Greedy first-fit in index order.
  int clique_cover_bound(const Bitset& pool) const {
    std::vector<Bitset> classes;
    pool.for_each_set([&](int v) {
      for (auto& c : classes) {
        if (c.is_subset_of(g_.neighbors(v))) {
          c.set(v);
          return;
        }
      }
      classes.emplace_back(n_);
      classes.back().set(v);
    });
    return static_cast<int>(classes.size());
  }

  // Exact maximum independent set within pool.
  Bitset solve(Bitset pool) {
    tick();
    Bitset chosen(n_);
    reduce(pool, chosen);
    if (pool.none()) return chosen;

    std::vector<Bitset> comps = split_components(pool);
    if (comps.size() > 1) {
      for (const auto& comp : comps) chosen |= solve(comp);
      return chosen;
    }
    if (clique_pool(pool)) {
      chosen.set(pool.first_set());
      return chosen;
    }

    Bitset best = greedy_independent(pool);
    branch(std::move(pool), Bitset(n_), best);
    chosen |= best;
    return chosen;
  }

  void branch(Bitset pool, Bitset current, Bitset& best) {
    tick();
    reduce(pool, current);
    if (pool.none()) {
      if (current.count() > best.count()) best = current;
      return;
    }
    if (current.count() + clique_cover_bound(pool) <= best.count()) return;
    if (clique_pool(pool)) {
      current.set(pool.first_set());
      if (current.count() > best.count()) best = current;
      return;
    }
    std::vector<Bitset> comps = split_components(pool);
    if (comps.size() > 1) {
      for (const auto& comp : comps) current |= solve(comp);
      if (current.count() > best.count()) best = current;
      return;
    }

    int v = -1;
    int dmax = -1;
    pool.for_each_set([&](int u) {
      int d = degree_in(pool, u);
      if (d > dmax) {
        dmax = d;
        v = u;
      }
    });

    Bitset with_v = pool;
    with_v.subtract(g_.neighbors(v));
    with_v.reset(v);
    Bitset current_with = current;
    current_with.set(v);
    branch(std::move(with_v), std::move(current_with), best);

    pool.reset(v);
    branch(std::move(pool), std::move(current), best);
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t reductions_ = 0;
};

}  // namespace

CoverResult max_independent_set(const Graph& g, std::uint64_t node_budget) {
  return Solver(g, node_budget).run();
}

bool verify_witness(const Graph& g, const CoverResult& result) {
  const int n = g.vertex_count();
  if (static_cast<int>(result.witness_independent.size()) != result.independence_number ||
      static_cast<int>(result.witness_cover.size()) != result.cover_number ||
      result.independence_number + result.cover_number != n) {
    return false;
  }
  Bitset independent(n);
  for (int v : result.witness_independent) {
    if (v < 0 || v >= n || independent.test(v)) return false;
    independent.set(v);
  }
  Bitset cover(n);
  for (int v : result.witness_cover) {
    if (v < 0 || v >= n || cover.test(v)) return false;
    cover.set(v);
  }
  bool ok = true;
  independent.for_each_set([&](int v) {
    if (g.neighbors(v).intersects(independent)) ok = false;
  });
  for (int u = 0; u < n && ok; ++u) {
    g.neighbors(u).for_each_set([&](int v) {
      if (u < v && !cover.test(u) && !cover.test(v)) ok = false;
    });
  }
  return ok;
}

}  // namespace idealgraph
