#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idealgraph {

inline constexpr int kDefaultVertexBudget = 512;

// A finite commutative ring presented as a product of chain factors. Each
// factor is described only by its chain length n_i = number of non-trivial
// ideals (n_i = 0 encodes a field). Ideal arithmetic never needs more: in a
// chain factor the ideals are totally ordered, so intersection is a minimum.
struct RingSpec {
  std::vector<int> factors;

  RingSpec() = default;
  explicit RingSpec(std::vector<int> f);

  int factor_count() const { return static_cast<int>(factors.size()); }
  // Number of non-field factors (n_i >= 1).
  int chain_count() const;
  // Number of field factors (n_i == 0).
  int field_count() const;
  // Chain lengths of the non-field factors, in spec order.
  std::vector<int> chain_lengths() const;

  // Total ideal count prod(n_i + 2); saturates instead of overflowing.
  unsigned long long ideal_count() const;
  // Vertex count of the intersection graph: prod(n_i + 2) - 2.
  unsigned long long vertex_count() const;

  // Text form "2,2" / "1,0" / "0,0,0".
  static RingSpec parse(std::string_view text);
  std::string to_text() const;

  // Factors sorted non-increasing; every derived quantity is invariant under
  // factor permutation.
  RingSpec canonical() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// One ideal of the product ring: a chain level per factor.
// Level 0 is the zero ideal of that factor, level n_i + 1 the whole factor.
struct IdealVector {
  std::vector<int> levels;

  friend bool operator==(const IdealVector&, const IdealVector&) = default;
};

// Which coordinates of an ideal vector are zero. Vertices with equal patterns
// form one neighborhood-equivalence class of the intersection graph.
struct ZeroPattern {
  std::uint64_t zero_mask = 0;
  int factor_count = 0;

  int nzc() const;  // number of zero components

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

bool is_zero_ideal(const IdealVector& v);
bool is_unit_ideal(const RingSpec& spec, const IdealVector& v);
// Non-trivial ideal, i.e. a vertex of the intersection graph.
bool is_vertex(const RingSpec& spec, const IdealVector& v);

// All vertices in lexicographic level order. This ordering fixes vertex
// indices for every downstream graph, report and export.
// Throws CapacityError when prod(n_i + 2) - 2 exceeds the budget.
std::vector<IdealVector> enumerate_vertices(const RingSpec& spec,
                                            int vertex_budget = kDefaultVertexBudget);

// Componentwise minimum; may be the zero ideal.
IdealVector intersect(const IdealVector& a, const IdealVector& b);

// Swaps zero and full components: zero where a_i != 0, the whole factor where
// a_i == 0. Defined for vertices only.
IdealVector complement(const RingSpec& spec, const IdealVector& v);

ZeroPattern zero_pattern(const IdealVector& v);
int nzc(const IdealVector& v);
bool same_class(const IdealVector& a, const IdealVector& b);

// "(1,0)" style display form, used for graph labels and report details.
std::string to_text(const IdealVector& v);

}  // namespace idealgraph
