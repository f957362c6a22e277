#include "idealgraph/ring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "idealgraph/errors.hpp"

namespace idealgraph {

namespace {

// Zero patterns are packed into a 64-bit mask; the vertex budget keeps real
// factor counts in single digits, this is just a hard wall for bad input.
constexpr std::size_t kMaxFactors = 60;

void validate_factors(const std::vector<int>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("ring spec needs at least one factor");
  }
  if (factors.size() > kMaxFactors) {
    throw std::invalid_argument("ring spec has too many factors");
  }
  for (int f : factors) {
    if (f < 0) throw std::invalid_argument("chain lengths must be non-negative");
  }
}

}  // namespace

RingSpec::RingSpec(std::vector<int> f) : factors(std::move(f)) {
  validate_factors(factors);
}

int RingSpec::chain_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                        [](int f) { return f >= 1; }));
}

int RingSpec::field_count() const { return factor_count() - chain_count(); }

std::vector<int> RingSpec::chain_lengths() const {
  std::vector<int> out;
  for (int f : factors) {
    if (f >= 1) out.push_back(f);
  }
  return out;
}

unsigned long long RingSpec::ideal_count() const {
  constexpr unsigned long long kSaturated = ~0ULL;
  unsigned long long total = 1;
  for (int f : factors) {
    auto step = static_cast<unsigned long long>(f) + 2;
    if (total > kSaturated / step) return kSaturated;
    total *= step;
  }
  return total;
}

unsigned long long RingSpec::vertex_count() const { return ideal_count() - 2; }

RingSpec RingSpec::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
      token.remove_prefix(1);
    }
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) {
      token.remove_suffix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad ring spec token: expected a non-negative integer");
    }
    factors.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RingSpec(std::move(factors));
}

std::string RingSpec::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(factors[i]);
  }
  return out;
}

RingSpec RingSpec::canonical() const {
  RingSpec c = *this;
  std::sort(c.factors.begin(), c.factors.end(), std::greater<>());
  return c;
}

int ZeroPattern::nzc() const { return std::popcount(zero_mask); }

bool is_zero_ideal(const IdealVector& v) {
  return std::all_of(v.levels.begin(), v.levels.end(),
                     [](int l) { return l == 0; });
}

bool is_unit_ideal(const RingSpec& spec, const IdealVector& v) {
  if (v.levels.size() != spec.factors.size()) {
    throw std::invalid_argument("ideal vector length does not match factor count");
  }
  for (std::size_t i = 0; i < v.levels.size(); ++i) {
    if (v.levels[i] != spec.factors[i] + 1) return false;
  }
  return true;
}

bool is_vertex(const RingSpec& spec, const IdealVector& v) {
  return !is_zero_ideal(v) && !is_unit_ideal(spec, v);
}

std::vector<IdealVector> enumerate_vertices(const RingSpec& spec, int vertex_budget) {
  unsigned long long needed = spec.vertex_count();
  if (needed > static_cast<unsigned long long>(vertex_budget)) {
    throw CapacityError("spec " + spec.to_text() + " needs " +
                        std::to_string(needed) + " vertices, budget is " +
                        std::to_string(vertex_budget));
  }

  const int f = spec.factor_count();
  std::vector<IdealVector> out;
  out.reserve(static_cast<std::size_t>(needed));

  IdealVector cur;
  cur.levels.assign(static_cast<std::size_t>(f), 0);
  while (true) {
    if (is_vertex(spec, cur)) out.push_back(cur);
    // lexicographic successor: rightmost coordinate advances first
    int i = f - 1;
    while (i >= 0 && cur.levels[i] == spec.factors[i] + 1) {
      cur.levels[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur.levels[i];
  }
  return out;
}

IdealVector intersect(const IdealVector& a, const IdealVector& b) {
  if (a.levels.size() != b.levels.size()) {
    throw std::invalid_argument("ideal vectors come from different rings");
  }
  IdealVector r;
  r.levels.resize(a.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    r.levels[i] = std::min(a.levels[i], b.levels[i]);
  }
  return r;
}

IdealVector complement(const RingSpec& spec, const IdealVector& v) {
  if (!is_vertex(spec, v)) {
    throw std::invalid_argument("complement is defined for non-trivial ideals only");
  }
  IdealVector r;
  r.levels.resize(v.levels.size());
  for (std::size_t i = 0; i < v.levels.size(); ++i) {
    r.levels[i] = v.levels[i] == 0 ? spec.factors[i] + 1 : 0;
  }
  return r;
}

ZeroPattern zero_pattern(const IdealVector& v) {
  ZeroPattern p;
  p.factor_count = static_cast<int>(v.levels.size());
  for (std::size_t i = 0; i < v.levels.size(); ++i) {
    if (v.levels[i] == 0) p.zero_mask |= std::uint64_t{1} << i;
  }
  return p;
}

int nzc(const IdealVector& v) { return zero_pattern(v).nzc(); }

bool same_class(const IdealVector& a, const IdealVector& b) {
  return zero_pattern(a) == zero_pattern(b);
}

std::string to_text(const IdealVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.levels.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v.levels[i]);
  }
  out += ')';
  return out;
}

}  // namespace idealgraph
