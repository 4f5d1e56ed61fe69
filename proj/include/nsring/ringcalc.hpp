#ifndef NSRING_RINGCALC_HPP
#define NSRING_RINGCALC_HPP

// Length and Hilbert-function calculus for monomial ideals of S = k[[H]].
// For monomial ideals J ⊆ I the length of I/J is |Val(I) \ Val(J)|, the value
// set of n^i is the i-fold sumset of the minimal generators plus H, and the
// ideal sum I + J has value set Val(I) ∪ Val(J).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nsring/error.hpp"
#include "nsring/ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

/// Lazily extended list of Val(n^0), Val(n^1), ... for one semigroup.
/// Not thread-safe; use one ladder per thread.
class PowerLadder {
 public:
  explicit PowerLadder(NumericalSemigroup h)
      : h_(std::move(h)), maximal_(maximal_ideal(h_)), powers_{whole(h_)} {}

  const NumericalSemigroup& semigroup() const noexcept { return h_; }

  const RelativeIdeal& power(std::size_t i) {
    while (powers_.size() <= i) powers_.push_back(sum(powers_.back(), maximal_));
    return powers_[i];
  }

  /// h_S(i) = |Val(n^i) \ Val(n^{i+1})|.
  Value graded_piece(std::size_t i) {
    auto const& lower = power(i + 1);
    auto const& upper = power(i);
    Value count = 0;
    for (Value x = upper.min(); x < lower.threshold(); ++x) {
      if (upper.contains(x) && !lower.contains(x)) ++count;
    }
    return count;
  }

 private:
  NumericalSemigroup h_;
  RelativeIdeal maximal_;
  std::vector<RelativeIdeal> powers_;
};

inline RelativeIdeal power_value_set(const NumericalSemigroup& h, std::size_t i) {
  PowerLadder ladder(h);
  return ladder.power(i);
}

/// ℓ(I/J) = |Val(I) \ Val(J)| for J ⊆ I.
inline Value length_between(const RelativeIdeal& outer, const RelativeIdeal& inner) {
  if (!is_subset(inner, outer)) {
    throw Error(ErrorCode::NotNested, "second ideal is not contained in the first");
  }
  Value count = 0;
  for (Value x = outer.min(); x < inner.threshold(); ++x) {
    if (outer.contains(x) && !inner.contains(x)) ++count;
  }
  return count;
}

struct HilbertProfile {
  std::vector<Value> values;     // h(0), ..., h(s)
  Value length = 0;              // Σ h(i) = d(I)
  Value top_socle_degree = 0;    // s(I)
  Value order = 0;               // v_S(I) = max{n : I ⊆ n^n}
  Value edim_quotient = 0;       // h(1)
};

namespace detail {

inline Value order_of(const RelativeIdeal& ideal, PowerLadder& ladder) {
  std::size_t n = 0;
  while (is_subset(ideal, ladder.power(n + 1))) ++n;
  return static_cast<Value>(n);
}

}  // namespace detail

inline HilbertProfile hilbert_profile(const RelativeIdeal& ideal, PowerLadder& ladder) {
  detail::require_proper(ideal);
  HilbertProfile p;
  RelativeIdeal current = unite(ladder.power(0), ideal);
  for (std::size_t i = 0;; ++i) {
    RelativeIdeal next = unite(ladder.power(i + 1), ideal);
    if (next == current) break;
    p.values.push_back(length_between(current, next));
    current = std::move(next);
  }
  for (Value h : p.values) p.length += h;
  p.top_socle_degree = static_cast<Value>(p.values.size()) - 1;
  p.edim_quotient = p.values.size() > 1 ? p.values[1] : 0;
  p.order = detail::order_of(ideal, ladder);
  return p;
}

inline HilbertProfile hilbert_profile(const RelativeIdeal& ideal) {
  PowerLadder ladder(ideal.parent());
  return hilbert_profile(ideal, ladder);
}

struct AssocGradedHilbert {
  std::vector<Value> values;  // h_S(0), ..., h_S(i_max)
  bool non_decreasing = true;
  std::size_t horizon = 0;    // last index inspected for the flag
};

/// Hilbert function of the associated graded ring of k[[H]]. The flag is
/// computed up to the first i >= max(i_max, 2c) at which h_S has equalled e
/// for e consecutive indices.
inline AssocGradedHilbert assoc_graded_hilbert(const NumericalSemigroup& h, std::size_t i_max) {
  PowerLadder ladder(h);
  AssocGradedHilbert out;
  auto const e = h.multiplicity();
  auto const min_horizon = std::max<std::size_t>(i_max, static_cast<std::size_t>(2 * h.conductor()));
  Value run = 0;
  Value previous = 0;
  for (std::size_t i = 0;; ++i) {
    Value const hi = ladder.graded_piece(i);
    if (i <= i_max) out.values.push_back(hi);
    if (i > 0 && hi < previous) out.non_decreasing = false;
    previous = hi;
    run = hi == e ? run + 1 : 0;
    if (i >= min_horizon && run >= e) {
      out.horizon = i;
      break;
    }
  }
  return out;
}

/// deg t^v = max{n : v ∈ Val(n^n)}: the longest factorization of v into
/// minimal generators.
inline Value degree_of_value(const NumericalSemigroup& h, Value v) {
  if (!h.contains(v)) {
    throw Error(ErrorCode::NotAnElement, std::to_string(v) + " is not in the semigroup");
  }
  std::vector<Value> best(static_cast<std::size_t>(v) + 1, -1);
  best[0] = 0;
  for (Value x = 1; x <= v; ++x) {
    for (Value a : h.minimal_generators()) {
      if (a > x) break;
      auto const prev = best[static_cast<std::size_t>(x - a)];
      if (prev >= 0) best[static_cast<std::size_t>(x)] = std::max(best[static_cast<std::size_t>(x)], prev + 1);
    }
  }
  return best[static_cast<std::size_t>(v)];
}

/// Values of the monomial socle of S/I: v ∈ H \ I with v + n ⊆ I.
inline std::vector<Value> socle_values(const RelativeIdeal& ideal) {
  detail::require_proper(ideal);
  return detail::socle(ideal);
}

struct SdegReport {
  Value length = 0;
  Value top_socle_degree = 0;
  Value order = 0;
  Value edim_quotient = 0;
  Value bound = 0;               // ℓ - Σ_{i<v} h_S(i) + v - 1
  bool bound_equality = false;
  Value mu_power = 0;            // μ(m^v) = ℓ((n^v + I)/(n^{v+1} + I))
  bool shape_tail_ones = false;  // h(i) = 1 for v <= i <= s
  bool is_power_of_max = false;
  std::optional<Value> stretched_bound;  // ℓ - edim(S/I), when v >= 2
  bool stretched_equality = false;
};

inline SdegReport sdeg_report(const RelativeIdeal& ideal, PowerLadder& ladder) {
  auto const p = hilbert_profile(ideal, ladder);
  SdegReport r;
  r.length = p.length;
  r.top_socle_degree = p.top_socle_degree;
  r.order = p.order;
  r.edim_quotient = p.edim_quotient;

  Value head = 0;
  for (Value i = 0; i < p.order; ++i) head += ladder.graded_piece(static_cast<std::size_t>(i));
  r.bound = p.length - head + p.order - 1;
  r.bound_equality = p.top_socle_degree == r.bound;

  auto const v = static_cast<std::size_t>(p.order);
  r.mu_power = v < p.values.size() ? p.values[v] : 0;
  r.shape_tail_ones = v < p.values.size() &&
                      std::all_of(p.values.begin() + static_cast<std::ptrdiff_t>(v),
                                  p.values.end(), [](Value x) { return x == 1; });
  r.is_power_of_max = ideal == ladder.power(v);
  if (p.order >= 2) {
    r.stretched_bound = p.length - p.edim_quotient;
    r.stretched_equality = p.top_socle_degree == *r.stretched_bound;
  }
  return r;
}

inline SdegReport sdeg_report(const RelativeIdeal& ideal) {
  PowerLadder ladder(ideal.parent());
  return sdeg_report(ideal, ladder);
}

struct MultiplicityBound {
  Value top_socle_degree = 0;
  Value multiplicity = 0;
  Value frobenius_g = 0;
  bool holds = false;           // s <= s·e <= g(I)
  bool chain_equality = false;  // s = s·e = g(I)
};

inline MultiplicityBound multiplicity_bound_check(const RelativeIdeal& ideal,
                                                  PowerLadder& ladder) {
  auto const p = hilbert_profile(ideal, ladder);
  MultiplicityBound b;
  b.top_socle_degree = p.top_socle_degree;
  b.multiplicity = ideal.parent().multiplicity();
  b.frobenius_g = ideal.threshold() - 1;
  Value const middle = b.top_socle_degree * b.multiplicity;
  b.holds = b.top_socle_degree <= middle && middle <= b.frobenius_g;
  b.chain_equality = b.top_socle_degree == middle && middle == b.frobenius_g;
  return b;
}

inline MultiplicityBound multiplicity_bound_check(const RelativeIdeal& ideal) {
  PowerLadder ladder(ideal.parent());
  return multiplicity_bound_check(ideal, ladder);
}

}  // namespace nsring

#endif
