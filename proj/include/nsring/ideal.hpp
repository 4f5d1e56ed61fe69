#ifndef NSRING_IDEAL_HPP
#define NSRING_IDEAL_HPP

// Relative ideals of a numerical semigroup H: subsets F of Z, bounded below,
// with F + H ⊆ F. For a monomial fractional ideal of k[[H]] this is its value
// set, so lengths of monomial modules become cardinalities of set differences.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsring/error.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

/// Normal form: `exceptional` lists the members below `threshold`, every
/// integer >= threshold is a member, and threshold - 1 is not.
class RelativeIdeal {
 public:
  /// Validates the normal form and closure under H before constructing.
  static RelativeIdeal from_parts(NumericalSemigroup parent, std::vector<Value> exceptional,
                                  Value threshold) {
    if (!std::is_sorted(exceptional.begin(), exceptional.end()) ||
        std::adjacent_find(exceptional.begin(), exceptional.end()) != exceptional.end()) {
      throw Error(ErrorCode::InvalidIdeal, "exceptional values must be strictly increasing");
    }
    if (!exceptional.empty() && exceptional.back() >= threshold) {
      throw Error(ErrorCode::InvalidIdeal, "exceptional values must lie below the threshold");
    }
    if (!exceptional.empty() && exceptional.back() == threshold - 1) {
      throw Error(ErrorCode::InvalidIdeal, "threshold is not minimal");
    }
    RelativeIdeal ideal(std::move(parent), std::move(exceptional), threshold);
    for (Value x : ideal.exceptional_) {
      for (Value a : ideal.parent_.minimal_generators()) {
        if (!ideal.contains(x + a)) {
          throw Error(ErrorCode::InvalidIdeal, "set is not closed under adding " +
                                                   std::to_string(a) + " to " + std::to_string(x));
        }
      }
    }
    return ideal;
  }

  const NumericalSemigroup& parent() const noexcept { return parent_; }
  const std::vector<Value>& exceptional() const noexcept { return exceptional_; }
  Value threshold() const noexcept { return threshold_; }

  /// Smallest member.
  Value min() const noexcept { return exceptional_.empty() ? threshold_ : exceptional_.front(); }

  bool contains(Value x) const noexcept {
    if (x >= threshold_) return true;
    return std::binary_search(exceptional_.begin(), exceptional_.end(), x);
  }

  /// True when the set is contained in H (the value set of an ideal of S).
  bool is_integral() const noexcept {
    if (min() < 0 || threshold_ < parent_.conductor()) return false;
    return std::all_of(exceptional_.begin(), exceptional_.end(),
                       [this](Value x) { return parent_.contains(x); });
  }

  /// Members v with v - h outside the set for every nonzero h in H.
  std::vector<Value> minimal_generators() const {
    std::vector<Value> out;
    auto const& gens = parent_.minimal_generators();
    Value const top = threshold_ + parent_.multiplicity();
    for (Value v = min(); v < top; ++v) {
      if (!contains(v)) continue;
      bool minimal = std::none_of(gens.begin(), gens.end(),
                                  [&](Value a) { return contains(v - a); });
      if (minimal) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.threshold_ == b.threshold_ && a.exceptional_ == b.exceptional_ &&
           a.parent_ == b.parent_;
  }

 private:
  template <class Pred>
  friend RelativeIdeal make_ideal_from_window(const NumericalSemigroup&, Value, Value, Pred);

  RelativeIdeal(NumericalSemigroup parent, std::vector<Value> exceptional, Value threshold)
      : parent_(std::move(parent)), exceptional_(std::move(exceptional)), threshold_(threshold) {}

  NumericalSemigroup parent_;
  std::vector<Value> exceptional_;
  Value threshold_;
};

/// Builds an ideal from a membership predicate that is false below `lo` and
/// true from `hi` on; only [lo, hi) is scanned.
template <class Pred>
RelativeIdeal make_ideal_from_window(const NumericalSemigroup& parent, Value lo, Value hi,
                                     Pred in) {
  Value threshold = hi;
  while (threshold > lo && in(threshold - 1)) --threshold;
  std::vector<Value> exceptional;
  for (Value x = lo; x < threshold; ++x) {
    if (in(x)) exceptional.push_back(x);
  }
  return RelativeIdeal(parent, std::move(exceptional), threshold);
}

namespace detail {

inline void require_same_parent(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.parent() == b.parent())) {
    throw Error(ErrorCode::ParentMismatch, "ideals belong to different semigroups");
  }
}

}  // namespace detail

/// a ⊆ b.
inline bool is_subset(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_parent(a, b);
  for (Value x = a.min(); x < b.threshold(); ++x) {
    if (a.contains(x) && !b.contains(x)) return false;
  }
  return true;
}

/// Union of the translates g + H over the given generators.
inline RelativeIdeal ideal_from_generators(const NumericalSemigroup& h,
                                           std::span<const Value> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no ideal generators given");
  Value const lo = *std::min_element(gens.begin(), gens.end());
  return make_ideal_from_window(h, lo, lo + h.conductor(), [&](Value x) {
    return std::any_of(gens.begin(), gens.end(), [&](Value g) { return h.contains(x - g); });
  });
}

inline RelativeIdeal ideal_from_generators(const NumericalSemigroup& h,
                                           std::initializer_list<Value> gens) {
  return ideal_from_generators(h, std::span<const Value>(gens.begin(), gens.size()));
}

inline RelativeIdeal principal_ideal(const NumericalSemigroup& h, Value x) {
  return ideal_from_generators(h, {x});
}

/// H viewed as an ideal of itself.
inline RelativeIdeal whole(const NumericalSemigroup& h) { return principal_ideal(h, 0); }

/// H \ {0}, the value set of the maximal ideal.
inline RelativeIdeal maximal_ideal(const NumericalSemigroup& h) {
  return ideal_from_generators(h, h.minimal_generators());
}

/// x + y over all pairs (the value set of the product of the ideals).
inline RelativeIdeal sum(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_parent(a, b);
  std::vector<Value> gens;
  for (Value x : a.minimal_generators()) {
    for (Value y : b.minimal_generators()) gens.push_back(x + y);
  }
  return ideal_from_generators(a.parent(), gens);
}

/// Set union (the value set of the ideal sum I + J).
inline RelativeIdeal unite(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_parent(a, b);
  return make_ideal_from_window(a.parent(), std::min(a.min(), b.min()),
                                std::min(a.threshold(), b.threshold()),
                                [&](Value x) { return a.contains(x) || b.contains(x); });
}

inline RelativeIdeal intersect(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_parent(a, b);
  return make_ideal_from_window(a.parent(), std::max(a.min(), b.min()),
                                std::max(a.threshold(), b.threshold()),
                                [&](Value x) { return a.contains(x) && b.contains(x); });
}

/// a - b = {z : z + b ⊆ a}, the colon (a : b).
inline RelativeIdeal difference(const RelativeIdeal& a, const RelativeIdeal& b) {
  detail::require_same_parent(a, b);
  auto const gens = b.minimal_generators();
  return make_ideal_from_window(a.parent(), a.min() - b.min(), a.threshold() - b.min(),
                                [&](Value z) {
                                  return std::all_of(gens.begin(), gens.end(), [&](Value g) {
                                    return a.contains(z + g);
                                  });
                                });
}

inline RelativeIdeal shift(const RelativeIdeal& a, Value k) {
  return make_ideal_from_window(a.parent(), a.min() + k, a.threshold() + k,
                                [&](Value x) { return a.contains(x - k); });
}

enum class IdealOp { Sum, Intersect, Difference, Union, Shift };

/// Dispatches a binary ideal operation; `k` is only read for Shift, which
/// ignores `b`.
inline RelativeIdeal ideal_algebra(const RelativeIdeal& a, const RelativeIdeal& b, IdealOp op,
                                   Value k = 0) {
  switch (op) {
    case IdealOp::Sum: return sum(a, b);
    case IdealOp::Intersect: return intersect(a, b);
    case IdealOp::Difference: return difference(a, b);
    case IdealOp::Union: return unite(a, b);
    case IdealOp::Shift: return shift(a, k);
  }
  throw std::logic_error("unknown ideal operation");
}

/// H \ D(i) = {h in H : s_i - h not in H}.
inline RelativeIdeal divisor_complement(const NumericalSemigroup& h, std::size_t i) {
  Value const s = h.element(i);
  return make_ideal_from_window(h, 0, std::max(s + 1, h.conductor()), [&](Value x) {
    return h.contains(x) && !h.contains(s - x);
  });
}

/// d(I) = |H \ I|, the length of S/I.
inline Value colength(const RelativeIdeal& ideal) {
  if (!ideal.is_integral()) {
    throw Error(ErrorCode::NotIntegral, "ideal is not contained in its semigroup");
  }
  Value d = 0;
  for (Value x = 0; x < ideal.threshold(); ++x) {
    if (ideal.parent().contains(x) && !ideal.contains(x)) ++d;
  }
  return d;
}

struct IdealMetrics {
  Value frobenius_g = 0;                  // g(I), the largest integer outside I
  std::optional<Value> d;                 // |H \ I|, only for I ⊆ H
  Value c_of_I = 0;                       // g(I) + 1
  std::optional<std::size_t> n_I;         // s_{n_I} = c(I), when c(I) >= c
  std::vector<Value> minimal_generator_values;
};

inline IdealMetrics metrics(const RelativeIdeal& ideal) {
  IdealMetrics m;
  m.frobenius_g = ideal.threshold() - 1;
  m.c_of_I = ideal.threshold();
  if (ideal.is_integral()) m.d = colength(ideal);
  if (m.c_of_I >= ideal.parent().conductor()) m.n_I = ideal.parent().index_of(m.c_of_I);
  m.minimal_generator_values = ideal.minimal_generators();
  return m;
}

/// Ω = {g(H) - a : a ∉ H}, the standard canonical ideal.
inline RelativeIdeal standard_canonical(const NumericalSemigroup& h) {
  Value const g = h.frobenius();
  return make_ideal_from_window(h, 0, g + 1, [&](Value x) { return !h.contains(g - x); });
}

/// The x with I = x + Ω, if I is canonical.
inline std::optional<Value> canonical_shift(const RelativeIdeal& ideal) {
  Value const x = ideal.min();
  if (shift(standard_canonical(ideal.parent()), x) == ideal) return x;
  return std::nullopt;
}

inline bool is_canonical(const RelativeIdeal& ideal) { return canonical_shift(ideal).has_value(); }

namespace detail {

inline void require_proper(const RelativeIdeal& ideal) {
  if (!ideal.is_integral()) {
    throw Error(ErrorCode::NotIntegral, "ideal is not contained in its semigroup");
  }
  if (ideal == whole(ideal.parent())) {
    throw Error(ErrorCode::NotProper, "ideal equals the whole semigroup");
  }
}

/// Values v in H \ I with v + a in I for every minimal generator a.
inline std::vector<Value> socle(const RelativeIdeal& ideal) {
  std::vector<Value> out;
  auto const& h = ideal.parent();
  auto const& gens = h.minimal_generators();
  for (Value v = 0; v < ideal.threshold(); ++v) {
    if (!h.contains(v) || ideal.contains(v)) continue;
    if (std::all_of(gens.begin(), gens.end(), [&](Value a) { return ideal.contains(v + a); })) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace detail

struct IrreducibleResult {
  bool irreducible = false;
  std::optional<std::size_t> index;  // i with I = H \ D(i)
  std::vector<Value> socle;
};

inline IrreducibleResult is_irreducible(const RelativeIdeal& ideal) {
  detail::require_proper(ideal);
  IrreducibleResult r;
  r.socle = detail::socle(ideal);
  if (r.socle.size() != 1) return r;
  auto const& h = ideal.parent();
  r.index = h.index_of(r.socle.front());
  if (!(divisor_complement(h, *r.index) == ideal)) {
    throw std::logic_error("socle of length one but ideal is not a divisor complement");
  }
  r.irreducible = true;
  return r;
}

/// Irredundant decomposition I = ∩ (H \ D(i_j)), components sorted by s_i.
inline std::vector<RelativeIdeal> irreducible_decomposition(const RelativeIdeal& ideal) {
  detail::require_proper(ideal);
  auto const& h = ideal.parent();

  // Every v in H \ I gives a component H \ D(v) containing I; x in H \ I is
  // excluded by component v iff v - x in H. Drop components greedily from the
  // largest value down while every x stays excluded by some survivor.
  std::vector<Value> outside;
  for (Value x = 0; x < ideal.threshold(); ++x) {
    if (h.contains(x) && !ideal.contains(x)) outside.push_back(x);
  }
  std::vector<int> cover(outside.size(), 0);
  for (std::size_t j = 0; j < outside.size(); ++j) {
    for (std::size_t v = j; v < outside.size(); ++v) {
      if (h.contains(outside[v] - outside[j])) ++cover[j];
    }
  }
  std::vector<char> kept(outside.size(), 1);
  for (std::size_t v = outside.size(); v-- > 0;) {
    bool removable = true;
    for (std::size_t j = 0; j <= v && removable; ++j) {
      if (h.contains(outside[v] - outside[j]) && cover[j] < 2) removable = false;
    }
    if (!removable) continue;
    kept[v] = 0;
    for (std::size_t j = 0; j <= v; ++j) {
      if (h.contains(outside[v] - outside[j])) --cover[j];
    }
  }

  std::vector<RelativeIdeal> parts;
  Value max_g = -1;
  for (std::size_t v = 0; v < outside.size(); ++v) {
    if (!kept[v]) continue;
    parts.push_back(divisor_complement(h, *h.index_of(outside[v])));
    max_g = std::max(max_g, parts.back().threshold() - 1);
  }
  if (max_g != ideal.threshold() - 1) {
    throw std::logic_error("decomposition does not preserve the Frobenius number");
  }
  return parts;
}

/// g(I) + 1 = d(I) + 2δ, equality in the Frobenius bound for ideals.
inline bool is_maximum_sparse(const RelativeIdeal& ideal) {
  detail::require_proper(ideal);
  bool const sparse =
      ideal.threshold() == colength(ideal) + 2 * ideal.parent().genus();
  if (sparse && (!is_irreducible(ideal).irreducible || !is_canonical(ideal))) {
    throw std::logic_error("maximum sparse ideal that is not irreducible and canonical");
  }
  return sparse;
}

/// All maximum sparse ideals H \ D(i) with s_i <= value_bound, by increasing s_i.
inline std::vector<RelativeIdeal> enumerate_maximum_sparse(const NumericalSemigroup& h,
                                                           Value value_bound) {
  if (value_bound < h.conductor()) {
    throw Error(ErrorCode::InvalidArgument, "value bound must be at least the conductor");
  }
  std::vector<RelativeIdeal> out;
  for (std::size_t i = 0; h.element(i) <= value_bound; ++i) {
    if (divisor_profile(h, i).gap_pairs != 0) continue;
    auto candidate = divisor_complement(h, i);
    if (candidate == whole(h)) continue;
    if (is_maximum_sparse(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

inline std::string to_text(const RelativeIdeal& ideal) {
  std::string s = "gens=";
  bool first = true;
  for (Value v : ideal.minimal_generators()) {
    if (!first) s += ';';
    s += std::to_string(v);
    first = false;
  }
  return s + " over " + to_text(ideal.parent());
}

}  // namespace nsring

#endif
