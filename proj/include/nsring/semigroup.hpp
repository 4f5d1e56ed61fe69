#ifndef NSRING_SEMIGROUP_HPP
#define NSRING_SEMIGROUP_HPP

// Numerical semigroups: co-finite additive submonoids of the non-negative
// integers. A semigroup is stored as a membership table over [0, c) where c
// is the conductor; every integer >= c belongs to it.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsring/error.hpp"

namespace nsring {

namespace detail {

struct SemigroupData {
  Value conductor = 0;
  std::vector<char> member;  // member[x] for 0 <= x < conductor
  std::vector<Value> generators;
  std::vector<Value> small_elements;
  std::vector<Value> gaps;
  std::vector<Value> pseudo_frobenius;
};

}  // namespace detail

/// An immutable numerical semigroup H. Copies share the underlying tables.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `gens`; redundant generators are dropped.
  static NumericalSemigroup from_generators(std::span<const Value> gens) {
    if (gens.empty()) {
      throw Error(ErrorCode::EmptyInput, "no generators given");
    }
    Value g = 0;
    for (Value a : gens) {
      if (a < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "generators must be positive, got " + std::to_string(a));
      }
      g = std::gcd(g, a);
    }
    if (g != 1) {
      throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(g));
    }
    Value const m = *std::min_element(gens.begin(), gens.end());

    // Closure scan; once m consecutive integers are members, all larger are.
    std::vector<char> member{1};
    Value run = 1;
    Value x = 0;
    while (run < m) {
      ++x;
      bool in = false;
      for (Value a : gens) {
        if (a <= x && member[static_cast<std::size_t>(x - a)]) {
          in = true;
          break;
        }
      }
      member.push_back(in ? 1 : 0);
      run = in ? run + 1 : 0;
    }
    Value const conductor = x - run + 1;
    member.resize(static_cast<std::size_t>(conductor));
    return NumericalSemigroup(std::move(member), conductor);
  }

  static NumericalSemigroup from_generators(std::initializer_list<Value> gens) {
    return from_generators(std::span<const Value>(gens.begin(), gens.size()));
  }

  /// Builds the semigroup whose complement in N is exactly `gaps`.
  /// Throws InvalidArgument if N \ gaps is not additively closed.
  static NumericalSemigroup from_gaps(std::span<const Value> gaps) {
    Value conductor = 0;
    for (Value gap : gaps) {
      if (gap < 1) {
        throw Error(ErrorCode::InvalidArgument, "gaps must be positive");
      }
      conductor = std::max(conductor, gap + 1);
    }
    std::vector<char> member(static_cast<std::size_t>(conductor), 1);
    for (Value gap : gaps) {
      member[static_cast<std::size_t>(gap)] = 0;
    }
    for (Value a = 1; a < conductor; ++a) {
      if (!member[static_cast<std::size_t>(a)]) continue;
      for (Value b = a; a + b < conductor; ++b) {
        if (member[static_cast<std::size_t>(b)] && !member[static_cast<std::size_t>(a + b)]) {
          throw Error(ErrorCode::InvalidArgument, "complement of gaps is not additively closed");
        }
      }
    }
    return NumericalSemigroup(std::move(member), conductor);
  }

  /// The semigroup N of all non-negative integers.
  static NumericalSemigroup naturals() { return NumericalSemigroup({}, 0); }

  bool contains(Value n) const noexcept {
    if (n < 0) return false;
    if (n >= d_->conductor) return true;
    return d_->member[static_cast<std::size_t>(n)] != 0;
  }

  const std::vector<Value>& minimal_generators() const noexcept { return d_->generators; }
  const std::vector<Value>& small_elements() const noexcept { return d_->small_elements; }
  const std::vector<Value>& gaps() const noexcept { return d_->gaps; }
  const std::vector<Value>& pseudo_frobenius() const noexcept { return d_->pseudo_frobenius; }

  Value multiplicity() const noexcept { return d_->generators.front(); }
  Value conductor() const noexcept { return d_->conductor; }
  Value frobenius() const noexcept { return d_->conductor - 1; }
  Value genus() const noexcept { return static_cast<Value>(d_->gaps.size()); }
  std::size_t embedding_dimension() const noexcept { return d_->generators.size(); }
  std::size_t type() const noexcept { return d_->pseudo_frobenius.size(); }
  bool is_naturals() const noexcept { return d_->conductor == 0; }

  /// s_i, the i-th element of H in increasing order (s_0 = 0).
  Value element(std::size_t i) const noexcept {
    auto const n = d_->small_elements.size();
    if (i < n) return d_->small_elements[i];
    return d_->conductor + static_cast<Value>(i - n);
  }

  /// Position i with s_i = v, or nullopt when v is not in H.
  std::optional<std::size_t> index_of(Value v) const noexcept {
    if (!contains(v)) return std::nullopt;
    auto const& small = d_->small_elements;
    if (v >= d_->conductor) {
      return small.size() + static_cast<std::size_t>(v - d_->conductor);
    }
    return static_cast<std::size_t>(std::lower_bound(small.begin(), small.end(), v) -
                                    small.begin());
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.d_ == b.d_ ||
           (a.d_->conductor == b.d_->conductor && a.d_->member == b.d_->member);
  }

 private:
  NumericalSemigroup(std::vector<char> member, Value conductor) {
    auto data = std::make_shared<detail::SemigroupData>();
    data->conductor = conductor;
    data->member = std::move(member);
    build(*data);
    d_ = std::move(data);
  }

  static void build(detail::SemigroupData& d) {
    auto in = [&d](Value n) {
      return n >= 0 && (n >= d.conductor || d.member[static_cast<std::size_t>(n)] != 0);
    };
    for (Value x = 0; x < d.conductor; ++x) {
      (in(x) ? d.small_elements : d.gaps).push_back(x);
    }
    Value const mult = d.conductor == 0 ? 1 : [&] {
      Value m = 1;
      while (!in(m)) ++m;
      return m;
    }();
    // Every minimal generator is at most c + e - 1 (for N, the generator is 1).
    for (Value x = 1; x < std::max<Value>(d.conductor + mult, 2); ++x) {
      if (!in(x)) continue;
      bool decomposable = false;
      for (Value y = mult; y <= x / 2 && !decomposable; ++y) {
        decomposable = in(y) && in(x - y);
      }
      if (!decomposable) d.generators.push_back(x);
    }
    if (d.gaps.empty()) {
      d.pseudo_frobenius.push_back(-1);
    } else {
      for (Value x : d.gaps) {
        bool pf = std::all_of(d.generators.begin(), d.generators.end(),
                              [&](Value a) { return in(x + a); });
        if (pf) d.pseudo_frobenius.push_back(x);
      }
    }
  }

  std::shared_ptr<const detail::SemigroupData> d_;
};

inline NumericalSemigroup from_generators(std::span<const Value> gens) {
  return NumericalSemigroup::from_generators(gens);
}

inline bool contains(const NumericalSemigroup& h, Value n) { return h.contains(n); }

/// Ap(H, m): the least element of H in each residue class mod m, sorted.
inline std::vector<Value> apery_set(const NumericalSemigroup& h, Value m) {
  if (m < 1 || !h.contains(m)) {
    throw Error(ErrorCode::NotAnElement, std::to_string(m) + " is not a positive element");
  }
  std::vector<Value> least(static_cast<std::size_t>(m), -1);
  Value found = 0;
  for (Value x = 0; found < m; ++x) {
    auto& slot = least[static_cast<std::size_t>(x % m)];
    if (slot < 0 && h.contains(x)) {
      slot = x;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

struct DivisorProfile {
  std::size_t index = 0;
  Value value = 0;
  std::vector<Value> divisors;  // D(i)
  std::size_t nu = 0;
  Value delta_i = 0;            // gaps in [1, s_i - 1]
  Value gap_pairs = 0;          // ordered pairs (x, y) of gaps with x + y = s_i
};

inline DivisorProfile divisor_profile(const NumericalSemigroup& h, std::size_t i) {
  DivisorProfile p;
  p.index = i;
  p.value = h.element(i);
  for (Value x = 0; x <= p.value; ++x) {
    if (h.contains(x) && h.contains(p.value - x)) p.divisors.push_back(x);
  }
  p.nu = p.divisors.size();
  for (Value gap : h.gaps()) {
    if (gap >= p.value) break;
    ++p.delta_i;
    if (!h.contains(p.value - gap)) ++p.gap_pairs;
  }
  return p;
}

/// Exactly one of x, g(H) - x lies in H for every integer x.
inline bool is_symmetric(const NumericalSemigroup& h) { return h.type() == 1; }

/// The children of H in the semigroup tree: H \ {a} for each minimal
/// generator a greater than the Frobenius number.
inline std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& h) {
  std::vector<NumericalSemigroup> out;
  for (Value a : h.minimal_generators()) {
    if (a <= h.frobenius()) continue;
    std::vector<Value> gaps = h.gaps();
    gaps.push_back(a);
    out.push_back(NumericalSemigroup::from_gaps(gaps));
  }
  return out;
}

/// Every numerical semigroup of genus <= max_genus, ordered by genus and then
/// lexicographically by minimal generators.
inline std::vector<NumericalSemigroup> enumerate_by_genus(Value max_genus) {
  std::vector<NumericalSemigroup> out;
  if (max_genus < 0) return out;
  std::vector<NumericalSemigroup> layer{NumericalSemigroup::naturals()};
  for (Value genus = 0;; ++genus) {
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) {
      return a.minimal_generators() < b.minimal_generators();
    });
    out.insert(out.end(), layer.begin(), layer.end());
    if (genus == max_genus) break;
    std::vector<NumericalSemigroup> next;
    for (const auto& h : layer) {
      auto kids = tree_children(h);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    layer = std::move(next);
  }
  return out;
}

inline std::string to_text(const NumericalSemigroup& h) {
  std::string s;
  for (Value a : h.minimal_generators()) {
    if (!s.empty()) s += ',';
    s += std::to_string(a);
  }
  return s;
}

}  // namespace nsring

#endif
