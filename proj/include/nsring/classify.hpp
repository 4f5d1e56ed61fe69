#ifndef NSRING_CLASSIFY_HPP
#define NSRING_CLASSIFY_HPP

// Ring-level classification of k[[H]]: stretched, canonical stretched and
// sparse stretched, plus the symmetric / maximum-sparse companion checks.
// Only monomial witnesses are searched.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/error.hpp"
#include "nsring/ideal.hpp"
#include "nsring/ringcalc.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

namespace detail {

inline void require_not_regular(const NumericalSemigroup& h) {
  if (h.is_naturals()) throw Error(ErrorCode::Regular, "k[[t]] is a regular ring");
}

/// Hilbert function (1, edim, 1, ..., 1) with top socle degree >= 2.
inline bool is_stretched_shape(const HilbertProfile& p, std::size_t edim) {
  if (p.values.size() < 3 || p.values[0] != 1) return false;
  if (p.values[1] != static_cast<Value>(edim)) return false;
  return std::all_of(p.values.begin() + 2, p.values.end(), [](Value x) { return x == 1; });
}

inline Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

}  // namespace detail

struct StretchedResult {
  Value length = 0;  // ℓ((n^2 + J)/(n^3 + J)), J = (t^e)
  bool stretched = false;
};

/// Sally's condition with the monomial reduction J = (t^e); stretched means
/// the length is at most one.
inline StretchedResult is_stretched_ring(const NumericalSemigroup& h, PowerLadder& ladder) {
  detail::require_not_regular(h);
  auto const j = principal_ideal(h, h.multiplicity());
  StretchedResult r;
  r.length = length_between(unite(ladder.power(2), j), unite(ladder.power(3), j));
  r.stretched = r.length <= 1;
  return r;
}

inline StretchedResult is_stretched_ring(const NumericalSemigroup& h) {
  PowerLadder ladder(h);
  return is_stretched_ring(h, ladder);
}

struct MonomialWitness {
  RelativeIdeal ideal;
  std::size_t index = 0;  // I = H \ D(index)
  Value value = 0;        // s_index
  HilbertProfile profile;
};

enum class CanonicalKind { MonomialWitness, ByHerzogTheorem, NoMonomialWitness };

inline const char* to_string(CanonicalKind k) noexcept {
  switch (k) {
    case CanonicalKind::MonomialWitness: return "MonomialWitness";
    case CanonicalKind::ByHerzogTheorem: return "ByHerzogTheorem";
    case CanonicalKind::NoMonomialWitness: return "NoMonomialWitness";
  }
  return "Unknown";
}

struct CanonicalStretchedVerdict {
  CanonicalKind kind = CanonicalKind::NoMonomialWitness;
  std::optional<MonomialWitness> witness;  // set iff kind == MonomialWitness
  Value search_bound = 0;
};

/// ceil(2 (edim + 2δ) e / (e - 1)).
inline Value default_canonical_bound(const NumericalSemigroup& h) {
  Value const e = h.multiplicity();
  auto const edim = static_cast<Value>(h.embedding_dimension());
  return detail::ceil_div(2 * (edim + 2 * h.genus()) * e, e - 1);
}

/// True when I = H \ D(i) lies in n^2 and S/I has Hilbert function (1, edim, 1, ..., 1).
inline std::optional<HilbertProfile> canonical_stretched_candidate(const RelativeIdeal& ideal,
                                                                   PowerLadder& ladder) {
  auto const& h = ideal.parent();
  if (!is_subset(ideal, ladder.power(2))) return std::nullopt;
  auto p = hilbert_profile(ideal, ladder);
  if (!detail::is_stretched_shape(p, h.embedding_dimension())) return std::nullopt;
  return p;
}

inline CanonicalStretchedVerdict canonical_stretched(const NumericalSemigroup& h,
                                                     PowerLadder& ladder,
                                                     std::optional<Value> bound = std::nullopt) {
  detail::require_not_regular(h);
  CanonicalStretchedVerdict v;
  v.search_bound = bound.value_or(default_canonical_bound(h));
  for (std::size_t i = 1; h.element(i) <= v.search_bound; ++i) {
    auto ideal = divisor_complement(h, i);
    auto p = canonical_stretched_candidate(ideal, ladder);
    if (!p) continue;
    v.kind = CanonicalKind::MonomialWitness;
    v.witness = MonomialWitness{std::move(ideal), i, h.element(i), std::move(*p)};
    return v;
  }
  v.kind = h.embedding_dimension() == 3 ? CanonicalKind::ByHerzogTheorem
                                        : CanonicalKind::NoMonomialWitness;
  return v;
}

inline CanonicalStretchedVerdict canonical_stretched(const NumericalSemigroup& h,
                                                     std::optional<Value> bound = std::nullopt) {
  PowerLadder ladder(h);
  return canonical_stretched(h, ladder, bound);
}

/// N = s (w - 1) with w the value of a degree-one element; lists w = d + 1
/// for every divisor d of N and whether some w in H allows s >= 2.
struct DiophantineObstruction {
  Value n = 0;
  std::vector<Value> candidates;
  std::vector<Value> members;
  bool applies = false;
};

inline DiophantineObstruction diophantine_obstruction(const NumericalSemigroup& h) {
  DiophantineObstruction o;
  o.n = 2 * h.genus() + static_cast<Value>(h.embedding_dimension()) - 1;
  bool feasible = false;
  for (Value d = 1; d <= o.n; ++d) {
    if (o.n % d != 0) continue;
    Value const w = d + 1;
    o.candidates.push_back(w);
    if (h.contains(w)) {
      o.members.push_back(w);
      if (o.n / d >= 2) feasible = true;
    }
  }
  o.applies = !feasible;
  return o;
}

struct SparseWitness {
  RelativeIdeal ideal;
  std::size_t index = 0;
  Value value = 0;             // s_index = g(I)
  HilbertProfile profile;
  Value s = 0;                 // top socle degree of S/I
  Value val_z = 0;             // least value of z in n \ n^{v+1} with z^2 not in I
  Value frobenius_g = 0;
  Value n = 0;                 // 2δ + edim - 1
  bool equation_holds = false; // s (val_z - 1) = N
  bool gap_identity = false;   // g(I) - s = N
};

enum class SparseKind { Witness, ExhaustedNo };

inline const char* to_string(SparseKind k) noexcept {
  return k == SparseKind::Witness ? "Witness" : "ExhaustedNo";
}

struct SparseStretchedVerdict {
  SparseKind kind = SparseKind::ExhaustedNo;
  std::optional<SparseWitness> witness;
  DiophantineObstruction obstruction;
  Value search_bound = 0;
};

inline Value default_sparse_bound(const NumericalSemigroup& h) {
  Value const n = 2 * h.genus() + static_cast<Value>(h.embedding_dimension()) - 1;
  return 2 * n + 1;
}

namespace detail {

/// Least v in H \ {0}, v outside Val(n^{order+1}), for which some u, w >= v
/// in H have u + w in H \ I. A generic combination of t^v, t^u, t^w then has
/// value v and a square outside I.
inline Value least_square_escape(const RelativeIdeal& ideal, Value order, PowerLadder& ladder) {
  auto const& h = ideal.parent();
  auto const& deep = ladder.power(static_cast<std::size_t>(order + 1));
  Value const top = ideal.threshold();
  for (Value v = 1; v < top; ++v) {
    if (!h.contains(v) || deep.contains(v)) continue;
    for (Value u = v; 2 * u < top; ++u) {
      if (!h.contains(u)) continue;
      for (Value w = u; u + w < top; ++w) {
        if (h.contains(w) && !ideal.contains(u + w)) return v;
      }
    }
  }
  return 0;
}

}  // namespace detail

inline SparseStretchedVerdict sparse_stretched(const NumericalSemigroup& h, PowerLadder& ladder,
                                               std::optional<Value> bound = std::nullopt) {
  detail::require_not_regular(h);
  SparseStretchedVerdict v;
  v.search_bound = bound.value_or(default_sparse_bound(h));
  v.obstruction = diophantine_obstruction(h);
  for (std::size_t i = 1; h.element(i) <= v.search_bound; ++i) {
    if (divisor_profile(h, i).gap_pairs != 0) continue;
    auto ideal = divisor_complement(h, i);
    if (!is_maximum_sparse(ideal)) continue;
    auto p = canonical_stretched_candidate(ideal, ladder);
    if (!p) continue;
    SparseWitness w{std::move(ideal), i, h.element(i), std::move(*p)};
    w.s = w.profile.top_socle_degree;
    w.val_z = detail::least_square_escape(w.ideal, w.profile.order, ladder);
    w.frobenius_g = w.ideal.threshold() - 1;
    w.n = v.obstruction.n;
    w.equation_holds = w.s * (w.val_z - 1) == w.n;
    w.gap_identity = w.frobenius_g - w.s == w.n;
    v.kind = SparseKind::Witness;
    v.witness = std::move(w);
    return v;
  }
  return v;
}

inline SparseStretchedVerdict sparse_stretched(const NumericalSemigroup& h,
                                               std::optional<Value> bound = std::nullopt) {
  PowerLadder ladder(h);
  return sparse_stretched(h, ladder, bound);
}

struct GorensteinReport {
  bool symmetric = false;
  bool principal_maximum_sparse = false;   // some x + H, 1 <= x <= bound
  bool canonicals_maximum_sparse = true;   // every proper x + Ω ⊆ H, x <= bound
  std::optional<Value> principal_witness;
  std::optional<Value> canonical_counterexample;
  std::size_t canonicals_checked = 0;
  Value bound = 0;
  bool equivalence_holds = false;
};

inline Value default_gorenstein_bound(const NumericalSemigroup& h) {
  return std::max<Value>(3 * h.conductor(), 1);
}

inline GorensteinReport gorenstein_report(const NumericalSemigroup& h,
                                          std::optional<Value> bound = std::nullopt) {
  GorensteinReport r;
  r.bound = bound.value_or(default_gorenstein_bound(h));
  r.symmetric = is_symmetric(h);
  for (Value x = 1; x <= r.bound; ++x) {
    if (!h.contains(x)) continue;
    if (is_maximum_sparse(principal_ideal(h, x))) {
      r.principal_maximum_sparse = true;
      r.principal_witness = x;
      break;
    }
  }
  auto const omega = standard_canonical(h);
  auto const ambient = whole(h);
  for (Value x = 0; x <= r.bound; ++x) {
    auto candidate = shift(omega, x);
    if (!is_subset(candidate, ambient) || candidate == ambient) continue;
    ++r.canonicals_checked;
    if (!is_maximum_sparse(candidate)) {
      r.canonicals_maximum_sparse = false;
      r.canonical_counterexample = x;
      break;
    }
  }
  r.equivalence_holds = r.symmetric == r.principal_maximum_sparse &&
                        r.principal_maximum_sparse == r.canonicals_maximum_sparse;
  return r;
}

struct ClassificationReport {
  NumericalSemigroup semigroup;
  bool regular = false;  // H = N: the stretched-family fields are empty
  std::optional<StretchedResult> stretched;
  std::optional<CanonicalStretchedVerdict> canonical_stretched;
  std::optional<SparseStretchedVerdict> sparse_stretched;
  GorensteinReport gorenstein;
};

struct ClassifyBounds {
  std::optional<Value> canonical;
  std::optional<Value> sparse;
  std::optional<Value> gorenstein;
};

inline ClassificationReport classify_all(const NumericalSemigroup& h,
                                         const ClassifyBounds& bounds = {}) {
  ClassificationReport r{h, false, std::nullopt, std::nullopt, std::nullopt, {}};
  r.gorenstein = gorenstein_report(h, bounds.gorenstein);
  if (h.is_naturals()) {
    r.regular = true;
    return r;
  }
  PowerLadder ladder(h);
  r.stretched = is_stretched_ring(h, ladder);
  r.canonical_stretched = canonical_stretched(h, ladder, bounds.canonical);
  r.sparse_stretched = sparse_stretched(h, ladder, bounds.sparse);
  return r;
}

}  // namespace nsring

#endif
