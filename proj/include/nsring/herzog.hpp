#ifndef NSRING_HERZOG_HPP
#define NSRING_HERZOG_HPP

// Herzog matrix of a non-symmetric semigroup <a1, a2, a3>:
//
//   ( X^α    Y^β    Z^γ  )
//   ( Y^β'   Z^γ'   X^α' )
//
// whose 2x2 minors generate the defining ideal of k[[t^a1, t^a2, t^a3]].

#include <array>
#include <cstddef>
#include <string>

#include "nsring/error.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

struct HerzogMatrix {
  std::array<Value, 3> generators{};  // a1 < a2 < a3
  Value alpha = 0, beta = 0, gamma = 0;
  Value alpha_p = 0, beta_p = 0, gamma_p = 0;

  /// c_i: the least c >= 2 with c a_i in the semigroup of the other two.
  Value c1() const noexcept { return alpha + alpha_p; }
  Value c2() const noexcept { return beta + beta_p; }
  Value c3() const noexcept { return gamma + gamma_p; }
};

namespace detail {

struct Decomposition {
  Value multiple = 0;
  Value first = 0;   // coefficient of the smaller remaining generator
  Value second = 0;  // coefficient of the larger remaining generator
};

/// Least c >= 2 with c * target = p * x + q * y, and its unique (p, q).
inline Decomposition minimal_relation(Value target, Value x, Value y) {
  for (Value c = 2;; ++c) {
    Value const n = c * target;
    int found = 0;
    Decomposition d{c, 0, 0};
    for (Value p = 0; p * x <= n; ++p) {
      if ((n - p * x) % y != 0) continue;
      ++found;
      d.first = p;
      d.second = (n - p * x) / y;
    }
    if (found == 0) continue;
    if (found > 1 || d.first == 0 || d.second == 0) {
      throw Error(ErrorCode::AmbiguousPresentation,
                  std::to_string(c) + "*" + std::to_string(target) +
                      " does not have a unique decomposition with positive coefficients");
    }
    return d;
  }
}

inline void require_non_symmetric_edim3(const NumericalSemigroup& h) {
  if (h.embedding_dimension() != 3) {
    throw Error(ErrorCode::NotEdim3, "embedding dimension is " +
                                         std::to_string(h.embedding_dimension()));
  }
  if (is_symmetric(h)) {
    throw Error(ErrorCode::Symmetric, "semigroup is symmetric (a complete intersection)");
  }
}

}  // namespace detail

inline HerzogMatrix herzog_matrix(const NumericalSemigroup& h) {
  detail::require_non_symmetric_edim3(h);
  auto const& g = h.minimal_generators();
  Value const a1 = g[0], a2 = g[1], a3 = g[2];

  HerzogMatrix m;
  m.generators = {a1, a2, a3};
  auto const r1 = detail::minimal_relation(a1, a2, a3);  // c1 a1 = β' a2 + γ a3
  auto const r2 = detail::minimal_relation(a2, a1, a3);  // c2 a2 = α a1 + γ' a3
  auto const r3 = detail::minimal_relation(a3, a1, a2);  // c3 a3 = α' a1 + β a2
  m.beta_p = r1.first;
  m.gamma = r1.second;
  m.alpha = r2.first;
  m.gamma_p = r2.second;
  m.alpha_p = r3.first;
  m.beta = r3.second;

  if (m.c1() != r1.multiple || m.c2() != r2.multiple || m.c3() != r3.multiple) {
    throw Error(ErrorCode::AmbiguousPresentation,
                "minimal relations do not assemble into a Herzog matrix");
  }
  return m;
}

struct WitnessParams {
  char axis = 'X';  // variable whose exponent sum is largest
  Value sum = 0;
  Value s_min = 2;
  Value s_max = 0;
};

/// Parameters of the witness family (XY, YZ, ZX, X^s + Y^2, X^s + Z^2), after
/// permuting variables so the chosen axis plays the role of X.
inline WitnessParams charcsr_witness_params(const NumericalSemigroup& h) {
  auto const m = herzog_matrix(h);
  std::array<Value, 3> const sums{m.c1(), m.c2(), m.c3()};
  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (sums[k] > sums[best]) best = k;
  }
  WitnessParams p;
  p.axis = "XYZ"[best];
  p.sum = sums[best];
  p.s_max = p.sum - 1;
  return p;
}

}  // namespace nsring

#endif
