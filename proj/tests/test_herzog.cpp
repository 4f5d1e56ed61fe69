#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>

#include "nsring/herzog.hpp"

using nsring::ErrorCode;
using nsring::NumericalSemigroup;
using nsring::Value;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const nsring::Error& e) {
    return e.code();
  }
  FAIL("expected an nsring::Error");
  return ErrorCode::Parse;
}

std::array<Value, 6> exponents(const nsring::HerzogMatrix& m) {
  return {m.alpha, m.beta, m.gamma, m.alpha_p, m.beta_p, m.gamma_p};
}

/// c * target is a non-negative combination of x and y.
bool representable(Value n, Value x, Value y) {
  for (Value p = 0; p * x <= n; ++p) {
    if ((n - p * x) % y == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Herzog matrices of small semigroups") {
  auto const a = nsring::herzog_matrix(NumericalSemigroup::from_generators({3, 7, 8}));
  CHECK(exponents(a) == std::array<Value, 6>{2, 1, 1, 3, 1, 1});
  auto const b = nsring::herzog_matrix(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(exponents(b) == std::array<Value, 6>{1, 1, 1, 2, 1, 1});
  auto const c = nsring::herzog_matrix(NumericalSemigroup::from_generators({4, 5, 7}));
  CHECK(exponents(c) == std::array<Value, 6>{2, 2, 1, 1, 1, 1});
  auto const d = nsring::herzog_matrix(NumericalSemigroup::from_generators({5, 6, 13}));
  CHECK(exponents(d) == std::array<Value, 6>{1, 1, 1, 4, 2, 1});
}

TEST_CASE("witness parameters") {
  auto const a = nsring::charcsr_witness_params(NumericalSemigroup::from_generators({3, 7, 8}));
  CHECK(a.axis == 'X');
  CHECK(a.sum == 5);
  CHECK(a.s_min == 2);
  CHECK(a.s_max == 4);
  auto const b = nsring::charcsr_witness_params(NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(b.axis == 'X');
  CHECK(b.s_max == 2);
  // Sums 3, 3, 2: the tie goes to X.
  auto const c = nsring::charcsr_witness_params(NumericalSemigroup::from_generators({4, 5, 7}));
  CHECK(c.axis == 'X');
  CHECK(c.s_max == 2);
}

TEST_CASE("preconditions") {
  CHECK(code_of([] { nsring::herzog_matrix(NumericalSemigroup::from_generators({2, 3})); }) ==
        ErrorCode::NotEdim3);
  CHECK(code_of([] { nsring::herzog_matrix(NumericalSemigroup::from_generators({4, 5, 6, 7})); }) ==
        ErrorCode::NotEdim3);
  CHECK(code_of([] { nsring::herzog_matrix(NumericalSemigroup::from_generators({4, 5, 6})); }) ==
        ErrorCode::Symmetric);
  CHECK(code_of([] { nsring::charcsr_witness_params(NumericalSemigroup::from_generators({4, 5, 6})); }) ==
        ErrorCode::Symmetric);
}

TEST_CASE("relation identities for every 3-generated semigroup of genus <= 10") {
  std::size_t checked = 0;
  for (auto const& h : nsring::enumerate_by_genus(10)) {
    if (h.embedding_dimension() != 3) continue;
    CAPTURE(h.minimal_generators());
    if (nsring::is_symmetric(h)) {
      CHECK(code_of([&] { nsring::herzog_matrix(h); }) == ErrorCode::Symmetric);
      continue;
    }
    auto const m = nsring::herzog_matrix(h);
    auto const [a1, a2, a3] = m.generators;
    for (Value e : exponents(m)) CHECK(e >= 1);
    CHECK(m.c3() * a3 == m.alpha_p * a1 + m.beta * a2);
    CHECK(m.c1() * a1 == m.beta_p * a2 + m.gamma * a3);
    CHECK(m.c2() * a2 == m.alpha * a1 + m.gamma_p * a3);
    // Minimality of each c_i by direct scan.
    for (Value c = 2; c < m.c1(); ++c) CHECK_FALSE(representable(c * a1, a2, a3));
    for (Value c = 2; c < m.c2(); ++c) CHECK_FALSE(representable(c * a2, a1, a3));
    for (Value c = 2; c < m.c3(); ++c) CHECK_FALSE(representable(c * a3, a1, a2));
    CHECK(std::max({m.c1(), m.c2(), m.c3()}) >= 3);
    ++checked;
  }
  CHECK(checked >= 40);
}
