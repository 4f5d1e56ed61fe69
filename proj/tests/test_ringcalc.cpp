#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "corpus.hpp"
#include "nsring/ringcalc.hpp"
#include "oracle.hpp"

using nsring::ErrorCode;
using nsring::NumericalSemigroup;
using nsring::Value;
using V = std::vector<Value>;

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

}  // namespace

TEST_CASE("powers of the maximal ideal of <3,7,8>") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  auto const p2 = nsring::power_value_set(h, 2);
  CHECK(p2.exceptional() == V{6});
  CHECK(p2.threshold() == 9);
  nsring::PowerLadder ladder(h);
  CHECK(ladder.power(0) == nsring::whole(h));
  CHECK(ladder.power(1) == nsring::maximal_ideal(h));
  CHECK(ladder.graded_piece(0) == 1);
  CHECK(ladder.graded_piece(1) == 3);
}

TEST_CASE("quotient of <3,7,8> by (6,7)") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  auto const i = nsring::ideal_from_generators(h, {6, 7});
  auto const p = nsring::hilbert_profile(i);
  CHECK(p.values == V{1, 2, 1});
  CHECK(p.length == 4);
  CHECK(p.edim_quotient == 2);
  CHECK(p.top_socle_degree == 2);
  CHECK(p.order == 1);
  CHECK(nsring::socle_values(i) == V{11});
}

TEST_CASE("Hilbert function of k[[t^4,t^5,t^7]]") {
  auto const h = NumericalSemigroup::from_generators({4, 5, 7});
  auto const hs = nsring::assoc_graded_hilbert(h, 3);
  CHECK(hs.values == V{1, 3, 4, 4});
  CHECK(hs.non_decreasing);
}

TEST_CASE("length_between requires nesting") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  auto const a = nsring::principal_ideal(h, 3);
  auto const b = nsring::principal_ideal(h, 7);
  CHECK(code_of([&] { nsring::length_between(a, b); }) == ErrorCode::NotNested);
  CHECK(nsring::length_between(nsring::whole(h), a) == 3);  // {0, 7, 8}
  auto const k = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(code_of([&] { nsring::length_between(nsring::whole(h), nsring::whole(k)); }) ==
        ErrorCode::ParentMismatch);
}

TEST_CASE("degree of a value") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  CHECK(nsring::degree_of_value(h, 0) == 0);
  CHECK(nsring::degree_of_value(h, 7) == 1);
  CHECK(nsring::degree_of_value(h, 14) == 3);  // 3 + 3 + 8
  CHECK(nsring::degree_of_value(h, 21) == 7);
  CHECK(code_of([&] { nsring::degree_of_value(h, 5); }) == ErrorCode::NotAnElement);
}

TEST_CASE("quotient Hilbert data agree with the window oracle") {
  for (auto const& sample : corpus::random_ideals(250, 10, 3)) {
    auto const& h = sample.semigroup;
    auto const ht = corpus::table_of(h);
    auto const it = oracle::ideal(ht, sample.generators);
    CAPTURE(nsring::to_text(sample.ideal));
    auto const p = nsring::hilbert_profile(sample.ideal);
    CHECK(p.values == oracle::hilbert(ht, it));
    CHECK(p.length == oracle::colength(ht, it));
    CHECK(p.order == oracle::order(ht, it));

    // Second route: h(i) counts the values outside I of maximal factorization length i.
    std::vector<Value> by_degree(p.values.size(), 0);
    for (Value v = 0; v < sample.ideal.threshold(); ++v) {
      if (!h.contains(v) || sample.ideal.contains(v)) continue;
      auto const deg = static_cast<std::size_t>(nsring::degree_of_value(h, v));
      REQUIRE(deg < by_degree.size());
      ++by_degree[deg];
    }
    CHECK(by_degree == p.values);
  }
}

TEST_CASE("associated graded Hilbert function agrees with the window oracle") {
  for (auto const& h : nsring::enumerate_by_genus(7)) {
    auto const hs = nsring::assoc_graded_hilbert(h, 12);
    CHECK(hs.values == oracle::assoc_hilbert(corpus::table_of(h), 12));
    CHECK(hs.values.back() == h.multiplicity());
  }
}

TEST_CASE("order bound reports") {
  auto const n = NumericalSemigroup::naturals();
  auto const b = nsring::multiplicity_bound_check(nsring::principal_ideal(n, 5));
  CHECK(b.top_socle_degree == 4);
  CHECK(b.holds);
  CHECK(b.chain_equality);

  auto const h = NumericalSemigroup::from_generators({6, 7, 8, 9, 10, 11});
  auto const i = nsring::ideal_from_generators(h, {12, 13, 14, 15, 16});
  auto const r = nsring::sdeg_report(i);
  CHECK(r.order == 2);
  CHECK(r.top_socle_degree == 2);
  CHECK(r.stretched_bound == 2);  // 8 - 6
  CHECK(r.stretched_equality);
  CHECK(r.bound == 8 - 7 + 1);
  CHECK(r.bound_equality);
  CHECK(r.mu_power == 1);
  CHECK(r.shape_tail_ones);
  CHECK_FALSE(r.is_power_of_max);
}
