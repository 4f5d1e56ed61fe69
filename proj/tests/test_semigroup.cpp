#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "corpus.hpp"
#include "nsring/semigroup.hpp"
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

TEST_CASE("invariants of <3,7,8>") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  CHECK(h.frobenius() == 5);
  CHECK(h.conductor() == 6);
  CHECK(h.genus() == 4);
  CHECK(h.gaps() == V{1, 2, 4, 5});
  CHECK(h.multiplicity() == 3);
  CHECK(h.embedding_dimension() == 3);
  CHECK(h.pseudo_frobenius() == V{4, 5});
  CHECK(h.type() == 2);
  CHECK_FALSE(nsring::is_symmetric(h));
  CHECK(nsring::apery_set(h, 3) == V{0, 7, 8});
}

TEST_CASE("invariants of <4,5,7>") {
  auto const h = NumericalSemigroup::from_generators({4, 5, 7});
  CHECK(h.genus() == 4);
  CHECK(h.embedding_dimension() == 3);
  CHECK(h.frobenius() == 6);
  CHECK(h.gaps() == V{1, 2, 3, 6});
}

TEST_CASE("value semigroup <4,6,13,15>") {
  auto const h = NumericalSemigroup::from_generators({4, 6, 13, 15});
  CHECK(h.genus() == 7);
  for (Value x : {2, 3, 5, 9}) CHECK_FALSE(h.contains(x));
}

TEST_CASE("the naturals") {
  auto const n = NumericalSemigroup::naturals();
  CHECK(n == NumericalSemigroup::from_generators({1}));
  CHECK(n.is_naturals());
  CHECK(n.minimal_generators() == V{1});
  CHECK(n.pseudo_frobenius() == V{-1});
  CHECK(n.type() == 1);
  CHECK(n.frobenius() == -1);
  CHECK(nsring::is_symmetric(n));
  CHECK(n.element(5) == 5);
}

TEST_CASE("redundant generators are dropped") {
  auto const h = NumericalSemigroup::from_generators({8, 3, 6, 7, 14});
  CHECK(h.minimal_generators() == V{3, 7, 8});
  CHECK(h == NumericalSemigroup::from_generators({3, 7, 8}));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { NumericalSemigroup::from_generators(std::span<const Value>{}); }) ==
        ErrorCode::EmptyInput);
  CHECK(code_of([] { NumericalSemigroup::from_generators({4, 6}); }) == ErrorCode::GcdNotOne);
  CHECK(code_of([] { NumericalSemigroup::from_generators({0, 3}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { NumericalSemigroup::from_generators({-2, 3}); }) == ErrorCode::InvalidArgument);
  V const gaps{1, 2, 3, 6};
  CHECK(NumericalSemigroup::from_gaps(gaps) == NumericalSemigroup::from_generators({4, 5, 7}));
  V const broken{1, 3, 4, 5, 6, 8};  // 2 in H and 2 + 2 = 4 is listed as a gap
  CHECK(code_of([&] { NumericalSemigroup::from_gaps(broken); }) == ErrorCode::InvalidArgument);
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  CHECK(code_of([&] { nsring::apery_set(h, 4); }) == ErrorCode::NotAnElement);
}

TEST_CASE("element and index_of are inverse") {
  auto const h = NumericalSemigroup::from_generators({5, 6, 13});
  for (std::size_t i = 0; i < 60; ++i) {
    auto const v = h.element(i);
    REQUIRE(h.contains(v));
    CHECK(h.index_of(v) == i);
  }
  CHECK_FALSE(h.index_of(7).has_value());
}

TEST_CASE("tree children of <2,3>") {
  auto const kids = nsring::tree_children(NumericalSemigroup::from_generators({2, 3}));
  REQUIRE(kids.size() == 2);
  // Children come in order of the removed generator: 2, then 3.
  CHECK(kids[0].minimal_generators() == V{3, 4, 5});
  CHECK(kids[1].minimal_generators() == V{2, 5});
}

TEST_CASE("enumeration matches the gap-subset count, genus <= 8") {
  auto const all = nsring::enumerate_by_genus(8);
  std::vector<Value> per_genus(9, 0);
  for (auto const& h : all) ++per_genus[static_cast<std::size_t>(h.genus())];
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    CHECK(per_genus[static_cast<std::size_t>(g)] == oracle::count_semigroups_of_genus(g));
  }
}

TEST_CASE("invariants agree with the window oracle, genus <= 8") {
  for (auto const& h : nsring::enumerate_by_genus(8)) {
    CAPTURE(nsring::to_text(h));
    auto const t = corpus::table_of(h);
    for (Value x = 0; x < 120; ++x) REQUIRE(h.contains(x) == oracle::at(t, x));
    CHECK(h.frobenius() == oracle::frobenius(t));
    CHECK(h.gaps() == oracle::gaps(t));
    CHECK(h.minimal_generators() == oracle::minimal_generators(t));
    CHECK(h.pseudo_frobenius() == oracle::pseudo_frobenius(t));
    // Symmetric means x in H iff g - x not in H.
    bool symmetric = true;
    for (Value x = 0; x <= h.frobenius(); ++x) symmetric &= oracle::at(t, x) != oracle::at(t, h.frobenius() - x);
    CHECK(nsring::is_symmetric(h) == symmetric);
    auto const e = h.multiplicity();
    auto const ap = nsring::apery_set(h, e);
    CHECK(static_cast<Value>(ap.size()) == e);
    for (Value w : ap) {
      CHECK(oracle::at(t, w));
      CHECK_FALSE(oracle::at(t, w - e));
    }
  }
}

TEST_CASE("divisor profile against direct counting") {
  for (auto const& h : nsring::enumerate_by_genus(6)) {
    auto const t = corpus::table_of(h);
    for (std::size_t i = 0; h.element(i) <= 2 * h.conductor() + 4; ++i) {
      auto const p = nsring::divisor_profile(h, i);
      Value const s = p.value;
      Value nu = 0, delta_i = 0, pairs = 0;
      for (Value x = 0; x <= s; ++x) nu += oracle::at(t, x) && oracle::at(t, s - x);
      for (Value x = 1; x < s; ++x) delta_i += !oracle::at(t, x);
      for (Value x = 1; x < s; ++x) pairs += !oracle::at(t, x) && !oracle::at(t, s - x);
      CHECK(static_cast<Value>(p.nu) == nu);
      CHECK(p.delta_i == delta_i);
      CHECK(p.gap_pairs == pairs);
    }
  }
}

TEST_CASE("gap pairs are ordered: <3,7,8> at s_i = 6") {
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  auto const p = nsring::divisor_profile(h, 2);
  REQUIRE(p.value == 6);
  CHECK(p.nu == 3);
  CHECK(p.delta_i == 4);
  CHECK(p.gap_pairs == 4);  // (1,5), (5,1), (2,4), (4,2)
  CHECK(static_cast<Value>(p.nu) == 2 - p.delta_i + p.gap_pairs + 1);
}
