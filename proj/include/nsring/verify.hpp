#ifndef NSRING_VERIFY_HPP
#define NSRING_VERIFY_HPP

// Reference checks: worked examples with known values, recomputed from
// scratch. Each check compares rendered strings so expected values can be
// overridden from the command line.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsring/classify.hpp"
#include "nsring/ideal.hpp"
#include "nsring/ringcalc.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

struct Check {
  std::string group;
  std::string name;
  std::string expected;
  std::string computed;

  std::string key() const { return group + ":" + name; }
  bool passed() const { return expected == computed; }
};

namespace detail {

inline std::string render(bool b) { return b ? "true" : "false"; }
inline std::string render(Value v) { return std::to_string(v); }
inline std::string render(const std::vector<Value>& v) { return nlohmann::json(v).dump(); }
inline std::string render(const char* s) { return s; }

inline NumericalSemigroup interval_semigroup(Value e) {
  std::vector<Value> gens;
  for (Value a = e; a < 2 * e; ++a) gens.push_back(a);
  return NumericalSemigroup::from_generators(gens);
}

inline RelativeIdeal interval_ideal(const NumericalSemigroup& h, Value lo, Value hi) {
  std::vector<Value> gens;
  for (Value a = lo; a <= hi; ++a) gens.push_back(a);
  return ideal_from_generators(h, gens);
}

class CheckList {
 public:
  explicit CheckList(std::string group) : group_(std::move(group)) {}

  template <class T>
  void add(std::string name, std::string expected, const T& computed) {
    checks_.push_back({group_, std::move(name), std::move(expected), render(computed)});
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string group_;
  std::vector<Check> checks_;
};

inline std::vector<Check> example_3_5() {
  CheckList c("example3.5");
  auto const h = NumericalSemigroup::from_generators({3, 7, 8});
  auto const p = hilbert_profile(ideal_from_generators(h, {6, 7}));
  c.add("length", "4", p.length);
  c.add("edim", "2", p.edim_quotient);
  c.add("s", "2", p.top_socle_degree);
  c.add("s_equals_length_minus_edim", "true", p.top_socle_degree == p.length - p.edim_quotient);
  for (Value e : {3, 4, 5}) {
    auto const he = interval_semigroup(e);
    auto const q = hilbert_profile(interval_ideal(he, e, 2 * e - 2));
    auto const tag = "e" + std::to_string(e);
    c.add(tag + ".length", "2", q.length);
    c.add(tag + ".edim", "1", q.edim_quotient);
    c.add(tag + ".s", "1", q.top_socle_degree);
  }
  return c.take();
}

inline std::vector<Check> example_3_10() {
  CheckList c("example3.10");
  for (Value e : {3, 4, 5, 6}) {
    auto const h = interval_semigroup(e);
    auto const ideal = interval_ideal(h, 2 * e, 3 * e - 2);
    auto const tag = "e" + std::to_string(e);
    c.add(tag + ".hilbert", render(std::vector<Value>{1, e, 1}), hilbert_profile(ideal).values);
    c.add(tag + ".irreducible", "true", is_irreducible(ideal).irreducible);
    c.add(tag + ".canonical", "true", is_canonical(ideal));
  }
  return c.take();
}

inline std::vector<Check> example_4_16() {
  CheckList c("example4.16");
  auto const h = interval_semigroup(6);
  auto const ideal = interval_ideal(h, 12, 16);
  c.add("g", "17", ideal.threshold() - 1);
  c.add("length", "8", colength(ideal));
  c.add("delta", "5", h.genus());
  c.add("max_sparse", "true", is_maximum_sparse(ideal));
  return c.take();
}

inline std::vector<Check> example_4_18() {
  CheckList c("example4.18");
  auto const h = interval_semigroup(6);
  auto const ideal = interval_ideal(h, 12, 16);
  c.add("hilbert", "[1,6,1]", hilbert_profile(ideal).values);
  c.add("canonical", "true", is_canonical(ideal));
  c.add("sparse_stretched", "Witness", to_string(sparse_stretched(h).kind));
  return c.take();
}

inline std::vector<Check> example_4_19() {
  CheckList c("example4.19");
  auto const h = NumericalSemigroup::from_generators({4, 6, 13, 15});
  c.add("delta", "7", h.genus());
  bool const outside = !h.contains(2) && !h.contains(3) && !h.contains(5) && !h.contains(9);
  c.add("2,3,5,9_not_in_H", "true", outside);
  return c.take();
}

inline std::vector<Check> example_5_2() {
  CheckList c("example5.2");
  auto const h = NumericalSemigroup::from_generators({4, 5, 7});
  c.add("delta", "4", h.genus());
  c.add("edim", "3", static_cast<Value>(h.embedding_dimension()));
  auto const sparse = sparse_stretched(h);
  c.add("N", "10", sparse.obstruction.n);
  c.add("candidates", "[2,3,6,11]", sparse.obstruction.candidates);
  c.add("members", "[11]", sparse.obstruction.members);
  c.add("sparse_stretched", "ExhaustedNo", to_string(sparse.kind));
  c.add("canonical_stretched_positive", "true",
        canonical_stretched(h).kind != CanonicalKind::NoMonomialWitness);
  return c.take();
}

inline std::vector<Check> example_5_3() {
  CheckList c("example5.3");
  auto const h = NumericalSemigroup::from_generators({5, 6, 13});
  auto const st = is_stretched_ring(h);
  c.add("length", "2", st.length);
  c.add("stretched", "false", st.stretched);
  c.add("canonical_stretched_positive", "true",
        canonical_stretched(h).kind != CanonicalKind::NoMonomialWitness);
  return c.take();
}

}  // namespace detail

inline const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"example3.5",  "example3.10", "example4.16",
                                               "example4.18", "example4.19", "example5.2",
                                               "example5.3"};
  return groups;
}

/// Runs the groups whose id equals `filter` (all when empty); `overrides`
/// maps "group:name" to a replacement expected value.
inline std::vector<Check> run_checks(const std::string& filter = {},
                                     const std::map<std::string, std::string>& overrides = {}) {
  using Fn = std::vector<Check> (*)();
  static const std::map<std::string, Fn> table{
      {"example3.5", detail::example_3_5},   {"example3.10", detail::example_3_10},
      {"example4.16", detail::example_4_16}, {"example4.18", detail::example_4_18},
      {"example4.19", detail::example_4_19}, {"example5.2", detail::example_5_2},
      {"example5.3", detail::example_5_3}};
  std::vector<Check> out;
  for (auto const& group : check_groups()) {
    if (!filter.empty() && filter != group) continue;
    for (auto& check : table.at(group)()) {
      if (auto it = overrides.find(check.key()); it != overrides.end()) check.expected = it->second;
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace nsring

#endif
