#ifndef NSRING_IO_HPP
#define NSRING_IO_HPP

// Text parsing and JSON encoding. Requires nlohmann/json ("json.hpp") on the
// include path; the algorithm headers do not.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nsring/classify.hpp"
#include "nsring/error.hpp"
#include "nsring/herzog.hpp"
#include "nsring/ideal.hpp"
#include "nsring/ringcalc.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<Value> parse_integer_list(std::string_view text, char sep) {
  std::vector<Value> out;
  if (trim(text).empty()) throw Error(ErrorCode::Parse, "empty list");
  std::size_t pos = 0;
  while (true) {
    auto const next = text.find(sep, pos);
    auto const field = trim(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    Value v = 0;
    auto const* end = field.data() + field.size();
    auto const [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc{} || ptr != end) {
      throw Error(ErrorCode::Parse, "not an integer: '" + std::string(field) + "'");
    }
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

/// "4,5,7" -> <4,5,7>.
inline NumericalSemigroup parse_semigroup(std::string_view text) {
  auto const gens = detail::parse_integer_list(text, ',');
  for (Value a : gens) {
    if (a < 1) throw Error(ErrorCode::Parse, "generators must be positive integers");
  }
  return NumericalSemigroup::from_generators(gens);
}

/// "12;13;14" -> generator values. Negative values need `relative`.
inline std::vector<Value> parse_ideal_generators(std::string_view text, bool relative = false) {
  auto gens = detail::parse_integer_list(text, ';');
  if (!relative) {
    for (Value v : gens) {
      if (v < 0) throw Error(ErrorCode::Parse, "negative generator requires --relative");
    }
  }
  return gens;
}

inline Json to_json(const NumericalSemigroup& h) {
  Json j;
  j["generators"] = h.minimal_generators();
  j["multiplicity"] = h.multiplicity();
  j["edim"] = h.embedding_dimension();
  j["frobenius"] = h.frobenius();
  j["genus"] = h.genus();
  j["conductor"] = h.conductor();
  j["type"] = h.type();
  j["symmetric"] = is_symmetric(h);
  j["gaps"] = h.gaps();
  j["pf"] = h.pseudo_frobenius();
  j["apery_mult"] = apery_set(h, h.multiplicity());
  return j;
}

/// Reads the "generators" field; other fields are derived and ignored.
inline NumericalSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw Error(ErrorCode::Parse, "expected an object with a 'generators' array");
  }
  std::vector<Value> gens;
  for (auto const& v : j["generators"]) {
    if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "generator is not an integer");
    gens.push_back(v.get<Value>());
  }
  return NumericalSemigroup::from_generators(gens);
}

inline Json to_json(const HilbertProfile& p) {
  Json j;
  j["hilbert"] = p.values;
  j["length"] = p.length;
  j["s"] = p.top_socle_degree;
  j["v"] = p.order;
  j["edim_q"] = p.edim_quotient;
  return j;
}

inline Json ideal_json(const RelativeIdeal& ideal) {
  Json j;
  j["parent"] = ideal.parent().minimal_generators();
  j["generators"] = ideal.minimal_generators();
  j["exceptional"] = ideal.exceptional();
  j["threshold"] = ideal.threshold();
  j["g"] = ideal.threshold() - 1;
  return j;
}

/// Full report for an ideal of S: metrics, quotient Hilbert data and the
/// irreducible / canonical / maximum sparse flags (proper ideals only).
inline Json ideal_report(const RelativeIdeal& ideal, bool decompose) {
  Json j = ideal_json(ideal);
  auto const m = metrics(ideal);
  j["d"] = m.d ? Json(*m.d) : Json(nullptr);
  j["canonical"] = is_canonical(ideal);
  if (!ideal.is_integral()) return j;

  detail::require_proper(ideal);
  PowerLadder ladder(ideal.parent());
  auto const p = hilbert_profile(ideal, ladder);
  auto const hj = to_json(p);
  for (auto const& [k, v] : hj.items()) j[k] = v;
  auto const ir = is_irreducible(ideal);
  j["irreducible"] = ir.irreducible;
  j["socle"] = ir.socle;
  j["max_sparse"] = is_maximum_sparse(ideal);
  auto const sd = sdeg_report(ideal, ladder);
  j["thm33_bound"] = sd.bound;
  j["thm33_equality"] = sd.bound_equality;
  j["cor34_equality"] = sd.stretched_bound ? Json(sd.stretched_equality) : Json(nullptr);
  if (decompose) {
    Json parts = Json::array();
    for (auto const& part : irreducible_decomposition(ideal)) {
      Json c;
      c["index"] = *ideal.parent().index_of(part.threshold() - 1);
      c["value"] = part.threshold() - 1;
      c["generators"] = part.minimal_generators();
      parts.push_back(c);
    }
    j["decomposition"] = parts;
  }
  return j;
}

inline Json to_json(const HerzogMatrix& m) {
  Json j;
  j["alpha"] = m.alpha;
  j["beta"] = m.beta;
  j["gamma"] = m.gamma;
  j["alpha_p"] = m.alpha_p;
  j["beta_p"] = m.beta_p;
  j["gamma_p"] = m.gamma_p;
  return j;
}

inline Json herzog_json(const NumericalSemigroup& h) {
  Json j = to_json(herzog_matrix(h));
  auto const p = charcsr_witness_params(h);
  j["axis"] = std::string(1, p.axis);
  j["s_min"] = p.s_min;
  j["s_max"] = p.s_max;
  return j;
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["generators"] = r.semigroup.minimal_generators();
  j["genus"] = r.semigroup.genus();
  j["frobenius"] = r.semigroup.frobenius();
  j["regular"] = r.regular;
  if (r.stretched) {
    j["stretched"] = r.stretched->stretched;
    j["stretched_length"] = r.stretched->length;
  } else {
    j["stretched"] = "Regular";
  }
  if (r.canonical_stretched) {
    auto const& v = *r.canonical_stretched;
    Json c;
    c["verdict"] = to_string(v.kind);
    c["search_bound"] = v.search_bound;
    if (v.witness) {
      c["index"] = v.witness->index;
      c["value"] = v.witness->value;
      c["ideal"] = v.witness->ideal.minimal_generators();
      c["hilbert"] = v.witness->profile.values;
    }
    j["canonical_stretched"] = c;
  } else {
    j["canonical_stretched"] = "Regular";
  }
  if (r.sparse_stretched) {
    auto const& v = *r.sparse_stretched;
    Json c;
    c["verdict"] = to_string(v.kind);
    c["search_bound"] = v.search_bound;
    if (v.witness) {
      auto const& w = *v.witness;
      c["index"] = w.index;
      c["value"] = w.value;
      c["ideal"] = w.ideal.minimal_generators();
      c["hilbert"] = w.profile.values;
      c["s"] = w.s;
      c["val_z"] = w.val_z;
      c["g"] = w.frobenius_g;
      c["N"] = w.n;
      c["equation_holds"] = w.equation_holds;
      c["gap_identity"] = w.gap_identity;
    } else {
      Json o;
      o["N"] = v.obstruction.n;
      o["candidates"] = v.obstruction.candidates;
      o["members"] = v.obstruction.members;
      o["applies"] = v.obstruction.applies;
      c["obstruction"] = o;
    }
    j["sparse_stretched"] = c;
  } else {
    j["sparse_stretched"] = "Regular";
  }
  auto const& g = r.gorenstein;
  Json gj;
  gj["symmetric"] = g.symmetric;
  gj["principal_maximum_sparse"] = g.principal_maximum_sparse;
  gj["canonicals_maximum_sparse"] = g.canonicals_maximum_sparse;
  gj["principal_witness"] = g.principal_witness ? Json(*g.principal_witness) : Json(nullptr);
  gj["canonical_counterexample"] =
      g.canonical_counterexample ? Json(*g.canonical_counterexample) : Json(nullptr);
  gj["canonicals_checked"] = g.canonicals_checked;
  gj["bound"] = g.bound;
  gj["equivalence_holds"] = g.equivalence_holds;
  j["gorenstein"] = gj;
  return j;
}

}  // namespace nsring

#endif
