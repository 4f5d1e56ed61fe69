#ifndef NSRING_CENSUS_HPP
#define NSRING_CENSUS_HPP

// Classification of every semigroup up to a genus, one row per semigroup.
// Work is spread over threads; rows keep enumeration order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "nsring/classify.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

struct CensusRow {
  std::string generators;
  Value genus = 0;
  Value frobenius = 0;
  std::size_t edim = 0;
  std::size_t type = 0;
  bool symmetric = false;
  char stretched = 'R';            // 'T', 'F', or 'R' for H = N
  char canonical_stretched = 'R';  // 'M', 'H', 'N' or 'R'
  char sparse_stretched = 'R';     // 'W', 'N' or 'R'
  Value witness_s_i = -1;          // canonical-stretched monomial witness value
};

inline CensusRow census_row(const ClassificationReport& r) {
  CensusRow row;
  auto const& h = r.semigroup;
  row.generators = to_text(h);
  row.genus = h.genus();
  row.frobenius = h.frobenius();
  row.edim = h.embedding_dimension();
  row.type = h.type();
  row.symmetric = r.gorenstein.symmetric;
  if (r.regular) return row;
  row.stretched = r.stretched->stretched ? 'T' : 'F';
  switch (r.canonical_stretched->kind) {
    case CanonicalKind::MonomialWitness: row.canonical_stretched = 'M'; break;
    case CanonicalKind::ByHerzogTheorem: row.canonical_stretched = 'H'; break;
    case CanonicalKind::NoMonomialWitness: row.canonical_stretched = 'N'; break;
  }
  row.sparse_stretched = r.sparse_stretched->kind == SparseKind::Witness ? 'W' : 'N';
  if (r.canonical_stretched->witness) row.witness_s_i = r.canonical_stretched->witness->value;
  return row;
}

inline std::vector<CensusRow> run_census(Value max_genus, unsigned threads = 0) {
  auto const semigroups = enumerate_by_genus(max_genus);
  std::vector<CensusRow> rows(semigroups.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, rows.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < semigroups.size(); i = next++) {
      rows[i] = census_row(classify_all(semigroups[i]));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "generators|genus|frobenius|edim|type|symmetric|stretched|canonical_stretched|"
         "sparse_stretched|witness_s_i\n";
  for (auto const& r : rows) {
    out << r.generators << '|' << r.genus << '|' << r.frobenius << '|' << r.edim << '|'
        << r.type << '|' << (r.symmetric ? 'T' : 'F') << '|' << r.stretched << '|'
        << r.canonical_stretched << '|' << r.sparse_stretched << '|' << r.witness_s_i << '\n';
  }
  return out.str();
}

inline std::string census_json(const std::vector<CensusRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (auto const& r : rows) {
    nlohmann::ordered_json j;
    j["generators"] = r.generators;
    j["genus"] = r.genus;
    j["frobenius"] = r.frobenius;
    j["edim"] = r.edim;
    j["type"] = r.type;
    j["symmetric"] = r.symmetric;
    j["stretched"] = std::string(1, r.stretched);
    j["canonical_stretched"] = std::string(1, r.canonical_stretched);
    j["sparse_stretched"] = std::string(1, r.sparse_stretched);
    j["witness_s_i"] = r.witness_s_i;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

/// Number of rows per genus.
inline std::map<Value, std::size_t> census_counts(const std::vector<CensusRow>& rows) {
  std::map<Value, std::size_t> counts;
  for (auto const& r : rows) ++counts[r.genus];
  return counts;
}

}  // namespace nsring

#endif
