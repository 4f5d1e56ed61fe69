// nsring: command-line front end for the numerical semigroup ring library.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 domain
// precondition violated, 4 I/O failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsring/census.hpp"
#include "nsring/classify.hpp"
#include "nsring/io.hpp"
#include "nsring/ringcalc.hpp"
#include "nsring/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kParse = 2;
constexpr int kDomain = 3;
constexpr int kIo = 4;
constexpr nsring::Value kGenusCap = 16;

struct Options {
  bool json = false;
  std::optional<nsring::Value> bound;
};

void print(const nsring::Json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (auto const& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
  }
}

int cmd_semigroup(const std::string& gens_text, std::size_t imax, const Options& opt) {
  auto const h = nsring::parse_semigroup(gens_text);
  auto j = nsring::to_json(h);
  auto const hs = nsring::assoc_graded_hilbert(h, imax);
  j["assoc_hilbert"] = hs.values;
  j["assoc_hilbert_non_decreasing"] = hs.non_decreasing;
  if (h.embedding_dimension() == 3 && !nsring::is_symmetric(h)) {
    j["herzog"] = nsring::herzog_json(h);
  }
  print(j, opt.json);
  return kOk;
}

int cmd_ideal(const std::string& gens_text, const std::string& gens, bool relative, bool decompose,
              const Options& opt) {
  auto const h = nsring::parse_semigroup(gens_text);
  auto const values = nsring::parse_ideal_generators(gens, relative);
  auto const ideal = nsring::ideal_from_generators(h, values);
  print(nsring::ideal_report(ideal, decompose), opt.json);
  return kOk;
}

int cmd_classify(const std::string& gens_text, const Options& opt) {
  auto const h = nsring::parse_semigroup(gens_text);
  nsring::ClassifyBounds bounds{opt.bound, opt.bound, opt.bound};
  print(nsring::to_json(nsring::classify_all(h, bounds)), opt.json);
  return kOk;
}

int cmd_census(nsring::Value max_genus, const std::string& out, const std::string& format,
               unsigned threads) {
  if (max_genus < 0 || max_genus > kGenusCap) {
    std::cerr << "max genus must lie in [0, " << kGenusCap << "]\n";
    return kParse;
  }
  auto const rows = nsring::run_census(max_genus, threads);
  auto const text = format == "json" ? nsring::census_json(rows) : nsring::census_csv(rows);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      std::cerr << "cannot write " << out << '\n';
      return kIo;
    }
  }
  for (auto const& [genus, count] : nsring::census_counts(rows)) {
    std::cerr << "genus " << genus << ": " << count << '\n';
  }
  std::cerr << "total: " << rows.size() << '\n';
  return kOk;
}

int cmd_verify(const std::string& filter, const std::vector<std::string>& expects,
               const Options& opt) {
  std::map<std::string, std::string> overrides;
  for (auto const& e : expects) {
    auto const eq = e.find('=');
    if (eq == std::string::npos) {
      std::cerr << "--expect takes group:name=value, got '" << e << "'\n";
      return kParse;
    }
    overrides[e.substr(0, eq)] = e.substr(eq + 1);
  }
  if (!filter.empty()) {
    auto const& groups = nsring::check_groups();
    if (std::find(groups.begin(), groups.end(), filter) == groups.end()) {
      std::cerr << "unknown check group '" << filter << "'\n";
      return kParse;
    }
  }
  auto const checks = nsring::run_checks(filter, overrides);
  std::size_t failed = 0;
  nsring::Json arr = nsring::Json::array();
  for (auto const& c : checks) {
    if (!c.passed()) ++failed;
    if (opt.json) {
      arr.push_back({{"check", c.key()},
                     {"expected", c.expected},
                     {"computed", c.computed},
                     {"pass", c.passed()}});
    } else {
      std::cout << (c.passed() ? "PASS " : "FAIL ") << c.key() << "  expected=" << c.expected
                << "  computed=" << c.computed << '\n';
    }
  }
  if (opt.json) {
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kMismatch;
}

int exit_code_for(nsring::ErrorCode code) {
  switch (code) {
    case nsring::ErrorCode::Parse:
    case nsring::ErrorCode::EmptyInput:
    case nsring::ErrorCode::InvalidArgument:
    case nsring::ErrorCode::GcdNotOne:
      return kParse;
    default:
      return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup rings: invariants, ideals, classification"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON");
  app.add_option("--bound", opt.bound, "Override the value bound of every search")
      ->check(CLI::NonNegativeNumber);

  std::string gens_text;
  std::string gens;

  auto* sg = app.add_subcommand("semigroup", "Invariants of <a1,...,an>");
  std::size_t imax = 8;
  sg->add_option("generators", gens_text, "Comma-separated generators, e.g. 4,5,7")->required();
  sg->add_option("--imax", imax, "Last index of the associated graded Hilbert prefix");

  auto* id = app.add_subcommand("ideal", "Metrics and quotient data of a monomial ideal");
  bool relative = false;
  bool decompose = false;
  id->add_option("generators", gens_text, "Semigroup generators")->required();
  id->add_option("ideal", gens, "Ideal generators separated by ';', e.g. 12;13")->required();
  id->add_flag("--relative", relative, "Allow negative generators");
  id->add_flag("--decompose", decompose, "Add the irreducible decomposition");

  auto* cl = app.add_subcommand("classify", "Stretched / canonical / sparse classification");
  cl->add_option("generators", gens_text, "Semigroup generators")->required();

  auto* ce = app.add_subcommand("census", "Classify every semigroup up to a genus");
  nsring::Value max_genus = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  ce->add_option("--max-genus", max_genus, "Largest genus")->required();
  ce->add_option("--out", out, "Output file (stdout if omitted)");
  ce->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ce->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* vp = app.add_subcommand("verify-paper", "Recompute the reference examples");
  std::string filter;
  std::vector<std::string> expects;
  vp->add_option("--filter", filter, "Run one check group, e.g. example4.18");
  vp->add_option("--expect", expects, "Override an expected value: group:name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*sg) return cmd_semigroup(gens_text, imax, opt);
    if (*id) return cmd_ideal(gens_text, gens, relative, decompose, opt);
    if (*cl) return cmd_classify(gens_text, opt);
    if (*ce) return cmd_census(max_genus, out, format, threads);
    if (*vp) return cmd_verify(filter, expects, opt);
  } catch (const nsring::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kOk;
}
