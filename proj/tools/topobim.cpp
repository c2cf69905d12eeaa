// Command-line front end. Every command writes JSON lines to stdout.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 bad flags or an unknown
// check/map name, 3 a precondition error (structured JSON on stderr).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "topobim/bialgebra.hpp"
#include "topobim/enumeration.hpp"
#include "topobim/error.hpp"
#include "topobim/verifier.hpp"

using namespace topobim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

// Raised with the input that caused a library error.
struct Failed {
  Error error;
  Json offending;
};

int report_error(const Error& e, const Json& offending) {
  std::cerr << Json{{"code", error_code_name(e.code())}, {"message", e.what()}, {"offending_input", offending}}.dump()
            << '\n';
  switch (e.code()) {
    case ErrorCode::kUnknownCheck:
    case ErrorCode::kUnknownMap:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformedInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON lines, or a single (possibly multi-line) document.
std::vector<Json> read_documents(const std::string& path) {
  const std::string text = read_input(path);
  std::vector<Json> docs;
  std::istringstream lines(text);
  std::string line;
  bool per_line = true;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!Json::accept(line)) {
      per_line = false;
      break;
    }
    docs.push_back(Json::parse(line));
  }
  if (per_line) return docs;
  return {parse_json(text)};
}

int cmd_enumerate(int n, bool unlabelled, bool grading) {
  if (grading) {
    for (const auto& [d, count] : count_by_grading(n)) std::cout << Json{{"d", d}, {"count", count}}.dump() << '\n';
    return kExitOk;
  }
  if (unlabelled) {
    for (const CanonicalClass& c : canonical_classes(n)) std::cout << topology_to_json(c.representative).dump() << '\n';
    return kExitOk;
  }
  for (const Topology& t : all_topologies(LabelSet::first_n(n))) std::cout << topology_to_json(t).dump() << '\n';
  return kExitOk;
}

int cmd_canonical(const std::string& path) {
  for (const Json& doc : read_documents(path)) {
    try {
      const CanonicalClass c = canonical_form(topology_from_json(doc));
      std::cout << Json{{"representative", topology_to_json(c.representative)}, {"orbit_size", c.orbit_size}}.dump()
                << '\n';
    } catch (const Error& e) {
      throw Failed{e, doc};
    }
  }
  return kExitOk;
}

int cmd_count(int n) {
  Json grades = Json::object();
  std::uint64_t labelled = 0;
  for (const auto& [d, count] : count_by_grading(n)) {
    grades[std::to_string(d)] = count;
    labelled += count;
  }
  std::cout << Json{{"n", n},
                    {"labelled", labelled},
                    {"unlabelled", canonical_classes(n).size()},
                    {"by_grading", grades}}
                   .dump()
            << '\n';
  return kExitOk;
}

// A key, an array of keys (one per argument), or a linear combination.
LinComb compute_one(MapName map, const Json& doc) {
  if (doc.is_object() && doc.contains("terms")) return apply_map_linear(map, lincomb_from_json(doc));
  std::vector<BasisKey> args;
  if (doc.is_array()) {
    for (const Json& k : doc) args.push_back(key_from_json(k));
  } else {
    args.push_back(key_from_json(doc));
  }
  return apply_map(map, args);
}

int cmd_compute(const std::string& name, const std::string& path) {
  const auto map = map_from_name(name);
  if (!map) throw Failed{Error(ErrorCode::kUnknownMap, "unknown map '" + name + "'"), name};
  for (const Json& doc : read_documents(path)) {
    try {
      std::cout << lincomb_to_json(compute_one(*map, doc)).dump() << '\n';
    } catch (const Error& e) {
      throw Failed{e, doc};
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& check, bool all, int n, bool expensive, int jobs, const std::string& report_path) {
  VerifyOptions opts;
  opts.expensive = expensive;
  opts.jobs = jobs;
  std::vector<VerificationReport> reports;
  try {
    if (all) {
      reports = run_all(n, opts);
    } else {
      reports.push_back(run_check(check, n, opts));
    }
  } catch (const Error& e) {
    throw Failed{e, Json{{"check", all ? "all" : check}, {"n", n}}};
  }
  bool passed = true;
  Json collected = Json::array();
  for (const VerificationReport& r : reports) {
    std::cout << r.to_json().dump() << '\n';
    passed = passed && r.passed;
    collected.push_back(r.to_json());
  }
  // Human-readable summary on stderr so stdout stays machine-readable.
  std::cerr << std::left << std::setw(26) << "check" << std::setw(4) << "n" << std::setw(12) << "checked"
            << std::setw(10) << "ms" << "result\n";
  for (const VerificationReport& r : reports) {
    std::cerr << std::setw(26) << r.name << std::setw(4) << r.ground_size << std::setw(12)
              << r.basis_elements_checked << std::setw(10) << std::fixed << std::setprecision(1) << r.elapsed_ms
              << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Failed{Error(ErrorCode::kMalformedInput, "cannot write '" + report_path + "'"), report_path};
    out << Json{{"passed", passed}, {"reports", collected}}.dump(2) << '\n';
  }
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topologies: enumeration, structure maps and axiom checks"};
  app.require_subcommand(1);

  int n = 0;
  bool unlabelled = false, grading = false;
  auto* enumerate = app.add_subcommand("enumerate", "Topologies on {0..N-1}, one per line");
  enumerate->add_option("N", n, "ground set size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--unlabelled", unlabelled, "one representative per homeomorphism class");
  enumerate->add_flag("--grading", grading, "histogram of d(T) instead of topologies");

  std::string path = "-";
  auto* canonical = app.add_subcommand("canonical", "Canonical form and orbit size of each input topology");
  canonical->add_option("input", path, "JSON-lines file, or - for stdin");

  std::string map_name_arg;
  auto* compute = app.add_subcommand("compute", "Apply a structure map to JSON inputs");
  compute->add_option("map", map_name_arg, "map name")->required();
  compute->add_option("input", path, "JSON file, or - for stdin");

  std::string check;
  bool all = false, expensive = false;
  int verify_n = 3, jobs = 1;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run registered axiom checks");
  auto* check_opt = verify->add_option("--check", check, "check name");
  auto* all_opt = verify->add_flag("--all", all, "every registered check at every n up to --n");
  check_opt->excludes(all_opt);
  verify->add_option("--n", verify_n, "ground set size (largest size with --all)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--expensive", expensive, "allow n = 4 for the expensive checks");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "also write a JSON summary to this file");
  bool list = false;
  verify->add_flag("--list", list, "print the check registry");

  int count_n = 0;
  auto* count = app.add_subcommand("count", "Labelled, unlabelled and per-grading counts");
  count->add_option("N", count_n, "ground set size")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (*verify && !list && check.empty() && !all) {
    std::cerr << "verify needs --check NAME, --all or --list\n";
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(n, unlabelled, grading);
    if (*canonical) return cmd_canonical(path);
    if (*compute) return cmd_compute(map_name_arg, path);
    if (*count) return cmd_count(count_n);
    if (list) {
      for (const CheckInfo& c : registered_checks()) {
        std::cout << Json{{"name", c.name},
                          {"statement", c.statement},
                          {"origin", c.origin},
                          {"default_max_n", c.default_max_n},
                          {"opt_in_max_n", c.opt_in_max_n},
                          {"designated_fault", fault_name(c.designated_fault)}}
                         .dump()
                  << '\n';
      }
      return kExitOk;
    }
    return cmd_verify(check, all, verify_n, expensive, jobs, report_path);
  } catch (const Failed& f) {
    return report_error(f.error, f.offending);
  } catch (const Error& e) {
    Json offending = nullptr;
    if (*enumerate) offending = n;
    if (*count) offending = count_n;
    return report_error(e, offending);
  }
}
