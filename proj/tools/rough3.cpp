// Command line front end: parses tables and algebra files, runs the
// verification suites, and prints one line of deterministic JSON per run.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rough3/approximation.hpp"
#include "rough3/error.hpp"
#include "rough3/finite_lukasiewicz.hpp"
#include "rough3/info_table.hpp"
#include "rough3/monteiro.hpp"
#include "rough3/object_set.hpp"
#include "rough3/rough_algebra.hpp"
#include "rough3/serialize.hpp"

namespace {

using namespace rough3;

struct Options {
  std::string table;
  std::string algebra;
  std::string set_spec;
  std::string object;
  bool object_given = false;
  std::string suite = "all";
  std::size_t max_universe = kDefaultMaxUniverse;
  std::size_t max_elements = kDefaultMaxElements;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string display_name(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

void trim(std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) {
    s.clear();
    return;
  }
  const auto to = s.find_last_not_of(" \t\r\n");
  s = s.substr(from, to - from + 1);
}

ObjectSet parse_set_spec(const UniversePtr& universe, const std::string& spec) {
  std::vector<std::string> ids;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    trim(token);
    if (!token.empty()) ids.push_back(token);
  }
  return ObjectSet::of(universe, ids);
}

struct LoadedTable {
  PartitionPtr partition;
  InputDigest digest;
  InformationTable table;
};

LoadedTable load_table(const std::string& path) {
  const std::string bytes = read_file(path);
  InformationTable table = parse_table(bytes);
  PartitionPtr p = share(indiscernibility_partition(table));
  return LoadedTable{p, InputDigest{display_name(path), fnv1a64_digest(bytes)}, std::move(table)};
}

struct LoadedAlgebra {
  FiniteAlgebra algebra;
  InputDigest digest;
};

LoadedAlgebra load_algebra(const std::string& path) {
  const std::string bytes = read_file(path);
  return LoadedAlgebra{parse_algebra_json(bytes), InputDigest{display_name(path), fnv1a64_digest(bytes)}};
}

// ---------------------------------------------------------------------------
// verify suites

const std::vector<std::string> kSuites = {"monadic",        "lukasiewicz", "determination",
                                          "representation", "quotient",    "membership"};

bool wants(const std::string& suite, const char* stage) {
  return suite == stage || suite == "all";
}

VerificationReport run_table_suite(const std::string& suite, const PartitionPtr& p,
                                   std::size_t max_universe, std::size_t max_elements,
                                   std::vector<std::string>& notes) {
  VerificationReport report;
  if (wants(suite, "monadic")) {
    report.append(check_monadic_axioms(*p, max_universe));
  }
  if (wants(suite, "lukasiewicz")) {
    const FiniteAlgebra alg = import_rough_algebra(p, max_universe);
    report.append(check_axioms(alg));
    report.append(derived_operator_checks(alg));
  }
  if (wants(suite, "determination")) {
    report.append(verify_determination(p, max_universe));
    report.append(verify_algebra_laws(p, max_universe));
  }
  if (suite == "representation") {
    const FiniteAlgebra alg = import_rough_algebra(p, max_universe);
    report.append(represent(alg, max_elements).checks);
    report.append(verify_representation_identities(alg, max_elements));
  } else if (suite == "all") {
    const FiniteAlgebra alg = import_rough_algebra(p, max_universe);
    if (alg.size() <= max_elements) {
      report.append(represent(alg, max_elements).checks);
      report.append(verify_representation_identities(alg, max_elements));
    } else {
      notes.push_back("representation skipped: the algebra has " + std::to_string(alg.size()) +
                      " elements, above the --max-elements bound of " +
                      std::to_string(max_elements));
    }
  }
  if (wants(suite, "quotient")) {
    report.append(verify_congruence(p, max_universe));
    report.append(check_axioms(quotient_algebra(p, max_universe)));
    report.append(verify_distribution_identities(p, max_universe));
    report.append(verify_quotient_isomorphism(p, max_universe));
  }
  if (wants(suite, "membership")) {
    report.append(verify_membership_extension(p, max_universe));
    report.append(verify_rough_monteiro_bridge(p, max_universe));
  }
  return report;
}

VerificationReport run_algebra_suite(const std::string& suite, const FiniteAlgebra& alg,
                                     std::size_t max_elements, std::vector<std::string>& notes) {
  if (suite == "monadic" || suite == "quotient" || suite == "membership") {
    throw InputError("suite '" + suite + "' needs a table input (--table)");
  }
  VerificationReport report;
  if (wants(suite, "lukasiewicz")) {
    report.append(check_axioms(alg));
    report.append(derived_operator_checks(alg));
  }
  if (wants(suite, "determination")) {
    report.append(verify_derived_structure(alg));
  }
  if (suite == "representation") {
    report.append(represent(alg, max_elements).checks);
    report.append(verify_representation_identities(alg, max_elements));
  } else if (suite == "all") {
    if (!check_axioms(alg).all_passed()) {
      notes.push_back("representation skipped: the algebra fails the axiom checks");
    } else if (alg.size() > max_elements) {
      notes.push_back("representation skipped: the algebra has " + std::to_string(alg.size()) +
                      " elements, above the --max-elements bound of " +
                      std::to_string(max_elements));
    } else {
      report.append(represent(alg, max_elements).checks);
      report.append(verify_representation_identities(alg, max_elements));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

class Timer {
 public:
  double ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void summary(const Options& opt, const Timer& timer, const std::string& text) {
  if (opt.json) return;
  std::fprintf(stderr, "%s [%.1f ms]\n", text.c_str(), timer.ms());
}

std::string failure_text(const VerificationReport& report) {
  std::size_t failed = 0;
  const CheckResult* first = nullptr;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      ++failed;
      if (!first) first = &c;
    }
  }
  if (failed == 0) return std::to_string(report.checks.size()) + " checks, all passed";
  return std::to_string(report.checks.size()) + " checks, " + std::to_string(failed) +
         " failed (first: " + first->name + " — " + first->counterexample + ")";
}

int cmd_partition(const Options& opt) {
  const Timer timer;
  const LoadedTable loaded = load_table(opt.table);
  std::cout << to_json(*loaded.partition) << "\n";
  summary(opt, timer,
          "partition: " + std::to_string(loaded.partition->block_count()) + " blocks over " +
              std::to_string(loaded.partition->object_count()) + " objects");
  return 0;
}

int cmd_approx(const Options& opt) {
  const Timer timer;
  const LoadedTable loaded = load_table(opt.table);
  const ObjectSet a = parse_set_spec(loaded.partition->universe(), opt.set_spec);
  const RoughSet r = rough_of(loaded.partition, a);
  std::cout << to_json(r) << "\n";
  summary(opt, timer,
          "approx: |lower|=" + std::to_string(r.lower_part().count()) +
              ", |upper|=" + std::to_string(r.upper_part().count()) + " for a set of " +
              std::to_string(a.count()) + " objects");
  return 0;
}

int cmd_membership(const Options& opt) {
  const Timer timer;
  const LoadedTable loaded = load_table(opt.table);
  const ObjectSet a = parse_set_spec(loaded.partition->universe(), opt.set_spec);
  if (opt.object_given) {
    std::cout << membership_json(*loaded.partition, a, opt.object) << "\n";
    summary(opt, timer,
            "membership: object " + opt.object + " has grade " +
                to_string(membership(*loaded.partition, a, opt.object)));
  } else {
    std::cout << membership_json(*loaded.partition, a) << "\n";
    summary(opt, timer,
            "membership: graded " + std::to_string(loaded.partition->object_count()) + " objects");
  }
  return 0;
}

int cmd_quotient(const Options& opt) {
  const Timer timer;
  const LoadedTable loaded = load_table(opt.table);
  const FiniteAlgebra q = quotient_algebra(loaded.partition, opt.max_universe);
  std::cout << to_json(q) << "\n";
  summary(opt, timer, "quotient: " + std::to_string(q.size()) + " classes");
  return 0;
}

int cmd_represent(const Options& opt) {
  const Timer timer;
  const LoadedAlgebra loaded = load_algebra(opt.algebra);
  const Representation rep = represent(loaded.algebra, opt.max_elements);
  const VerificationReport identities =
      verify_representation_identities(loaded.algebra, opt.max_elements);
  std::cout << representation_json(loaded.algebra, rep, identities) << "\n";

  VerificationReport all;
  all.append(rep.checks);
  all.append(identities);
  summary(opt, timer,
          "represent: " + std::to_string(rep.space.filters.size()) + " filters in " +
              std::to_string(rep.space.space->block_count()) + " chains, " + failure_text(all));
  return all.all_passed() ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  const Timer timer;
  bool known_suite = opt.suite == "all";
  for (const auto& s : kSuites) known_suite = known_suite || s == opt.suite;
  if (!known_suite) {
    throw InputError("unknown suite '" + opt.suite + "'");
  }
  if (opt.table.empty() == opt.algebra.empty()) {
    throw InputError("verify needs exactly one of --table or --algebra");
  }

  VerificationReport report;
  std::vector<std::string> notes;
  InputDigest digest;
  if (!opt.table.empty()) {
    const LoadedTable loaded = load_table(opt.table);
    digest = loaded.digest;
    report = run_table_suite(opt.suite, loaded.partition, opt.max_universe, opt.max_elements,
                             notes);
  } else {
    const LoadedAlgebra loaded = load_algebra(opt.algebra);
    digest = loaded.digest;
    report = run_algebra_suite(opt.suite, loaded.algebra, opt.max_elements, notes);
  }

  std::cout << run_report_json("verify", opt.suite, {digest}, report) << "\n";
  if (!opt.json) {
    for (const auto& note : notes) std::fprintf(stderr, "note: %s\n", note.c_str());
  }
  summary(opt, timer, "verify " + opt.suite + ": " + failure_text(report));
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rough sets, three-valued algebras, and their verification"};
  app.require_subcommand(1);

  Options opt;

  auto add_table = [&](CLI::App* cmd) {
    cmd->add_option("--table", opt.table, "CSV table: header 'object,<attr>,...'")
        ->required();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "suppress the stderr summary");
  };
  auto add_set = [&](CLI::App* cmd) {
    cmd->add_option("--set", opt.set_spec, "comma-separated object ids (empty for the empty set)")
        ->required();
  };

  CLI::App* partition = app.add_subcommand("partition", "indiscernibility partition of a table");
  add_table(partition);
  add_json(partition);

  CLI::App* approx = app.add_subcommand("approx", "lower and upper approximations of a set");
  add_table(approx);
  add_set(approx);
  add_json(approx);

  CLI::App* membership = app.add_subcommand("membership", "three-valued membership grades");
  add_table(membership);
  add_set(membership);
  membership->add_option("--object", opt.object, "grade only this object")
      ->each([&](const std::string&) { opt.object_given = true; });
  add_json(membership);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--table", opt.table, "CSV table input");
  verify->add_option("--algebra", opt.algebra, "algebra JSON input");
  verify->add_option("--suite", opt.suite,
                     "monadic|lukasiewicz|determination|representation|quotient|membership|all");
  verify->add_option("--max-universe", opt.max_universe,
                     "largest universe for exhaustive subset enumeration");
  verify->add_option("--max-elements", opt.max_elements,
                     "largest algebra for prime-filter enumeration");
  add_json(verify);

  CLI::App* represent = app.add_subcommand("represent", "prime filters, chains, and embedding");
  represent->add_option("--algebra", opt.algebra, "algebra JSON input")->required();
  represent->add_option("--max-elements", opt.max_elements,
                        "largest algebra for prime-filter enumeration");
  add_json(represent);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient algebra of a table's powerset");
  add_table(quotient);
  quotient->add_option("--max-universe", opt.max_universe,
                       "largest universe for exhaustive subset enumeration");
  add_json(quotient);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*partition) return cmd_partition(opt);
    if (*approx) return cmd_approx(opt);
    if (*membership) return cmd_membership(opt);
    if (*verify) return cmd_verify(opt);
    if (*represent) return cmd_represent(opt);
    if (*quotient) return cmd_quotient(opt);
  } catch (const rough3::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 2;
}
