// End-to-end acceptance: exhaustive law checking over small spaces, negative
// controls, and byte-exact command line behaviour against golden files.
//
// Usage: rough3_acceptance <cli_path> <fixtures_dir> <golden_dir>
// Prints one [PASS]/[FAIL] line per criterion; exits 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rough3/approximation.hpp"
#include "rough3/error.hpp"
#include "rough3/finite_lukasiewicz.hpp"
#include "rough3/info_table.hpp"
#include "rough3/monteiro.hpp"
#include "rough3/object_set.hpp"
#include "rough3/partition_gen.hpp"
#include "rough3/rough_algebra.hpp"
#include "rough3/serialize.hpp"

namespace {

using namespace rough3;

std::string g_cli;
std::string g_fixtures;
std::string g_golden;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  std::string out;
  int code = -1;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// The fixed random sample shared by criteria 2 and 3.
std::vector<Partition> sampled_spaces() {
  std::mt19937_64 rng(20250817);
  std::uniform_int_distribution<std::size_t> size_dist(1, 6);
  std::vector<Partition> out;
  out.reserve(50);
  for (int i = 0; i < 50; ++i) {
    out.push_back(random_partition(numbered_universe(size_dist(rng)), rng));
  }
  return out;
}

bool criterion_monadic(std::string& detail) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(numbered_universe(n))) {
      if (!check_monadic_axioms(part).all_passed()) {
        detail = "possibility-operator laws failed on a partition of " + std::to_string(n) +
                 " objects";
        return false;
      }
    }
  }
  return true;
}

bool criterion_axioms(std::string& detail) {
  for (const Partition& part : sampled_spaces()) {
    const FiniteAlgebra alg = import_rough_algebra(share(Partition(part)));
    if (!check_axioms(alg).all_passed() || !derived_operator_checks(alg).all_passed()) {
      detail = "axiom suite failed on a sampled space of " + std::to_string(part.object_count()) +
               " objects";
      return false;
    }
  }
  return true;
}

bool criterion_structure(std::string& detail) {
  for (const Partition& part : sampled_spaces()) {
    const PartitionPtr p = share(Partition(part));
    if (!verify_determination(p).all_passed() || !verify_algebra_laws(p).all_passed()) {
      detail = "structural laws failed on a sampled space of " +
               std::to_string(part.object_count()) + " objects";
      return false;
    }
  }
  return true;
}

bool criterion_representation(std::string& detail) {
  std::vector<FiniteAlgebra> algebras;
  algebras.push_back(two_chain());
  algebras.push_back(three_chain());
  algebras.push_back(direct_product(three_chain(), two_chain()));
  algebras.push_back(direct_product(three_chain(), three_chain()));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Partition& part : all_partitions(numbered_universe(n))) {
      algebras.push_back(import_rough_algebra(share(Partition(part))));
    }
  }
  for (const FiniteAlgebra& alg : algebras) {
    if (!represent(alg).checks.all_passed() ||
        !verify_representation_identities(alg).all_passed()) {
      detail = "representation failed for an algebra of " + std::to_string(alg.size()) +
               " elements";
      return false;
    }
  }
  return true;
}

bool criterion_quotient(std::string& detail) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(numbered_universe(n))) {
      const PartitionPtr p = share(Partition(part));
      if (!verify_congruence(p).all_passed() ||
          !check_axioms(quotient_algebra(p)).all_passed() ||
          !verify_distribution_identities(p).all_passed() ||
          !verify_quotient_isomorphism(p).all_passed()) {
        detail = "quotient checks failed on a partition of " + std::to_string(n) + " objects";
        return false;
      }
    }
  }
  return true;
}

bool criterion_membership(std::string& detail) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(numbered_universe(n))) {
      if (!verify_membership_extension(share(Partition(part))).all_passed()) {
        detail = "membership laws failed on a partition of " + std::to_string(n) + " objects";
        return false;
      }
    }
  }
  return true;
}

bool criterion_bridge(std::string& detail) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Partition& part : all_partitions(numbered_universe(n))) {
      if (!verify_rough_monteiro_bridge(share(Partition(part))).all_passed()) {
        detail = "bridge identities failed on a partition of " + std::to_string(n) + " objects";
        return false;
      }
    }
  }
  return true;
}

bool criterion_negative_controls(std::string& detail) {
  // A corrupted operation table must fail its first broken axiom with a
  // named counterexample, while every lattice check before it still passes.
  const FiniteAlgebra bad =
      parse_algebra_json(read_file(g_fixtures + "/corrupted_three_chain.json"));
  const VerificationReport report = check_axioms(bad);
  if (report.checks.size() != 12) {
    detail = "axiom report has " + std::to_string(report.checks.size()) + " checks, want 12";
    return false;
  }
  for (std::size_t i = 0; i <= 8; ++i) {
    if (!report.checks[i].passed) {
      detail = "check '" + report.checks[i].name + "' failed before the corrupted axiom";
      return false;
    }
  }
  const CheckResult& failing = report.checks[9];
  if (failing.passed || failing.name != "~x | nabla x = 1" || failing.counterexample != "x=c") {
    detail = "corrupted algebra did not fail at '~x | nabla x = 1' with x=c";
    return false;
  }

  // (empty, {3}) has a singleton boundary block, so no subset realizes it:
  // the characterization, the validating factory, and brute force must agree.
  const InformationTable t = parse_table(read_file(g_fixtures + "/fixture.csv"));
  const PartitionPtr p = share(indiscernibility_partition(t));
  const ObjectSet empty = ObjectSet::empty_set(p->universe());
  const ObjectSet three = ObjectSet::of(p->universe(), {"3"});
  if (is_realizable(p, empty, three)) {
    detail = "(empty, {3}) wrongly reported realizable";
    return false;
  }
  bool rejected = false;
  try {
    rough_set(p, empty, three);
  } catch (const InputError&) {
    rejected = true;
  }
  if (!rejected) {
    detail = "the rough-set factory accepted the unrealizable pair";
    return false;
  }
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const ObjectSet x = ObjectSet::from_mask(p->universe(), mask);
    if (lower(*p, x) == empty && upper(*p, x) == three) {
      detail = "brute force found a witness for the unrealizable pair";
      return false;
    }
  }
  return true;
}

bool criterion_cli(std::string& detail) {
  const std::string fx = g_fixtures;

  struct GoldenCase {
    std::string args;
    std::string golden;
  };
  const std::vector<GoldenCase> cases = {
      {"partition --table " + fx + "/fixture.csv --json", "partition_fixture.json"},
      {"approx --table " + fx + "/fixture.csv --set 1,3 --json", "approx_fixture_1_3.json"},
      {"membership --table " + fx + "/fixture.csv --set 1,3 --json",
       "membership_fixture_1_3.json"},
      {"membership --table " + fx + "/fixture.csv --set 1,3 --object 1 --json",
       "membership_fixture_1_3_obj1.json"},
      {"quotient --table " + fx + "/fixture.csv --json", "quotient_fixture.json"},
      {"quotient --table " + fx + "/single_block.csv --json", "quotient_single_block.json"},
      {"represent --algebra " + fx + "/three_chain.json --json", "represent_three_chain.json"},
      {"verify --table " + fx + "/fixture.csv --suite membership --json",
       "verify_membership_fixture.json"},
  };
  for (const auto& c : cases) {
    const std::string expected = read_file(g_golden + "/" + c.golden);
    const CliResult first = run_cli(c.args);
    const CliResult second = run_cli(c.args);
    if (first.code != 0) {
      detail = c.golden + ": exit code " + std::to_string(first.code) + ", want 0";
      return false;
    }
    if (first.out != expected) {
      detail = c.golden + ": output differs from the golden file";
      return false;
    }
    if (second.out != first.out || second.code != first.code) {
      detail = c.golden + ": two identical runs disagreed";
      return false;
    }
  }

  struct ExitCase {
    std::string args;
    int code;
  };
  const std::vector<ExitCase> exit_cases = {
      {"verify --table " + fx + "/does_not_exist.csv --json", 2},
      {"approx --table " + fx + "/fixture.csv --set 1,9 --json", 2},
      {"verify --table " + fx + "/fixture.csv --suite bogus --json", 2},
      {"verify --table " + fx + "/fixture.csv --algebra " + fx + "/three_chain.json --json", 2},
      {"verify --algebra " + fx + "/three_chain.json --suite monadic --json", 2},
      {"verify --table " + fx + "/fixture.csv --suite representation --json", 2},
      {"represent --algebra " + fx + "/corrupted_three_chain.json --json", 2},
      {"verify --table " + fx + "/fixture.csv --json", 0},
      {"verify --algebra " + fx + "/three_chain.json --json", 0},
  };
  for (const auto& c : exit_cases) {
    const CliResult r = run_cli(c.args);
    if (r.code != c.code) {
      detail = "exit code for '" + c.args + "': got " + std::to_string(r.code) + ", want " +
               std::to_string(c.code);
      return false;
    }
  }

  const CliResult failing =
      run_cli("verify --algebra " + fx + "/corrupted_three_chain.json --suite lukasiewicz --json");
  if (failing.code != 1) {
    detail = "verify on the corrupted algebra: exit " + std::to_string(failing.code) + ", want 1";
    return false;
  }
  if (failing.out.find("\"counterexample\":\"x=c\"") == std::string::npos ||
      failing.out.find("\"passed\":false") == std::string::npos) {
    detail = "verify on the corrupted algebra does not report the counterexample";
    return false;
  }
  return true;
}

struct Criterion {
  const char* text;
  double budget_ms;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: %s <cli_path> <fixtures_dir> <golden_dir>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  g_golden = argv[3];

  const std::vector<Criterion> criteria = {
      {"possibility-operator laws on every partition of up to 5 objects", 10000,
       criterion_monadic},
      {"three-valued axioms on 50 random spaces of up to 6 objects", 30000, criterion_axioms},
      {"determination, kleene, residuation and centre laws on the same 50 spaces", 30000,
       criterion_structure},
      {"prime-filter representation of the fixture algebras and every rough-set algebra "
       "from up to 4 objects",
       10000, criterion_representation},
      {"congruence, quotient axioms, distribution and isomorphism on every partition of "
       "up to 5 objects",
       60000, criterion_quotient},
      {"membership grade laws on every partition of up to 5 objects", 60000,
       criterion_membership},
      {"rough-class bridge identities on every partition of up to 5 objects", 10000,
       criterion_bridge},
      {"negative controls: corrupted tables and unrealizable pairs are rejected", 60000,
       criterion_negative_controls},
      {"command line golden outputs, run-to-run determinism, and exit codes", 60000,
       criterion_cli},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (ok && ms > criteria[i].budget_ms) {
      ok = false;
      detail = "exceeded the " + std::to_string(static_cast<int>(criteria[i].budget_ms)) +
               " ms budget";
    }
    std::printf("[%s] criterion %zu: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].text, ms, detail.empty() ? "" : " — ", detail.c_str());
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
