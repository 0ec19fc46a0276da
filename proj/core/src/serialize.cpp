#include "rough3/serialize.hpp"

#include <cstdint>

#include <json.hpp>

#include "rough3/error.hpp"

namespace rough3 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json set_value(const ObjectSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& id : s.members()) arr.push_back(id);
  return arr;
}

ordered_json partition_value(const Partition& p) {
  ordered_json out;
  ordered_json universe = ordered_json::array();
  for (const auto& id : p.universe()->ids()) universe.push_back(id);
  out["universe"] = std::move(universe);
  ordered_json blocks = ordered_json::array();
  for (const auto& block : p.blocks()) blocks.push_back(set_value(block));
  out["blocks"] = std::move(blocks);
  return out;
}

ordered_json rough_value(const RoughSet& r) {
  ordered_json out;
  out["lower"] = set_value(r.lower_part());
  out["upper"] = set_value(r.upper_part());
  return out;
}

ordered_json algebra_value(const FiniteAlgebra& a) {
  ordered_json out;
  out["elements"] = a.elements();
  out["meet"] = a.meet_table();
  out["join"] = a.join_table();
  out["neg"] = a.neg_table();
  out["nabla"] = a.nabla_table();
  out["one"] = a.one();
  return out;
}

ordered_json checks_value(const VerificationReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& check : report.checks) {
    ordered_json entry;
    entry["name"] = check.name;
    entry["status"] = check.passed ? "pass" : "fail";
    if (!check.passed) {
      entry["counterexample"] = check.counterexample;
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json grade_value(const Partition& p, const ObjectSet& a, std::size_t index) {
  ordered_json entry;
  entry["object"] = p.universe()->ids()[index];
  entry["grade"] = to_string(membership_grades(p, a)[index]);
  return entry;
}

}  // namespace

std::string to_json(const ObjectSet& s) { return set_value(s).dump(); }

std::string to_json(const Partition& p) { return partition_value(p).dump(); }

std::string to_json(const RoughSet& r) { return rough_value(r).dump(); }

std::string to_json(const FiniteAlgebra& a) { return algebra_value(a).dump(); }

std::string checks_json(const VerificationReport& report) { return checks_value(report).dump(); }

std::string membership_json(const Partition& p, const ObjectSet& a,
                            const std::string& object_id) {
  const std::size_t index = p.universe()->index_of(object_id);
  return grade_value(p, a, index).dump();
}

std::string membership_json(const Partition& p, const ObjectSet& a) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < p.object_count(); ++i) {
    arr.push_back(grade_value(p, a, i));
  }
  return arr.dump();
}

std::string representation_json(const FiniteAlgebra& a, const Representation& rep,
                                const VerificationReport& identity_checks) {
  const FilterSpace& fs = rep.space;
  ordered_json out;

  ordered_json filters = ordered_json::array();
  for (std::size_t i = 0; i < fs.filters.size(); ++i) {
    ordered_json entry;
    entry["name"] = fs.filter_universe->ids()[i];
    ordered_json members = ordered_json::array();
    for (int x : fs.filters[i].members) members.push_back(a.elements()[x]);
    entry["members"] = std::move(members);
    filters.push_back(std::move(entry));
  }
  out["filters"] = std::move(filters);

  ordered_json chains = ordered_json::array();
  for (const auto& block : fs.space->blocks()) chains.push_back(set_value(block));
  out["chains"] = std::move(chains);

  ordered_json involution = ordered_json::array();
  for (std::size_t image : fs.g) involution.push_back(fs.filter_universe->ids()[image]);
  out["involution"] = std::move(involution);

  ordered_json embedding = ordered_json::array();
  for (std::size_t x = 0; x < a.size(); ++x) {
    ordered_json entry;
    entry["element"] = a.elements()[x];
    entry["lower"] = set_value(rep.h[x].lower_part());
    entry["upper"] = set_value(rep.h[x].upper_part());
    embedding.push_back(std::move(entry));
  }
  out["embedding"] = std::move(embedding);

  VerificationReport all_checks;
  all_checks.append(rep.checks);
  all_checks.append(identity_checks);
  out["checks"] = checks_value(all_checks);

  return out.dump();
}

std::string run_report_json(const std::string& command, const std::string& suite,
                            const std::vector<InputDigest>& inputs,
                            const VerificationReport& checks) {
  ordered_json out;
  out["command"] = command;
  out["suite"] = suite;
  ordered_json ins = ordered_json::array();
  for (const auto& input : inputs) {
    ordered_json entry;
    entry["path"] = input.path;
    entry["digest"] = input.digest;
    ins.push_back(std::move(entry));
  }
  out["inputs"] = std::move(ins);
  out["checks"] = checks_value(checks);
  out["passed"] = checks.all_passed();
  return out.dump();
}

std::string fnv1a64_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= static_cast<std::uint64_t>(c);
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out.push_back(hex[(hash >> shift) & 0xf]);
  }
  return out;
}

FiniteAlgebra parse_algebra_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InputError("algebra JSON must be an object");
  }
  static const char* const kKeys[] = {"elements", "meet", "join", "neg", "nabla", "one"};
  for (const char* key : kKeys) {
    if (!doc.contains(key)) {
      throw InputError(std::string("algebra JSON is missing key '") + key + "'");
    }
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : kKeys) {
      if (item.key() == key) known = true;
    }
    if (!known) {
      throw InputError("algebra JSON has unexpected key '" + item.key() + "'");
    }
  }

  try {
    auto elements = doc["elements"].get<std::vector<std::string>>();
    auto meet = doc["meet"].get<std::vector<std::vector<int>>>();
    auto join = doc["join"].get<std::vector<std::vector<int>>>();
    auto neg = doc["neg"].get<std::vector<int>>();
    auto nabla = doc["nabla"].get<std::vector<int>>();
    const int one = doc["one"].get<int>();
    return FiniteAlgebra::from_tables(std::move(elements), std::move(meet), std::move(join),
                                      std::move(neg), std::move(nabla), one);
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("algebra JSON has a field of the wrong shape: ") + e.what());
  }
}

}  // namespace rough3
