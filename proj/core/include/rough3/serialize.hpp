#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rough3/finite_lukasiewicz.hpp"
#include "rough3/info_table.hpp"
#include "rough3/monteiro.hpp"
#include "rough3/object_set.hpp"
#include "rough3/report.hpp"
#include "rough3/rough_algebra.hpp"

namespace rough3 {

// All serializers emit compact single-line JSON with a fixed key order, so
// identical inputs always produce byte-identical output.

std::string to_json(const ObjectSet& s);
std::string to_json(const Partition& p);
std::string to_json(const RoughSet& r);
std::string to_json(const FiniteAlgebra& a);

// Array of {"name","status","counterexample"?} entries, in check order.
std::string checks_json(const VerificationReport& report);

// {"object": id, "grade": "0"|"1/2"|"1"} for one object.
std::string membership_json(const Partition& p, const ObjectSet& a, const std::string& object_id);
// Array of the same entries for every object, in universe order.
std::string membership_json(const Partition& p, const ObjectSet& a);

// Prime filters, chains, involution, embedding table, and checks.
std::string representation_json(const FiniteAlgebra& a, const Representation& rep,
                                const VerificationReport& identity_checks);

struct InputDigest {
  std::string path;    // display name (basename of the input file)
  std::string digest;  // "fnv1a64:<16 hex digits>"
};

// {"command","suite","inputs","checks","passed"}.
std::string run_report_json(const std::string& command, const std::string& suite,
                            const std::vector<InputDigest>& inputs,
                            const VerificationReport& checks);

// FNV-1a 64-bit digest of a byte string, formatted "fnv1a64:<16 hex digits>".
std::string fnv1a64_digest(std::string_view bytes);

// Parses the algebra JSON format emitted by to_json(FiniteAlgebra).
// Throws InputError on malformed input.
FiniteAlgebra parse_algebra_json(const std::string& text);

}  // namespace rough3
