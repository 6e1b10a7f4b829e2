#pragma once

// Wire formats. Reports are JSON objects with a fixed key order and no
// whitespace; every number is a JSON integer and every index is 1-based.
//
//   {"schema_version":"1",
//    "instance":{"r","degrees","orders","flags":{...},"labels":{"group","group_order","s0"}},
//    "admissible":{"ok","reasons"},
//    "hilbert":{"size","elements","engine_agreement"},
//    "conditions":{"i","ii":{"ok","pairs"},"iii":{"ok","m"},"ii_prime":{"ok","failing_subset"}},
//    "factorial","equivalence_ok"}
//
// A sweep file is one report per line, in lex order of the order vector.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "artin/conditions.hpp"
#include "artin/hilbert.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json vector_json(std::span<const std::int64_t> entries);
Json basis_json(const HilbertBasis& basis);

Json report_to_json(const ConditionReport& report);
ConditionReport report_from_json(const Json& doc);

std::string emit_report_json(const ConditionReport& report);
std::string emit_report_text(const ConditionReport& report);
/// One newline-terminated line.
std::string emit_sweep_record(const ConditionReport& report);

/// 0 when equivalence_ok is true or absent, 1 when it is false.
int report_exit_code(const ConditionReport& report);

}  // namespace artin
