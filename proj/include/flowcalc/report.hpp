#pragma once

#include <string>

#include <json.hpp>

#include "flowcalc/arith.hpp"
#include "flowcalc/invariants.hpp"
#include "flowcalc/shift.hpp"

// JSON report helpers shared by the CLI and the canned examples. Objects keep sorted keys,
// so dumps are byte-stable.
namespace flowcalc::report {

using Json = nlohmann::json;

/// A JSON number when it fits in 64 bits, otherwise its decimal string.
Json integer(const Integer& z);
Json rational(const Rational& q);
Json word(const EdgeShift& x, const Word& w);
Json invariants(const FlowInvariants& inv);

/// Key-value text form: one `key: value` line per scalar, nested objects indented.
std::string render_text(const Json& j);

}  // namespace flowcalc::report
