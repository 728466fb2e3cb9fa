#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flowcalc/report.hpp"

// Canned pipelines over the bundled fixtures, each checked against known values.
namespace flowcalc::examples {

/// Fixture texts, identical to the files under fixtures/.
extern const std::string_view full_two_shift;   // one vertex, loops a and b
extern const std::string_view golden_mean;      // a: u->v, a': v->u, b: u->u
extern const std::string_view paired_shift;     // a1: P->Q, a2: Q->P, b: P->P
extern const std::string_view paired_section;   // {x0 in {a1, b}}
extern const std::string_view paired_factor;    // 1-block code a1, a2 -> a; b -> b
extern const std::string_view reducible_matrix; // [[1, 2], [0, 1]]

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Outcome {
  std::string name;
  std::vector<Check> checks;
  report::Json report;

  bool passed() const;
};

/// Accepted names: expansion, not-open, reducible. The suffixed forms
/// expansion-5.6, not-open-5.9, reducible-3.4 are aliases.
std::vector<std::string> names();

/// Throws std::invalid_argument for an unknown name.
Outcome run(std::string_view name, std::size_t k_max = 3, std::size_t max_period = 12);

}  // namespace flowcalc::examples
