#pragma once

#include <string>
#include <vector>

#include "flowcalc/matrix.hpp"
#include "flowcalc/shift.hpp"

namespace flowcalc {

/// U * M * V = diag(diagonal), U and V unimodular, diagonal[i] | diagonal[i+1], entries >= 0.
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};

/// Pivots on the nonzero entry of least absolute value (ties: lowest row, then column).
SmithForm smith_normal_form(const IntMatrix& m);

/// Parry-Sullivan number det(I - A) and the Bowen-Franks group coker(I - A).
struct FlowInvariants {
  Integer ps_number;
  std::vector<Integer> bf_factors;  ///< invariant factors > 1, ascending
  std::size_t free_rank = 0;

  /// "0" for the trivial group, otherwise e.g. "Z/3 + Z/3 + Z".
  std::string bf_group() const;

  friend bool operator==(const FlowInvariants&, const FlowInvariants&) = default;
};

FlowInvariants flow_invariants(const IntMatrix& a);

/// The shift is a single finite orbit: its graph is one simple cycle.
bool is_trivial_sft(const EdgeShift& x);

struct FlowEquivalenceDecision {
  bool equivalent = false;
  std::string reason;
  FlowInvariants first;
  FlowInvariants second;
};

/// Franks' classification for nontrivial irreducible SFTs. Each matrix is read as an
/// edge shift and trimmed; throws NotIrreducible, TrivialSFT or EmptyShift when the
/// classification does not apply.
FlowEquivalenceDecision franks_equivalent(const IntMatrix& a, const IntMatrix& b);

}  // namespace flowcalc
