#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flowcalc/arith.hpp"
#include "flowcalc/errors.hpp"
#include "flowcalc/shift.hpp"

namespace flowcalc {

/// Rational weight per edge, indexed by EdgeId.
struct EdgePotential {
  DirectedGraph graph;
  std::vector<Rational> weights;

  Rational sum_over(const Word& path) const;
};

/// Rational value per vertex, indexed by VertexId; values[base] == 0.
struct VertexPotential {
  std::vector<Rational> values;
  VertexId base = 0;

  friend bool operator==(const VertexPotential&, const VertexPotential&) = default;
};

/// A closed path (primitive, least rotation) and its nonzero weight sum.
struct CycleWitness {
  Word cycle;
  Rational sum;
};

class CycleObstruction : public Error {
 public:
  CycleObstruction(CycleWitness witness, const std::string& message)
      : Error("CycleObstruction", message), witness_(std::move(witness)) {}
  const CycleWitness& witness() const noexcept { return witness_; }

 private:
  CycleWitness witness_;
};

struct CycleCheck {
  bool zero = true;
  std::optional<CycleWitness> witness;  ///< set iff !zero
};

/// Whether every cycle of an essential graph has weight sum zero. Cycles live inside
/// strongly connected components, so each component is checked against a spanning
/// arborescence; a failing non-tree edge yields the witness.
CycleCheck zero_on_cycles(const EdgePotential& f);

/// The vertex potential h with h(first vertex) = 0 and f(e) = h(target e) - h(source e).
/// Throws NotIrreducible or CycleObstruction.
VertexPotential graph_potential(const EdgePotential& f);

/// Locally constant function read through the window x[-radius, radius].
struct LocalFunction {
  std::size_t radius = 0;
  std::map<Word, Rational> table;

  /// Throws PartialCode when the window is absent.
  const Rational& operator()(const Word& window) const;
};

/// Locally constant b with f = b o sigma - b on an irreducible edge shift; b has the
/// same window radius as f. Throws NotIrreducible, PartialCode (f not total), or
/// CycleObstruction whose witness is a periodic orbit of X with nonzero f-sum.
LocalFunction coboundary(const EdgeShift& x, const LocalFunction& f);

/// Sum of a local function along one period of a cyclic word.
Rational orbit_sum(const LocalFunction& f, const Word& cycle);

/// Window of radius r around position i of a cyclic word.
Word cyclic_window(const Word& cycle, std::ptrdiff_t center, std::size_t radius);

}  // namespace flowcalc
