#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flowcalc/graph.hpp"

namespace flowcalc {

/// A finite sequence of edges of some graph. Composability is checked by the
/// operations that attach a word to a shift, not by the type.
using Word = std::vector<EdgeId>;

/// The edge shift of an essential, nonempty graph.
class EdgeShift {
 public:
  /// Throws NotEssential if some vertex lacks an in- or out-edge, EmptyShift if there are no edges.
  explicit EdgeShift(DirectedGraph graph);

  const DirectedGraph& graph() const { return graph_; }
  std::size_t alphabet_size() const { return graph_.edge_count(); }
  const std::string& symbol(EdgeId e) const { return graph_.label(e); }
  /// Throws UnknownSymbol.
  EdgeId symbol_id(std::string_view label) const;

  friend bool operator==(const EdgeShift&, const EdgeShift&) = default;

 private:
  DirectedGraph graph_;
};

bool is_composable(const DirectedGraph& g, const Word& w);
/// Closed path: composable and target of the last edge is the source of the first.
bool is_cycle(const DirectedGraph& g, const Word& w);

/// Space-separated labels.
std::string format_word(const DirectedGraph& g, const Word& w);
/// Parses whitespace-separated labels; throws UnknownSymbol.
Word parse_word(const DirectedGraph& g, std::string_view text);

/// Length of the primitive root of a cyclic word (least p with w = rotation-invariant under p).
std::size_t least_period(const Word& cycle);
/// Index at which the lexicographically least rotation starts (first such index).
std::size_t least_rotation_index(const Word& cycle);
Word rotate(const Word& cycle, std::size_t start);

/// A periodic point's orbit, stored as its canonical primitive word: a closed
/// path that is not a proper power, rotated to be lexicographically least.
class PeriodicOrbit {
 public:
  /// Reduces any closed path (possibly a proper power, any rotation) to canonical form.
  /// Throws InvalidWord if `cycle` is empty or not closed in `g`.
  static PeriodicOrbit from_cycle(const DirectedGraph& g, const Word& cycle);
  /// Same reduction without the closed-path check; for cyclic words of a known-valid source.
  static PeriodicOrbit from_cyclic_word(const Word& cycle);

  const Word& word() const { return word_; }
  std::size_t period() const { return word_.size(); }

  friend auto operator<=>(const PeriodicOrbit&, const PeriodicOrbit&) = default;

 private:
  Word word_;
};

/// Maximal essential subgraph; throws EmptyShift when nothing survives.
DirectedGraph trim_essential(const DirectedGraph& g);
bool is_essential(const DirectedGraph& g);
/// Strong connectivity of an essential graph.
bool is_irreducible(const DirectedGraph& g);
inline bool is_irreducible(const EdgeShift& x) { return is_irreducible(x.graph()); }

/// All orbits of least period <= max_period, canonical representatives, sorted.
std::set<PeriodicOrbit> periodic_orbits(const EdgeShift& x, std::size_t max_period);
/// Number of points fixed by sigma^n, counted from periodic_orbits: sum over p | n of p * #orbits.
Integer fixed_point_count(const std::set<PeriodicOrbit>& orbits, std::size_t n);

/// All composable paths of length n (n = 0 gives the single empty word).
std::set<Word> words_of_length(const EdgeShift& x, std::size_t n);
std::set<Word> words_of_length(const DirectedGraph& g, std::size_t n);

/// The m-block presentation: vertices are paths of length m-1, edges paths of
/// length m. `path_of(e)` recovers the X-path of an edge of the block shift.
struct HigherBlock {
  EdgeShift shift;
  std::vector<Word> edge_paths;
  std::vector<Word> vertex_paths;
  std::map<Word, EdgeId> edge_index;
  std::size_t block_length = 1;

  /// Edge of the block shift whose path is `path` (length m); throws InvalidWord.
  EdgeId edge_for(const Word& path) const;
  /// x -> x^[m], position i carries the block x[i, i+m).
  PeriodicOrbit encode(const PeriodicOrbit& x) const;
  PeriodicOrbit decode(const PeriodicOrbit& y) const;
};

/// m >= 1; m == 1 returns X itself with identity recoding.
HigherBlock higher_block(const EdgeShift& x, std::size_t m);

}  // namespace flowcalc
