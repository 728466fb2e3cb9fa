#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowcalc/block_code.hpp"
#include "flowcalc/shift.hpp"

namespace flowcalc {

/// Record of a symbol expansion a -> a a'. `symbol_map` is the word code
/// X-symbol -> X'-word: every symbol copies itself except `symbol`, which maps to symbol fresh.
struct ExpansionRecord {
  std::string symbol;
  std::string fresh_symbol;
  std::string fresh_vertex;
  std::map<EdgeId, Word> symbol_map;
};

struct ExpansionResult {
  EdgeShift shift;
  ExpansionRecord record;
};

/// Replaces edge s: u -> v by s: u -> w and s': w -> v through a new vertex w.
/// The fresh label is s followed by a prime, uniquified against the alphabet.
/// Throws UnknownSymbol.
ExpansionResult symbol_expansion(const EdgeShift& x, const std::string& symbol);

/// Out-split of `vertex`: its out-edges are partitioned into classes, the vertex becomes one
/// copy per class, and each in-edge is duplicated once per copy.
struct SplitResult {
  EdgeShift shift;
  BlockCode forward;   ///< X -> X', memory 0, anticipation 1
  BlockCode backward;  ///< X' -> X, 1-block
};

/// Throws BadPartition when a class is empty, classes overlap, or they miss an out-edge.
SplitResult out_split(const EdgeShift& x, const std::string& vertex,
                      const std::vector<std::vector<std::string>>& partition);

}  // namespace flowcalc
