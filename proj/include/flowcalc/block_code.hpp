#pragma once

#include <map>
#include <optional>

#include "flowcalc/shift.hpp"

namespace flowcalc {

/// A sliding block code X -> X': position i of the image is table[x[i-memory, i+anticipation]].
class BlockCode {
 public:
  /// Table keys must be composable words of length memory+anticipation+1 in `source`,
  /// values edges of `target`. Totality is not required here; see `is_total`.
  BlockCode(EdgeShift source, EdgeShift target, std::size_t memory, std::size_t anticipation,
            std::map<Word, EdgeId> table);

  static BlockCode identity(const EdgeShift& x);
  /// 1-block code given symbol by symbol.
  static BlockCode one_block(const EdgeShift& source, const EdgeShift& target,
                             const std::map<EdgeId, EdgeId>& rule);
  /// x -> x^[m] and its inverse x^[m] -> x.
  static BlockCode block_encoder(const EdgeShift& x, const HigherBlock& hb);
  static BlockCode block_decoder(const EdgeShift& x, const HigherBlock& hb);

  const EdgeShift& source() const { return source_; }
  const EdgeShift& target() const { return target_; }
  std::size_t memory() const { return memory_; }
  std::size_t anticipation() const { return anticipation_; }
  std::size_t window_length() const { return memory_ + anticipation_ + 1; }
  /// Symmetric radius that contains the window.
  std::size_t radius() const { return std::max(memory_, anticipation_); }
  const std::map<Word, EdgeId>& table() const { return table_; }

  std::optional<EdgeId> image(const Word& window) const;
  /// Every window-length word of the source has an image.
  bool is_total() const;
  /// First window without an image, if any.
  std::optional<Word> missing_window() const;

  /// Image of a cyclic word, position by position; throws PartialCode.
  Word apply_cyclic(const Word& cycle) const;
  /// Image of a finite word of length >= window_length(); result is shorter by window_length()-1.
  Word apply_word(const Word& word) const;
  PeriodicOrbit apply(const PeriodicOrbit& x) const;

  /// `this` followed by `next` (so next o this). Source of `next` must equal target of `this`.
  /// Windows of this code's source on which the composite is undefined are omitted.
  BlockCode then(const BlockCode& next) const;

 private:
  EdgeShift source_;
  EdgeShift target_;
  std::size_t memory_;
  std::size_t anticipation_;
  std::map<Word, EdgeId> table_;
};

}  // namespace flowcalc
