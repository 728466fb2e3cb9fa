#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowcalc/arith.hpp"
#include "flowcalc/block_code.hpp"
#include "flowcalc/cross_section.hpp"
#include "flowcalc/livsic.hpp"
#include "flowcalc/moves.hpp"
#include "flowcalc/shift.hpp"

namespace flowcalc {

/// A word block code on the return words of a section C of X: each [-M, M] block of
/// return symbols (edges of the return graph) is sent to a nonempty word of the target.
class WordBlockCode {
 public:
  /// Checks totality on every (2M+1)-path of the return graph, nonempty composable images,
  /// and that images of overlapping (2M+2)-paths concatenate. Throws InvalidSection,
  /// MissingBlock, EmptyImageWord, NonComposableImage.
  WordBlockCode(CrossSection section, std::size_t window_radius, EdgeShift target,
                std::map<Word, Word> table);

  const CrossSection& section() const { return returns_.section(); }
  const ReturnSystem& returns() const { return returns_; }
  const EdgeShift& source() const { return returns_.section().shift(); }
  const EdgeShift& target() const { return target_; }
  std::size_t window_radius() const { return window_radius_; }
  std::size_t block_length() const { return 2 * window_radius_ + 1; }
  const std::map<Word, Word>& table() const { return table_; }

  /// Image of a (2M+1)-block of return symbols; throws MissingBlock.
  const Word& image(const Word& block) const;
  std::string format_block(const Word& block) const;

 private:
  ReturnSystem returns_;
  std::size_t window_radius_;
  EdgeShift target_;
  std::map<Word, Word> table_;
};

WordBlockCode build_code(const CrossSection& c, std::size_t window_radius, const EdgeShift& target,
                         std::map<Word, Word> table);

/// Per-block ratio |W'0| / |W0|.
struct TimeChange {
  std::map<Word, Rational> ratio;
};
TimeChange time_change(const WordBlockCode& code);

struct AppliedOrbit {
  PeriodicOrbit image;
  Word image_word;                      ///< concatenated images, starting at the first anchor
  std::vector<std::size_t> anchors;     ///< domain anchors, relative to the input cycle
  std::vector<std::size_t> image_anchors;  ///< offsets of each image word in image_word
  std::size_t domain_length = 0;
  std::size_t image_length = 0;
  std::size_t hits = 0;
};

/// Applies the code to one period of `cycle` as given (factorization from its first
/// anchor). Throws OrbitMissesSection.
AppliedOrbit apply_cycle(const WordBlockCode& code, const Word& cycle);
/// Same, starting the factorization at the lexicographically least anchored rotation.
AppliedOrbit apply_periodic(const WordBlockCode& code, const PeriodicOrbit& x);

struct SectionCheck {
  bool holds = true;
  std::size_t orbits_checked = 0;
  std::optional<PeriodicOrbit> witness;  ///< domain orbit
  Word image_word;                       ///< its image, as produced by apply_periodic
  std::size_t position = 0;              ///< offending position of image_word
  std::string detail;
};

/// On every orbit of period <= max_period meeting C, image positions lie in `target_section`
/// exactly at images of anchors.
SectionCheck verify_section_condition(const WordBlockCode& code, const CrossSection& target_section,
                                      std::size_t max_period);

/// The word code sending each return block to the unfolded return word of psi's output.
/// psi maps the return shift of `from` to that of `to`. Throws NotIntertwining when psi
/// fails to carry some return cycle of length <= 6 to a return cycle.
WordBlockCode induced_code(const BlockCode& psi, const ReturnSystem& from, const ReturnSystem& to);

/// Symbol-per-return-word recoding: the code on the full section whose images are single symbols.
WordBlockCode code_from_block_code(const BlockCode& phi, const CrossSection& c);
/// The expansion move as a code on the full section of X.
WordBlockCode code_from_expansion(const EdgeShift& x, const ExpansionResult& expansion);

/// Length-change weight on the unfolded block graph: one vertex per block-graph vertex plus
/// one per interior symbol of each return word; each symbol edge carries |W'0|/|W0| - 1.
struct UnfoldedWeights {
  HigherBlock blocks;        ///< (2M+1)-block presentation of the return shift
  EdgePotential weight;      ///< on the unfolded graph
  std::vector<EdgeId> block_of;  ///< unfolded edge -> block edge
};
UnfoldedWeights unfolded_weights(const WordBlockCode& code);

struct ConjugacyCertificate {
  bool certified = false;
  UnfoldedWeights weights;
  std::optional<VertexPotential> potential;  ///< when certified
  std::optional<PeriodicOrbit> witness;      ///< orbit of X with nonzero weight sum
  Rational witness_sum;
};

/// Throws NotIrreducible when X is reducible.
ConjugacyCertificate conjugacy_certificate(const WordBlockCode& code);

struct IsotopyCheck {
  bool valid = true;
  std::size_t blocks_checked = 0;
  Word return_block;     ///< offending return path, positions -K..K+1
  Word window;           ///< beta's window at the offending anchor
  Word next_window;      ///< beta's window at the following anchor
  Rational lhs;          ///< beta(next) - beta(this)
  Rational rhs;          ///< image return time - domain return time
};

/// Checks beta(rho(y)) - beta(y) = |W'0| - |W0| on every anchor context. beta reads an
/// X-window of its radius around the anchor. Throws ResolutionMismatch when beta has no
/// value for an occurring anchor window, InvalidSection when the code does not carry C onto
/// `target_section` on orbits of period <= 6.
IsotopyCheck verify_isotopy_certificate(const LocalFunction& beta, const WordBlockCode& code,
                                        const CrossSection& target_section);

enum class Universe { target, image };

struct OpennessWitness {
  std::size_t radius = 0;
  Word window;          ///< length 2*radius+1
  Word member;          ///< the member point, as one period read from position 0
  Word non_member;
};

struct OpennessReport {
  bool open = false;
  std::size_t radius = 0;  ///< when open
  std::vector<OpennessWitness> witnesses;  ///< one per radius 0..k_max when not open
  std::size_t members = 0;
  std::size_t universe_size = 0;
};

/// Bounded test of whether the image of C is open: the image of C is read off periodic
/// C-points of period <= max_period, the universe is the period-<=max_period points of the
/// target shift (or of the code's image).
OpennessReport openness_check(const WordBlockCode& code, std::size_t k_max, std::size_t max_period,
                              Universe universe = Universe::target);

}  // namespace flowcalc
