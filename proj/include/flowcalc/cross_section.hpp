#pragma once

#include <map>
#include <optional>
#include <string>
#include <set>
#include <vector>

#include "flowcalc/arith.hpp"
#include "flowcalc/block_code.hpp"
#include "flowcalc/shift.hpp"

namespace flowcalc {

/// A cylinder set {x : x[-radius, radius] in centers}, carried at a rational height in
/// [0, 1) of the mapping torus.
class CrossSection {
 public:
  /// Centers must be composable words of length 2*radius+1; throws InvalidSection.
  CrossSection(EdgeShift shift, std::size_t radius, std::set<Word> centers, Rational height = 0);

  /// Every point, radius 0.
  static CrossSection full(const EdgeShift& x, Rational height = 0);
  /// {x : x_0 in labels}; throws UnknownSymbol.
  static CrossSection by_symbols(const EdgeShift& x, const std::vector<std::string>& labels,
                                 Rational height = 0);

  const EdgeShift& shift() const { return shift_; }
  std::size_t radius() const { return radius_; }
  const std::set<Word>& centers() const { return centers_; }
  const Rational& height() const { return height_; }

  bool contains(const Word& window) const { return centers_.contains(window); }
  /// Membership of the point at position i of the periodic point spelled by `cycle`.
  bool contains_at(const Word& cycle, std::ptrdiff_t i) const;

  CrossSection at_height(Rational height) const;
  /// The same set described by windows of a larger radius.
  CrossSection widened(std::size_t radius) const;

  friend bool operator==(const CrossSection&, const CrossSection&) = default;

 private:
  EdgeShift shift_;
  std::size_t radius_;
  std::set<Word> centers_;
  Rational height_;
};

struct SectionValidity {
  bool valid = false;
  std::size_t max_return = 0;             ///< when valid
  std::optional<PeriodicOrbit> witness;   ///< an orbit avoiding the section, when invalid
};

/// Decides the discrete cross-section property on the (2r+1)-block graph: every cycle
/// must use a marked block. max_return is the longest marked-free path plus one.
SectionValidity validate(const CrossSection& c);

/// The first-return system of a valid section. Its shift is the return graph: vertices
/// are the block states where a return starts, one edge per first-return path.
class ReturnSystem {
 public:
  struct Factorization {
    std::vector<std::size_t> anchors;  ///< section positions in [0, n), ascending
    Word symbols;                      ///< return-graph edge starting at each anchor
  };

  /// Throws InvalidSection.
  explicit ReturnSystem(CrossSection section);

  const CrossSection& section() const { return section_; }
  const EdgeShift& shift() const { return shift_; }
  std::size_t max_return() const { return max_return_; }
  const Word& return_word(EdgeId r) const { return words_.at(r); }
  /// Return word with `radius` symbols of context on each side.
  const Word& span(EdgeId r) const { return spans_.at(r); }
  std::optional<EdgeId> find_span(const Word& span) const;
  std::set<Word> return_words() const;

  std::vector<std::size_t> anchors(const Word& cycle) const;
  /// Throws OrbitMissesSection when no position of the cycle is in the section.
  Factorization factor(const Word& cycle) const;
  /// The return-word coding of an orbit meeting the section.
  PeriodicOrbit recode(const PeriodicOrbit& x) const;
  PeriodicOrbit decode(const PeriodicOrbit& y) const;
  /// Concatenated return words of a return-graph path.
  Word unfold(const Word& return_path) const;

 private:
  CrossSection section_;
  EdgeShift shift_;
  std::vector<Word> words_;
  std::vector<Word> spans_;
  std::map<Word, EdgeId> by_span_;
  std::size_t max_return_ = 0;
};

ReturnSystem return_system(const CrossSection& c);

/// Preimage of a section of the code's target: radius grows by the code's radius.
/// Throws PartialCode when phi is not total. The result is a section whenever c_prime is
/// one and phi maps into its target; validity is not rechecked here.
CrossSection pullback(const BlockCode& phi, const CrossSection& c_prime);

/// Whether the two sections are disjoint subsets of the mapping torus.
bool disjoint(const CrossSection& a, const CrossSection& b);

/// Returns c_prime unchanged when its height differs from c's, otherwise moved to the
/// first dyadic height 1/2, 1/4, ... not used by c.
CrossSection disjointify(const CrossSection& c, const CrossSection& c_prime);
/// Pairwise-distinct heights: each section keeps its height unless already used,
/// then takes the first unused 1/2^k, k >= 1.
std::vector<CrossSection> disjointify_all(const std::vector<CrossSection>& sections);

/// Case 1 of the Parry-Sullivan decomposition for two disjoint sections C1, C2 of X:
/// D = {y in C1 : tau2(y) < tau1(y)}, D'' = first C2-hits of D, and psi : D -> D''.
struct PsCase1Result {
  CrossSection d;
  CrossSection d_second;
  ReturnSystem d_returns;
  ReturnSystem d_second_returns;
  BlockCode psi;  ///< between the return shifts of D and D''
};

/// Throws InvalidSection or NotDisjoint.
PsCase1Result ps_case1(const CrossSection& c1, const CrossSection& c2);

struct IntertwiningReport {
  bool holds = true;
  std::size_t orbits_checked = 0;
  std::optional<PeriodicOrbit> witness;
  std::string detail;
};

/// Brute-force check on every X-orbit of period <= max_period: D and D'' agree with
/// the hitting-time definitions, D and D'' points alternate along the flow, and psi
/// sends each D point to the D'' point that follows it (rho'' o psi = psi o rho).
IntertwiningReport check_intertwining(const CrossSection& c1, const CrossSection& c2,
                                      const PsCase1Result& result, std::size_t max_period);

}  // namespace flowcalc
