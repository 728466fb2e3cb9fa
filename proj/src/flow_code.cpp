#include "flowcalc/flow_code.hpp"

#include <algorithm>

#include "flowcalc/errors.hpp"

namespace flowcalc {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

std::string describe(const EdgeShift& x, const Word& w) { return "'" + format_word(x.graph(), w) + "'"; }

Word slice(const Word& w, std::size_t from, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(from + len));
}

// X-word of a return path with `context` symbols of the first and last spans, and the
// offset of each return word in it.
Word assemble(const ReturnSystem& rs, const Word& path, std::vector<std::size_t>& offsets) {
  const std::size_t r = rs.section().radius();
  const Word& first = rs.span(path.front());
  Word w(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(r));
  offsets.clear();
  for (EdgeId e : path) {
    offsets.push_back(w.size());
    const Word& rw = rs.return_word(e);
    w.insert(w.end(), rw.begin(), rw.end());
  }
  const Word& last = rs.span(path.back());
  w.insert(w.end(), last.end() - static_cast<std::ptrdiff_t>(r), last.end());
  return w;
}

}  // namespace

WordBlockCode::WordBlockCode(CrossSection section, std::size_t window_radius, EdgeShift target,
                             std::map<Word, Word> table)
    : returns_(std::move(section)),
      window_radius_(window_radius),
      target_(std::move(target)),
      table_(std::move(table)) {
  const EdgeShift& ys = returns_.shift();
  for (const auto& [block, image] : table_) {
    if (block.size() != block_length() || !is_composable(ys.graph(), block))
      throw InvalidWord("table key is not a return block of length " + std::to_string(block_length()));
  }
  for (const Word& block : words_of_length(ys, block_length())) {
    auto it = table_.find(block);
    if (it == table_.end()) throw MissingBlock("no image for return block " + describe(ys, block));
    if (it->second.empty()) throw EmptyImageWord("empty image for return block " + describe(ys, block));
    if (!is_composable(target_.graph(), it->second))
      throw NonComposableImage("image of return block " + describe(ys, block) + " is not a path");
  }
  for (const Word& pair : words_of_length(ys, block_length() + 1)) {
    const Word& left = table_.at(slice(pair, 0, block_length()));
    const Word& right = table_.at(slice(pair, 1, block_length()));
    if (target_.graph().target(left.back()) != target_.graph().source(right.front()))
      throw NonComposableImage("images of " + describe(ys, slice(pair, 0, block_length())) + " and " +
                               describe(ys, slice(pair, 1, block_length())) + " do not concatenate");
  }
}

const Word& WordBlockCode::image(const Word& block) const {
  auto it = table_.find(block);
  if (it == table_.end()) throw MissingBlock("no image for return block " + describe(returns_.shift(), block));
  return it->second;
}

std::string WordBlockCode::format_block(const Word& block) const {
  return format_word(returns_.shift().graph(), block);
}

WordBlockCode build_code(const CrossSection& c, std::size_t window_radius, const EdgeShift& target,
                         std::map<Word, Word> table) {
  return WordBlockCode(c, window_radius, target, std::move(table));
}

TimeChange time_change(const WordBlockCode& code) {
  TimeChange t;
  for (const auto& [block, image] : code.table())
    t.ratio.emplace(block, ratio(image.size(), code.returns().return_word(block[code.window_radius()]).size()));
  return t;
}

AppliedOrbit apply_cycle(const WordBlockCode& code, const Word& cycle) {
  auto f = code.returns().factor(cycle);
  const std::size_t k = f.symbols.size();
  const std::size_t m = code.window_radius();
  AppliedOrbit out{PeriodicOrbit::from_cyclic_word(cycle), {}, f.anchors, {}, cycle.size(), 0, k};
  for (std::size_t j = 0; j < k; ++j) {
    Word block;
    for (std::size_t t = 0; t < 2 * m + 1; ++t) block.push_back(f.symbols[(j + k * (m + 1) + t - m) % k]);
    const Word& image = code.image(block);
    out.image_anchors.push_back(out.image_word.size());
    out.image_word.insert(out.image_word.end(), image.begin(), image.end());
  }
  out.image_length = out.image_word.size();
  out.image = PeriodicOrbit::from_cyclic_word(out.image_word);
  return out;
}

AppliedOrbit apply_periodic(const WordBlockCode& code, const PeriodicOrbit& x) {
  const Word& w = x.word();
  auto anchors = code.returns().anchors(w);
  if (anchors.empty()) throw OrbitMissesSection("orbit " + describe(code.source(), w) + " misses the section");
  std::size_t best = anchors.front();
  for (std::size_t a : anchors)
    if (rotate(w, a) < rotate(w, best)) best = a;
  AppliedOrbit out = apply_cycle(code, rotate(w, best));
  for (std::size_t& a : out.anchors) a = (a + best) % w.size();
  return out;
}

SectionCheck verify_section_condition(const WordBlockCode& code, const CrossSection& target_section,
                                      std::size_t max_period) {
  if (!(target_section.shift() == code.target()))
    throw std::invalid_argument("section does not live on the code's target shift");
  SectionCheck check;
  for (const PeriodicOrbit& x : periodic_orbits(code.source(), max_period)) {
    if (code.returns().anchors(x.word()).empty()) continue;
    ++check.orbits_checked;
    AppliedOrbit applied = apply_periodic(code, x);
    std::set<std::size_t> anchors(applied.image_anchors.begin(), applied.image_anchors.end());
    for (std::size_t p = 0; p < applied.image_word.size(); ++p) {
      bool inside = target_section.contains_at(applied.image_word, static_cast<std::ptrdiff_t>(p));
      if (inside == anchors.contains(p)) continue;
      check.holds = false;
      check.witness = x;
      check.image_word = applied.image_word;
      check.position = p;
      check.detail = inside ? "image position " + std::to_string(p) + " is in the target section but is not an anchor image"
                            : "anchor image at position " + std::to_string(p) + " is outside the target section";
      return check;
    }
  }
  return check;
}

WordBlockCode induced_code(const BlockCode& psi, const ReturnSystem& from, const ReturnSystem& to) {
  if (!(psi.source() == from.shift()) || !(psi.target() == to.shift()))
    throw std::invalid_argument("psi does not act between the given return shifts");
  for (const PeriodicOrbit& y : periodic_orbits(from.shift(), 6)) {
    Word image;
    try {
      image = psi.apply_cyclic(y.word());
    } catch (const PartialCode&) {
      throw NotIntertwining("psi is undefined on return cycle " + describe(from.shift(), y.word()));
    }
    if (!is_cycle(to.shift().graph(), image))
      throw NotIntertwining("psi sends return cycle " + describe(from.shift(), y.word()) +
                            " to a non-cycle " + describe(to.shift(), image));
  }
  const std::size_t m = psi.radius();
  std::map<Word, Word> table;
  for (const Word& block : words_of_length(from.shift(), 2 * m + 1)) {
    auto e = psi.image(slice(block, m - psi.memory(), psi.window_length()));
    if (!e) throw NotIntertwining("psi has no image for return block " + describe(from.shift(), block));
    table.emplace(block, to.return_word(*e));
  }
  return WordBlockCode(from.section(), m, to.section().shift(), std::move(table));
}

WordBlockCode code_from_block_code(const BlockCode& phi, const CrossSection& c) {
  if (!(phi.source() == c.shift())) throw std::invalid_argument("section does not live on the code's source");
  ReturnSystem rs(c);
  const std::size_t m = phi.radius();
  std::map<Word, Word> table;
  std::vector<std::size_t> offsets;
  for (const Word& block : words_of_length(rs.shift(), 2 * m + 1)) {
    Word w = assemble(rs, block, offsets);
    Word image;
    const std::size_t start = offsets[m], len = rs.return_word(block[m]).size();
    for (std::size_t p = start; p < start + len; ++p) {
      Word window = slice(w, p - phi.memory(), phi.window_length());
      auto e = phi.image(window);
      if (!e) throw PartialCode("code has no image for window " + describe(phi.source(), window));
      image.push_back(*e);
    }
    table.emplace(block, std::move(image));
  }
  return WordBlockCode(c, m, phi.target(), std::move(table));
}

WordBlockCode code_from_expansion(const EdgeShift& x, const ExpansionResult& expansion) {
  CrossSection c = CrossSection::full(x);
  ReturnSystem rs(c);
  std::map<Word, Word> table;
  for (EdgeId r = 0; r < rs.shift().alphabet_size(); ++r)
    table.emplace(Word{r}, expansion.record.symbol_map.at(rs.return_word(r).front()));
  return WordBlockCode(c, 0, expansion.shift, std::move(table));
}

UnfoldedWeights unfolded_weights(const WordBlockCode& code) {
  const ReturnSystem& rs = code.returns();
  HigherBlock hb = higher_block(rs.shift(), code.block_length());
  const DirectedGraph& bg = hb.shift.graph();
  const std::size_t m = code.window_radius();

  GraphBuilder builder;
  for (VertexId v = 0; v < bg.vertex_count(); ++v) builder.vertex("s" + std::to_string(v));
  std::vector<Rational> weights;
  std::vector<EdgeId> block_of;
  for (EdgeId be = 0; be < bg.edge_count(); ++be) {
    const Word& block = hb.edge_paths[be];
    const std::size_t len = rs.return_word(block[m]).size();
    const Rational w = ratio(code.image(block).size(), len) - 1;
    std::string prev = "s" + std::to_string(bg.source(be));
    for (std::size_t i = 0; i < len; ++i) {
      std::string next = i + 1 == len ? "s" + std::to_string(bg.target(be))
                                      : "e" + std::to_string(be) + "." + std::to_string(i + 1);
      if (i + 1 < len) builder.vertex(next);
      builder.edge("e" + std::to_string(be) + "/" + std::to_string(i), prev, next);
      weights.push_back(w);
      block_of.push_back(be);
      prev = next;
    }
  }
  DirectedGraph unfolded = builder.build();
  return UnfoldedWeights{std::move(hb), EdgePotential{std::move(unfolded), std::move(weights)}, std::move(block_of)};
}

ConjugacyCertificate conjugacy_certificate(const WordBlockCode& code) {
  if (!is_irreducible(code.source())) throw NotIrreducible("the source shift is reducible");
  ConjugacyCertificate cert{false, unfolded_weights(code), std::nullopt, std::nullopt, 0};
  try {
    cert.potential = graph_potential(cert.weights.weight);
    cert.certified = true;
  } catch (const CycleObstruction& obstruction) {
    const auto& uw = cert.weights;
    const std::size_t block_vertices = uw.blocks.shift.graph().vertex_count();
    Word blocks;
    for (EdgeId e : obstruction.witness().cycle)
      if (uw.weight.graph.source(e) < block_vertices) blocks.push_back(uw.block_of[e]);
    PeriodicOrbit returns = uw.blocks.decode(PeriodicOrbit::from_cyclic_word(blocks));
    cert.witness = PeriodicOrbit::from_cyclic_word(code.returns().unfold(returns.word()));
    cert.witness_sum = obstruction.witness().sum;
  }
  return cert;
}

IsotopyCheck verify_isotopy_certificate(const LocalFunction& beta, const WordBlockCode& code,
                                        const CrossSection& target_section) {
  SectionCheck carried = verify_section_condition(code, target_section, 6);
  if (!carried.holds) throw InvalidSection("code does not carry the section onto the target section: " + carried.detail);
  const ReturnSystem& rs = code.returns();
  const std::size_t m = code.window_radius();
  const std::size_t k = std::max(m, beta.radius);
  const std::size_t r = beta.radius;

  auto value = [&](const Word& window) -> const Rational& {
    auto it = beta.table.find(window);
    if (it == beta.table.end())
      throw ResolutionMismatch("beta has no value on anchor window " + describe(code.source(), window));
    return it->second;
  };

  IsotopyCheck check;
  std::vector<std::size_t> offsets;
  for (const Word& path : words_of_length(rs.shift(), 2 * k + 2)) {
    Word w = assemble(rs, path, offsets);
    Word here = slice(w, offsets[k] - r, 2 * r + 1);
    Word next = slice(w, offsets[k + 1] - r, 2 * r + 1);
    Rational lhs = value(next) - value(here);
    const Word& image = code.image(slice(path, k - m, 2 * m + 1));
    Rational rhs = Rational(static_cast<long>(image.size())) - static_cast<long>(rs.return_word(path[k]).size());
    ++check.blocks_checked;
    if (lhs != rhs) {
      check.valid = false;
      check.return_block = path;
      check.window = here;
      check.next_window = next;
      check.lhs = lhs;
      check.rhs = rhs;
      return check;
    }
  }
  return check;
}

}  // namespace flowcalc
