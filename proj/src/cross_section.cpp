#include "flowcalc/cross_section.hpp"

#include <algorithm>
#include <functional>

#include "flowcalc/errors.hpp"
#include "flowcalc/livsic.hpp"

namespace flowcalc {

CrossSection::CrossSection(EdgeShift shift, std::size_t radius, std::set<Word> centers,
                           Rational height)
    : shift_(std::move(shift)), radius_(radius), centers_(std::move(centers)), height_(std::move(height)) {
  height_.canonicalize();
  if (height_ < 0 || height_ >= 1) throw InvalidSection("section height must lie in [0, 1)");
  for (const Word& w : centers_)
    if (w.size() != 2 * radius_ + 1 || !is_composable(shift_.graph(), w))
      throw InvalidSection("center '" + format_word(shift_.graph(), w) + "' is not a word of length " +
                           std::to_string(2 * radius_ + 1) + " of the shift");
}

CrossSection CrossSection::full(const EdgeShift& x, Rational height) {
  std::set<Word> centers;
  for (EdgeId e = 0; e < x.alphabet_size(); ++e) centers.insert(Word{e});
  return CrossSection(x, 0, std::move(centers), std::move(height));
}

CrossSection CrossSection::by_symbols(const EdgeShift& x, const std::vector<std::string>& labels,
                                      Rational height) {
  std::set<Word> centers;
  for (const auto& l : labels) centers.insert(Word{x.symbol_id(l)});
  return CrossSection(x, 0, std::move(centers), std::move(height));
}

bool CrossSection::contains_at(const Word& cycle, std::ptrdiff_t i) const {
  return contains(cyclic_window(cycle, i, radius_));
}

CrossSection CrossSection::at_height(Rational height) const {
  return CrossSection(shift_, radius_, centers_, std::move(height));
}

CrossSection CrossSection::widened(std::size_t radius) const {
  if (radius < radius_) throw std::invalid_argument("cannot narrow a section");
  const std::size_t pad = radius - radius_;
  std::set<Word> centers;
  for (const Word& w : words_of_length(shift_, 2 * radius + 1)) {
    Word inner(w.begin() + static_cast<std::ptrdiff_t>(pad), w.end() - static_cast<std::ptrdiff_t>(pad));
    if (contains(inner)) centers.insert(w);
  }
  return CrossSection(shift_, radius, std::move(centers), height_);
}

namespace {

struct MarkedBlockGraph {
  HigherBlock blocks;
  std::vector<bool> marked;  // per block edge
};

MarkedBlockGraph mark(const CrossSection& c) {
  MarkedBlockGraph m{higher_block(c.shift(), 2 * c.radius() + 1), {}};
  for (const Word& path : m.blocks.edge_paths) m.marked.push_back(c.contains(path));
  return m;
}

// Longest path (in edges) over unmarked edges, or a cycle of unmarked edges.
struct UnmarkedAnalysis {
  std::optional<Word> cycle;
  std::size_t longest = 0;
};

UnmarkedAnalysis analyse_unmarked(const MarkedBlockGraph& m) {
  const DirectedGraph& g = m.blocks.shift.graph();
  enum class Colour { white, grey, black };
  std::vector<Colour> colour(g.vertex_count(), Colour::white);
  std::vector<std::size_t> longest_from(g.vertex_count(), 0);
  std::vector<EdgeId> stack_edges;
  UnmarkedAnalysis result;

  std::function<bool(VertexId)> visit = [&](VertexId v) -> bool {
    colour[v] = Colour::grey;
    for (EdgeId e : g.out_edges(v)) {
      if (m.marked[e]) continue;
      VertexId w = g.target(e);
      if (colour[w] == Colour::grey) {
        // Grey vertices are on the current path; the cycle runs from w back to v, then e.
        std::size_t start = stack_edges.size();
        if (v != w) {
          while (g.source(stack_edges[start - 1]) != w) --start;
          --start;
        }
        Word cycle(stack_edges.begin() + static_cast<std::ptrdiff_t>(start), stack_edges.end());
        cycle.push_back(e);
        result.cycle = cycle;
        return true;
      }
      if (colour[w] == Colour::white) {
        stack_edges.push_back(e);
        if (visit(w)) return true;
        stack_edges.pop_back();
      }
      longest_from[v] = std::max(longest_from[v], longest_from[w] + 1);
    }
    colour[v] = Colour::black;
    return false;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (colour[v] != Colour::white) continue;
    if (visit(v)) return result;
  }
  for (auto l : longest_from) result.longest = std::max(result.longest, l);
  return result;
}

}  // namespace

SectionValidity validate(const CrossSection& c) {
  MarkedBlockGraph m = mark(c);
  UnmarkedAnalysis a = analyse_unmarked(m);
  if (a.cycle) {
    PeriodicOrbit witness = m.blocks.decode(PeriodicOrbit::from_cyclic_word(*a.cycle));
    return SectionValidity{false, 0, witness};
  }
  return SectionValidity{true, a.longest + 1, std::nullopt};
}

ReturnSystem::ReturnSystem(CrossSection section)
    : section_(std::move(section)), shift_(section_.shift()) {
  SectionValidity validity = validate(section_);
  if (!validity.valid)
    throw InvalidSection("not a discrete cross section: orbit '" +
                         format_word(section_.shift().graph(), validity.witness->word()) +
                         "' avoids it");
  max_return_ = validity.max_return;

  MarkedBlockGraph m = mark(section_);
  const DirectedGraph& bg = m.blocks.shift.graph();
  const DirectedGraph& xg = section_.shift().graph();
  const std::size_t r = section_.radius();

  auto has_marked_exit = [&](VertexId v) {
    return std::any_of(bg.out_edges(v).begin(), bg.out_edges(v).end(),
                       [&](EdgeId e) { return m.marked[e]; });
  };

  std::vector<bool> is_state(bg.vertex_count(), false);
  for (EdgeId e = 0; e < bg.edge_count(); ++e)
    if (m.marked[e]) is_state[bg.source(e)] = true;
  std::vector<VertexId> state_index(bg.vertex_count(), 0);
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < bg.vertex_count(); ++v)
    if (is_state[v]) {
      state_index[v] = vertices.size();
      vertices.push_back(bg.vertices()[v]);
    }

  std::vector<Edge> edges;
  std::set<std::string> used_labels;
  Word path;
  std::function<void()> extend = [&]() {
    VertexId at = bg.target(path.back());
    if (has_marked_exit(at)) {
      Word word, span = m.blocks.edge_paths[path.front()];
      for (EdgeId b : path) word.push_back(m.blocks.edge_paths[b][r]);
      for (std::size_t i = 1; i < path.size(); ++i) span.push_back(m.blocks.edge_paths[path[i]].back());
      std::string base;
      for (EdgeId e : word) base += xg.label(e);
      std::string label = "[" + base + "]";
      for (std::size_t k = 2; used_labels.contains(label); ++k)
        label = "[" + base + "]#" + std::to_string(k);
      used_labels.insert(label);
      by_span_.emplace(span, edges.size());
      edges.push_back(Edge{label, state_index[bg.source(path.front())], state_index[at], label});
      words_.push_back(std::move(word));
      spans_.push_back(std::move(span));
    }
    for (EdgeId e : bg.out_edges(at)) {
      if (m.marked[e]) continue;
      path.push_back(e);
      extend();
      path.pop_back();
    }
  };
  for (EdgeId e = 0; e < bg.edge_count(); ++e) {
    if (!m.marked[e]) continue;
    path.assign(1, e);
    extend();
  }
  shift_ = EdgeShift(DirectedGraph(std::move(vertices), std::move(edges)));
}

ReturnSystem return_system(const CrossSection& c) { return ReturnSystem(c); }

std::optional<EdgeId> ReturnSystem::find_span(const Word& span) const {
  auto it = by_span_.find(span);
  if (it == by_span_.end()) return std::nullopt;
  return it->second;
}

std::set<Word> ReturnSystem::return_words() const { return {words_.begin(), words_.end()}; }

std::vector<std::size_t> ReturnSystem::anchors(const Word& cycle) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (section_.contains_at(cycle, static_cast<std::ptrdiff_t>(i))) out.push_back(i);
  return out;
}

ReturnSystem::Factorization ReturnSystem::factor(const Word& cycle) const {
  Factorization f{anchors(cycle), {}};
  if (f.anchors.empty()) throw OrbitMissesSection("orbit does not meet the section");
  const std::size_t n = cycle.size();
  const auto r = static_cast<std::ptrdiff_t>(section_.radius());
  for (std::size_t j = 0; j < f.anchors.size(); ++j) {
    auto from = static_cast<std::ptrdiff_t>(f.anchors[j]);
    auto to = static_cast<std::ptrdiff_t>(j + 1 < f.anchors.size() ? f.anchors[j + 1] : f.anchors[0] + n);
    Word span;
    for (std::ptrdiff_t i = from - r; i <= to - 1 + r; ++i)
      span.push_back(cycle[static_cast<std::size_t>((i % static_cast<std::ptrdiff_t>(n) + static_cast<std::ptrdiff_t>(n)) %
                                                    static_cast<std::ptrdiff_t>(n))]);
    auto edge = find_span(span);
    if (!edge) throw std::logic_error("return segment missing from the return graph");
    f.symbols.push_back(*edge);
  }
  return f;
}

PeriodicOrbit ReturnSystem::recode(const PeriodicOrbit& x) const {
  return PeriodicOrbit::from_cyclic_word(factor(x.word()).symbols);
}

PeriodicOrbit ReturnSystem::decode(const PeriodicOrbit& y) const {
  return PeriodicOrbit::from_cyclic_word(unfold(y.word()));
}

Word ReturnSystem::unfold(const Word& return_path) const {
  Word out;
  for (EdgeId s : return_path) out.insert(out.end(), words_.at(s).begin(), words_.at(s).end());
  return out;
}

CrossSection pullback(const BlockCode& phi, const CrossSection& c_prime) {
  if (!(phi.target() == c_prime.shift()))
    throw std::invalid_argument("section does not live on the code's target shift");
  if (auto missing = phi.missing_window())
    throw PartialCode("code has no image for window '" +
                      format_word(phi.source().graph(), *missing) + "'");
  const std::size_t kappa = c_prime.radius();
  const std::size_t radius = kappa + phi.radius();
  const std::size_t offset = radius - kappa;  // index in w of image position -kappa
  std::set<Word> centers;
  for (const Word& w : words_of_length(phi.source(), 2 * radius + 1)) {
    Word image;
    for (std::size_t j = 0; j < 2 * kappa + 1; ++j) {
      std::size_t start = offset + j - phi.memory();
      Word window(w.begin() + static_cast<std::ptrdiff_t>(start),
                  w.begin() + static_cast<std::ptrdiff_t>(start + phi.window_length()));
      image.push_back(*phi.image(window));
    }
    if (c_prime.contains(image)) centers.insert(w);
  }
  return CrossSection(phi.source(), radius, std::move(centers), c_prime.height());
}

bool disjoint(const CrossSection& a, const CrossSection& b) {
  if (!(a.shift() == b.shift())) throw std::invalid_argument("sections live on different shifts");
  if (a.height() != b.height()) return true;
  const std::size_t r = std::max(a.radius(), b.radius());
  CrossSection wa = a.widened(r), wb = b.widened(r);
  return std::none_of(wa.centers().begin(), wa.centers().end(),
                      [&](const Word& w) { return wb.contains(w); });
}

namespace {

Rational first_free_dyadic(const std::set<Rational>& used) {
  Rational h(1, 2);
  while (used.contains(h)) h /= 2;
  return h;
}

}  // namespace

CrossSection disjointify(const CrossSection& c, const CrossSection& c_prime) {
  if (c_prime.height() != c.height()) return c_prime;
  return c_prime.at_height(first_free_dyadic({c.height()}));
}

std::vector<CrossSection> disjointify_all(const std::vector<CrossSection>& sections) {
  std::set<Rational> used;
  std::vector<CrossSection> out;
  for (const auto& s : sections) {
    if (!used.contains(s.height())) out.push_back(s);
    else out.push_back(s.at_height(first_free_dyadic(used)));
    used.insert(out.back().height());
  }
  return out;
}

}  // namespace flowcalc
