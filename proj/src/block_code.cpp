#include "flowcalc/block_code.hpp"

#include "flowcalc/errors.hpp"

namespace flowcalc {

BlockCode::BlockCode(EdgeShift source, EdgeShift target, std::size_t memory,
                     std::size_t anticipation, std::map<Word, EdgeId> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      memory_(memory),
      anticipation_(anticipation),
      table_(std::move(table)) {
  for (const auto& [window, image] : table_) {
    if (window.size() != window_length() || !is_composable(source_.graph(), window))
      throw InvalidWord("block code window is not a source word of length " +
                        std::to_string(window_length()));
    if (image >= target_.alphabet_size()) throw InvalidWord("block code image out of range");
  }
}

BlockCode BlockCode::identity(const EdgeShift& x) {
  std::map<Word, EdgeId> table;
  for (EdgeId e = 0; e < x.alphabet_size(); ++e) table.emplace(Word{e}, e);
  return BlockCode(x, x, 0, 0, std::move(table));
}

BlockCode BlockCode::one_block(const EdgeShift& source, const EdgeShift& target,
                               const std::map<EdgeId, EdgeId>& rule) {
  std::map<Word, EdgeId> table;
  for (const auto& [from, to] : rule) table.emplace(Word{from}, to);
  return BlockCode(source, target, 0, 0, std::move(table));
}

BlockCode BlockCode::block_encoder(const EdgeShift& x, const HigherBlock& hb) {
  return BlockCode(x, hb.shift, 0, hb.block_length - 1, hb.edge_index);
}

BlockCode BlockCode::block_decoder(const EdgeShift& x, const HigherBlock& hb) {
  std::map<Word, EdgeId> table;
  for (EdgeId e = 0; e < hb.edge_paths.size(); ++e) table.emplace(Word{e}, hb.edge_paths[e].front());
  return BlockCode(hb.shift, x, 0, 0, std::move(table));
}

std::optional<EdgeId> BlockCode::image(const Word& window) const {
  auto it = table_.find(window);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<Word> BlockCode::missing_window() const {
  for (const Word& w : words_of_length(source_, window_length()))
    if (!table_.contains(w)) return w;
  return std::nullopt;
}

bool BlockCode::is_total() const { return !missing_window().has_value(); }

Word BlockCode::apply_cyclic(const Word& cycle) const {
  const std::size_t n = cycle.size();
  Word out(n);
  Word window(window_length());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < window.size(); ++k)
      window[k] = cycle[(i + n * window.size() + k - memory_) % n];
    auto img = image(window);
    if (!img)
      throw PartialCode("block code has no image for window '" +
                        format_word(source_.graph(), window) + "'");
    out[i] = *img;
  }
  return out;
}

Word BlockCode::apply_word(const Word& word) const {
  if (word.size() < window_length()) return {};
  Word out;
  for (std::size_t i = 0; i + window_length() <= word.size(); ++i) {
    Word window(word.begin() + static_cast<std::ptrdiff_t>(i),
                word.begin() + static_cast<std::ptrdiff_t>(i + window_length()));
    auto img = image(window);
    if (!img)
      throw PartialCode("block code has no image for window '" +
                        format_word(source_.graph(), window) + "'");
    out.push_back(*img);
  }
  return out;
}

PeriodicOrbit BlockCode::apply(const PeriodicOrbit& x) const {
  return PeriodicOrbit::from_cyclic_word(apply_cyclic(x.word()));
}

BlockCode BlockCode::then(const BlockCode& next) const {
  if (!(next.source_ == target_)) throw std::invalid_argument("block codes do not compose");
  const std::size_t memory = memory_ + next.memory_;
  const std::size_t anticipation = anticipation_ + next.anticipation_;
  std::map<Word, EdgeId> table;
  for (const Word& w : words_of_length(source_, memory + anticipation + 1)) {
    Word mid;
    bool defined = true;
    for (std::size_t i = 0; i + window_length() <= w.size() && defined; ++i) {
      Word window(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i + window_length()));
      auto img = image(window);
      if (!img) defined = false;
      else mid.push_back(*img);
    }
    if (!defined || !is_composable(target_.graph(), mid)) continue;
    auto img = next.image(mid);
    if (img) table.emplace(w, *img);
  }
  return BlockCode(source_, next.target_, memory, anticipation, std::move(table));
}

}  // namespace flowcalc
