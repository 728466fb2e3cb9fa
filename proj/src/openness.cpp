#include <algorithm>
#include <map>
#include <set>

#include "flowcalc/flow_code.hpp"

namespace flowcalc {

namespace {

// One period of the point at position p of a cyclic word, read from p.
Word point_at(const Word& cycle, std::size_t p) {
  Word w = rotate(cycle, p);
  w.resize(least_period(w));
  return w;
}

bool shorter_then_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

OpennessReport openness_check(const WordBlockCode& code, std::size_t k_max, std::size_t max_period,
                              Universe universe) {
  std::set<Word> members, points;
  for (const PeriodicOrbit& x : periodic_orbits(code.source(), max_period)) {
    AppliedOrbit applied = apply_periodic(code, x);
    for (std::size_t a : applied.image_anchors) members.insert(point_at(applied.image_word, a));
    if (universe == Universe::image)
      for (std::size_t p = 0; p < applied.image_word.size(); ++p) points.insert(point_at(applied.image_word, p));
  }
  if (universe == Universe::target)
    for (const PeriodicOrbit& z : periodic_orbits(code.target(), max_period))
      for (std::size_t p = 0; p < z.period(); ++p) points.insert(rotate(z.word(), p));

  OpennessReport report;
  report.members = members.size();
  report.universe_size = points.size();
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::map<Word, Word> member_for;  // window -> shortest, then least, member
    for (const Word& m : members) {
      Word window = cyclic_window(m, 0, k);
      auto it = member_for.find(window);
      if (it == member_for.end() || shorter_then_less(m, it->second)) member_for[window] = m;
    }
    std::map<Word, Word> non_member_for;
    for (const Word& z : points) {
      if (members.contains(z)) continue;
      Word window = cyclic_window(z, 0, k);
      if (!member_for.contains(window)) continue;
      auto it = non_member_for.find(window);
      if (it == non_member_for.end() || shorter_then_less(z, it->second)) non_member_for[window] = z;
    }
    if (non_member_for.empty()) {
      report.open = true;
      report.radius = k;
      report.witnesses.clear();
      return report;
    }
    const auto& [window, non_member] = *non_member_for.begin();
    report.witnesses.push_back(OpennessWitness{k, window, member_for.at(window), non_member});
  }
  return report;
}

}  // namespace flowcalc
