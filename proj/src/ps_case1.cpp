#include <algorithm>

#include "flowcalc/cross_section.hpp"
#include "flowcalc/errors.hpp"
#include "flowcalc/livsic.hpp"

namespace flowcalc {

namespace {

// Membership of position p of a finite word; nullopt when the window leaves the word.
std::optional<bool> member_at(const CrossSection& c, const Word& w, std::ptrdiff_t p) {
  const auto r = static_cast<std::ptrdiff_t>(c.radius());
  if (p - r < 0 || p + r >= static_cast<std::ptrdiff_t>(w.size())) return std::nullopt;
  return c.contains(Word(w.begin() + (p - r), w.begin() + (p + r + 1)));
}

// First step j >= first at which the word is in c, scanning at most `limit` steps.
std::optional<std::ptrdiff_t> first_hit(const CrossSection& c, const Word& w, std::ptrdiff_t at,
                                        std::ptrdiff_t first, std::ptrdiff_t limit, bool& out_of_range) {
  for (std::ptrdiff_t j = first; j <= limit; ++j) {
    auto m = member_at(c, w, at + j);
    if (!m) {
      out_of_range = true;
      return std::nullopt;
    }
    if (*m) return j;
  }
  return std::nullopt;
}

}  // namespace

PsCase1Result ps_case1(const CrossSection& c1, const CrossSection& c2) {
  if (!(c1.shift() == c2.shift())) throw std::invalid_argument("sections live on different shifts");
  SectionValidity v1 = validate(c1), v2 = validate(c2);
  if (!v1.valid) throw InvalidSection("first section is not a discrete cross section");
  if (!v2.valid) throw InvalidSection("second section is not a discrete cross section");
  if (!disjoint(c1, c2)) throw NotDisjoint("sections meet in the suspension");

  const EdgeShift& x = c1.shift();
  const auto r1 = static_cast<std::ptrdiff_t>(v1.max_return);
  const auto kappa = static_cast<std::ptrdiff_t>(std::max(c1.radius(), c2.radius()));
  const std::ptrdiff_t rho = r1 + kappa;
  const Rational offset = c2.height() - c1.height();
  // Smallest step at which a C2 event lies strictly after a C1 event at the same base point.
  const std::ptrdiff_t c2_first = offset > 0 ? 0 : 1;
  const std::ptrdiff_t c1_last = offset > 0 ? 0 : -1;

  std::set<Word> d_centers, d2_centers;
  bool unused = false;
  for (const Word& w : words_of_length(x, static_cast<std::size_t>(2 * rho + 1))) {
    if (*member_at(c1, w, rho)) {
      auto tau1 = first_hit(c1, w, rho, 1, r1, unused);
      auto j2 = first_hit(c2, w, rho, c2_first, *tau1, unused);
      if (j2 && Rational(*j2) + offset < Rational(*tau1)) d_centers.insert(w);
    }
    if (*member_at(c2, w, rho)) {
      // Latest C1 event before this C2 event, then no C2 event in between.
      std::ptrdiff_t j1 = c1_last;
      while (!*member_at(c1, w, rho + j1)) --j1;
      bool between = false;
      for (std::ptrdiff_t j = -1; j >= j1 && !between; --j)
        if (*member_at(c2, w, rho + j) && Rational(j) + offset > Rational(j1)) between = true;
      if (!between) d2_centers.insert(w);
    }
  }
  CrossSection d(x, static_cast<std::size_t>(rho), std::move(d_centers), c1.height());
  CrossSection d2(x, static_cast<std::size_t>(rho), std::move(d2_centers), c2.height());
  ReturnSystem d_returns(d), d2_returns(d2);

  const EdgeShift& ys = d_returns.shift();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(4 * rho + 4); ++k) {
    std::map<Word, EdgeId> table;
    bool complete = true;
    for (const Word& path : words_of_length(ys, 2 * k + 1)) {
      Word w(d_returns.span(path.front()).begin(), d_returns.span(path.front()).begin() + rho);
      std::ptrdiff_t at = rho;
      for (std::size_t i = 0; i < path.size(); ++i) {
        const Word& rw = d_returns.return_word(path[i]);
        if (i < k) at += static_cast<std::ptrdiff_t>(rw.size());
        w.insert(w.end(), rw.begin(), rw.end());
      }
      const Word& last = d_returns.span(path.back());
      w.insert(w.end(), last.end() - rho, last.end());

      const auto len0 = static_cast<std::ptrdiff_t>(d_returns.return_word(path[k]).size());
      bool out_of_range = false;
      auto here = first_hit(c2, w, at, c2_first, len0, out_of_range);
      auto next_len = static_cast<std::ptrdiff_t>(d_returns.return_word(path[k + 1]).size());
      auto there = first_hit(c2, w, at + len0, c2_first, next_len, out_of_range);
      if (out_of_range || !here || !there) {
        complete = false;
        break;
      }
      std::ptrdiff_t from = at + *here - rho, to = at + len0 + *there - 1 + rho;
      if (from < 0 || to >= static_cast<std::ptrdiff_t>(w.size())) {
        complete = false;
        break;
      }
      auto image = d2_returns.find_span(Word(w.begin() + from, w.begin() + to + 1));
      if (!image) throw std::logic_error("first-hit segment is not a return of the second section");
      table.emplace(path, *image);
    }
    if (complete) {
      BlockCode psi(ys, d2_returns.shift(), k, k, std::move(table));
      return PsCase1Result{std::move(d), std::move(d2), std::move(d_returns), std::move(d2_returns),
                           std::move(psi)};
    }
  }
  throw std::logic_error("no finite window determines the first-hit map");
}

IntertwiningReport check_intertwining(const CrossSection& c1, const CrossSection& c2,
                                      const PsCase1Result& result, std::size_t max_period) {
  IntertwiningReport report;
  struct Event {
    Rational time;
    bool first;  // C1 event, else C2
    std::size_t pos;
  };
  for (const PeriodicOrbit& orbit : periodic_orbits(c1.shift(), max_period)) {
    const Word& w = orbit.word();
    const std::size_t n = w.size();
    ++report.orbits_checked;
    auto fail = [&](std::string detail) {
      report.holds = false;
      report.witness = orbit;
      report.detail = std::move(detail);
      return report;
    };

    std::vector<Event> events;
    for (std::size_t i = 0; i < 3 * n; ++i) {
      auto p = static_cast<std::ptrdiff_t>(i % n);
      if (c1.contains_at(w, p)) events.push_back({Rational(static_cast<long>(i)) + c1.height(), true, i});
      if (c2.contains_at(w, p)) events.push_back({Rational(static_cast<long>(i)) + c2.height(), false, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.time < b.time; });

    // Expected D (C1 followed by C2) and D'' (C2 preceded by C1) positions in [n, 2n).
    std::map<std::size_t, std::size_t> d_to_next;  // D position -> following D'' position
    std::set<std::size_t> expected_d2;
    for (std::size_t e = 1; e + 1 < events.size(); ++e) {
      const Event& ev = events[e];
      if (ev.pos < n || ev.pos >= 2 * n) continue;
      if (ev.first && !events[e + 1].first) d_to_next[ev.pos - n] = events[e + 1].pos - n;
      if (!ev.first && events[e - 1].first) expected_d2.insert(ev.pos - n);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto p = static_cast<std::ptrdiff_t>(i);
      if (result.d.contains_at(w, p) != d_to_next.contains(i))
        return fail("D membership disagrees with hitting times at position " + std::to_string(i));
      if (result.d_second.contains_at(w, p) != expected_d2.contains(i))
        return fail("D'' membership disagrees with first hits at position " + std::to_string(i));
    }
    if (d_to_next.size() != expected_d2.size()) return fail("D and D'' do not alternate");

    auto dy = result.d_returns.factor(w);
    auto dz = result.d_second_returns.factor(w);
    Word images = result.psi.apply_cyclic(dy.symbols);
    for (std::size_t j = 0; j < dy.anchors.size(); ++j) {
      std::size_t target = d_to_next.at(dy.anchors[j]) % n;
      auto it = std::find(dz.anchors.begin(), dz.anchors.end(), target);
      if (it == dz.anchors.end()) return fail("first hit is not a D'' anchor");
      EdgeId expected = dz.symbols[static_cast<std::size_t>(it - dz.anchors.begin())];
      if (images[j] != expected)
        return fail("psi disagrees with the first-hit map at position " + std::to_string(dy.anchors[j]));
    }
  }
  return report;
}

}  // namespace flowcalc
