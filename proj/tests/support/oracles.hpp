#pragma once

// Independent reference computations used as test oracles. None of these call the
// library routine they check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "flowcalc/cross_section.hpp"
#include "flowcalc/graph.hpp"
#include "flowcalc/matrix.hpp"
#include "flowcalc/shift.hpp"

namespace oracle {

using flowcalc::EdgeId;
using flowcalc::Integer;
using flowcalc::IntMatrix;
using flowcalc::Word;

// Laplace expansion along the first row.
inline Integer det_cofactor(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline std::vector<std::vector<Integer>> rows(const IntMatrix& a) {
  std::vector<std::vector<Integer>> r(a.size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a(i, j);
  return r;
}

inline Integer det(const IntMatrix& a) { return det_cofactor(rows(a)); }

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Diagonal of the Smith form from determinantal divisors: d_k = gcd of k x k minors,
// s_k = d_k / d_{k-1}, and s_k = 0 once d_k = 0.
inline std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  const std::size_t n = a.size();
  auto m = rows(a);
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> picks;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, picks);
    Integer g = 0;
    for (const auto& rs : picks)
      for (const auto& cs : picks) {
        std::vector<std::vector<Integer>> minor;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        Integer d = det_cofactor(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

struct Group {
  std::vector<Integer> factors;  // > 1, ascending
  std::size_t free_rank = 0;
  bool operator==(const Group&) const = default;
};

inline Group cokernel(const IntMatrix& m) {
  Group g;
  for (const Integer& d : smith_diagonal(m)) {
    if (d == 0) ++g.free_rank;
    else if (d > 1) g.factors.push_back(d);
  }
  return g;
}

// Entry sum of the diagonal of A^n by repeated naive multiplication.
inline Integer trace_power(const IntMatrix& a, unsigned n) {
  const std::size_t k = a.size();
  auto p = rows(IntMatrix::identity(k));
  auto m = rows(a);
  for (unsigned step = 0; step < n; ++step) {
    std::vector<std::vector<Integer>> q(k, std::vector<Integer>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < k; ++j) q[i][j] += p[i][l] * m[l][j];
    p = q;
  }
  Integer t = 0;
  for (std::size_t i = 0; i < k; ++i) t += p[i][i];
  return t;
}

inline bool strongly_connected(const flowcalc::DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges())
        if (e.source == v && !seen[e.target]) {
          seen[e.target] = true;
          stack.push_back(e.target);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

inline bool is_primitive(const Word& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    if (w.size() % p) continue;
    Word r(w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    if (r == w) return false;
  }
  return true;
}

inline Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, r);
  }
  return best;
}

// Every closed path of length exactly n (all rotations, all powers).
inline std::vector<Word> closed_paths(const flowcalc::DirectedGraph& g, std::size_t n) {
  std::vector<Word> out;
  Word cur;
  std::function<void()> go = [&] {
    if (cur.size() == n) {
      if (g.target(cur.back()) == g.source(cur.front())) out.push_back(cur);
      return;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!cur.empty() && g.source(e) != g.target(cur.back())) continue;
      cur.push_back(e);
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

// Primitive orbits of least period exactly n, as least rotations.
inline std::set<Word> orbits_of_period(const flowcalc::DirectedGraph& g, std::size_t n) {
  std::set<Word> out;
  for (const Word& w : closed_paths(g, n))
    if (is_primitive(w)) out.insert(least_rotation(w));
  return out;
}

inline Word window(const Word& cycle, long center, std::size_t radius) {
  const long n = static_cast<long>(cycle.size());
  Word w;
  for (long i = center - static_cast<long>(radius); i <= center + static_cast<long>(radius); ++i)
    w.push_back(cycle[static_cast<std::size_t>(((i % n) + n) % n)]);
  return w;
}

struct SectionVerdict {
  bool every_orbit_meets = true;
  std::size_t max_gap = 0;
  std::optional<Word> missing;
};

// Orbit-by-orbit: does every orbit of period <= max_period meet C, and the largest gap
// between consecutive visits.
inline SectionVerdict brute_section(const flowcalc::CrossSection& c, std::size_t max_period) {
  SectionVerdict v;
  const auto& g = c.shift().graph();
  for (std::size_t n = 1; n <= max_period; ++n)
    for (const Word& w : orbits_of_period(g, n)) {
      std::vector<std::size_t> hits;
      for (std::size_t i = 0; i < n; ++i)
        if (c.centers().contains(window(w, static_cast<long>(i), c.radius()))) hits.push_back(i);
      if (hits.empty()) {
        if (v.every_orbit_meets) v.missing = w;
        v.every_orbit_meets = false;
        continue;
      }
      for (std::size_t j = 0; j < hits.size(); ++j) {
        std::size_t next = j + 1 < hits.size() ? hits[j + 1] : hits[0] + n;
        v.max_gap = std::max(v.max_gap, next - hits[j]);
      }
    }
  return v;
}

}  // namespace oracle
