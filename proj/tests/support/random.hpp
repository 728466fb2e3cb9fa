#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "flowcalc/errors.hpp"
#include "flowcalc/graph.hpp"
#include "flowcalc/matrix.hpp"
#include "flowcalc/shift.hpp"

namespace testing {

// FLOWCALC_SEED overrides the fixed default so failures can be replayed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("FLOWCALC_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261014;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline flowcalc::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  flowcalc::IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Nonnegative matrix whose graph trims to a nonempty essential graph.
inline flowcalc::DirectedGraph random_essential_graph(std::mt19937_64& rng, std::size_t max_vertices, long max_entry) {
  for (;;) {
    auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
    flowcalc::IntMatrix a = random_matrix(rng, n, 0, max_entry);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (uniform(rng, 0, 2) == 0) a(i, j) = 0;
    try {
      return flowcalc::trim_essential(flowcalc::DirectedGraph::from_matrix(a));
    } catch (const flowcalc::EmptyShift&) {
    }
  }
}

// Strongly connected: a Hamiltonian cycle through all vertices plus random extra edges.
inline flowcalc::IntMatrix random_irreducible_matrix(std::mt19937_64& rng, std::size_t n, long max_entry,
                                                     int extra_percent = 30) {
  flowcalc::IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, (i + 1) % n) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (uniform(rng, 0, 99) < extra_percent) a(i, j) += uniform(rng, 1, max_entry);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) > max_entry) a(i, j) = max_entry;
  return a;
}

inline flowcalc::DirectedGraph random_irreducible_graph(std::mt19937_64& rng, std::size_t max_vertices, long max_entry,
                                                        int extra_percent = 30) {
  auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
  return flowcalc::DirectedGraph::from_matrix(random_irreducible_matrix(rng, n, max_entry, extra_percent));
}

inline flowcalc::Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  flowcalc::Rational q(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

}  // namespace testing
