#include "flowcalc/invariants.hpp"

#include <algorithm>

#include "flowcalc/errors.hpp"

namespace flowcalc {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.size(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.size(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m.size(); ++j) m(target, j) += factor * m(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t i = 0; i < m.size(); ++i) m(i, target) += factor * m(i, source);
}

// Quotient rounding toward zero keeps |remainder| < |divisor|.
Integer quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t n = input.size();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      bool found = false;
      std::size_t pi = 0, pj = 0;
      Integer best;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a(i, j) == 0) continue;
          Integer mag = abs(a(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;  // remaining block is zero

      swap_rows(a, k, pi);
      swap_rows(u, k, pi);
      swap_cols(a, k, pj);
      swap_cols(v, k, pj);

      bool residue = false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Integer q = quotient(a(i, k), a(k, k));
        add_row(a, i, k, -q);
        add_row(u, i, k, -q);
        residue = residue || a(i, k) != 0;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        Integer q = quotient(a(k, j), a(k, k));
        add_col(a, j, k, -q);
        add_col(v, j, k, -q);
        residue = residue || a(k, j) != 0;
      }
      if (residue) continue;

      // Row and column k are clear; enforce divisibility of the rest by the pivot.
      bool divisible = true;
      for (std::size_t i = k + 1; i < n && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            add_row(a, k, i, 1);
            add_row(u, k, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        a(k, j) = -a(k, j);
        u(k, j) = -u(k, j);
      }
    }
  }

  SmithForm result{{}, std::move(u), std::move(v)};
  for (std::size_t i = 0; i < n; ++i) result.diagonal.push_back(a(i, i));
  return result;
}

std::string FlowInvariants::bf_group() const {
  if (bf_factors.empty() && free_rank == 0) return "0";
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  for (const auto& d : bf_factors) append("Z/" + d.get_str());
  for (std::size_t i = 0; i < free_rank; ++i) append("Z");
  return s;
}

FlowInvariants flow_invariants(const IntMatrix& a) {
  if (!a.is_nonnegative()) throw std::invalid_argument("flow invariants need a nonnegative matrix");
  IntMatrix m = a.identity_minus();
  FlowInvariants inv;
  inv.ps_number = m.determinant();
  for (const auto& d : smith_normal_form(m).diagonal) {
    if (d == 0) ++inv.free_rank;
    else if (d > 1) inv.bf_factors.push_back(d);
  }
  return inv;
}

bool is_trivial_sft(const EdgeShift& x) {
  const DirectedGraph& g = x.graph();
  if (g.edge_count() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).size() != 1 || g.in_edges(v).size() != 1) return false;
  return is_irreducible(g);
}

namespace {

EdgeShift checked_shift(const IntMatrix& a, const char* which) {
  EdgeShift x(trim_essential(DirectedGraph::from_matrix(a)));
  if (!is_irreducible(x))
    throw NotIrreducible(std::string(which) +
                         " matrix presents a reducible SFT; flow-equivalence invariants are not "
                         "complete there");
  if (is_trivial_sft(x))
    throw TrivialSFT(std::string(which) + " matrix presents a single periodic orbit");
  return x;
}

}  // namespace

FlowEquivalenceDecision franks_equivalent(const IntMatrix& a, const IntMatrix& b) {
  EdgeShift x = checked_shift(a, "first");
  EdgeShift y = checked_shift(b, "second");
  FlowEquivalenceDecision d;
  d.first = flow_invariants(x.graph().adjacency());
  d.second = flow_invariants(y.graph().adjacency());
  if (d.first.ps_number != d.second.ps_number) {
    d.reason = "parry-sullivan number differs: " + d.first.ps_number.get_str() + " vs " +
               d.second.ps_number.get_str();
  } else if (d.first.bf_factors != d.second.bf_factors || d.first.free_rank != d.second.free_rank) {
    d.reason = "bowen-franks group differs: " + d.first.bf_group() + " vs " + d.second.bf_group();
  } else {
    d.equivalent = true;
    d.reason = "equal parry-sullivan number " + d.first.ps_number.get_str() +
               " and bowen-franks group " + d.first.bf_group();
  }
  return d;
}

}  // namespace flowcalc
