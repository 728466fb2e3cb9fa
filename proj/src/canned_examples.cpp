#include "flowcalc/examples.hpp"

#include <algorithm>
#include <stdexcept>

#include "flowcalc/errors.hpp"
#include "flowcalc/flow_code.hpp"
#include "flowcalc/invariants.hpp"
#include "flowcalc/io.hpp"
#include "flowcalc/moves.hpp"

namespace flowcalc::examples {

const std::string_view full_two_shift =
    "vertex s\n"
    "edge a s s a\n"
    "edge b s s b\n";

const std::string_view golden_mean =
    "vertex u\n"
    "vertex v\n"
    "edge a u v a\n"
    "edge a' v u a'\n"
    "edge b u u b\n";

const std::string_view paired_shift =
    "vertex P\n"
    "vertex Q\n"
    "edge a1 P Q a1\n"
    "edge a2 Q P a2\n"
    "edge b P P b\n";

const std::string_view paired_section =
    "radius 0\n"
    "height 0\n"
    "a1\n"
    "b\n";

const std::string_view paired_factor =
    "radius 0\n"
    "a1 -> a\n"
    "a2 -> a\n"
    "b -> b\n";

const std::string_view reducible_matrix =
    "1 2\n"
    "0 1\n";

bool Outcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> names() {
  return {"expansion", "not-open", "reducible", "expansion-5.6", "not-open-5.9", "reducible-3.4"};
}

namespace {

using report::Json;

Word repeat(EdgeId e, std::size_t n) { return Word(n, e); }

Outcome expansion() {
  Outcome o{"expansion", {}, Json::object()};
  EdgeShift x(io::parse_graph(full_two_shift));
  EdgeShift golden(io::parse_graph(golden_mean));
  ExpansionResult ex = symbol_expansion(x, "a");

  o.report["expanded_graph"] = io::write_graph(ex.shift.graph());
  o.report["fresh_symbol"] = ex.record.fresh_symbol;
  o.checks.push_back({"expansion is the golden mean graph", label_isomorphic(ex.shift.graph(), golden.graph()),
                      "fresh symbol " + ex.record.fresh_symbol});

  FlowEquivalenceDecision decision = franks_equivalent(x.graph().adjacency(), ex.shift.graph().adjacency());
  o.report["decision"] = decision.equivalent ? "equivalent" : "not_equivalent";
  o.report["invariants"] = report::invariants(decision.first);
  o.checks.push_back({"full 2-shift is flow equivalent to the expansion", decision.equivalent, decision.reason});

  WordBlockCode code = code_from_expansion(x, ex);
  AppliedOrbit applied = apply_periodic(code, PeriodicOrbit::from_cyclic_word(Word{x.symbol_id("a")}));
  o.report["image_of_a"] = report::word(ex.shift, applied.image_word);
  o.checks.push_back({"orbit a maps to a a' with lengths (1, 2, 1)",
                      applied.image_word == parse_word(ex.shift.graph(), "a a'") && applied.domain_length == 1 &&
                          applied.image_length == 2 && applied.hits == 1,
                      format_word(ex.shift.graph(), applied.image_word)});

  ConjugacyCertificate cert = conjugacy_certificate(code);
  Json c{{"certified", cert.certified}};
  if (cert.witness) {
    c["witness"] = report::word(x, cert.witness->word());
    c["witness_sum"] = report::rational(cert.witness_sum);
  }
  o.report["certificate"] = c;
  bool refused_with_a = !cert.certified && cert.witness &&
                        cert.witness->word() == Word{x.symbol_id("a")} && cert.witness_sum == 1;
  o.checks.push_back({"conjugacy certificate refused with witness a, sum 1", refused_with_a,
                      cert.witness ? format_word(x.graph(), cert.witness->word()) + " sum " + to_string(cert.witness_sum)
                                   : "certified"});
  return o;
}

Outcome not_open(std::size_t k_max, std::size_t max_period) {
  Outcome o{"not-open", {}, Json::object()};
  EdgeShift x(io::parse_graph(paired_shift));
  EdgeShift full(io::parse_graph(full_two_shift));
  CrossSection c = io::parse_section(x, paired_section);

  SectionValidity v = validate(c);
  o.report["valid"] = v.valid;
  o.report["max_return"] = v.max_return;
  o.checks.push_back({"section is valid with max return 2", v.valid && v.max_return == 2,
                      "max_return " + std::to_string(v.max_return)});

  ReturnSystem rs(c);
  Json words = Json::array();
  for (const Word& w : rs.return_words()) words.push_back(report::word(x, w));
  o.report["return_words"] = words;
  std::set<Word> expected{parse_word(x.graph(), "a1 a2"), parse_word(x.graph(), "b")};
  o.checks.push_back({"return words are a1 a2 and b", rs.return_words() == expected, words.dump()});
  o.checks.push_back({"return graph is the full 2-shift",
                      rs.shift().graph().vertex_count() == 1 && rs.shift().alphabet_size() == 2, ""});

  BlockCode phi = io::parse_block_code(x, full, paired_factor);
  WordBlockCode code = code_from_block_code(phi, c);
  OpennessReport rep = openness_check(code, k_max, max_period);
  o.report["open"] = rep.open;
  Json witnesses = Json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(Json{{"radius", w.radius},
                             {"window", report::word(full, w.window)},
                             {"member", report::word(full, PeriodicOrbit::from_cyclic_word(w.member).word())},
                             {"non_member", report::word(full, PeriodicOrbit::from_cyclic_word(w.non_member).word())}});
  o.report["witnesses"] = witnesses;
  o.checks.push_back({"image of the section is not open up to radius " + std::to_string(k_max),
                      !rep.open && rep.witnesses.size() == k_max + 1, ""});

  const EdgeId a = full.symbol_id("a"), b = full.symbol_id("b");
  for (std::size_t k = 1; k <= k_max; ++k) {
    bool ok = false;
    std::string detail = "missing";
    if (k < rep.witnesses.size()) {
      const auto& w = rep.witnesses[k];
      Word family = repeat(a, 2 * k + 1);
      family.push_back(b);
      ok = w.window == repeat(a, 2 * k + 1) && PeriodicOrbit::from_cyclic_word(w.member).word() == Word{a} &&
           PeriodicOrbit::from_cyclic_word(w.non_member).word() == family;
      detail = "window " + format_word(full.graph(), w.window) + ", non-member " +
               format_word(full.graph(), PeriodicOrbit::from_cyclic_word(w.non_member).word());
    }
    o.checks.push_back({"radius " + std::to_string(k) + " witness is a^" + std::to_string(2 * k + 1) +
                            " from a^inf against (a^" + std::to_string(2 * k + 1) + " b)^inf",
                        ok, detail});
  }
  return o;
}

Outcome reducible() {
  Outcome o{"reducible", {}, Json::object()};
  IntMatrix a = io::parse_matrix(reducible_matrix);
  bool irreducible = is_irreducible(DirectedGraph::from_matrix(a));
  o.report["irreducible"] = irreducible;
  o.checks.push_back({"matrix is reducible", !irreducible, ""});
  std::string refusal = "none";
  try {
    franks_equivalent(a, IntMatrix{{2}});
  } catch (const Error& e) {
    refusal = e.kind();
  }
  o.report["decision"] = refusal;
  o.checks.push_back({"flow equivalence decision refuses with NotIrreducible", refusal == "NotIrreducible", refusal});
  return o;
}

}  // namespace

Outcome run(std::string_view name, std::size_t k_max, std::size_t max_period) {
  Outcome o;
  if (name == "expansion-5.6" || name == "expansion") o = expansion();
  else if (name == "not-open-5.9" || name == "not-open") o = not_open(k_max, max_period);
  else if (name == "reducible-3.4" || name == "reducible") o = reducible();
  else throw std::invalid_argument("unknown example '" + std::string(name) + "'");
  Json checks = Json::array();
  for (const auto& c : o.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  o.report["checks"] = checks;
  o.report["passed"] = o.passed();
  o.report["example"] = o.name;
  return o;
}

}  // namespace flowcalc::examples
