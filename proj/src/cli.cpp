#include "flowcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "flowcalc/errors.hpp"
#include "flowcalc/examples.hpp"
#include "flowcalc/flow_code.hpp"
#include "flowcalc/invariants.hpp"
#include "flowcalc/io.hpp"
#include "flowcalc/livsic.hpp"
#include "flowcalc/moves.hpp"
#include "flowcalc/report.hpp"

namespace flowcalc::cli {

namespace {

using report::Json;
namespace fs = std::filesystem;

struct Result {
  Json report = Json::object();
  std::optional<std::string> text;  // replaces the rendered report in text mode
  int status = kOk;
};

template <class F>
auto from_file(const std::string& path, F parse) {
  std::string text = io::read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

EdgeShift load_shift(const std::string& path) {
  return EdgeShift(from_file(path, [](const std::string& t) { return io::parse_graph(t); }));
}

IntMatrix load_matrix(const std::string& path) {
  return from_file(path, [](const std::string& t) { return io::parse_matrix(t); });
}

CrossSection load_section(const EdgeShift& x, const std::string& path) {
  return from_file(path, [&](const std::string& t) { return io::parse_section(x, t); });
}

WordBlockCode load_code(const EdgeShift& x, const std::string& code_path, const EdgeShift& target) {
  io::CodeHeader header = from_file(code_path, [](const std::string& t) { return io::parse_code_header(t); });
  fs::path section_path = fs::path(code_path).parent_path() / header.section_file;
  CrossSection c = load_section(x, section_path.string());
  ReturnSystem rs(c);
  auto table = from_file(code_path, [&](const std::string& t) { return io::parse_code_table(rs.shift(), target, t); });
  return WordBlockCode(c, header.window_radius, target, std::move(table));
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << text;
}

Json potential_json(const DirectedGraph& g, const VertexPotential& h) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j[g.vertices()[v]] = report::rational(h.values[v]);
  return j;
}

Json orbit_word(const EdgeShift& x, const Word& w) {
  return report::word(x, PeriodicOrbit::from_cyclic_word(w).word());
}

// Options shared by the subcommands; each handler reads what it declared.
struct Options {
  std::string graph, second, third, fourth;
  std::string label, output, target, target_section, orbit, beta, universe = "target";
  std::vector<std::string> classes;
  std::size_t period = 8, k_max = 3, open_period = 12, check_period = 6;
};

Result invariants_cmd(const Options& o) {
  FlowInvariants inv = flow_invariants(load_matrix(o.graph));
  return {report::invariants(inv), std::nullopt, kOk};
}

Result decide_cmd(const Options& o) {
  FlowEquivalenceDecision d = franks_equivalent(load_matrix(o.graph), load_matrix(o.second));
  Json j{{"decision", d.equivalent ? "equivalent" : "not_equivalent"},
         {"equivalent", d.equivalent},
         {"first", report::invariants(d.first)},
         {"second", report::invariants(d.second)}};
  if (!d.reason.empty()) j["reason"] = d.reason;
  return {j, std::nullopt, kOk};
}

Result expand_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  ExpansionResult ex = symbol_expansion(x, o.label);
  Json move{{"kind", "symbol_expansion"},
            {"symbol", ex.record.symbol},
            {"fresh_symbol", ex.record.fresh_symbol},
            {"fresh_vertex", ex.record.fresh_vertex}};
  std::string graph = io::write_graph(ex.shift.graph());
  Result r{move, std::nullopt, kOk};
  if (!o.output.empty()) {
    write_output(o.output, graph);
    r.text = move.dump() + "\n";
  } else {
    r.report["graph"] = graph;
    r.text = graph + "# move " + move.dump() + "\n";
  }
  return r;
}

Result split_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  std::vector<std::vector<std::string>> partition;
  for (const auto& cls : o.classes) {
    std::vector<std::string> labels;
    std::stringstream in(cls);
    for (std::string l; std::getline(in, l, ',');)
      if (!l.empty()) labels.push_back(l);
    partition.push_back(std::move(labels));
  }
  SplitResult s = out_split(x, o.label, partition);
  Json move{{"kind", "out_split"}, {"vertex", o.label}, {"classes", o.classes}};
  std::string graph = io::write_graph(s.shift.graph());
  Result r{move, std::nullopt, kOk};
  if (!o.output.empty()) {
    write_output(o.output, graph);
    r.text = move.dump() + "\n";
  } else {
    r.report["graph"] = graph;
    r.text = graph + "# move " + move.dump() + "\n";
  }
  return r;
}

Result section_validate_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  SectionValidity v = validate(load_section(x, o.second));
  Json j{{"valid", v.valid}};
  if (v.valid) j["max_return"] = v.max_return;
  else j["witness"] = report::word(x, v.witness->word());
  return {j, std::nullopt, kOk};
}

Json returns_json(const ReturnSystem& rs) {
  const EdgeShift& x = rs.section().shift();
  Json words = Json::array();
  for (const Word& w : rs.return_words()) words.push_back(report::word(x, w));
  Json edges = Json::array();
  for (EdgeId r = 0; r < rs.shift().alphabet_size(); ++r)
    edges.push_back(rs.shift().symbol(r) + " = " + format_word(x.graph(), rs.return_word(r)));
  return Json{{"max_return", rs.max_return()},
              {"return_words", words},
              {"return_symbols", edges},
              {"return_graph", io::write_graph(rs.shift().graph())}};
}

Result section_returns_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  return {returns_json(ReturnSystem(load_section(x, o.second))), std::nullopt, kOk};
}

Result section_pullback_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  EdgeShift target = load_shift(o.third);
  BlockCode phi = from_file(o.second, [&](const std::string& t) { return io::parse_block_code(x, target, t); });
  CrossSection c = pullback(phi, load_section(target, o.fourth));
  SectionValidity v = validate(c);
  std::string text = io::write_section(c);
  if (!v.valid) text += "# not a cross section\n";
  return {Json{{"section", text}, {"valid", v.valid}}, text, kOk};
}

Result section_disjointify_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  CrossSection moved = disjointify(load_section(x, o.second), load_section(x, o.third));
  std::string text = io::write_section(moved);
  return {Json{{"section", text}}, text, kOk};
}

Result section_ps_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  CrossSection c1 = load_section(x, o.second), c2 = load_section(x, o.third);
  PsCase1Result res = ps_case1(c1, c2);
  IntertwiningReport check = check_intertwining(c1, c2, res, o.check_period);
  Json psi = Json::array();
  for (const auto& [block, e] : res.psi.table())
    psi.push_back(format_word(res.d_returns.shift().graph(), block) + " -> " + res.d_second_returns.shift().symbol(e));
  Json j{{"d", io::write_section(res.d)},
         {"d_second", io::write_section(res.d_second)},
         {"d_returns", returns_json(res.d_returns)},
         {"d_second_returns", returns_json(res.d_second_returns)},
         {"psi_radius", res.psi.memory()},
         {"psi", psi},
         {"intertwining", Json{{"holds", check.holds}, {"orbits_checked", check.orbits_checked}}}};
  if (!check.holds) {
    j["intertwining"]["witness"] = report::word(x, check.witness->word());
    j["intertwining"]["detail"] = check.detail;
  }
  return {j, std::nullopt, kOk};
}

struct CodeContext {
  EdgeShift x;
  EdgeShift target;
  WordBlockCode code;
};

CodeContext load_code_context(const Options& o) {
  if (o.target.empty()) throw ParseError(0, "--target <graph> is required");
  EdgeShift x = load_shift(o.graph);
  EdgeShift target = load_shift(o.target);
  WordBlockCode code = load_code(x, o.second, target);
  return {std::move(x), std::move(target), std::move(code)};
}

Result code_build_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  Json ratios = Json::object();
  for (const auto& [block, c] : time_change(ctx.code).ratio) ratios[ctx.code.format_block(block)] = report::rational(c);
  Json j{{"valid", true},
         {"window_radius", ctx.code.window_radius()},
         {"blocks", ctx.code.table().size()},
         {"ratios", ratios},
         {"returns", returns_json(ctx.code.returns())}};
  return {j, std::nullopt, kOk};
}

Result code_apply_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  Word cycle = parse_word(ctx.x.graph(), o.orbit);
  PeriodicOrbit x = PeriodicOrbit::from_cycle(ctx.x.graph(), cycle);
  AppliedOrbit a = apply_periodic(ctx.code, x);
  Json j{{"orbit", report::word(ctx.x, x.word())},
         {"image_word", report::word(ctx.target, a.image_word)},
         {"image_orbit", report::word(ctx.target, a.image.word())},
         {"domain_length", a.domain_length},
         {"image_length", a.image_length},
         {"hits", a.hits}};
  return {j, std::nullopt, kOk};
}

Result code_verify_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  CrossSection target_section = load_section(ctx.target, o.target_section);
  SectionCheck c = verify_section_condition(ctx.code, target_section, o.period);
  Json j{{"holds", c.holds}, {"orbits_checked", c.orbits_checked}, {"max_period", o.period}};
  if (!c.holds) {
    j["witness"] = report::word(ctx.x, c.witness->word());
    j["image_word"] = report::word(ctx.target, c.image_word);
    j["position"] = c.position;
    j["detail"] = c.detail;
  }
  return {j, std::nullopt, kOk};
}

Result code_certificate_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  ConjugacyCertificate cert = conjugacy_certificate(ctx.code);
  Json j{{"certified", cert.certified}};
  if (cert.certified) {
    j["potential"] = potential_json(cert.weights.weight.graph, *cert.potential);
  } else {
    j["witness"] = report::word(ctx.x, cert.witness->word());
    j["witness_sum"] = report::rational(cert.witness_sum);
  }
  return {j, std::nullopt, kOk};
}

Result code_openness_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  Universe u;
  if (o.universe == "target") u = Universe::target;
  else if (o.universe == "image") u = Universe::image;
  else throw ParseError(0, "unknown universe '" + o.universe + "' (expected target or image)");
  OpennessReport rep = openness_check(ctx.code, o.k_max, o.open_period, u);
  Json j{{"open", rep.open}, {"members", rep.members}, {"universe_size", rep.universe_size}};
  if (rep.open) j["radius"] = rep.radius;
  Json witnesses = Json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(Json{{"radius", w.radius},
                             {"window", report::word(ctx.target, w.window)},
                             {"member", report::word(ctx.target, w.member)},
                             {"member_orbit", orbit_word(ctx.target, w.member)},
                             {"non_member", report::word(ctx.target, w.non_member)},
                             {"non_member_orbit", orbit_word(ctx.target, w.non_member)}});
  if (!rep.open) j["witnesses"] = witnesses;
  return {j, std::nullopt, kOk};
}

Result code_isotopy_cmd(const Options& o) {
  CodeContext ctx = load_code_context(o);
  CrossSection target_section = load_section(ctx.target, o.target_section);
  LocalFunction beta = from_file(o.beta, [&](const std::string& t) { return io::parse_local_function(ctx.x, t); });
  IsotopyCheck c = verify_isotopy_certificate(beta, ctx.code, target_section);
  Json j{{"valid", c.valid}, {"blocks_checked", c.blocks_checked}};
  if (!c.valid) {
    j["return_block"] = ctx.code.format_block(c.return_block);
    j["window"] = report::word(ctx.x, c.window);
    j["next_window"] = report::word(ctx.x, c.next_window);
    j["lhs"] = report::rational(c.lhs);
    j["rhs"] = report::rational(c.rhs);
  }
  return {j, std::nullopt, kOk};
}

Result livsic_check_cmd(const Options& o) {
  DirectedGraph g = from_file(o.graph, [](const std::string& t) { return io::parse_graph(t); });
  EdgePotential f = from_file(o.second, [&](const std::string& t) { return io::parse_potential(g, t); });
  CycleCheck c = zero_on_cycles(f);
  Json j{{"zero_on_cycles", c.zero}};
  if (!c.zero) {
    j["witness"] = format_word(g, c.witness->cycle);
    j["sum"] = report::rational(c.witness->sum);
  }
  return {j, std::nullopt, kOk};
}

Result livsic_solve_cmd(const Options& o) {
  DirectedGraph g = from_file(o.graph, [](const std::string& t) { return io::parse_graph(t); });
  EdgePotential f = from_file(o.second, [&](const std::string& t) { return io::parse_potential(g, t); });
  try {
    VertexPotential h = graph_potential(f);
    return {Json{{"solved", true}, {"potential", potential_json(g, h)}}, std::nullopt, kOk};
  } catch (const CycleObstruction& e) {
    return {Json{{"solved", false},
                 {"witness", format_word(g, e.witness().cycle)},
                 {"sum", report::rational(e.witness().sum)}},
            std::nullopt, kOk};
  }
}

Result livsic_coboundary_cmd(const Options& o) {
  EdgeShift x = load_shift(o.graph);
  LocalFunction f = from_file(o.second, [&](const std::string& t) { return io::parse_local_function(x, t); });
  try {
    LocalFunction b = coboundary(x, f);
    std::string text = io::write_local_function(x, b);
    return {Json{{"solved", true}, {"transfer", text}}, std::nullopt, kOk};
  } catch (const CycleObstruction& e) {
    return {Json{{"solved", false},
                 {"witness", report::word(x, e.witness().cycle)},
                 {"sum", report::rational(e.witness().sum)}},
            std::nullopt, kOk};
  }
}

Result example_cmd(const Options& o) {
  examples::Outcome outcome = examples::run(o.label, o.k_max, o.open_period);
  std::ostringstream text;
  for (const auto& c : outcome.checks)
    text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  text << outcome.name << ": " << (outcome.passed() ? "pass" : "fail") << '\n';
  return {outcome.report, text.str(), outcome.passed() ? kOk : kExampleFailed};
}

int report_error(const std::string& kind, const std::string& message, bool json, std::ostream& out,
                 std::ostream& err, int status) {
  err << "error: " << kind << ": " << message << '\n';
  if (json) out << Json{{"error", kind}, {"message", message}}.dump(2) << '\n';
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flow equivalence, cross sections and flow codes of shifts of finite type", "flowcalc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");
  Options o;
  std::function<Result(const Options&)> handler;

  auto bind = [&](CLI::App* sub, Result (*fn)(const Options&)) {
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto* inv = bind(app.add_subcommand("invariants", "Parry-Sullivan number and Bowen-Franks group"), invariants_cmd);
  inv->add_option("matrix", o.graph, "Matrix file")->required();

  auto* dec = bind(app.add_subcommand("decide-fe", "Flow equivalence of two irreducible SFTs"), decide_cmd);
  dec->add_option("first", o.graph, "Matrix file")->required();
  dec->add_option("second", o.second, "Matrix file")->required();

  auto* exp = bind(app.add_subcommand("expand", "Symbol expansion a -> a a'"), expand_cmd);
  exp->add_option("graph", o.graph, "Graph file")->required();
  exp->add_option("label", o.label, "Symbol to expand")->required();
  exp->add_option("-o,--output", o.output, "Write the new graph here");

  auto* spl = bind(app.add_subcommand("split", "Out-split a vertex"), split_cmd);
  spl->add_option("graph", o.graph, "Graph file")->required();
  spl->add_option("vertex", o.label, "Vertex to split")->required();
  spl->add_option("--class", o.classes, "Comma-separated out-edge labels of one class")->required();
  spl->add_option("-o,--output", o.output, "Write the new graph here");

  auto* sec = app.add_subcommand("section", "Discrete cross sections");
  sec->require_subcommand(1);
  auto* sv = bind(sec->add_subcommand("validate", "Decide the cross-section property"), section_validate_cmd);
  sv->add_option("graph", o.graph, "Graph file")->required();
  sv->add_option("section", o.second, "Section file")->required();
  auto* sr = bind(sec->add_subcommand("returns", "Return words and the return graph"), section_returns_cmd);
  sr->add_option("graph", o.graph, "Graph file")->required();
  sr->add_option("section", o.second, "Section file")->required();
  auto* sp = bind(sec->add_subcommand("pullback", "Preimage of a section under a block code"), section_pullback_cmd);
  sp->add_option("graph", o.graph, "Source graph file")->required();
  sp->add_option("code", o.second, "Block code file")->required();
  sp->add_option("target", o.third, "Target graph file")->required();
  sp->add_option("section", o.fourth, "Section file of the target")->required();
  auto* sd = bind(sec->add_subcommand("disjointify", "Move the second section off the first"), section_disjointify_cmd);
  sd->add_option("graph", o.graph, "Graph file")->required();
  sd->add_option("first", o.second, "Section file")->required();
  sd->add_option("second", o.third, "Section file")->required();
  auto* sps = bind(sec->add_subcommand("ps-case1", "Decompose two disjoint sections"), section_ps_cmd);
  sps->add_option("graph", o.graph, "Graph file")->required();
  sps->add_option("first", o.second, "Section file")->required();
  sps->add_option("second", o.third, "Section file")->required();
  sps->add_option("--check-period", o.check_period, "Orbit bound of the intertwining check");

  auto* code = app.add_subcommand("code", "Word block codes on return words");
  code->require_subcommand(1);
  auto code_args = [&](CLI::App* c) {
    c->add_option("graph", o.graph, "Source graph file")->required();
    c->add_option("code", o.second, "Code file")->required();
    c->add_option("--target", o.target, "Target graph file")->required();
    return c;
  };
  code_args(bind(code->add_subcommand("build", "Check a code table"), code_build_cmd));
  code_args(bind(code->add_subcommand("apply", "Image of a periodic orbit"), code_apply_cmd))
      ->add_option("--orbit", o.orbit, "One period, space-separated labels")
      ->required();
  auto* cv = code_args(bind(code->add_subcommand("verify", "Bounded check of the section condition"), code_verify_cmd));
  cv->add_option("--target-section", o.target_section, "Section file of the target")->required();
  cv->add_option("--period", o.period, "Largest period checked");
  code_args(bind(code->add_subcommand("certificate", "Circle-length conjugacy certificate"), code_certificate_cmd));
  auto* co = code_args(bind(code->add_subcommand("openness", "Bounded openness test of the image"), code_openness_cmd));
  co->add_option("--kmax", o.k_max, "Largest window radius");
  co->add_option("--period", o.open_period, "Largest period of the point universe");
  co->add_option("--universe", o.universe, "target or image");
  auto* ci = code_args(bind(code->add_subcommand("isotopy", "Check a locally constant isotopy certificate"), code_isotopy_cmd));
  ci->add_option("--beta", o.beta, "Local function file")->required();
  ci->add_option("--target-section", o.target_section, "Section file of the target")->required();

  auto* liv = app.add_subcommand("livsic", "Graph potentials and coboundaries");
  liv->require_subcommand(1);
  auto* lc = bind(liv->add_subcommand("check", "Do all cycle sums vanish"), livsic_check_cmd);
  lc->add_option("graph", o.graph, "Graph file")->required();
  lc->add_option("potential", o.second, "Edge potential file")->required();
  auto* ls = bind(liv->add_subcommand("solve", "Vertex potential of an edge weight"), livsic_solve_cmd);
  ls->add_option("graph", o.graph, "Graph file")->required();
  ls->add_option("potential", o.second, "Edge potential file")->required();
  auto* lb = bind(liv->add_subcommand("coboundary", "Transfer function of a local function"), livsic_coboundary_cmd);
  lb->add_option("graph", o.graph, "Graph file")->required();
  lb->add_option("function", o.second, "Local function file")->required();

  auto* ex = bind(app.add_subcommand("example", "Run a canned pipeline"), example_cmd);
  ex->add_option("name", o.label, "Example name")->required()->check(CLI::IsMember(examples::names()));
  ex->add_option("--kmax", o.k_max, "Largest window radius (not-open)");
  ex->add_option("--period", o.open_period, "Largest period (not-open)");

  auto first = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (first != args.end() && !app.get_subcommand_no_throw(*first)) {
    const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
    return report_error("UsageError", "unknown subcommand '" + *first + "'", wants_json, out, err, kMalformed);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), json, out, err, kMalformed);
  }

  try {
    Result r = handler(o);
    if (json) out << r.report.dump(2) << '\n';
    else out << (r.text ? *r.text : report::render_text(r.report));
    return r.status;
  } catch (const NotIrreducible& e) {
    return report_error(e.kind(), e.what(), json, out, err, kRefused);
  } catch (const TrivialSFT& e) {
    return report_error(e.kind(), e.what(), json, out, err, kRefused);
  } catch (const Error& e) {
    return report_error(e.kind(), e.what(), json, out, err, kMalformed);
  } catch (const std::exception& e) {
    return report_error("Error", e.what(), json, out, err, kMalformed);
  }
}

}  // namespace flowcalc::cli
