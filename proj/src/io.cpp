#include "flowcalc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "flowcalc/errors.hpp"

namespace flowcalc::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{n, {}};
    for (std::string t; words >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_size(const Line& line, const std::string& token) {
  try {
    Integer z = parse_integer(token);
    if (z < 0 || !z.fits_ulong_p()) throw std::invalid_argument("");
    return z.get_ui();
  } catch (const std::invalid_argument&) {
    throw ParseError(line.number, "expected a nonnegative integer, got '" + token + "'");
  }
}

Rational to_rational(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

Word to_word(const Line& line, const DirectedGraph& g, std::vector<std::string>::const_iterator first,
             std::vector<std::string>::const_iterator last) {
  Word w;
  for (auto it = first; it != last; ++it) {
    auto e = g.find_label(*it);
    if (!e) throw ParseError(line.number, "unknown symbol '" + *it + "'");
    w.push_back(*e);
  }
  if (!is_composable(g, w)) throw ParseError(line.number, "word is not a path of the graph");
  return w;
}

// Splits `<lhs tokens> -> <rhs tokens>`.
std::size_t arrow(const Line& line) {
  for (std::size_t i = 0; i < line.tokens.size(); ++i)
    if (line.tokens[i] == "->") return i;
  throw ParseError(line.number, "expected '<lhs> -> <rhs>'");
}

std::string join(const DirectedGraph& g, const Word& w) { return format_word(g, w); }

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::set<std::string> declared;
  std::size_t last_line = 0;
  try {
    for (const Line& line : lines_of(text)) {
      last_line = line.number;
      const auto& t = line.tokens;
      if (t[0] == "vertex" && t.size() == 2) {
        if (!declared.insert(t[1]).second) throw ParseError(line.number, "vertex '" + t[1] + "' declared twice");
        builder.vertex(t[1]);
      } else if (t[0] == "edge" && t.size() == 5) {
        for (const auto& v : {t[2], t[3]})
          if (!declared.contains(v)) throw ParseError(line.number, "undeclared vertex '" + v + "'");
        builder.edge(t[1], t[4], t[2], t[3]);
      } else {
        throw ParseError(line.number, "expected 'vertex <id>' or 'edge <id> <source> <target> <label>'");
      }
    }
    return builder.build();
  } catch (const InvalidGraph& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string write_graph(const DirectedGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << e.id << ' ' << g.vertices()[e.source] << ' ' << g.vertices()[e.target] << ' ' << e.label << '\n';
  return out.str();
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  for (const Line& line : lines_of(text)) {
    std::vector<Integer> row;
    for (const auto& token : line.tokens) {
      try {
        row.push_back(parse_integer(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(line.number, "row length differs from the first row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "empty matrix");
  if (rows.size() != rows.front().size()) throw ParseError(0, "matrix is not square");
  return IntMatrix(rows);
}

std::string write_matrix(const IntMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? " " : "") << a(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

CrossSection parse_section(const EdgeShift& x, std::string_view text) {
  std::size_t radius = 0;
  Rational height = 0;
  std::set<Word> centers;
  bool seen_center = false;
  for (const Line& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t[0] == "radius" || t[0] == "height") {
      if (seen_center) throw ParseError(line.number, "'" + t[0] + "' must precede the center words");
      if (t.size() != 2) throw ParseError(line.number, "expected '" + t[0] + " <value>'");
      if (t[0] == "radius") radius = to_size(line, t[1]);
      else height = to_rational(line, t[1]);
      continue;
    }
    seen_center = true;
    Word w = to_word(line, x.graph(), t.begin(), t.end());
    if (w.size() != 2 * radius + 1)
      throw ParseError(line.number, "center word must have " + std::to_string(2 * radius + 1) + " symbols");
    centers.insert(std::move(w));
  }
  try {
    return CrossSection(x, radius, std::move(centers), height);
  } catch (const InvalidSection& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_section(const CrossSection& c) {
  std::ostringstream out;
  out << "radius " << c.radius() << '\n' << "height " << to_string(c.height()) << '\n';
  for (const Word& w : c.centers()) out << join(c.shift().graph(), w) << '\n';
  return out.str();
}

EdgePotential parse_potential(const DirectedGraph& g, std::string_view text) {
  std::vector<std::optional<Rational>> weights(g.edge_count());
  for (const Line& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t[0] != "edge" || t.size() != 3) throw ParseError(line.number, "expected 'edge <id> <p>/<q>'");
    auto e = g.find_edge_id(t[1]);
    if (!e) throw ParseError(line.number, "unknown edge '" + t[1] + "'");
    if (weights[*e]) throw ParseError(line.number, "edge '" + t[1] + "' given twice");
    weights[*e] = to_rational(line, t[2]);
  }
  EdgePotential f{g, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!weights[e]) throw ParseError(0, "no weight for edge '" + g.edges()[e].id + "'");
    f.weights.push_back(*weights[e]);
  }
  return f;
}

std::string write_potential(const EdgePotential& f) {
  std::ostringstream out;
  for (EdgeId e = 0; e < f.graph.edge_count(); ++e)
    out << "edge " << f.graph.edges()[e].id << ' ' << to_string(f.weights[e]) << '\n';
  return out.str();
}

LocalFunction parse_local_function(const EdgeShift& x, std::string_view text) {
  LocalFunction f;
  bool seen_entry = false;
  for (const Line& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t[0] == "radius") {
      if (seen_entry || t.size() != 2) throw ParseError(line.number, "expected 'radius <r>' before the table");
      f.radius = to_size(line, t[1]);
      continue;
    }
    seen_entry = true;
    std::size_t a = arrow(line);
    if (a + 2 != t.size()) throw ParseError(line.number, "expected one value after '->'");
    Word w = to_word(line, x.graph(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(a));
    if (w.size() != 2 * f.radius + 1)
      throw ParseError(line.number, "window must have " + std::to_string(2 * f.radius + 1) + " symbols");
    if (!f.table.emplace(std::move(w), to_rational(line, t[a + 1])).second)
      throw ParseError(line.number, "window given twice");
  }
  return f;
}

std::string write_local_function(const EdgeShift& x, const LocalFunction& f) {
  std::ostringstream out;
  out << "radius " << f.radius << '\n';
  for (const auto& [w, v] : f.table) out << join(x.graph(), w) << " -> " << to_string(v) << '\n';
  return out.str();
}

BlockCode parse_block_code(const EdgeShift& source, const EdgeShift& target, std::string_view text) {
  std::size_t radius = 0;
  std::map<Word, EdgeId> table;
  bool seen_entry = false;
  for (const Line& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t[0] == "radius") {
      if (seen_entry || t.size() != 2) throw ParseError(line.number, "expected 'radius <r>' before the table");
      radius = to_size(line, t[1]);
      continue;
    }
    seen_entry = true;
    std::size_t a = arrow(line);
    if (a + 2 != t.size()) throw ParseError(line.number, "expected one symbol after '->'");
    Word w = to_word(line, source.graph(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(a));
    if (w.size() != 2 * radius + 1)
      throw ParseError(line.number, "window must have " + std::to_string(2 * radius + 1) + " symbols");
    auto image = target.graph().find_label(t[a + 1]);
    if (!image) throw ParseError(line.number, "unknown target symbol '" + t[a + 1] + "'");
    if (!table.emplace(std::move(w), *image).second) throw ParseError(line.number, "window given twice");
  }
  return BlockCode(source, target, radius, radius, std::move(table));
}

std::string write_block_code(const BlockCode& phi) {
  if (phi.memory() != phi.anticipation())
    throw std::invalid_argument("only symmetric block codes have a file form");
  std::ostringstream out;
  out << "radius " << phi.memory() << '\n';
  for (const auto& [w, e] : phi.table())
    out << join(phi.source().graph(), w) << " -> " << phi.target().symbol(e) << '\n';
  return out.str();
}

CodeHeader parse_code_header(std::string_view text) {
  for (const Line& line : lines_of(text)) {
    const auto& t = line.tokens;
    if (t.size() != 4 || t[0] != "section" || t[2] != "M")
      throw ParseError(line.number, "expected header 'section <file> M <int>'");
    return CodeHeader{t[1], to_size(line, t[3])};
  }
  throw ParseError(0, "missing header 'section <file> M <int>'");
}

std::map<Word, Word> parse_code_table(const EdgeShift& returns, const EdgeShift& target,
                                      std::string_view text) {
  std::map<Word, Word> table;
  bool header = true;
  for (const Line& line : lines_of(text)) {
    if (header) {
      header = false;
      continue;
    }
    const auto& t = line.tokens;
    std::size_t a = arrow(line);
    Word block = to_word(line, returns.graph(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(a));
    Word image;
    for (std::size_t i = a + 1; i < t.size(); ++i) {
      auto e = target.graph().find_label(t[i]);
      if (!e) throw ParseError(line.number, "unknown target symbol '" + t[i] + "'");
      image.push_back(*e);
    }
    if (!table.emplace(std::move(block), std::move(image)).second)
      throw ParseError(line.number, "block given twice");
  }
  return table;
}

std::string write_code(const std::string& section_file, std::size_t window_radius,
                       const EdgeShift& returns, const EdgeShift& target,
                       const std::map<Word, Word>& table) {
  std::ostringstream out;
  out << "section " << section_file << " M " << window_radius << '\n';
  for (const auto& [block, image] : table)
    out << join(returns.graph(), block) << " -> " << join(target.graph(), image) << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace flowcalc::io
