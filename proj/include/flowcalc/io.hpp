#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "flowcalc/block_code.hpp"
#include "flowcalc/cross_section.hpp"
#include "flowcalc/graph.hpp"
#include "flowcalc/livsic.hpp"
#include "flowcalc/matrix.hpp"
#include "flowcalc/shift.hpp"

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
// Every parser throws ParseError with the offending line.
namespace flowcalc::io {

/// `vertex <id>` and `edge <id> <source> <target> <label>` records.
DirectedGraph parse_graph(std::string_view text);
std::string write_graph(const DirectedGraph& g);

/// One row per line of space-separated integers.
IntMatrix parse_matrix(std::string_view text);
std::string write_matrix(const IntMatrix& a);

/// `radius <r>`, `height <p>/<q>`, then one center word per line.
CrossSection parse_section(const EdgeShift& x, std::string_view text);
std::string write_section(const CrossSection& c);

/// `edge <id> <p>/<q>` per edge.
EdgePotential parse_potential(const DirectedGraph& g, std::string_view text);
std::string write_potential(const EdgePotential& f);

/// `radius <r>`, then `<window> -> <p>/<q>` with windows of 2r+1 labels.
LocalFunction parse_local_function(const EdgeShift& x, std::string_view text);
std::string write_local_function(const EdgeShift& x, const LocalFunction& f);

/// `radius <r>`, then `<window> -> <label>`: a block code with memory and anticipation r.
BlockCode parse_block_code(const EdgeShift& source, const EdgeShift& target, std::string_view text);
std::string write_block_code(const BlockCode& phi);

/// Header of a word-code file: `section <file> M <int>`.
struct CodeHeader {
  std::string section_file;
  std::size_t window_radius = 0;
};
CodeHeader parse_code_header(std::string_view text);
/// Remaining lines: `<return labels> -> <target labels>`.
std::map<Word, Word> parse_code_table(const EdgeShift& returns, const EdgeShift& target,
                                      std::string_view text);
std::string write_code(const std::string& section_file, std::size_t window_radius,
                       const EdgeShift& returns, const EdgeShift& target,
                       const std::map<Word, Word>& table);

/// Whole file contents; throws ParseError (line 0) when unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace flowcalc::io
