#include "flowcalc/report.hpp"

#include <sstream>

namespace flowcalc::report {

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json rational(const Rational& q) { return Json(q.get_str()); }

Json word(const EdgeShift& x, const Word& w) { return Json(format_word(x.graph(), w)); }

Json invariants(const FlowInvariants& inv) {
  Json factors = Json::array();
  for (const auto& d : inv.bf_factors) factors.push_back(integer(d));
  return Json{{"ps", integer(inv.ps_number)},
              {"bf", inv.bf_group()},
              {"bf_factors", factors},
              {"free_rank", inv.free_rank}};
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool has_spaces(const Json& j) {
  for (const auto& e : j)
    if (e.is_string() && e.get<std::string>().find(' ') != std::string::npos) return true;
  return false;
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      out << indent << key << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << indent << "  " << line << '\n';
    } else if (flat(v) && v.is_array() && has_spaces(v)) {
      out << indent << key << ":\n";
      for (const auto& e : v) out << indent << "  - " << scalar(e) << '\n';
    } else if (flat(v) && v.is_array()) {
      out << indent << key << ":";
      for (const auto& e : v) out << ' ' << scalar(e);
      out << '\n';
    } else if (flat(v)) {
      out << indent << key << ": " << scalar(v) << '\n';
    } else {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.is_structured()) render(j, "", out);
  else out << scalar(j) << '\n';
  return out.str();
}

}  // namespace flowcalc::report
