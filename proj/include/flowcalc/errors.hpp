#pragma once

#include <stdexcept>
#include <string>

namespace flowcalc {

/// Base of every error raised by the library. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FLOWCALC_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

FLOWCALC_DEFINE_ERROR(InvalidGraph)
FLOWCALC_DEFINE_ERROR(NotEssential)
FLOWCALC_DEFINE_ERROR(EmptyShift)
FLOWCALC_DEFINE_ERROR(NotIrreducible)
FLOWCALC_DEFINE_ERROR(TrivialSFT)
FLOWCALC_DEFINE_ERROR(UnknownSymbol)
FLOWCALC_DEFINE_ERROR(BadPartition)
FLOWCALC_DEFINE_ERROR(InvalidWord)
FLOWCALC_DEFINE_ERROR(InvalidSection)
FLOWCALC_DEFINE_ERROR(NotDisjoint)
FLOWCALC_DEFINE_ERROR(PartialCode)
FLOWCALC_DEFINE_ERROR(MissingBlock)
FLOWCALC_DEFINE_ERROR(NonComposableImage)
FLOWCALC_DEFINE_ERROR(EmptyImageWord)
FLOWCALC_DEFINE_ERROR(OrbitMissesSection)
FLOWCALC_DEFINE_ERROR(NotIntertwining)
FLOWCALC_DEFINE_ERROR(ResolutionMismatch)

#undef FLOWCALC_DEFINE_ERROR

/// Malformed input text; carries the 1-based line number (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("ParseError", line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace flowcalc
