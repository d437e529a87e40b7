#ifndef RELDP_PARSE_HPP
#define RELDP_PARSE_HPP

#include "reldp/rel_dpp.hpp"

namespace reldp {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t col, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

/// A TRS file: `(VAR x y)(RULES l -> r  l ->= r)`. `->` rules are strict,
/// `->=` rules weak. Identifiers not declared in VAR are function symbols.
struct ParsedTrs {
  Trs strict;
  Trs weak;
};

ParsedTrs parse_trs(const std::string& text);

/// A relative DPP file with sections (VAR ...), (STRICT-PAIRS ...),
/// (WEAK-PAIRS ...), (STRICT-RULES ...), (WEAK-RULES ...). Missing sections
/// are empty; symbols ending in `#` are marked.
RelativeDpp parse_rdp(const std::string& text);

std::string print_trs(const ParsedTrs& t);
std::string print_rdp(const RelativeDpp& d);

}  // namespace reldp

#endif  // RELDP_PARSE_HPP
