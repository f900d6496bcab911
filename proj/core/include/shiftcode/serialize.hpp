#ifndef SHIFTCODE_SERIALIZE_HPP
#define SHIFTCODE_SERIALIZE_HPP

#include <string>
#include <vector>

#include "shiftcode/tableaux.hpp"
#include "shiftcode/types.hpp"

namespace shiftcode {

// Rank codes and words: comma-separated integers, one per line.
std::string format_ints(const std::vector<int>& v);
std::vector<int> parse_ints(const std::string& line);

// Real prefixes: comma-separated decimals, 17 significant digits.
std::string format_reals(const std::vector<double>& v);
std::vector<double> parse_reals(const std::string& line);

// Tableaux: one row per line, entries comma-separated.
std::string format_tableau(const StandardTableau& t);
std::string format_tableau(const RealTableau& t);
StandardTableau parse_tableau(const std::string& text);

// Young-graph paths: semicolon-separated diagrams, each a comma-separated
// row list; the empty diagram is the fixed token below.
inline constexpr const char* kEmptyDiagramToken = "∅";
std::string format_young_path(const std::vector<YoungDiagram>& path);
std::vector<YoungDiagram> parse_young_path(const std::string& line);

std::string format_diagram(const YoungDiagram& d);
YoungDiagram parse_diagram(const std::string& text);

}  // namespace shiftcode

#endif  // SHIFTCODE_SERIALIZE_HPP
