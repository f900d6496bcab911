#include "shiftcode/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok) {
  const std::string t = trim(tok);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw error(errc::parse_error, "bad integer: '" + tok + "'");
  return v;
}

double parse_double(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw error(errc::parse_error, "empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw error(errc::parse_error, "bad number: '" + tok + "'");
  return v;
}

}  // namespace

std::string format_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& line) {
  if (trim(line).empty()) return {};
  std::vector<int> v;
  for (const auto& tok : split(line, ',')) v.push_back(parse_int(tok));
  return v;
}

std::string format_reals(const std::vector<double>& v) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    out += buf;
  }
  return out;
}

std::vector<double> parse_reals(const std::string& line) {
  if (trim(line).empty()) return {};
  std::vector<double> v;
  for (const auto& tok : split(line, ',')) v.push_back(parse_double(tok));
  return v;
}

std::string format_tableau(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += '\n';
    out += format_ints(t.rows[r]);
  }
  return out;
}

std::string format_tableau(const RealTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += '\n';
    out += format_reals(t.rows[r]);
  }
  return out;
}

StandardTableau parse_tableau(const std::string& text) {
  StandardTableau t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    t.rows.push_back(parse_ints(line));
  }
  return t;
}

std::string format_diagram(const YoungDiagram& d) {
  if (d.empty()) return kEmptyDiagramToken;
  return format_ints(d);
}

YoungDiagram parse_diagram(const std::string& text) {
  const std::string t = trim(text);
  if (t == kEmptyDiagramToken || t.empty()) return {};
  return parse_ints(t);
}

std::string format_young_path(const std::vector<YoungDiagram>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ';';
    out += format_diagram(path[i]);
  }
  return out;
}

std::vector<YoungDiagram> parse_young_path(const std::string& line) {
  std::vector<YoungDiagram> path;
  for (const auto& tok : split(line, ';')) path.push_back(parse_diagram(tok));
  return path;
}

}  // namespace shiftcode
