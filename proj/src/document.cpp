#include "monoideal/document.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace monoideal {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

LatticePoint::value_type parse_integer(std::string_view token, std::size_t line) {
  const auto t = trim(token);
  LatticePoint::value_type value{};
  const auto* begin = t.data();
  const auto* end = t.data() + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(line, "'" + t + "' is not an integer");
  }
  return value;
}

LatticePoint parse_row(std::string_view row, std::size_t line) {
  std::vector<LatticePoint::value_type> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = row.find(',', start);
    coords.push_back(parse_integer(row.substr(start, comma - start), line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LatticePoint(std::move(coords));
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

AntichainDocument parse_document(std::istream& in) {
  AntichainDocument doc;
  bool have_dimension = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;

    if (text.rfind("d=", 0) == 0) {
      if (have_dimension) throw ParseError(line, "duplicate d= line");
      const auto d = parse_integer(std::string_view(text).substr(2), line);
      if (d < 1) throw ParseError(line, "dimension must be at least 1");
      doc.dimension = static_cast<std::size_t>(d);
      have_dimension = true;
      continue;
    }
    if (!have_dimension) throw ParseError(line, "expected 'd=<int>' before anything else");
    if (text.rfind("role=", 0) == 0) {
      if (doc.role) throw ParseError(line, "duplicate role= line");
      if (!doc.points.empty()) throw ParseError(line, "role= must come before the points");
      doc.role = trim(std::string_view(text).substr(5));
      continue;
    }
    auto p = parse_row(text, line);
    if (p.dimension() != doc.dimension) {
      throw ParseError(line, "row " + to_string(p) + " has " + std::to_string(p.dimension()) +
                                 " entries, expected " + std::to_string(doc.dimension));
    }
    doc.points.push_back(std::move(p));
  }
  if (!have_dimension) throw ParseError(line, "missing 'd=<int>' line");
  return doc;
}

AntichainDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

std::string serialize(const AntichainDocument& doc) {
  std::string out = "d=" + std::to_string(doc.dimension) + "\n";
  if (doc.role) out += "role=" + *doc.role + "\n";
  for (const auto& p : doc.points) {
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const Antichain& points, const std::string& role) {
  AntichainDocument doc;
  doc.dimension = points.dimension();
  doc.role = role;
  doc.points.assign(points.begin(), points.end());
  return serialize(doc);
}

LatticePoint parse_vector(const std::string& text) { return parse_row(text, 0); }

Antichain to_antichain(const AntichainDocument& doc) {
  return Antichain::from_points(doc.points, doc.dimension);
}

}  // namespace monoideal
