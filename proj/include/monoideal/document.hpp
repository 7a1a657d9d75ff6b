#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "monoideal/error.hpp"
#include "monoideal/poset.hpp"

namespace monoideal {

/// Line-oriented point file:
///
///     # comment
///     d=3
///     role=generators
///     2,2,4
///     2,3,3
///
/// The "d=" line comes first (after comments and blank lines); "role=" is
/// optional and must precede the points. '#' starts a comment anywhere on
/// a line.
struct AntichainDocument {
  std::size_t dimension = 0;
  std::optional<std::string> role;
  PointSet points;
};

/// Malformed document text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

AntichainDocument parse_document(std::istream& in);
AntichainDocument parse_document(const std::string& text);

/// "d=", optional "role=", then one comma-separated row per point in the
/// order given.
std::string serialize(const AntichainDocument& doc);
std::string serialize(const Antichain& points, const std::string& role);

/// Comma-separated integers, e.g. "0,0,1" or "-1,2". Throws ParseError
/// with line 0.
LatticePoint parse_vector(const std::string& text);

/// Validates the rows as an antichain; NotAnAntichain names the rows.
Antichain to_antichain(const AntichainDocument& doc);

}  // namespace monoideal
