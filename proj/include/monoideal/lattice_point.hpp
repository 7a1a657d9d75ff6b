#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace monoideal {

/// An exponent vector in Z^d.
///
/// The built-in comparison operators give the lexicographic order, which is
/// only used as a canonical storage order. The dominance order lives in
/// `leq` and friends.
class LatticePoint {
 public:
  using value_type = std::int64_t;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<value_type> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<value_type> coords) : coords_(coords) {}

  static LatticePoint filled(std::size_t dimension, value_type value) {
    return LatticePoint(std::vector<value_type>(dimension, value));
  }
  static LatticePoint zero(std::size_t dimension) { return filled(dimension, 0); }
  /// value * e_axis
  static LatticePoint axis(std::size_t dimension, std::size_t axis, value_type value = 1);

  std::size_t dimension() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  std::span<const value_type> coords() const noexcept { return coords_; }

  /// Copy with coordinate `i` replaced by `value`.
  LatticePoint with(std::size_t i, value_type value) const;

  /// Checked componentwise arithmetic; throws OverflowError / DimensionMismatch.
  LatticePoint operator+(const LatticePoint& other) const;
  LatticePoint operator-(const LatticePoint& other) const;
  LatticePoint operator-() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<value_type> coords_;
};

/// Dominance order: a <= b iff a_i <= b_i for every i.
bool leq(const LatticePoint& a, const LatticePoint& b);
/// a <= b and a != b.
bool strictly_less(const LatticePoint& a, const LatticePoint& b);
bool comparable(const LatticePoint& a, const LatticePoint& b);

void require_same_dimension(const LatticePoint& a, const LatticePoint& b);

LatticePoint::value_type checked_add(LatticePoint::value_type a, LatticePoint::value_type b);
LatticePoint::value_type checked_sub(LatticePoint::value_type a, LatticePoint::value_type b);

/// "(2,2,3)"
std::string to_string(const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

}  // namespace monoideal
