#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "monoideal/lattice_point.hpp"

namespace monoideal {

using PointSet = std::vector<LatticePoint>;

/// A finite set of pairwise incomparable points of Z^d, kept in
/// lexicographic order so that set equality is plain `==`.
class Antichain {
 public:
  using const_iterator = PointSet::const_iterator;

  /// The empty antichain of the given dimension.
  explicit Antichain(std::size_t dimension = 0) : dimension_(dimension) {}

  /// Validates dimensions and incomparability; duplicate points collapse.
  /// Throws DimensionMismatch or NotAnAntichain.
  static Antichain from_points(PointSet points);
  static Antichain from_points(PointSet points, std::size_t dimension);

  /// For results already known to be incomparable. Sorts and deduplicates
  /// but does not re-check incomparability.
  static Antichain trusted(PointSet points, std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  const_iterator begin() const noexcept { return points_.begin(); }
  const_iterator end() const noexcept { return points_.end(); }
  std::span<const LatticePoint> points() const noexcept { return points_; }
  bool contains(const LatticePoint& p) const;

  friend bool operator==(const Antichain& a, const Antichain& b) {
    return a.points_ == b.points_ && (a.dimension_ == b.dimension_ || a.points_.empty());
  }

 private:
  std::size_t dimension_ = 0;
  PointSet points_;
};

/// "{(2,2,3),(3,3,2)}"
std::string to_string(const Antichain& a);
std::ostream& operator<<(std::ostream& os, const Antichain& a);

/// Common dimension of a point set; 0 for the empty set. Throws
/// DimensionMismatch when the points disagree.
std::size_t common_dimension(std::span<const LatticePoint> points);

bool is_antichain(std::span<const LatticePoint> points);

/// Points of `points` with nothing strictly below them in `points`.
Antichain minimal_elements(std::span<const LatticePoint> points);
/// Points of `points` with nothing strictly above them in `points`.
Antichain maximal_elements(std::span<const LatticePoint> points);

/// x -> x + shift (order automorphism of Z^d).
PointSet translate(std::span<const LatticePoint> points, const LatticePoint& shift);
Antichain translate(const Antichain& a, const LatticePoint& shift);

/// x -> center - x (order anti-automorphism, an involution).
PointSet rotate(std::span<const LatticePoint> points, const LatticePoint& center);
Antichain rotate(const Antichain& a, const LatticePoint& center);

}  // namespace monoideal
