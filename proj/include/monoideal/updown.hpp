#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monoideal/poset.hpp"

namespace monoideal {

/// U(A) = { x : x >= a for some a in A }, stored by its minimal generators.
class UpSet {
 public:
  explicit UpSet(std::span<const LatticePoint> generators);
  explicit UpSet(const Antichain& generators);

  const Antichain& generators() const noexcept { return generators_; }
  std::size_t dimension() const noexcept { return generators_.dimension(); }
  bool contains(const LatticePoint& x) const;

 private:
  Antichain generators_;
};

/// D(A) = { x : x <= a for some a in A }, stored by its maximal generators.
class DownSet {
 public:
  explicit DownSet(std::span<const LatticePoint> generators);
  explicit DownSet(const Antichain& generators);

  const Antichain& generators() const noexcept { return generators_; }
  std::size_t dimension() const noexcept { return generators_.dimension(); }
  bool contains(const LatticePoint& x) const;

 private:
  Antichain generators_;
};

/// A socle (or generator) point together with the generator that pins
/// down each of its coordinates. `sources[j]` indexes into the
/// generating antichain of the set it was computed from.
struct CornerSelection {
  LatticePoint point;
  std::vector<std::size_t> sources;

  friend bool operator==(const CornerSelection&, const CornerSelection&) = default;
};

enum class CornerSearch {
  /// Coordinate-by-coordinate search that drops a partial corner as soon as
  /// some fixed axis has no generator left that could witness it.
  pruned,
  /// Every assignment of a generator to each axis, filtered afterwards.
  /// Exponential in d; intended for cross-checking.
  exhaustive,
};

/// True when, writing f for the componentwise minimum of the generators,
/// every axis j has a generator equal to f off axis j. This is the
/// structural form of "the complement of U above f is finite".
bool is_cofinite(const UpSet& up);
/// Dual of is_cofinite with the componentwise maximum.
bool is_corner_bounded(const DownSet& down);

/// S_d(U): the maximal points outside U, i.e. all r with r not in U and
/// r + e_j in U for every j. Throws NotCofinite unless is_cofinite(U).
Antichain socle_down(const UpSet& up, CornerSearch search = CornerSearch::pruned);
/// S_u(D): the minimal points outside D, i.e. all r with r not in D and
/// r - e_j in D for every j. Throws NotCofinite unless is_corner_bounded(D).
Antichain socle_up(const DownSet& down, CornerSearch search = CornerSearch::pruned);

/// socle_down / socle_up with one source generator per axis. The sources
/// of a corner are pairwise distinct; results are in lexicographic order
/// of `point`.
std::vector<CornerSelection> socle_down_with_witnesses(const UpSet& up);
std::vector<CornerSelection> socle_up_with_witnesses(const DownSet& down);

}  // namespace monoideal
