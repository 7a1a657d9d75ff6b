#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monoideal/poset.hpp"

namespace monoideal {

/// A weak ordering of point indices {0, .., k-1}: blocks of tied indices
/// listed from smallest value to largest, each block sorted.
struct WeakOrdering {
  std::vector<std::vector<std::size_t>> blocks;

  /// All blocks are singletons.
  bool is_strict() const;
  friend auto operator<=>(const WeakOrdering&, const WeakOrdering&) = default;
  friend bool operator==(const WeakOrdering&, const WeakOrdering&) = default;
};

/// 1-based, e.g. "{1,3}<{2}".
std::string to_string(const WeakOrdering& w);

/// The weak ordering of the values, block indices are positions in `values`.
WeakOrdering weak_ordering_of(const std::vector<LatticePoint::value_type>& values);

/// For each coordinate i of the k points of an antichain, the weak
/// ordering of (p_1i, .., p_ki). Point indices follow the antichain's
/// canonical (lexicographic) order.
class CoordinateClassification {
 public:
  CoordinateClassification(std::size_t point_count, std::vector<WeakOrdering> per_coordinate);

  std::size_t point_count() const noexcept { return point_count_; }
  std::size_t dimension() const noexcept { return per_coordinate_.size(); }
  const WeakOrdering& at(std::size_t coordinate) const { return per_coordinate_.at(coordinate); }

  /// A_w: the coordinates whose ordering is w (empty when absent).
  std::vector<std::size_t> coordinates_of(const WeakOrdering& w) const;
  /// All nonempty classes.
  const std::map<WeakOrdering, std::vector<std::size_t>>& classes() const noexcept {
    return classes_;
  }

 private:
  std::size_t point_count_;
  std::vector<WeakOrdering> per_coordinate_;
  std::map<WeakOrdering, std::vector<std::size_t>> classes_;
};

CoordinateClassification classify_coordinates(const Antichain& points);

/// Every one of the k! strict orderings of the points occurs on some
/// coordinate. Needs d >= k!.
bool is_order_generic(const Antichain& points);

/// Stirling number of the second kind S(n, k). Throws OverflowError.
std::uint64_t stirling2(unsigned n, unsigned k);
/// Number of weak orderings of a k-set: sum_i S(k, i) * i!. Throws
/// OverflowError past 2^64.
std::uint64_t ordered_bell(unsigned k);

/// B_a(C): coordinates where point a is strictly below every other point
/// of C. Requires a in C; indices are 0-based positions in `points`.
std::vector<std::size_t> strict_min_coordinates(std::size_t a, const std::vector<std::size_t>& subset,
                                                const Antichain& points);

struct PcResult {
  PointSet points;
  /// Whether the antichain the sets were built from is order-generic.
  bool order_generic = false;
};

/// P_C: sums (p_{t,i_t} + 1) e_{i_t} over t in C, for tuples with
/// i_t in B_t(C) that do not also lie in B_t(C + {b}) for all t, for
/// any b outside C. Tuples with repeated coordinates are skipped.
PcResult subset_generators(const std::vector<std::size_t>& subset, const Antichain& points);

/// Union of P_C over all nonempty C. For an order-generic antichain in
/// N_0^d this is zero_dim_ideal_from_socle(points).
PcResult union_of_subset_generators(const Antichain& points);

/// The thirteen coordinate classes of a three-point antichain and the
/// unions built from them. Point indices u, v, w are 0, 1, 2.
class TripleClasses {
 public:
  explicit TripleClasses(const Antichain& points);

  std::size_t dimension() const noexcept { return dimension_; }
  /// All 13 weak orderings of {0,1,2}, each with its (possibly empty) class.
  const std::map<WeakOrdering, std::vector<std::size_t>>& classes() const noexcept {
    return classes_;
  }
  const std::vector<std::size_t>& of(const WeakOrdering& w) const { return classes_.at(w); }

  /// u < v < w
  const std::vector<std::size_t>& chain(std::size_t u, std::size_t v, std::size_t w) const;
  /// u = v < w
  const std::vector<std::size_t>& tied_low(std::size_t u, std::size_t v, std::size_t w) const;
  /// u < v = w
  const std::vector<std::size_t>& tied_high(std::size_t u, std::size_t v, std::size_t w) const;
  const std::vector<std::size_t>& all_tied() const;

  /// u is the sole minimum.
  std::vector<std::size_t> sole_min(std::size_t u) const;
  /// p_u < p_v but u is not the sole minimum (w <= u).
  std::vector<std::size_t> below_not_min(std::size_t u, std::size_t v) const;
  /// u is the sole maximum.
  std::vector<std::size_t> sole_max(std::size_t u) const;
  /// u ties for the maximum with exactly one other point.
  std::vector<std::size_t> shared_max(std::size_t u) const;

 private:
  std::size_t dimension_;
  std::map<WeakOrdering, std::vector<std::size_t>> classes_;
};

/// Generators of the zero-dimensional ideal with an order-generic
/// three-point socle in N_0^d, assembled from the triple classes:
/// three-coordinate points from sole minima, pair points per pair of
/// socle points, and pure powers at (shared) maxima.
/// Throws PreconditionError unless |points| = 3 and order-generic.
Antichain type3_generators(const Antichain& points);

/// Number of type-3 generators from the 13 class sizes of a triple
/// (keyed by weak ordering, missing keys count as zero) by inclusion and
/// exclusion. Throws PreconditionError when the sizes do not sum to d.
std::uint64_t type3_cardinality(const std::map<WeakOrdering, std::size_t>& class_sizes,
                                std::size_t dimension);

/// All 13 weak orderings of {0,1,2}.
std::vector<WeakOrdering> weak_orderings_of_three();

}  // namespace monoideal
