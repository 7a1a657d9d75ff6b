#pragma once

#include <cstdint>
#include <functional>

#include "monoideal/poset.hpp"

namespace monoideal::oracle {

/// Inclusive integer box [lower, upper].
class Box {
 public:
  static constexpr std::uint64_t kDefaultVolumeCap = 10'000'000;

  /// Throws PreconditionError when lower is not <= upper or the volume
  /// exceeds `volume_cap`.
  Box(LatticePoint lower, LatticePoint upper, std::uint64_t volume_cap = kDefaultVolumeCap);

  /// [m - 1, M + 1] for the bounds (m, M) of `points`.
  static Box around(const Antichain& points, std::uint64_t volume_cap = kDefaultVolumeCap);

  const LatticePoint& lower() const noexcept { return lower_; }
  const LatticePoint& upper() const noexcept { return upper_; }
  std::uint64_t volume() const noexcept { return volume_; }
  bool contains(const LatticePoint& x) const;

  /// Visits every point, last coordinate fastest.
  void for_each(const std::function<void(const LatticePoint&)>& visit) const;

 private:
  LatticePoint lower_;
  LatticePoint upper_;
  std::uint64_t volume_ = 0;
};

/// Scans the box for points r outside U(generators) with r + e_j inside
/// for all j. Requires every g_j - 1 to lie in the box's j-th range.
Antichain brute_socle_down(const Antichain& generators, const Box& box);
Antichain brute_socle_down(const Antichain& generators);

/// Scans the box for points r outside D(generators) with r - e_j inside
/// for all j. Requires every g_j + 1 to lie in the box's j-th range.
Antichain brute_socle_up(const Antichain& generators, const Box& box);
Antichain brute_socle_up(const Antichain& generators);

/// Calls `emit` with the minimal generators of every proper zero-dimensional
/// monomial ideal whose standard monomials all lie in [0, cap]^d, i.e. every
/// nonempty downset of that box. Generators therefore lie in [0, cap + 1]^d.
/// Requires 1 <= d <= 2 and cap <= 4.
void enumerate_zero_dim_ideals(std::size_t dimension, LatticePoint::value_type cap,
                               const std::function<void(const Antichain&)>& emit);

}  // namespace monoideal::oracle
