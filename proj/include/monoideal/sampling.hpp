#pragma once

#include <cstddef>
#include <random>
#include <utility>

#include "monoideal/augment.hpp"
#include "monoideal/poset.hpp"

namespace monoideal::sampling {

using Rng = std::mt19937_64;

LatticePoint random_point(Rng& rng, std::size_t dimension, LatticePoint::value_type lo,
                          LatticePoint::value_type hi);

/// Draws up to `max_points` points in [lo, hi]^d, keeping each one that is
/// incomparable to those kept so far. Always returns at least one point.
Antichain random_antichain(Rng& rng, std::size_t dimension, std::size_t max_points,
                           LatticePoint::value_type lo, LatticePoint::value_type hi);

/// Corner bounds with lower <= bounds(points).lower and
/// upper >= bounds(points).upper, each pushed out by up to `slack`.
BoundsPair random_corners(Rng& rng, const Antichain& points, LatticePoint::value_type slack = 2);

/// Two incomparable points in [0, hi]^d (d >= 2, hi >= 1).
std::pair<LatticePoint, LatticePoint> random_incomparable_pair(Rng& rng, std::size_t dimension,
                                                               LatticePoint::value_type hi);

/// An order-generic antichain of k points in [0, hi]^d: one column per
/// strict ordering with distinct values, the remaining d - k! columns
/// random, then the columns shuffled. Needs d >= k! and hi >= k - 1.
Antichain random_order_generic(Rng& rng, std::size_t k, std::size_t dimension,
                               LatticePoint::value_type hi);

}  // namespace monoideal::sampling
