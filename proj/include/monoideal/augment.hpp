#pragma once

#include <optional>

#include "monoideal/poset.hpp"

namespace monoideal {

/// Per-coordinate bounds of a nonempty antichain:
/// lower_j = min_i p_ij - 1 and upper_j = max_i p_ij + 1.
struct BoundsPair {
  LatticePoint lower;
  LatticePoint upper;

  friend bool operator==(const BoundsPair&, const BoundsPair&) = default;
};

/// Throws PreconditionError on an empty antichain.
BoundsPair bounds(const Antichain& points);

/// The d points that take `upper` in one coordinate and `lower` in all
/// others: {(b1,a2,..,ad), .., (a1,..,a_{d-1},bd)}. Requires lower < upper
/// in every coordinate.
Antichain upper_corners(const LatticePoint& lower, const LatticePoint& upper);

/// The d points that take `lower` in one coordinate and `upper` in all
/// others: {(a1,b2,..,bd), .., (b1,..,b_{d-1},ad)}. Requires lower < upper.
Antichain lower_corners(const LatticePoint& lower, const LatticePoint& upper);

/// G together with upper_corners(lower, upper). `lower` defaults to
/// bounds(G).lower and must be <= it; `upper` defaults to bounds(G).upper
/// and must be >= it. The result generates a cofinite upset.
///
/// For d >= 2 the result has |G| + d points. In dimension one the corner
/// lies above G and the minimal generators are G itself.
Antichain augment_up(const Antichain& generators, std::optional<LatticePoint> lower = std::nullopt,
                     std::optional<LatticePoint> upper = std::nullopt);

/// Q together with lower_corners(lower, upper); same defaults and checks as
/// augment_up. The result generates a downset whose complement has
/// finitely many minimal points.
Antichain augment_down(const Antichain& socle, std::optional<LatticePoint> lower = std::nullopt,
                       std::optional<LatticePoint> upper = std::nullopt);

}  // namespace monoideal
