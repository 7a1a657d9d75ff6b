#include "monoideal/augment.hpp"

#include <algorithm>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

void require_strictly_below(const LatticePoint& lower, const LatticePoint& upper) {
  require_same_dimension(lower, upper);
  for (std::size_t i = 0; i < lower.dimension(); ++i) {
    if (lower[i] >= upper[i]) {
      throw PreconditionError("corner bounds need " + to_string(lower) + " < " +
                              to_string(upper) + " in every coordinate");
    }
  }
}

// Resolves the optional corner bounds against the bounds of `points`.
BoundsPair resolve(const Antichain& points, std::optional<LatticePoint> lower,
                   std::optional<LatticePoint> upper) {
  auto box = bounds(points);
  if (lower) {
    require_same_dimension(*lower, box.lower);
    if (!leq(*lower, box.lower)) {
      throw PreconditionError("lower corner " + to_string(*lower) + " must be <= " +
                              to_string(box.lower));
    }
    box.lower = std::move(*lower);
  }
  if (upper) {
    require_same_dimension(*upper, box.upper);
    if (!leq(box.upper, *upper)) {
      throw PreconditionError("upper corner " + to_string(*upper) + " must be >= " +
                              to_string(box.upper));
    }
    box.upper = std::move(*upper);
  }
  return box;
}

}  // namespace

BoundsPair bounds(const Antichain& points) {
  if (points.empty()) throw PreconditionError("bounds of an empty antichain");
  const std::size_t d = points.dimension();
  std::vector<LatticePoint::value_type> lo(points[0].coords().begin(), points[0].coords().end());
  auto hi = lo;
  for (const auto& p : points) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = checked_sub(lo[i], 1);
    hi[i] = checked_add(hi[i], 1);
  }
  return {LatticePoint(std::move(lo)), LatticePoint(std::move(hi))};
}

Antichain upper_corners(const LatticePoint& lower, const LatticePoint& upper) {
  require_strictly_below(lower, upper);
  PointSet out;
  for (std::size_t i = 0; i < lower.dimension(); ++i) out.push_back(lower.with(i, upper[i]));
  return Antichain::trusted(std::move(out), lower.dimension());
}

Antichain lower_corners(const LatticePoint& lower, const LatticePoint& upper) {
  require_strictly_below(lower, upper);
  PointSet out;
  for (std::size_t i = 0; i < lower.dimension(); ++i) out.push_back(upper.with(i, lower[i]));
  return Antichain::trusted(std::move(out), lower.dimension());
}

Antichain augment_up(const Antichain& generators, std::optional<LatticePoint> lower,
                     std::optional<LatticePoint> upper) {
  const auto box = resolve(generators, std::move(lower), std::move(upper));
  PointSet all(generators.begin(), generators.end());
  for (const auto& c : upper_corners(box.lower, box.upper)) all.push_back(c);
  if (generators.dimension() == 1) return minimal_elements(all);
  return Antichain::trusted(std::move(all), generators.dimension());
}

Antichain augment_down(const Antichain& socle, std::optional<LatticePoint> lower,
                       std::optional<LatticePoint> upper) {
  const auto box = resolve(socle, std::move(lower), std::move(upper));
  PointSet all(socle.begin(), socle.end());
  for (const auto& c : lower_corners(box.lower, box.upper)) all.push_back(c);
  if (socle.dimension() == 1) return maximal_elements(all);
  return Antichain::trusted(std::move(all), socle.dimension());
}

}  // namespace monoideal
