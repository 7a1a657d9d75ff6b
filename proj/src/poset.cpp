#include "monoideal/poset.hpp"

#include <algorithm>
#include <ostream>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

void sort_unique(PointSet& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace

std::size_t common_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) return 0;
  const std::size_t d = points.front().dimension();
  for (const auto& p : points) {
    if (p.dimension() != d) {
      throw DimensionMismatch("point " + to_string(p) + " has dimension " +
                              std::to_string(p.dimension()) + ", expected " + std::to_string(d));
    }
  }
  return d;
}

Antichain Antichain::from_points(PointSet points) {
  const auto d = common_dimension(points);
  return from_points(std::move(points), d);
}

Antichain Antichain::from_points(PointSet points, std::size_t dimension) {
  for (const auto& p : points) {
    if (p.dimension() != dimension) {
      throw DimensionMismatch("point " + to_string(p) + " is not of dimension " +
                              std::to_string(dimension));
    }
  }
  sort_unique(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      // lexicographic order: only points[i] <= points[j] is possible
      if (leq(points[i], points[j])) {
        throw NotAnAntichain("comparable points " + to_string(points[i]) + " <= " +
                             to_string(points[j]));
      }
    }
  }
  Antichain out(dimension);
  out.points_ = std::move(points);
  return out;
}

Antichain Antichain::trusted(PointSet points, std::size_t dimension) {
  sort_unique(points);
  Antichain out(dimension);
  out.points_ = std::move(points);
  return out;
}

bool Antichain::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::string to_string(const Antichain& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& p : a) {
    if (!first) s += ',';
    first = false;
    s += to_string(p);
  }
  s += '}';
  return s;
}

std::ostream& operator<<(std::ostream& os, const Antichain& a) { return os << to_string(a); }

bool is_antichain(std::span<const LatticePoint> points) {
  common_dimension(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (comparable(points[i], points[j])) return false;
    }
  }
  return true;
}

Antichain minimal_elements(std::span<const LatticePoint> points) {
  const auto d = common_dimension(points);
  PointSet sorted(points.begin(), points.end());
  sort_unique(sorted);
  // Anything below p precedes p lexicographically, and every non-minimal
  // point lies above some already-kept minimal one.
  PointSet kept;
  for (auto& p : sorted) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const LatticePoint& q) { return leq(q, p); });
    if (!dominated) kept.push_back(std::move(p));
  }
  return Antichain::trusted(std::move(kept), d);
}

Antichain maximal_elements(std::span<const LatticePoint> points) {
  const auto d = common_dimension(points);
  PointSet sorted(points.begin(), points.end());
  sort_unique(sorted);
  PointSet kept;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const LatticePoint& q) { return leq(*it, q); });
    if (!dominated) kept.push_back(std::move(*it));
  }
  return Antichain::trusted(std::move(kept), d);
}

PointSet translate(std::span<const LatticePoint> points, const LatticePoint& shift) {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p + shift);
  return out;
}

Antichain translate(const Antichain& a, const LatticePoint& shift) {
  if (a.dimension() != shift.dimension() && !a.empty()) {
    throw DimensionMismatch("shift " + to_string(shift) + " does not match dimension " +
                            std::to_string(a.dimension()));
  }
  return Antichain::trusted(translate(a.points(), shift), shift.dimension());
}

PointSet rotate(std::span<const LatticePoint> points, const LatticePoint& center) {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(center - p);
  return out;
}

Antichain rotate(const Antichain& a, const LatticePoint& center) {
  if (a.dimension() != center.dimension() && !a.empty()) {
    throw DimensionMismatch("center " + to_string(center) + " does not match dimension " +
                            std::to_string(a.dimension()));
  }
  return Antichain::trusted(rotate(a.points(), center), center.dimension());
}

}  // namespace monoideal
