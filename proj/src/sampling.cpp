#include "monoideal/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "monoideal/error.hpp"

namespace monoideal::sampling {

LatticePoint random_point(Rng& rng, std::size_t dimension, LatticePoint::value_type lo,
                          LatticePoint::value_type hi) {
  std::uniform_int_distribution<LatticePoint::value_type> coord(lo, hi);
  std::vector<LatticePoint::value_type> x(dimension);
  for (auto& c : x) c = coord(rng);
  return LatticePoint(std::move(x));
}

Antichain random_antichain(Rng& rng, std::size_t dimension, std::size_t max_points,
                           LatticePoint::value_type lo, LatticePoint::value_type hi) {
  PointSet kept{random_point(rng, dimension, lo, hi)};
  for (std::size_t n = 1; n < max_points; ++n) {
    auto p = random_point(rng, dimension, lo, hi);
    if (std::none_of(kept.begin(), kept.end(),
                     [&](const LatticePoint& q) { return comparable(p, q); })) {
      kept.push_back(std::move(p));
    }
  }
  return Antichain::trusted(std::move(kept), dimension);
}

BoundsPair random_corners(Rng& rng, const Antichain& points, LatticePoint::value_type slack) {
  auto box = bounds(points);
  const auto d = points.dimension();
  std::uniform_int_distribution<LatticePoint::value_type> push(0, slack);
  std::vector<LatticePoint::value_type> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = box.lower[i] - push(rng);
    hi[i] = box.upper[i] + push(rng);
  }
  return {LatticePoint(std::move(lo)), LatticePoint(std::move(hi))};
}

std::pair<LatticePoint, LatticePoint> random_incomparable_pair(Rng& rng, std::size_t dimension,
                                                               LatticePoint::value_type hi) {
  if (dimension < 2 || hi < 1) {
    throw PreconditionError("incomparable pairs need d >= 2 and a range of at least two values");
  }
  while (true) {
    auto p = random_point(rng, dimension, 0, hi);
    auto q = random_point(rng, dimension, 0, hi);
    if (!comparable(p, q)) return {std::move(p), std::move(q)};
  }
}

Antichain random_order_generic(Rng& rng, std::size_t k, std::size_t dimension,
                               LatticePoint::value_type hi) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> orders;
  do {
    orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (orders.size() > dimension || hi + 1 < static_cast<LatticePoint::value_type>(k)) {
    throw PreconditionError("order-generic sample needs d >= k! and k distinct values");
  }

  std::vector<LatticePoint::value_type> values(static_cast<std::size_t>(hi) + 1);
  std::iota(values.begin(), values.end(), 0);
  std::uniform_int_distribution<LatticePoint::value_type> coord(0, hi);

  // columns[i][t] = coordinate i of point t
  std::vector<std::vector<LatticePoint::value_type>> columns;
  for (const auto& order : orders) {
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<LatticePoint::value_type> picked(values.begin(), values.begin() + k);
    std::sort(picked.begin(), picked.end());
    std::vector<LatticePoint::value_type> column(k);
    // order[r] is the point holding the r-th smallest value
    for (std::size_t r = 0; r < k; ++r) column[order[r]] = picked[r];
    columns.push_back(std::move(column));
  }
  while (columns.size() < dimension) {
    std::vector<LatticePoint::value_type> column(k);
    for (auto& c : column) c = coord(rng);
    columns.push_back(std::move(column));
  }
  std::shuffle(columns.begin(), columns.end(), rng);

  PointSet points;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<LatticePoint::value_type> x(dimension);
    for (std::size_t i = 0; i < dimension; ++i) x[i] = columns[i][t];
    points.emplace_back(std::move(x));
  }
  return Antichain::from_points(std::move(points), dimension);
}

}  // namespace monoideal::sampling
