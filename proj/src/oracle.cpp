#include "monoideal/oracle.hpp"

#include <algorithm>

#include "monoideal/augment.hpp"
#include "monoideal/error.hpp"

namespace monoideal::oracle {

namespace {

// Plain scans, kept independent of UpSet / DownSet.
bool above_some(const Antichain& gens, const LatticePoint& x) {
  return std::any_of(gens.begin(), gens.end(), [&](const LatticePoint& g) { return leq(g, x); });
}

bool below_some(const Antichain& gens, const LatticePoint& x) {
  return std::any_of(gens.begin(), gens.end(), [&](const LatticePoint& g) { return leq(x, g); });
}

void require_corners_inside(const Antichain& gens, const Box& box, LatticePoint::value_type step) {
  for (const auto& g : gens) {
    require_same_dimension(g, box.lower());
    for (std::size_t j = 0; j < g.dimension(); ++j) {
      const auto c = checked_add(g[j], step);
      if (c < box.lower()[j] || c > box.upper()[j]) {
        throw PreconditionError("box [" + to_string(box.lower()) + ", " + to_string(box.upper()) +
                                "] is too small for generator " + to_string(g));
      }
    }
  }
}

}  // namespace

Box::Box(LatticePoint lower, LatticePoint upper, std::uint64_t volume_cap)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!leq(lower_, upper_)) {
    throw PreconditionError("box lower corner " + to_string(lower_) + " is not <= " +
                            to_string(upper_));
  }
  volume_ = 1;
  for (std::size_t i = 0; i < lower_.dimension(); ++i) {
    const auto side = static_cast<std::uint64_t>(checked_add(checked_sub(upper_[i], lower_[i]), 1));
    if (side > volume_cap || volume_ > volume_cap / side) {
      throw PreconditionError("box volume exceeds cap of " + std::to_string(volume_cap));
    }
    volume_ *= side;
  }
}

Box Box::around(const Antichain& points, std::uint64_t volume_cap) {
  const auto b = bounds(points);
  const auto one = LatticePoint::filled(points.dimension(), 1);
  return Box(b.lower - one, b.upper + one, volume_cap);
}

bool Box::contains(const LatticePoint& x) const { return leq(lower_, x) && leq(x, upper_); }

void Box::for_each(const std::function<void(const LatticePoint&)>& visit) const {
  const auto d = lower_.dimension();
  std::vector<LatticePoint::value_type> x(lower_.coords().begin(), lower_.coords().end());
  for (std::uint64_t n = 0; n < volume_; ++n) {
    visit(LatticePoint(x));
    for (std::size_t i = d; i-- > 0;) {
      if (++x[i] <= upper_[i]) break;
      x[i] = lower_[i];
    }
  }
}

Antichain brute_socle_down(const Antichain& generators, const Box& box) {
  require_corners_inside(generators, box, -1);
  const auto d = box.lower().dimension();
  PointSet found;
  box.for_each([&](const LatticePoint& r) {
    if (above_some(generators, r)) return;
    for (std::size_t j = 0; j < d; ++j) {
      if (!above_some(generators, r.with(j, r[j] + 1))) return;
    }
    found.push_back(r);
  });
  return Antichain::trusted(std::move(found), d);
}

Antichain brute_socle_down(const Antichain& generators) {
  return brute_socle_down(generators, Box::around(generators));
}

Antichain brute_socle_up(const Antichain& generators, const Box& box) {
  require_corners_inside(generators, box, +1);
  const auto d = box.lower().dimension();
  PointSet found;
  box.for_each([&](const LatticePoint& r) {
    if (below_some(generators, r)) return;
    for (std::size_t j = 0; j < d; ++j) {
      if (!below_some(generators, r.with(j, r[j] - 1))) return;
    }
    found.push_back(r);
  });
  return Antichain::trusted(std::move(found), d);
}

Antichain brute_socle_up(const Antichain& generators) {
  return brute_socle_up(generators, Box::around(generators));
}

void enumerate_zero_dim_ideals(std::size_t dimension, LatticePoint::value_type cap,
                               const std::function<void(const Antichain&)>& emit) {
  if (dimension < 1 || dimension > 2 || cap < 0 || cap > 4) {
    throw PreconditionError("ideal enumeration is limited to d <= 2 and cap <= 4");
  }
  PointSet grid;
  Box(LatticePoint::zero(dimension), LatticePoint::filled(dimension, cap + 1))
      .for_each([&](const LatticePoint& p) { grid.push_back(p); });
  const auto zero = LatticePoint::zero(dimension);

  PointSet chosen;
  const auto is_zero_dim = [&] {
    for (std::size_t j = 0; j < dimension; ++j) {
      const bool has = std::any_of(chosen.begin(), chosen.end(), [&](const LatticePoint& g) {
        for (std::size_t i = 0; i < dimension; ++i) {
          if ((i == j) != (g[i] != 0)) return false;
        }
        return true;
      });
      if (!has) return false;
    }
    return true;
  };

  // Include/exclude each grid point, keeping the chosen set an antichain.
  std::function<void(std::size_t)> walk = [&](std::size_t next) {
    if (next == grid.size()) {
      if (!chosen.empty() && is_zero_dim()) emit(Antichain::trusted(chosen, dimension));
      return;
    }
    walk(next + 1);
    const auto& p = grid[next];
    if (p == zero) return;
    if (std::none_of(chosen.begin(), chosen.end(),
                     [&](const LatticePoint& q) { return comparable(p, q); })) {
      chosen.push_back(p);
      walk(next + 1);
      chosen.pop_back();
    }
  };
  walk(0);
}

}  // namespace monoideal::oracle
