#include "monoideal/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

#include "monoideal/augment.hpp"
#include "monoideal/error.hpp"
#include "monoideal/updown.hpp"

namespace monoideal {

namespace {

void require_nonnegative(const Antichain& points, const char* what) {
  for (const auto& p : points) {
    for (const auto c : p.coords()) {
      if (c < 0) {
        throw PreconditionError(std::string(what) + " point " + to_string(p) +
                                " has a negative coordinate");
      }
    }
  }
}

void require_nonnegative(const LatticePoint& p) {
  for (const auto c : p.coords()) {
    if (c < 0) throw PreconditionError("point " + to_string(p) + " has a negative coordinate");
  }
}

// Index of the single nonzero coordinate, if there is exactly one.
std::optional<std::size_t> pure_power_axis(const LatticePoint& p) {
  std::optional<std::size_t> axis;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] == 0) continue;
    if (axis) return std::nullopt;
    axis = i;
  }
  return axis;
}

}  // namespace

Antichain retrieve_generators(const Antichain& socle) { return socle_up(DownSet(socle)); }

Antichain socle_to_generators(const Antichain& socle, std::optional<LatticePoint> lower,
                              std::optional<LatticePoint> upper) {
  if (socle.empty()) throw PreconditionError("socle must be nonempty");
  return socle_up(DownSet(augment_down(socle, std::move(lower), std::move(upper))));
}

Antichain zero_dim_ideal_from_socle(const Antichain& socle, std::optional<LatticePoint> upper) {
  if (socle.empty()) throw PreconditionError("socle must be nonempty");
  require_nonnegative(socle, "socle");
  const auto d = socle.dimension();
  auto gens = socle_to_generators(socle, LatticePoint::filled(d, -1), std::move(upper));

  require_nonnegative(gens, "generator");
  std::vector<bool> axis_seen(d, false);
  for (const auto& g : gens) {
    if (const auto axis = pure_power_axis(g)) axis_seen[*axis] = true;
  }
  if (!std::all_of(axis_seen.begin(), axis_seen.end(), [](bool b) { return b; })) {
    throw std::logic_error("reconstructed ideal " + to_string(gens) + " is not zero-dimensional");
  }
  return gens;
}

PairPartition partition_pair(const LatticePoint& p, const LatticePoint& q) {
  if (comparable(p, q)) {
    throw NotAnAntichain("points " + to_string(p) + " and " + to_string(q) + " are comparable");
  }
  PairPartition out;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < q[i]) {
      out.less.push_back(i);
    } else if (p[i] == q[i]) {
      out.equal.push_back(i);
    } else {
      out.greater.push_back(i);
    }
  }
  return out;
}

Antichain type2_generators(const LatticePoint& p, const LatticePoint& q) {
  const auto parts = partition_pair(p, q);
  require_nonnegative(p);
  require_nonnegative(q);
  const auto d = p.dimension();
  PointSet out;
  for (const auto i : parts.less) {
    for (const auto j : parts.greater) {
      out.push_back(LatticePoint::axis(d, i, checked_add(p[i], 1)) +
                    LatticePoint::axis(d, j, checked_add(q[j], 1)));
    }
  }
  for (const auto h : parts.equal) out.push_back(LatticePoint::axis(d, h, checked_add(p[h], 1)));
  for (const auto h : parts.greater) out.push_back(LatticePoint::axis(d, h, checked_add(p[h], 1)));
  for (const auto h : parts.less) out.push_back(LatticePoint::axis(d, h, checked_add(q[h], 1)));
  return Antichain::trusted(std::move(out), d);
}

TypeClassification classify_type(const Antichain& generators) {
  require_nonnegative(generators, "generator");
  TypeClassification out;
  const auto d = generators.dimension();
  if (generators.empty() || d == 0) return out;

  if (generators.contains(LatticePoint::zero(d))) {
    out.zero_dimensional = true;
    out.type = 0;
    return out;
  }
  std::vector<bool> axis_seen(d, false);
  for (const auto& g : generators) {
    if (const auto axis = pure_power_axis(g)) axis_seen[*axis] = true;
  }
  out.zero_dimensional = std::all_of(axis_seen.begin(), axis_seen.end(), [](bool b) { return b; });
  if (out.zero_dimensional) {
    out.type = socle_down(UpSet(generators)).size();
    out.gorenstein = *out.type == 1;
  }
  return out;
}

}  // namespace monoideal
