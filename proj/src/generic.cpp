#include "monoideal/generic.hpp"

#include <algorithm>
#include <set>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

using Coords = std::vector<std::size_t>;

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out{};
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out{};
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

Coords merge(std::initializer_list<const Coords*> parts) {
  Coords out;
  for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t third(std::size_t u, std::size_t v) { return 3 - u - v; }

void require_index(std::size_t i, const Antichain& points) {
  if (i >= points.size()) {
    throw PreconditionError("point index " + std::to_string(i) + " out of range for " +
                            std::to_string(points.size()) + " points");
  }
}

// Indicator of B_a(C) over the coordinates.
std::vector<bool> strict_min_mask(std::size_t a, const Coords& subset, const Antichain& points) {
  const auto d = points.dimension();
  std::vector<bool> mask(d, true);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto b : subset) {
      if (b != a && !(points[a][i] < points[b][i])) {
        mask[i] = false;
        break;
      }
    }
  }
  return mask;
}

}  // namespace

bool WeakOrdering::is_strict() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::string to_string(const WeakOrdering& w) {
  std::string s;
  for (std::size_t b = 0; b < w.blocks.size(); ++b) {
    if (b) s += '<';
    s += '{';
    for (std::size_t i = 0; i < w.blocks[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(w.blocks[b][i] + 1);
    }
    s += '}';
  }
  return s;
}

WeakOrdering weak_ordering_of(const std::vector<LatticePoint::value_type>& values) {
  std::map<LatticePoint::value_type, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < values.size(); ++i) by_value[values[i]].push_back(i);
  WeakOrdering w;
  for (auto& [value, block] : by_value) w.blocks.push_back(std::move(block));
  return w;
}

CoordinateClassification::CoordinateClassification(std::size_t point_count,
                                                   std::vector<WeakOrdering> per_coordinate)
    : point_count_(point_count), per_coordinate_(std::move(per_coordinate)) {
  for (std::size_t i = 0; i < per_coordinate_.size(); ++i) classes_[per_coordinate_[i]].push_back(i);
}

std::vector<std::size_t> CoordinateClassification::coordinates_of(const WeakOrdering& w) const {
  const auto it = classes_.find(w);
  return it == classes_.end() ? std::vector<std::size_t>{} : it->second;
}

CoordinateClassification classify_coordinates(const Antichain& points) {
  std::vector<WeakOrdering> per_coordinate;
  std::vector<LatticePoint::value_type> column(points.size());
  for (std::size_t i = 0; i < points.dimension(); ++i) {
    for (std::size_t t = 0; t < points.size(); ++t) column[t] = points[t][i];
    per_coordinate.push_back(weak_ordering_of(column));
  }
  return CoordinateClassification(points.size(), std::move(per_coordinate));
}

bool is_order_generic(const Antichain& points) {
  const auto k = points.size();
  if (k == 0) return false;
  std::uint64_t needed = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    needed *= i;
    if (needed > points.dimension()) return false;
  }
  std::uint64_t strict = 0;
  const auto classification = classify_coordinates(points);
  for (const auto& [w, coords] : classification.classes()) {
    if (w.is_strict()) ++strict;
  }
  return strict == needed;
}

std::uint64_t stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // row[j] = S(m, j), built up row by row: S(m, j) = j S(m-1, j) + S(m-1, j-1)
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) {
      row[j] = checked_add_u64(checked_mul_u64(j, row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  return row[k];
}

std::uint64_t ordered_bell(unsigned k) {
  std::uint64_t total = 0;
  std::uint64_t factorial = 1;
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0) factorial = checked_mul_u64(factorial, i);
    total = checked_add_u64(total, checked_mul_u64(stirling2(k, i), factorial));
  }
  return total;
}

std::vector<std::size_t> strict_min_coordinates(std::size_t a, const std::vector<std::size_t>& subset,
                                                const Antichain& points) {
  require_index(a, points);
  for (const auto b : subset) require_index(b, points);
  if (std::find(subset.begin(), subset.end(), a) == subset.end()) {
    throw PreconditionError("index " + std::to_string(a) + " is not in the subset");
  }
  const auto mask = strict_min_mask(a, subset, points);
  Coords out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

PcResult subset_generators(const std::vector<std::size_t>& subset, const Antichain& points) {
  if (subset.empty()) throw PreconditionError("subset must be nonempty");
  Coords members(subset);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto t : members) require_index(t, points);

  const auto d = points.dimension();
  const auto ell = members.size();

  // Allowed coordinates per member, and the same for every one-point extension.
  std::vector<Coords> domains;
  for (const auto t : members) domains.push_back(strict_min_coordinates(t, members, points));
  std::vector<std::vector<std::vector<bool>>> extensions;
  for (std::size_t b = 0; b < points.size(); ++b) {
    if (std::binary_search(members.begin(), members.end(), b)) continue;
    auto bigger = members;
    bigger.push_back(b);
    std::vector<std::vector<bool>> masks;
    for (const auto t : members) masks.push_back(strict_min_mask(t, bigger, points));
    extensions.push_back(std::move(masks));
  }

  PcResult result;
  result.order_generic = is_order_generic(points);
  if (std::any_of(domains.begin(), domains.end(), [](const Coords& c) { return c.empty(); })) {
    return result;
  }

  std::vector<std::size_t> pos(ell, 0);
  std::vector<std::size_t> chosen(ell);
  while (true) {
    for (std::size_t s = 0; s < ell; ++s) chosen[s] = domains[s][pos[s]];

    std::set<std::size_t> distinct(chosen.begin(), chosen.end());
    const bool excluded = std::any_of(extensions.begin(), extensions.end(), [&](const auto& masks) {
      for (std::size_t s = 0; s < ell; ++s) {
        if (!masks[s][chosen[s]]) return false;
      }
      return true;
    });
    if (distinct.size() == ell && !excluded) {
      std::vector<LatticePoint::value_type> coords(d, 0);
      for (std::size_t s = 0; s < ell; ++s) {
        coords[chosen[s]] = checked_add(points[members[s]][chosen[s]], 1);
      }
      result.points.emplace_back(std::move(coords));
    }

    std::size_t s = 0;
    while (s < ell && ++pos[s] == domains[s].size()) pos[s++] = 0;
    if (s == ell) break;
  }
  std::sort(result.points.begin(), result.points.end());
  result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
  return result;
}

PcResult union_of_subset_generators(const Antichain& points) {
  const auto k = points.size();
  if (k == 0) throw PreconditionError("union of subset generators needs a nonempty antichain");
  if (k >= 63) throw PreconditionError("too many points to enumerate all subsets");
  PcResult out;
  out.order_generic = is_order_generic(points);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Coords subset;
    for (std::size_t t = 0; t < k; ++t) {
      if (mask >> t & 1U) subset.push_back(t);
    }
    auto part = subset_generators(subset, points);
    out.points.insert(out.points.end(), part.points.begin(), part.points.end());
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

std::vector<WeakOrdering> weak_orderings_of_three() {
  std::vector<WeakOrdering> out;
  out.push_back({{{0, 1, 2}}});
  for (std::size_t w = 0; w < 3; ++w) {
    const auto u = (w + 1) % 3;
    const auto v = (w + 2) % 3;
    Coords pair{std::min(u, v), std::max(u, v)};
    out.push_back({{pair, {w}}});
    out.push_back({{{w}, pair}});
  }
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    out.push_back({{{perm[0]}, {perm[1]}, {perm[2]}}});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

TripleClasses::TripleClasses(const Antichain& points) : dimension_(points.dimension()) {
  if (points.size() != 3) {
    throw PreconditionError("triple classes need exactly 3 points, got " +
                            std::to_string(points.size()));
  }
  for (const auto& w : weak_orderings_of_three()) classes_[w];
  const auto classification = classify_coordinates(points);
  for (const auto& [w, coords] : classification.classes()) classes_.at(w) = coords;
}

const std::vector<std::size_t>& TripleClasses::chain(std::size_t u, std::size_t v,
                                                     std::size_t w) const {
  return classes_.at(WeakOrdering{{{u}, {v}, {w}}});
}

const std::vector<std::size_t>& TripleClasses::tied_low(std::size_t u, std::size_t v,
                                                        std::size_t w) const {
  return classes_.at(WeakOrdering{{{std::min(u, v), std::max(u, v)}, {w}}});
}

const std::vector<std::size_t>& TripleClasses::tied_high(std::size_t u, std::size_t v,
                                                         std::size_t w) const {
  return classes_.at(WeakOrdering{{{u}, {std::min(v, w), std::max(v, w)}}});
}

const std::vector<std::size_t>& TripleClasses::all_tied() const {
  return classes_.at(WeakOrdering{{{0, 1, 2}}});
}

std::vector<std::size_t> TripleClasses::sole_min(std::size_t u) const {
  const auto v = (u + 1) % 3;
  const auto w = (u + 2) % 3;
  return merge({&chain(u, v, w), &chain(u, w, v), &tied_high(u, v, w)});
}

std::vector<std::size_t> TripleClasses::below_not_min(std::size_t u, std::size_t v) const {
  const auto w = third(u, v);
  return merge({&tied_low(u, w, v), &chain(w, u, v)});
}

std::vector<std::size_t> TripleClasses::sole_max(std::size_t u) const {
  const auto v = (u + 1) % 3;
  const auto w = (u + 2) % 3;
  return merge({&chain(v, w, u), &chain(w, v, u), &tied_low(v, w, u)});
}

std::vector<std::size_t> TripleClasses::shared_max(std::size_t u) const {
  const auto v = (u + 1) % 3;
  const auto w = (u + 2) % 3;
  return merge({&tied_high(w, u, v), &tied_high(v, u, w)});
}

Antichain type3_generators(const Antichain& points) {
  if (points.size() != 3) {
    throw PreconditionError("type-3 generators need exactly 3 socle points");
  }
  if (!is_order_generic(points)) {
    throw PreconditionError("socle " + to_string(points) + " is not order-generic");
  }
  for (const auto& p : points) {
    for (const auto c : p.coords()) {
      if (c < 0) throw PreconditionError("socle point " + to_string(p) + " is not in N_0^d");
    }
  }
  const TripleClasses cls(points);
  const auto d = points.dimension();
  const auto bump = [&](std::size_t t, std::size_t i) {
    return LatticePoint::axis(d, i, checked_add(points[t][i], 1));
  };

  PointSet out;
  const auto m0 = cls.sole_min(0);
  const auto m1 = cls.sole_min(1);
  const auto m2 = cls.sole_min(2);
  for (const auto i : m0) {
    for (const auto j : m1) {
      for (const auto l : m2) out.push_back(bump(0, i) + bump(1, j) + bump(2, l));
    }
  }

  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t v = u + 1; v < 3; ++v) {
      const auto low_u = cls.below_not_min(u, v);
      const auto low_v = cls.below_not_min(v, u);
      const auto min_u = cls.sole_min(u);
      const auto min_v = cls.sole_min(v);
      const auto add_pairs = [&](const Coords& is, const Coords& js) {
        for (const auto i : is) {
          for (const auto j : js) out.push_back(bump(u, i) + bump(v, j));
        }
      };
      add_pairs(low_u, low_v);
      add_pairs(low_u, min_v);
      add_pairs(min_u, low_v);
    }
  }

  for (std::size_t u = 0; u < 3; ++u) {
    const auto top = cls.sole_max(u);
    const auto shared = cls.shared_max(u);
    for (const auto* coords : {&top, &shared, &cls.all_tied()}) {
      for (const auto i : *coords) out.push_back(bump(u, i));
    }
  }
  return Antichain::trusted(std::move(out), d);
}

std::uint64_t type3_cardinality(const std::map<WeakOrdering, std::size_t>& class_sizes,
                                std::size_t dimension) {
  std::map<WeakOrdering, std::int64_t> a;
  for (const auto& w : weak_orderings_of_three()) a[w] = 0;
  std::size_t total = 0;
  for (const auto& [w, n] : class_sizes) {
    const auto it = a.find(w);
    if (it == a.end()) {
      throw PreconditionError("class " + to_string(w) + " is not a weak ordering of 3 points");
    }
    it->second = static_cast<std::int64_t>(n);
    total += n;
  }
  if (total != dimension) {
    throw PreconditionError("class sizes sum to " + std::to_string(total) + ", expected " +
                            std::to_string(dimension));
  }

  const auto chain = [&](std::size_t u, std::size_t v, std::size_t w) {
    return a.at(WeakOrdering{{{u}, {v}, {w}}});
  };
  const auto tied_low = [&](std::size_t u, std::size_t v, std::size_t w) {
    return a.at(WeakOrdering{{{std::min(u, v), std::max(u, v)}, {w}}});
  };
  const auto tied_high = [&](std::size_t u, std::size_t v, std::size_t w) {
    return a.at(WeakOrdering{{{u}, {std::min(v, w), std::max(v, w)}}});
  };
  const auto sole_min = [&](std::size_t u) {
    const auto v = (u + 1) % 3;
    const auto w = (u + 2) % 3;
    return chain(u, v, w) + chain(u, w, v) + tied_high(u, v, w);
  };
  const auto below_not_min = [&](std::size_t u, std::size_t v) {
    const auto w = third(u, v);
    return tied_low(u, w, v) + chain(w, u, v);
  };
  const auto sole_max = [&](std::size_t u) {
    const auto v = (u + 1) % 3;
    const auto w = (u + 2) % 3;
    return chain(v, w, u) + chain(w, v, u) + tied_low(v, w, u);
  };

  std::int64_t count = sole_min(0) * sole_min(1) * sole_min(2);
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::size_t v = u + 1; v < 3; ++v) {
      count += below_not_min(u, v) * below_not_min(v, u) + below_not_min(u, v) * sole_min(v) +
               sole_min(u) * below_not_min(v, u);
    }
  }
  for (std::size_t u = 0; u < 3; ++u) {
    const auto v = (u + 1) % 3;
    const auto w = (u + 2) % 3;
    // pair points shared between {u,v} and {u,w}
    count -= sole_min(u) * tied_low(v, w, u);
    count += sole_max(u);
    count += tied_high(u, v, w);
  }
  count += a.at(WeakOrdering{{{0, 1, 2}}});
  return static_cast<std::uint64_t>(count);
}

}  // namespace monoideal
