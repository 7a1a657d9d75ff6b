#include "monoideal/updown.hpp"

#include <algorithm>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

using Value = LatticePoint::value_type;

// Corner searches are written once against a direction. For S_d(U) the
// generators sit above the corners (step -1, "g covers x" means g <= x);
// for S_u(D) they sit below (step +1, g >= x).
struct Below {
  static constexpr Value step = -1;
  static bool covers(Value g, Value x) { return g <= x; }
};

struct Above {
  static constexpr Value step = +1;
  static bool covers(Value g, Value x) { return g >= x; }
};

template <typename Dir>
bool covers_point(const LatticePoint& g, const LatticePoint& x) {
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!Dir::covers(g[i], x[i])) return false;
  }
  return true;
}

template <typename Dir>
bool set_contains(const Antichain& gens, const LatticePoint& x) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const LatticePoint& g) { return covers_point<Dir>(g, x); });
}

// Witness for axis j of corner r: a generator covering r - step*e_j.
template <typename Dir>
std::vector<std::size_t> witnesses_of(const Antichain& gens, const LatticePoint& r) {
  const std::size_t d = r.dimension();
  std::vector<std::size_t> sources(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto shifted = r.with(j, checked_sub(r[j], Dir::step));
    const auto it = std::find_if(gens.begin(), gens.end(), [&](const LatticePoint& g) {
      return covers_point<Dir>(g, shifted);
    });
    if (it == gens.end()) return {};
    sources[j] = static_cast<std::size_t>(it - gens.begin());
  }
  return sources;
}

template <typename Dir>
class PrunedCornerSearch {
 public:
  explicit PrunedCornerSearch(const Antichain& gens)
      : gens_(gens), d_(gens.dimension()), corner_(d_), witnesses_(d_) {
    candidates_.resize(d_);
    for (std::size_t j = 0; j < d_; ++j) {
      for (const auto& g : gens_) candidates_[j].push_back(checked_add(g[j], Dir::step));
      std::sort(candidates_[j].begin(), candidates_[j].end());
      candidates_[j].erase(std::unique(candidates_[j].begin(), candidates_[j].end()),
                           candidates_[j].end());
    }
    // can_witness_after_[t][g]: g covers the least demanding candidate of
    // every coordinate after t, so it may still witness an axis fixed at t.
    can_witness_after_.assign(d_, std::vector<bool>(gens_.size(), true));
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      bool ok = true;
      for (std::size_t t = d_; t-- > 0;) {
        can_witness_after_[t][g] = ok;
        const Value easiest = Dir::step > 0 ? candidates_[t].front() : candidates_[t].back();
        ok = ok && Dir::covers(gens_[g][t], easiest);
      }
    }
  }

  std::vector<CornerSelection> run() {
    std::vector<std::size_t> alive(gens_.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    extend(0, alive);
    std::sort(found_.begin(), found_.end(),
              [](const CornerSelection& a, const CornerSelection& b) { return a.point < b.point; });
    return std::move(found_);
  }

 private:
  // `alive` holds the generators covering the fixed prefix of the corner;
  // witnesses_[j] for j < t those that still cover corner - step*e_j.
  void extend(std::size_t t, const std::vector<std::size_t>& alive) {
    if (t == d_) {
      if (!alive.empty()) return;  // the corner itself is in the set
      CornerSelection sel{LatticePoint(corner_), {}};
      sel.sources.reserve(d_);
      for (const auto& w : witnesses_) sel.sources.push_back(w.front());
      found_.push_back(std::move(sel));
      return;
    }
    for (const Value v : candidates_[t]) {
      const Value relaxed = v - Dir::step;
      std::vector<std::size_t> own;
      std::vector<std::size_t> next_alive;
      for (const auto i : alive) {
        if (Dir::covers(gens_[i][t], relaxed) && can_witness_after_[t][i]) own.push_back(i);
        if (Dir::covers(gens_[i][t], v)) next_alive.push_back(i);
      }
      if (own.empty()) continue;

      std::vector<std::vector<std::size_t>> saved(witnesses_.begin(), witnesses_.begin() + t);
      bool viable = true;
      for (std::size_t j = 0; j < t && viable; ++j) {
        auto& w = witnesses_[j];
        std::erase_if(w, [&](std::size_t i) { return !Dir::covers(gens_[i][t], v); });
        viable = !w.empty();
      }
      if (viable) {
        corner_[t] = v;
        witnesses_[t] = std::move(own);
        extend(t + 1, next_alive);
      }
      std::move(saved.begin(), saved.end(), witnesses_.begin());
    }
  }

  const Antichain& gens_;
  std::size_t d_;
  std::vector<std::vector<Value>> candidates_;
  std::vector<std::vector<bool>> can_witness_after_;
  std::vector<Value> corner_;
  std::vector<std::vector<std::size_t>> witnesses_;
  std::vector<CornerSelection> found_;
};

template <typename Dir>
Antichain exhaustive_corners(const Antichain& gens) {
  const std::size_t d = gens.dimension();
  const std::size_t k = gens.size();
  constexpr std::size_t kMaxAssignments = 50'000'000;
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (total > kMaxAssignments / k) {
      throw PreconditionError("exhaustive corner search over " + std::to_string(k) + "^" +
                              std::to_string(d) + " assignments is too large");
    }
    total *= k;
  }
  PointSet found;
  std::vector<std::size_t> sigma(d, 0);
  std::vector<Value> coords(d);
  for (std::size_t n = 0; n < total; ++n) {
    for (std::size_t j = 0; j < d; ++j) coords[j] = checked_add(gens[sigma[j]][j], Dir::step);
    LatticePoint r(coords);
    if (!set_contains<Dir>(gens, r) && !witnesses_of<Dir>(gens, r).empty()) {
      found.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (++sigma[j] < k) break;
      sigma[j] = 0;
    }
  }
  return Antichain::trusted(std::move(found), d);
}

// Every axis j has a generator agreeing with the extreme corner off axis j.
template <typename Dir>
bool extreme_on_all_but_one_axis(const Antichain& gens) {
  if (gens.empty()) return false;
  const std::size_t d = gens.dimension();
  std::vector<Value> extreme(gens[0].coords().begin(), gens[0].coords().end());
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < d; ++i) {
      // covers(a, b) with Below means a <= b: keep the smallest
      if (Dir::covers(g[i], extreme[i])) extreme[i] = g[i];
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    const bool found = std::any_of(gens.begin(), gens.end(), [&](const LatticePoint& g) {
      for (std::size_t i = 0; i < d; ++i) {
        if (i != j && g[i] != extreme[i]) return false;
      }
      return true;
    });
    if (!found) return false;
  }
  return true;
}

template <typename Dir>
std::vector<CornerSelection> corners_with_witnesses(const Antichain& gens) {
  if (gens.empty()) return {};
  return PrunedCornerSearch<Dir>(gens).run();
}

template <typename Dir>
Antichain corners(const Antichain& gens, CornerSearch search) {
  if (search == CornerSearch::exhaustive) return exhaustive_corners<Dir>(gens);
  PointSet points;
  for (auto& sel : corners_with_witnesses<Dir>(gens)) points.push_back(std::move(sel.point));
  return Antichain::trusted(std::move(points), gens.dimension());
}

}  // namespace

UpSet::UpSet(std::span<const LatticePoint> generators)
    : generators_(minimal_elements(generators)) {}

UpSet::UpSet(const Antichain& generators) : generators_(generators) {}

bool UpSet::contains(const LatticePoint& x) const {
  if (!generators_.empty()) require_same_dimension(generators_[0], x);
  return set_contains<Below>(generators_, x);
}

DownSet::DownSet(std::span<const LatticePoint> generators)
    : generators_(maximal_elements(generators)) {}

DownSet::DownSet(const Antichain& generators) : generators_(generators) {}

bool DownSet::contains(const LatticePoint& x) const {
  if (!generators_.empty()) require_same_dimension(generators_[0], x);
  return set_contains<Above>(generators_, x);
}

bool is_cofinite(const UpSet& up) { return extreme_on_all_but_one_axis<Below>(up.generators()); }

bool is_corner_bounded(const DownSet& down) {
  return extreme_on_all_but_one_axis<Above>(down.generators());
}

Antichain socle_down(const UpSet& up, CornerSearch search) {
  if (!is_cofinite(up)) {
    throw NotCofinite("upset " + to_string(up.generators()) +
                      " is not cofinite: some axis has no generator at the floor elsewhere");
  }
  return corners<Below>(up.generators(), search);
}

Antichain socle_up(const DownSet& down, CornerSearch search) {
  if (!is_corner_bounded(down)) {
    throw NotCofinite("downset " + to_string(down.generators()) +
                      " is not corner-bounded: some axis has no generator at the ceiling elsewhere");
  }
  return corners<Above>(down.generators(), search);
}

std::vector<CornerSelection> socle_down_with_witnesses(const UpSet& up) {
  if (!is_cofinite(up)) {
    throw NotCofinite("upset " + to_string(up.generators()) + " is not cofinite");
  }
  return corners_with_witnesses<Below>(up.generators());
}

std::vector<CornerSelection> socle_up_with_witnesses(const DownSet& down) {
  if (!is_corner_bounded(down)) {
    throw NotCofinite("downset " + to_string(down.generators()) + " is not corner-bounded");
  }
  return corners_with_witnesses<Above>(down.generators());
}

}  // namespace monoideal
