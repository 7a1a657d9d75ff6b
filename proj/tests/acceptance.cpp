// One PASS/FAIL line per acceptance criterion. `acceptance --only ID` runs a
// single criterion; the exit status is nonzero when any selected one fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "monoideal/augment.hpp"
#include "monoideal/generic.hpp"
#include "monoideal/oracle.hpp"
#include "monoideal/reconstruct.hpp"
#include "monoideal/sampling.hpp"
#include "monoideal/updown.hpp"
#include "monoideal/verify.hpp"

namespace {

using namespace monoideal;

struct Result {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;
  std::function<Result()> check;
};

Antichain set_of(std::initializer_list<LatticePoint> points) {
  return Antichain::from_points(PointSet(points));
}

Result worked_example() {
  const auto q = set_of({{2, 2, 3}, {3, 3, 2}});
  const auto b = bounds(q);
  if (lower_corners(b.lower, b.upper) != set_of({{4, 4, 1}, {4, 1, 4}, {1, 4, 4}})) {
    return {false, "lower corners differ"};
  }
  const auto ideal_one = set_of({{2, 2, 4}, {2, 3, 3}, {2, 4, 2}, {3, 2, 3}, {4, 2, 2}});
  if (socle_up(DownSet(augment_down(q))) != ideal_one) return {false, "default generators differ"};
  if (socle_down(UpSet(ideal_one)) != q) return {false, "socle of default generators differs"};
  const auto ideal_two = set_of({{1, 1, 4}, {1, 3, 3}, {1, 4, 2}, {3, 1, 3}, {4, 1, 2}});
  if (socle_to_generators(q, LatticePoint{0, 0, 1}, LatticePoint{5, 6, 7}) != ideal_two) {
    return {false, "shifted-corner generators differ"};
  }
  if (socle_down(UpSet(ideal_two)) != q) return {false, "socle of shifted generators differs"};
  return {true, "all five sets exact"};
}

Result roundtrip(bool dual) {
  sampling::Rng rng(dual ? 2002 : 2001);
  std::size_t good = 0;
  constexpr std::size_t kTrials = 500;
  for (std::size_t n = 0; n < kTrials; ++n) {
    const auto d = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto g = sampling::random_antichain(rng, d, k, 1, 7);
    const auto c = sampling::random_corners(rng, g);
    const auto back = dual ? socle_down(UpSet(socle_up(DownSet(augment_down(g, c.lower, c.upper)))))
                           : socle_up(DownSet(socle_down(UpSet(augment_up(g, c.lower, c.upper)))));
    if (back == g) ++good;
  }
  return {good == kTrials, std::to_string(good) + "/" + std::to_string(kTrials) + " identities"};
}

Result uniqueness() {
  std::map<std::string, std::size_t> preimages;
  std::size_t ideals = 0;
  std::size_t inverted = 0;
  oracle::enumerate_zero_dim_ideals(2, 3, [&](const Antichain& gens) {
    ++ideals;
    const auto socle = socle_down(UpSet(gens));
    ++preimages[to_string(socle)];
    if (zero_dim_ideal_from_socle(socle) == gens) ++inverted;
  });
  std::size_t repeated = 0;
  for (const auto& [socle, count] : preimages) repeated += count > 1;
  const bool ok = ideals == 69 && preimages.size() == ideals && repeated == 0 && inverted == ideals;
  return {ok, std::to_string(ideals) + " ideals, " + std::to_string(preimages.size()) +
                  " distinct socles, " + std::to_string(inverted) + " inverted"};
}

Result suite(verify::Suite which, std::size_t trials, std::size_t dmax, std::size_t kmax) {
  verify::Options opt;
  opt.suite = which;
  opt.seed = 2026;
  opt.trials = trials;
  opt.max_dimension = dmax;
  opt.max_points = kmax;
  const auto report = verify::run(opt);
  if (!report.passed()) {
    for (const auto& line : report.lines) {
      if (line.rfind("FAIL", 0) == 0) std::cerr << line << "\n";
    }
  }
  return {report.passed(), std::to_string(report.trials - report.failures) + "/" +
                               std::to_string(report.trials) + " trials"};
}

// Searches every three-point antichain in [0,3]^3 (none can be
// order-generic there) for one whose union of P_C sets has comparable
// points.
Result non_generic_witness() {
  PointSet grid;
  oracle::Box({0, 0, 0}, {3, 3, 3}).for_each([&](const LatticePoint& p) { grid.push_back(p); });
  std::size_t searched = 0;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      if (comparable(grid[a], grid[b])) continue;
      for (std::size_t c = b + 1; c < grid.size(); ++c) {
        if (comparable(grid[a], grid[c]) || comparable(grid[b], grid[c])) continue;
        const auto q = Antichain::from_points({grid[a], grid[b], grid[c]});
        ++searched;
        const auto u = union_of_subset_generators(q);
        if (!is_antichain(u.points)) {
          return {true, "witness " + to_string(q)};
        }
      }
    }
  }
  return {false, "no witness among " + std::to_string(searched) +
                     " non-order-generic triples; every P_C point is a minimal generator, so "
                     "the union is always an antichain"};
}

Result bell() {
  const std::vector<std::uint64_t> expected{1, 1, 3, 13, 75, 541};
  for (unsigned k = 0; k < expected.size(); ++k) {
    if (ordered_bell(k) != expected[k]) return {false, "a(" + std::to_string(k) + ") wrong"};
  }
  std::vector<std::uint64_t> a(11, 0);
  a[0] = 1;
  for (unsigned n = 1; n <= 10; ++n) {
    std::uint64_t binom = 1;
    for (unsigned j = 1; j <= n; ++j) {
      binom = binom * (n - j + 1) / j;
      a[n] += binom * a[n - j];
    }
    if (ordered_bell(n) != a[n]) return {false, "recurrence disagrees at " + std::to_string(n)};
  }
  return {true, "1,1,3,13,75,541; recurrence agrees to k=10 (a(10)=" + std::to_string(a[10]) + ")"};
}

std::vector<Criterion> criteria() {
  return {
      {"1", "worked example in dimension 3", 1.0, worked_example},
      {"2", "generators -> socle -> generators round trip", 30.0, [] { return roundtrip(false); }},
      {"3", "socle -> generators -> socle round trip", 30.0, [] { return roundtrip(true); }},
      {"4", "socle determines the zero-dimensional ideal (d=2, cap=3)", 10.0, uniqueness},
      {"5", "type-2 closed form and size", 0.0,
       [] { return suite(verify::Suite::type2, 500, 6, 2); }},
      {"6a", "order-generic triples: union, closed form, antichain, cardinality", 60.0,
       [] { return suite(verify::Suite::type3, 200, 10, 3); }},
      {"6b", "non-order-generic triple whose union is not an antichain", 0.0, non_generic_witness},
      {"7", "ordered Bell numbers", 0.0, bell},
      {"8", "corner search agrees with box scans", 0.0,
       [] { return suite(verify::Suite::oracle, 1000, 3, 5); }},
      {"9", "translation and rotation laws", 0.0,
       [] { return suite(verify::Suite::duality, 300, 4, 5); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only ID]...\n";
      return 2;
    }
  }

  int failed = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r{false, ""};
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      r.ok = false;
      r.detail += "; over the " + std::to_string(c.time_limit_s) + " s limit";
    }
    failed += !r.ok;
    std::printf("%s [%s] %s: %s (%.3f s)\n", r.ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                r.detail.c_str(), seconds);
  }
  return failed == 0 ? 0 : 1;
}
