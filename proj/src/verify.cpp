#include "monoideal/verify.hpp"

#include <algorithm>
#include <functional>

#include "monoideal/augment.hpp"
#include "monoideal/document.hpp"
#include "monoideal/generic.hpp"
#include "monoideal/oracle.hpp"
#include "monoideal/reconstruct.hpp"
#include "monoideal/sampling.hpp"
#include "monoideal/updown.hpp"

namespace monoideal::verify {

namespace {

using sampling::Rng;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

class Recorder {
 public:
  explicit Recorder(Report& report) : report_(report) {}

  // Runs one trial; `check` returns an empty string on success, otherwise
  // a description of what went wrong.
  void trial(std::size_t n, const std::function<std::string()>& check) {
    ++report_.trials;
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) return;
    ++report_.failures;
    report_.lines.push_back("FAIL trial " + std::to_string(n) + ": " + problem);
  }

 private:
  Report& report_;
};

std::string instance(const Antichain& points, const std::string& role) {
  auto text = serialize(points, role);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return "\n" + text;
}

std::string mismatch(const std::string& what, const Antichain& got, const Antichain& want) {
  return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

void roundtrip(const Options& opt, Rng& rng, Report& report) {
  Recorder rec(report);
  for (std::size_t n = 0; n < opt.trials; ++n) {
    const auto d = draw(rng, 2, opt.max_dimension);
    const auto g = sampling::random_antichain(rng, d, draw(rng, 1, opt.max_points), 1, 7);
    const auto gc = sampling::random_corners(rng, g);
    rec.trial(n, [&]() -> std::string {
      const auto socle = socle_down(UpSet(augment_up(g, gc.lower, gc.upper)));
      const auto back = retrieve_generators(socle);
      if (back != g) {
        return mismatch("generators round trip, lower " + to_string(gc.lower) + " upper " +
                            to_string(gc.upper),
                        back, g) +
               instance(g, "generators");
      }
      return {};
    });
    const auto q = sampling::random_antichain(rng, d, draw(rng, 1, opt.max_points), 1, 7);
    const auto qc = sampling::random_corners(rng, q);
    rec.trial(n, [&]() -> std::string {
      const auto gens = socle_to_generators(q, qc.lower, qc.upper);
      const auto back = socle_down(UpSet(gens));
      if (back != q) {
        return mismatch("socle round trip, lower " + to_string(qc.lower) + " upper " +
                            to_string(qc.upper),
                        back, q) +
               instance(q, "socle");
      }
      return {};
    });
  }
  report.lines.push_back("roundtrip: generators->socle->generators and socle->generators->socle");
}

void duality(const Options& opt, Rng& rng, Report& report) {
  Recorder rec(report);
  for (std::size_t n = 0; n < opt.trials; ++n) {
    const auto d = draw(rng, 1, opt.max_dimension);
    const auto g = augment_up(sampling::random_antichain(rng, d, draw(rng, 1, opt.max_points), 0, 6));
    const auto c = sampling::random_point(rng, d, -5, 5);
    rec.trial(n, [&]() -> std::string {
      const UpSet up(g);
      const auto socle = socle_down(up);
      const auto shifted = socle_down(UpSet(translate(g, c)));
      if (shifted != translate(socle, c)) {
        return mismatch("translation by " + to_string(c), shifted, translate(socle, c)) +
               instance(g, "generators");
      }
      const auto flipped = socle_up(DownSet(rotate(g, c)));
      if (flipped != rotate(socle, c)) {
        return mismatch("rotation about " + to_string(c), flipped, rotate(socle, c)) +
               instance(g, "generators");
      }
      return {};
    });
  }
  report.lines.push_back("duality: translation and rotation laws for the socle operators");
}

void type2(const Options& opt, Rng& rng, Report& report) {
  Recorder rec(report);
  for (std::size_t n = 0; n < opt.trials; ++n) {
    const auto d = draw(rng, 2, std::min<std::size_t>(opt.max_dimension, 6));
    const auto [p, q] = sampling::random_incomparable_pair(rng, d, 7);
    rec.trial(n, [&]() -> std::string {
      const auto socle = Antichain::from_points({p, q});
      const auto closed = type2_generators(p, q);
      const auto general = zero_dim_ideal_from_socle(socle);
      if (closed != general) {
        return mismatch("closed form", closed, general) + instance(socle, "socle");
      }
      const auto parts = partition_pair(p, q);
      const auto expected = parts.less.size() * parts.greater.size() + d;
      if (closed.size() != expected) {
        return "size " + std::to_string(closed.size()) + " != ac + d = " +
               std::to_string(expected) + instance(socle, "socle");
      }
      return {};
    });
  }
  report.lines.push_back("type2: closed form equals the reconstructed zero-dimensional ideal");
}

void type3(const Options& opt, Rng& rng, Report& report) {
  Recorder rec(report);
  report.lines.push_back("trial  d  formula  count");
  for (std::size_t n = 0; n < opt.trials; ++n) {
    const auto d = draw(rng, 6, 10);
    const auto q = sampling::random_order_generic(rng, 3, d, 9);
    rec.trial(n, [&]() -> std::string {
      const auto general = zero_dim_ideal_from_socle(q);
      const auto closed = type3_generators(q);
      const auto unioned = union_of_subset_generators(q);
      const auto unioned_set = Antichain::trusted(unioned.points, d);
      std::map<WeakOrdering, std::size_t> sizes;
      const auto classification = classify_coordinates(q);
      for (const auto& [w, coords] : classification.classes()) sizes[w] = coords.size();
      const auto formula = type3_cardinality(sizes, d);
      report.lines.push_back(std::to_string(n) + "  " + std::to_string(d) + "  " +
                             std::to_string(formula) + "  " + std::to_string(general.size()));
      if (closed != general) return mismatch("type-3 closed form", closed, general) + instance(q, "socle");
      if (unioned_set != general) {
        return mismatch("union of subset generators", unioned_set, general) + instance(q, "socle");
      }
      if (!is_antichain(general.points())) return "output is not an antichain" + instance(q, "socle");
      if (formula != general.size()) {
        return "cardinality formula " + std::to_string(formula) + " != " +
               std::to_string(general.size()) + instance(q, "socle");
      }
      return {};
    });
  }
}

void oracle_suite(const Options& opt, Rng& rng, Report& report) {
  Recorder rec(report);
  for (std::size_t n = 0; n < opt.trials; ++n) {
    const auto d = draw(rng, 1, opt.max_dimension);
    const auto base = sampling::random_antichain(rng, d, draw(rng, 1, opt.max_points), 0, 6);
    const auto corners = sampling::random_corners(rng, base, 1);
    rec.trial(n, [&]() -> std::string {
      const auto up = augment_up(base, corners.lower, corners.upper);
      const auto fast = socle_down(UpSet(up));
      const auto slow = oracle::brute_socle_down(up);
      if (fast != slow) return mismatch("socle_down vs scan", fast, slow) + instance(up, "generators");
      const auto down = augment_down(base, corners.lower, corners.upper);
      const auto fast_up = socle_up(DownSet(down));
      const auto slow_up = oracle::brute_socle_up(down);
      if (fast_up != slow_up) {
        return mismatch("socle_up vs scan", fast_up, slow_up) + instance(down, "points");
      }
      return {};
    });
  }
  report.lines.push_back("oracle: corner search agrees with exhaustive box scans");
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (const auto s : {Suite::roundtrip, Suite::duality, Suite::type2, Suite::type3, Suite::oracle}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::roundtrip: return "roundtrip";
    case Suite::duality: return "duality";
    case Suite::type2: return "type2";
    case Suite::type3: return "type3";
    case Suite::oracle: return "oracle";
  }
  return "unknown";
}

Report run(const Options& options) {
  Report report;
  Rng rng(options.seed);
  switch (options.suite) {
    case Suite::roundtrip: roundtrip(options, rng, report); break;
    case Suite::duality: duality(options, rng, report); break;
    case Suite::type2: type2(options, rng, report); break;
    case Suite::type3: type3(options, rng, report); break;
    case Suite::oracle: oracle_suite(options, rng, report); break;
  }
  report.lines.push_back(suite_name(options.suite) + ": " + std::to_string(report.trials) +
                         " trials, " + std::to_string(report.failures) + " failures, seed " +
                         std::to_string(options.seed));
  return report;
}

}  // namespace monoideal::verify
