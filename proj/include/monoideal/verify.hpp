#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monoideal::verify {

enum class Suite { roundtrip, duality, type2, type3, oracle };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct Options {
  Suite suite = Suite::roundtrip;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  /// Largest dimension drawn (roundtrip, duality, type2, oracle). The type3
  /// suite always draws 6 <= d <= 10.
  std::size_t max_dimension = 4;
  /// Largest number of points per random antichain (roundtrip, duality, oracle).
  std::size_t max_points = 5;
};

struct Report {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Human-readable lines; failing instances are printed as point
  /// documents so they can be fed back to the CLI.
  std::vector<std::string> lines;

  bool passed() const noexcept { return failures == 0; }
};

/// Runs one property suite with reproducible seeding.
Report run(const Options& options);

}  // namespace monoideal::verify
