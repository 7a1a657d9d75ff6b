#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monoideal/poset.hpp"

namespace monoideal {

/// Minimal generators recovered from the socle of an augmented upset:
/// S_u(D(socle)). When `socle` is S_d(U(augment_up(G, a, b))) for an
/// antichain G with valid corners, the result is G.
/// Throws NotCofinite if D(socle) is not corner-bounded.
Antichain retrieve_generators(const Antichain& socle);

/// Generators of a monomial ideal whose socle is `socle`:
/// S_u(D(augment_down(socle, lower, upper))).
Antichain socle_to_generators(const Antichain& socle,
                              std::optional<LatticePoint> lower = std::nullopt,
                              std::optional<LatticePoint> upper = std::nullopt);

/// The unique zero-dimensional monomial ideal with the given socle, which
/// must be a nonempty antichain in N_0^d. Uses the lower corner -1 and the
/// given upper corner (default: the bounds' upper corner); the result does
/// not depend on that choice.
Antichain zero_dim_ideal_from_socle(const Antichain& socle,
                                    std::optional<LatticePoint> upper = std::nullopt);

/// Coordinates of two incomparable points split by comparison:
/// `less` = {i : p_i < q_i}, `equal` = {i : p_i = q_i}, `greater` = {i : p_i > q_i}.
/// Indices are 0-based.
struct PairPartition {
  std::vector<std::size_t> less;
  std::vector<std::size_t> equal;
  std::vector<std::size_t> greater;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

/// Throws NotAnAntichain if p and q are comparable.
PairPartition partition_pair(const LatticePoint& p, const LatticePoint& q);

/// Closed-form generators of the type-2 zero-dimensional ideal with socle
/// {p, q} (p, q incomparable, in N_0^d):
///   (p_i + 1) e_i + (q_j + 1) e_j  for i in less, j in greater,
///   (p_h + 1) e_h                  for h in equal or greater,
///   (q_h + 1) e_h                  for h in less.
/// There are |less| * |greater| + d of them.
Antichain type2_generators(const LatticePoint& p, const LatticePoint& q);

struct TypeClassification {
  bool zero_dimensional = false;
  /// Socle size; only set for zero-dimensional ideals.
  std::optional<std::size_t> type;
  bool gorenstein = false;

  friend bool operator==(const TypeClassification&, const TypeClassification&) = default;
};

/// Zero-dimensional iff every axis carries a pure-power generator. Then
/// `type` is the size of the socle and the ideal is Gorenstein iff the type
/// is one. The unit ideal (a zero generator) is zero-dimensional of type 0.
/// Throws PreconditionError on negative coordinates.
TypeClassification classify_type(const Antichain& generators);

}  // namespace monoideal
