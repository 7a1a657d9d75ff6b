#include "monoideal/lattice_point.hpp"

#include <ostream>

#include "monoideal/error.hpp"

namespace monoideal {

LatticePoint::value_type checked_add(LatticePoint::value_type a, LatticePoint::value_type b) {
  LatticePoint::value_type out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("coordinate overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

LatticePoint::value_type checked_sub(LatticePoint::value_type a, LatticePoint::value_type b) {
  LatticePoint::value_type out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("coordinate overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

LatticePoint LatticePoint::axis(std::size_t dimension, std::size_t axis, value_type value) {
  auto p = zero(dimension);
  p.coords_.at(axis) = value;
  return p;
}

LatticePoint LatticePoint::with(std::size_t i, value_type value) const {
  auto copy = *this;
  copy.coords_.at(i) = value;
  return copy;
}

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
  require_same_dimension(*this, other);
  std::vector<value_type> out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(coords_[i], other.coords_[i]);
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-(const LatticePoint& other) const {
  require_same_dimension(*this, other);
  std::vector<value_type> out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(coords_[i], other.coords_[i]);
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-() const {
  std::vector<value_type> out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(0, coords_[i]);
  return LatticePoint(std::move(out));
}

void require_same_dimension(const LatticePoint& a, const LatticePoint& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("dimension mismatch: " + to_string(a) + " vs " + to_string(b));
  }
}

bool leq(const LatticePoint& a, const LatticePoint& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strictly_less(const LatticePoint& a, const LatticePoint& b) { return a != b && leq(a, b); }

bool comparable(const LatticePoint& a, const LatticePoint& b) { return leq(a, b) || leq(b, a); }

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ')';
  return s;
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }

}  // namespace monoideal
