#include "gspline/ring.hpp"

#include <charconv>

namespace gspline {

RingDescriptor RingDescriptor::integers_mod(Int modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidRing, "modulus must be at least 2, got " + std::to_string(modulus));
  return RingDescriptor(RingKind::IntegersMod, modulus, {});
}

RingDescriptor RingDescriptor::polynomials(std::string variable) {
  if (variable.empty()) throw Error(ErrorCode::InvalidRing, "empty polynomial variable name");
  return RingDescriptor(RingKind::IntegerPolynomials, 0, std::move(variable));
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::IntegersMod: return "Z/" + std::to_string(modulus_) + "Z";
    case RingKind::IntegerPolynomials: return "Z[" + variable_ + "]";
  }
  return "?";
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  if (!(a == b)) throw Error(ErrorCode::RingMismatch, a.name() + " vs " + b.name());
}

RingValue::RingValue(RingDescriptor ring, Int scalar) : ring_(std::move(ring)) {
  switch (ring_.kind()) {
    case RingKind::Integers: scalar_ = scalar; break;
    case RingKind::IntegersMod: scalar_ = floor_mod(scalar, ring_.modulus()); break;
    case RingKind::IntegerPolynomials: poly_ = Poly::constant(scalar); break;
  }
}

RingValue::RingValue(RingDescriptor ring, Poly poly) : ring_(std::move(ring)) {
  if (!ring_.is_polynomials()) {
    if (!poly.is_constant()) throw Error(ErrorCode::RingMismatch, "polynomial value in " + ring_.name());
    *this = RingValue(ring_, poly.coefficient(0));
    return;
  }
  poly_ = std::move(poly);
}

RingValue RingValue::zero(const RingDescriptor& ring) { return RingValue(ring, Int{0}); }
RingValue RingValue::one(const RingDescriptor& ring) { return RingValue(ring, Int{1}); }

Int RingValue::scalar() const {
  if (ring_.is_polynomials()) throw Error(ErrorCode::UnsupportedRing, "scalar payload requested in " + ring_.name());
  return scalar_;
}

Poly RingValue::poly() const { return ring_.is_polynomials() ? poly_ : Poly::constant(scalar_); }

bool RingValue::is_zero() const noexcept { return ring_.is_polynomials() ? poly_.is_zero() : scalar_ == 0; }

RingValue RingValue::operator-() const {
  if (ring_.is_polynomials()) return RingValue(ring_, -poly_);
  if (ring_.is_integers_mod()) return RingValue(ring_, ring_.modulus() - scalar_);
  return RingValue(ring_, checked_neg(scalar_));
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.ring_.is_polynomials()) return RingValue(a.ring_, a.poly_ + b.poly_);
  if (a.ring_.is_integers_mod()) return RingValue(a.ring_, floor_mod(checked_add(a.scalar_, b.scalar_), a.ring_.modulus()));
  return RingValue(a.ring_, checked_add(a.scalar_, b.scalar_));
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.ring_.is_polynomials()) return RingValue(a.ring_, a.poly_ - b.poly_);
  if (a.ring_.is_integers_mod()) return RingValue(a.ring_, floor_mod(checked_sub(a.scalar_, b.scalar_), a.ring_.modulus()));
  return RingValue(a.ring_, checked_sub(a.scalar_, b.scalar_));
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.ring_.is_polynomials()) return RingValue(a.ring_, a.poly_ * b.poly_);
  if (a.ring_.is_integers_mod()) return RingValue(a.ring_, mul_mod(a.scalar_, b.scalar_, a.ring_.modulus()));
  return RingValue(a.ring_, checked_mul(a.scalar_, b.scalar_));
}

bool operator==(const RingValue& a, const RingValue& b) {
  return a.ring_ == b.ring_ && a.scalar_ == b.scalar_ && a.poly_ == b.poly_;
}

std::string RingValue::to_string() const {
  if (ring_.is_polynomials()) return render(poly_, ring_.variable());
  return std::to_string(scalar_);
}

RingValue parse_value(const RingDescriptor& ring, std::string_view text) {
  if (ring.is_polynomials()) return RingValue(ring, parse_polynomial(text, ring.variable()));
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec == std::errc::result_out_of_range) throw Error(ErrorCode::Overflow, "integer literal '" + std::string(text) + "'");
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw Error(ErrorCode::Parse, "invalid integer literal '" + std::string(text) + "'");
  return RingValue(ring, v);
}

}  // namespace gspline
