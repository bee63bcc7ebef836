#pragma once

#include <string>
#include <string_view>

#include "gspline/integer.hpp"
#include "gspline/polynomial.hpp"

namespace gspline {

enum class RingKind { Integers, IntegersMod, IntegerPolynomials };

/// One of Z, Z/mZ (m >= 2) or Z[x].
class RingDescriptor {
public:
  static RingDescriptor integers() { return RingDescriptor(RingKind::Integers, 0, {}); }
  static RingDescriptor integers_mod(Int modulus);
  static RingDescriptor polynomials(std::string variable = "x");

  RingKind kind() const noexcept { return kind_; }
  Int modulus() const noexcept { return modulus_; }
  const std::string& variable() const noexcept { return variable_; }

  bool is_integers() const noexcept { return kind_ == RingKind::Integers; }
  bool is_integers_mod() const noexcept { return kind_ == RingKind::IntegersMod; }
  bool is_polynomials() const noexcept { return kind_ == RingKind::IntegerPolynomials; }
  /// Z and Z/mZ: every ideal principal, membership decided by divisibility.
  bool is_scalar() const noexcept { return kind_ != RingKind::IntegerPolynomials; }

  /// "Z", "Z/6Z", "Z[x]".
  std::string name() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

private:
  RingDescriptor(RingKind kind, Int modulus, std::string variable)
      : kind_(kind), modulus_(modulus), variable_(std::move(variable)) {}

  RingKind kind_;
  Int modulus_;
  std::string variable_;
};

/// Throws RingMismatch unless a == b.
void require_same_ring(const RingDescriptor& a, const RingDescriptor& b);

/// An exact element of a supported ring. Residues are kept in [0, m);
/// polynomials in canonical coefficient form.
class RingValue {
public:
  RingValue(RingDescriptor ring, Int scalar);
  RingValue(RingDescriptor ring, Poly poly);

  static RingValue zero(const RingDescriptor& ring);
  static RingValue one(const RingDescriptor& ring);

  const RingDescriptor& ring() const noexcept { return ring_; }
  /// Integer or residue payload. Throws UnsupportedRing for Z[x].
  Int scalar() const;
  /// Polynomial payload; scalars are promoted to constants.
  Poly poly() const;

  bool is_zero() const noexcept;

  RingValue operator-() const;
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  friend bool operator==(const RingValue& a, const RingValue& b);

  std::string to_string() const;

private:
  RingDescriptor ring_;
  Int scalar_ = 0;
  Poly poly_;
};

/// Decimal integer for Z and Z/mZ (reduced), polynomial text for Z[x].
RingValue parse_value(const RingDescriptor& ring, std::string_view text);

}  // namespace gspline
