#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gspline/integer.hpp"

namespace gspline {

/// Univariate polynomial with integer coefficients, stored as an ascending
/// coefficient sequence without trailing zeros. The zero polynomial is empty.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Int> coefficients);

  static Poly constant(Int c);
  static Poly monomial(Int c, std::size_t degree);
  static Poly variable() { return monomial(1, 1); }

  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Int coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Int leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Poly operator-() const;
  Poly scaled(Int factor) const;
  Int evaluate(Int point) const;
  /// p(epsilon * x + shift).
  Poly substitute_affine(Int epsilon, Int shift) const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Int content() const;
  /// Content removed, leading coefficient positive.
  Poly primitive_part() const;
  /// Multiplied by -1 when the leading coefficient is negative.
  Poly with_positive_leading() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

private:
  void trim();

  std::vector<Int> coeffs_;
};

/// lc(g)^(deg f - deg g + 1) * f mod g.
Poly pseudo_remainder(const Poly& f, const Poly& g);

/// q with f = q * g in Z[x], if it exists.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// gcd in the UFD Z[x], normalized to a positive leading coefficient.
Poly gcd(const Poly& f, const Poly& g);

/// f * g / gcd(f, g), positive leading coefficient.
Poly lcm(const Poly& f, const Poly& g);

/// Human-readable form, e.g. "x^2 - 9".
std::string render(const Poly& p, std::string_view var = "x");

/// Parses "x^2-9", "2*x + 1", "-x+3", "7". Throws Error(Parse).
Poly parse_polynomial(std::string_view text, std::string_view var = "x");

/// Arithmetic in F_p[x] on ascending coefficient vectors with entries in [0, p).
namespace modp {

std::vector<Int> reduce(const Poly& p, Int prime);
std::vector<Int> gcd(std::vector<Int> a, std::vector<Int> b, Int prime);
/// Remainder of a modulo b (b nonzero).
std::vector<Int> remainder(std::vector<Int> a, const std::vector<Int>& b, Int prime);
std::string render(const std::vector<Int>& p, std::string_view var = "x");

}  // namespace modp

}  // namespace gspline
