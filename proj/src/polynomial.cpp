#include "gspline/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gspline {

Poly::Poly(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(Int c) { return Poly(std::vector<Int>{c}); }

Poly Poly::monomial(Int c, std::size_t degree) {
  std::vector<Int> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(Int factor) const {
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(coeffs_[i], factor);
  return Poly(std::move(v));
}

Int Poly::evaluate(Int point) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, point), *it);
  return acc;
}

Poly Poly::substitute_affine(Int epsilon, Int shift) const {
  const Poly inner(std::vector<Int>{shift, epsilon});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Int Poly::content() const {
  Int g = 0;
  for (Int c : coeffs_) g = gcd(g, c);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  if (leading() < 0) c = -c;
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / c;
  return Poly(std::move(v));
}

Poly Poly::with_positive_leading() const { return leading() < 0 ? -*this : *this; }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coefficient(i), b.coefficient(i));
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_sub(a.coefficient(i), b.coefficient(i));
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return Poly(std::move(v));
}

Poly pseudo_remainder(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidRing, "pseudo-remainder by zero polynomial");
  Poly r = f;
  const Int lc = g.leading();
  const int dg = g.degree();
  int steps = std::max(f.degree() - dg + 1, 0);
  while (!r.is_zero() && r.degree() >= dg) {
    Poly shifted = Poly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dg)) * g;
    r = r.scaled(lc) - shifted;
    --steps;
  }
  for (; steps > 0; --steps) r = r.scaled(lc);
  return r;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) return f.is_zero() ? std::optional<Poly>(Poly{}) : std::nullopt;
  if (f.is_zero()) return Poly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Int> r = f.coefficients();
  std::vector<Int> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), 0);
  const auto& gc = g.coefficients();
  const Int lc = g.leading();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + gc.size() - 1;
    if (r[top] % lc != 0) return std::nullopt;
    const Int c = r[top] / lc;
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < gc.size(); ++j)
      r[static_cast<std::size_t>(k) + j] = checked_sub(r[static_cast<std::size_t>(k) + j], checked_mul(c, gc[j]));
  }
  if (std::any_of(r.begin(), r.end(), [](Int c) { return c != 0; })) return std::nullopt;
  return Poly(std::move(q));
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.with_positive_leading();
  if (g.is_zero()) return f.with_positive_leading();
  const Int c = gcd(f.content(), g.content());
  Poly a = f.primitive_part();
  Poly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive remainder sequence.
  while (!b.is_zero()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part().scaled(c);
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  auto q = divide_exact(f * g, gcd(f, g));
  if (!q) throw Error(ErrorCode::InvalidRing, "inexact division computing polynomial lcm");
  return q->with_positive_leading();
}

namespace {

std::string render_terms(const std::vector<Int>& c, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    Int a = c[k];
    if (a == 0) continue;
    const bool negative = a < 0;
    // Magnitude printed via unsigned to cover INT64_MIN.
    const auto mag = negative ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(a)
                              : static_cast<std::uint64_t>(a);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

std::string render(const Poly& p, std::string_view var) { return render_terms(p.coefficients(), var); }

Poly parse_polynomial(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial literal");
  const std::string where = "polynomial literal '" + std::string(text) + "'";

  std::size_t i = 0;
  auto read_uint = [&](Int& out) {
    const std::size_t start = i;
    Int value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      value = checked_add(checked_mul(value, 10), s[i] - '0');
      ++i;
    }
    if (i == start) return false;
    out = value;
    return true;
  };

  std::vector<Int> coeffs;
  bool first = true;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::Parse, where + ": expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    Int coeff = 1;
    const bool has_coeff = read_uint(coeff);
    std::size_t degree = 0;
    bool has_var = false;
    if (has_coeff && i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, var.size(), var) == 0) {
      has_var = true;
      i += var.size();
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        Int e = 0;
        if (!read_uint(e)) throw Error(ErrorCode::Parse, where + ": missing exponent");
        degree = static_cast<std::size_t>(e);
      }
    }
    if (!has_coeff && !has_var) throw Error(ErrorCode::Parse, where + ": malformed term at offset " + std::to_string(i));
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = checked_add(coeffs[degree], checked_mul(sign, coeff));
  }
  return Poly(std::move(coeffs));
}

namespace modp {

namespace {

void trim(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int inverse(Int a, Int p) {
  const auto b = extended_gcd(a, p);
  return floor_mod(b.s, p);
}

}  // namespace

std::vector<Int> reduce(const Poly& p, Int prime) {
  std::vector<Int> v;
  v.reserve(p.coefficients().size());
  for (Int c : p.coefficients()) v.push_back(floor_mod(c, prime));
  trim(v);
  return v;
}

std::vector<Int> remainder(std::vector<Int> a, const std::vector<Int>& b, Int prime) {
  const Int inv = inverse(b.back(), prime);
  while (!a.empty() && a.size() >= b.size()) {
    const Int factor = mul_mod(a.back(), inv, prime);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = floor_mod(a[shift + j] - mul_mod(factor, b[j], prime), prime);
    trim(a);
  }
  return a;
}

std::vector<Int> gcd(std::vector<Int> a, std::vector<Int> b, Int prime) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = remainder(a, b, prime);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Int inv = inverse(a.back(), prime);
    for (Int& c : a) c = mul_mod(c, inv, prime);
  }
  return a;
}

std::string render(const std::vector<Int>& p, std::string_view var) { return render_terms(p, var); }

}  // namespace modp

}  // namespace gspline
