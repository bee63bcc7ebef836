#include "gspline/automorphism.hpp"

namespace gspline {

Automorphism Automorphism::inverse() const {
  // y = e*x + c  =>  x = e*y - e*c since e*e = 1.
  return {epsilon, checked_neg(checked_mul(epsilon, shift))};
}

std::string Automorphism::to_string() const {
  if (is_identity()) return "identity";
  std::string s = epsilon == 1 ? "x" : "-x";
  if (shift > 0) s += " + " + std::to_string(shift);
  if (shift < 0) s += " - " + std::to_string(-shift);
  return "x ↦ " + s;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  // inner(p)(x) = p(e2 x + c2); outer(inner(p))(x) = p(e2 (e1 x + c1) + c2).
  return {checked_mul(outer.epsilon, inner.epsilon),
          checked_add(checked_mul(inner.epsilon, outer.shift), inner.shift)};
}

void validate_automorphism(const RingDescriptor& ring, const Automorphism& phi) {
  if (ring.is_polynomials()) {
    if (phi.epsilon != 1 && phi.epsilon != -1)
      throw Error(ErrorCode::InvalidAutomorphism, "epsilon must be ±1, got " + std::to_string(phi.epsilon));
    return;
  }
  if (!phi.is_identity())
    throw Error(ErrorCode::InvalidAutomorphism, ring.name() + " admits only the identity automorphism");
}

RingValue apply_automorphism(const Automorphism& phi, const RingValue& v) {
  validate_automorphism(v.ring(), phi);
  if (!v.ring().is_polynomials()) return v;
  return RingValue(v.ring(), v.poly().substitute_affine(phi.epsilon, phi.shift));
}

Ideal apply_automorphism(const Automorphism& phi, const Ideal& ideal) {
  std::vector<RingValue> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply_automorphism(phi, g));
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace gspline
