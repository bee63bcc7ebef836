#pragma once

#include <string>

#include "gspline/ideal.hpp"

namespace gspline {

/// Ring automorphism descriptor. On Z[x] it is x -> epsilon * x + shift with
/// epsilon = ±1; on Z and Z/mZ only the identity (1, 0) is valid.
struct Automorphism {
  Int epsilon = 1;
  Int shift = 0;

  static Automorphism identity() { return {}; }
  bool is_identity() const noexcept { return epsilon == 1 && shift == 0; }
  Automorphism inverse() const;
  std::string to_string() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

/// The map v -> outer(inner(v)).
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

/// Throws InvalidAutomorphism when `phi` is not an automorphism of `ring`.
void validate_automorphism(const RingDescriptor& ring, const Automorphism& phi);

RingValue apply_automorphism(const Automorphism& phi, const RingValue& v);

/// Generator-wise image, renormalized.
Ideal apply_automorphism(const Automorphism& phi, const Ideal& ideal);

}  // namespace gspline
