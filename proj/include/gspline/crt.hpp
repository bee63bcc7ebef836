#pragma once

#include <span>
#include <variant>
#include <vector>

#include "gspline/ideal.hpp"

namespace gspline {

/// x ≡ residue mod modulus.
struct Congruence {
  RingValue residue;
  Ideal modulus;
};

/// Congruences `first` and `second` violate x_j - x_k ∈ I_j + I_k.
struct CrtInfeasible {
  std::size_t first;
  std::size_t second;
};

using CrtResult = std::variant<RingValue, CrtInfeasible>;

/// Elementwise CRT over Z or Z/mZ by left-to-right pairwise merging. The
/// solution is the least nonnegative residue modulo the combined ideal (the
/// exact value when some modulus is the zero ideal). An empty system yields 0
/// in `ring`.
CrtResult crt_solve(const RingDescriptor& ring, std::span<const Congruence> congruences);

/// Splits x into a_i ∈ ideals[i] with sum a_i == x.
///
/// Z and Z/mZ: greedy peeling by extended gcd against the gcd of the
/// remaining generators. Z[x]: cofactor search over the concatenated
/// generator lists; throws MembershipUndecided when membership is Unknown.
/// Throws NotInSum when x is not in the sum.
std::vector<RingValue> decompose_into_sum(const RingValue& x, std::span<const Ideal> ideals,
                                          const MembershipOptions& options = {});

}  // namespace gspline
