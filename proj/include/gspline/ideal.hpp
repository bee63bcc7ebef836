#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gspline/ring.hpp"

namespace gspline {

enum class Truth { False, True, Unknown };

std::string_view to_string(Truth t) noexcept;

/// Finitely generated ideal with a normalized generator list.
///
/// Z: one nonnegative generator (the gcd). Z/mZ: one generator d with d | m,
/// where 0 denotes the zero ideal. Z[x]: generators with positive leading
/// coefficient, constant generators merged into their gcd, duplicates and
/// zeros removed (not a canonical basis).
class Ideal {
public:
  Ideal(RingDescriptor ring, std::vector<RingValue> generators);

  static Ideal principal(const RingValue& generator);
  static Ideal zero(const RingDescriptor& ring);
  static Ideal unit(const RingDescriptor& ring);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const std::vector<RingValue>& generators() const noexcept { return generators_; }

  bool is_principal() const noexcept { return generators_.size() == 1; }
  /// The single generator; throws NonPrincipalIntersection when not principal.
  const RingValue& generator() const;
  bool is_zero() const noexcept { return generators_.size() == 1 && generators_.front().is_zero(); }
  /// Exact for Z and Z/mZ; for Z[x] true only when normalization produced <1>.
  bool is_unit() const noexcept;

  /// "⟨2⟩", "⟨6, x^2 - 9⟩".
  std::string to_string() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

private:
  RingDescriptor ring_;
  std::vector<RingValue> generators_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Z: lcm. Z/mZ: lcm in the divisor lattice of m. Z[x]: lcm of two principal
/// ideals; otherwise NonPrincipalIntersection.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Z and Z/mZ: the normalized generator does not divide the target.
struct DivisibilityWitness {
  RingValue generator;  // normalized generator d of the ideal
  RingValue remainder;  // target mod d, nonzero
};

/// Reduction to F_p[x]: the image of the target is not a multiple of the gcd
/// of the generators' images.
struct PrimeReduction {
  Int prime;
  std::string reason;
};

/// Evaluation homomorphism Z[x] -> Z at x = point: the target's value is not
/// divisible by the gcd of the generators' values.
struct EvaluationReduction {
  Int point;
  Int modulus;
  std::string reason;
};

using NonMembershipCertificate = std::variant<DivisibilityWitness, PrimeReduction, EvaluationReduction>;

std::string describe(const NonMembershipCertificate& certificate);

enum class Membership { Yes, No, Unknown };

std::string_view to_string(Membership m) noexcept;

struct MembershipVerdict {
  Membership outcome = Membership::Unknown;
  /// Yes only: aligned with the ideal's generators, sum(cofactors[i] * gens[i]) == target.
  std::vector<RingValue> cofactors;
  /// No only.
  std::optional<NonMembershipCertificate> certificate;

  bool yes() const noexcept { return outcome == Membership::Yes; }
  bool no() const noexcept { return outcome == Membership::No; }
};

struct MembershipOptions {
  /// Cofactor degree bound for Z[x]; default max(deg t, max deg g_i) + 4.
  std::optional<int> degree_bound;
};

/// Primes tried for F_p[x] non-membership certificates.
inline constexpr Int kCertificatePrimes[] = {2, 3, 5, 7, 11, 13};
/// Evaluation points tried after the primes.
inline constexpr Int kCertificatePoints[] = {0, 1, -1, 2, -2, 3, -3};

MembershipVerdict ideal_contains(const Ideal& ideal, const RingValue& target, const MembershipOptions& options = {});

/// Checks sum(cofactors[i] * generators[i]) == target exactly.
bool verify_cofactors(const Ideal& ideal, const RingValue& target, const std::vector<RingValue>& cofactors);

/// Re-checks a No certificate against the ideal and target from scratch.
bool verify_certificate(const Ideal& ideal, const RingValue& target, const NonMembershipCertificate& certificate);

/// a ⊆ b: every generator of a is a member of b.
Truth ideal_subset(const Ideal& a, const Ideal& b, const MembershipOptions& options = {});

Truth ideal_equal(const Ideal& a, const Ideal& b, const MembershipOptions& options = {});

/// Solves sum(f_i * gens[i]) == target over Z[x] with deg f_i <= degree_bound.
/// The generator list is used as given (no normalization).
std::optional<std::vector<Poly>> solve_polynomial_combination(const std::vector<Poly>& generators,
                                                              const Poly& target, int degree_bound);

}  // namespace gspline
