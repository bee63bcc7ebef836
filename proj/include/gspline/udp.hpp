#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspline/spline.hpp"

namespace gspline {

/// G split at a cut vertex z into two sides that share only z.
struct PastingDecomposition {
  VertexId cut = 0;
  /// Both sides contain the cut vertex and are sorted by vertex id. side1 is
  /// the side holding the smallest non-cut vertex.
  std::vector<VertexId> side1;
  std::vector<VertexId> side2;

  bool in_side1(VertexId v) const;
  bool in_side2(VertexId v) const;
};

/// Throws NotACutVertex when G - z has a single component and
/// MoreThanTwoSides when it has more than two.
PastingDecomposition find_cut_decomposition(const EdgeLabeledGraph& g, VertexId z);

/// Decomposition with side1 given explicitly (z is added if missing), for
/// pastings where z also separates a side. Throws SidesViolated unless every
/// edge stays within one side and both sides are connected.
PastingDecomposition make_decomposition(const EdgeLabeledGraph& g, VertexId z, std::vector<VertexId> side1);

/// Intersection of u-w path ideals. Over Z[x] the intersection of
/// non-principal ideals is kept formally as the list of its terms.
struct PathIntersection {
  std::vector<Ideal> terms;
  std::optional<Ideal> value;

  std::string to_string() const;
};

PathIntersection path_intersection(const EdgeLabeledGraph& g, VertexId u, VertexId w);

/// Membership in a formal intersection: Yes iff Yes in every term, No if No
/// in some term, Unknown otherwise. Verdicts are aligned with `terms`.
struct IntersectionMembership {
  Membership outcome = Membership::Unknown;
  std::vector<MembershipVerdict> verdicts;
};

IntersectionMembership intersection_contains(const PathIntersection& p, const RingValue& x,
                                             const MembershipOptions& options = {});

enum class UdpVerdict { Holds, Fails, Unknown };

std::string_view to_string(UdpVerdict v) noexcept;

struct PastingCheck {
  UdpVerdict verdict = UdpVerdict::Unknown;
  VertexId u = 0;
  VertexId w = 0;
  VertexId cut = 0;
  /// Intersection over all u-w paths.
  PathIntersection lhs;
  /// Intersections over the u-z and z-w paths; absent when not principal.
  std::optional<Ideal> rhs_u;
  std::optional<Ideal> rhs_w;
  std::optional<Ideal> rhs;
  /// lhs ⊆ rhs_u and lhs ⊆ rhs_w; either one is enough for the equation.
  Truth lhs_in_u_side = Truth::Unknown;
  Truth lhs_in_w_side = Truth::Unknown;
  /// Fails only: an element of lhs outside rhs, with its memberships.
  std::optional<RingValue> witness;
  IntersectionMembership witness_in_lhs;
  std::optional<MembershipVerdict> witness_in_rhs;
};

/// Compares the u-w path intersection with the sum of the u-z and z-w
/// intersections. u and w must sit on opposite sides, neither equal to z
/// (SidesViolated otherwise); the pair is oriented so that u's side comes
/// first. Over Z[x], when equality cannot be decided, generators of the path
/// ideals and signed sums of up to three of them are tried as witnesses.
PastingCheck check_pasting_equation(const EdgeLabeledGraph& g, const PastingDecomposition& d, VertexId u,
                                    VertexId w, const MembershipOptions& options = {});

/// Every pair (a, b) with a in side1, b in side2, neither the cut, a < b by
/// side order: side1 vertices first.
std::vector<std::pair<VertexId, VertexId>> opposite_pairs(const PastingDecomposition& d);

/// Splits x = s + t over the two one-sided intersections, builds a spline on
/// each side, aligns them at z and glues. Throws PastingEquationFails when
/// the equation does not hold for (u, w) and NotInIntersection when x is
/// outside the path intersection.
Spline build_pasted_spline(const EdgeLabeledGraph& g, const PastingDecomposition& d, VertexId u, VertexId w,
                           const RingValue& x, const MembershipOptions& options = {});

struct BruteForceOptions {
  /// Upper bound on m^N.
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
};

struct PairReport {
  VertexId u = 0;
  VertexId w = 0;
  Ideal intersection;
  /// Sorted residues.
  std::vector<Int> achievable;
  std::vector<Int> expected;
  UdpVerdict verdict = UdpVerdict::Holds;
  /// Smallest expected difference that no spline achieves.
  std::optional<Int> witness;
};

struct UdpReport {
  UdpVerdict verdict = UdpVerdict::Holds;
  std::vector<PairReport> pairs;
  /// Splines with the first vertex of every component fixed to 0.
  std::uint64_t splines = 0;
};

/// Exhaustive search over Z/mZ. Differences are invariant under adding a
/// constant on a component, so the first vertex of each component is pinned
/// to 0. Throws UnsupportedRing off Z/mZ, BudgetExceeded when m^N exceeds
/// the budget.
UdpReport brute_force_udp(const EdgeLabeledGraph& g, const BruteForceOptions& options = {});

enum class WitnessOutcome { Confirmed, Rejected, Unconfirmed };

std::string_view to_string(WitnessOutcome o) noexcept;

struct WitnessReport {
  WitnessOutcome outcome = WitnessOutcome::Unconfirmed;
  std::string reason;
  std::vector<Path> paths;
  std::vector<Ideal> path_ideals;
  std::vector<MembershipVerdict> path_memberships;
  std::optional<PastingDecomposition> decomposition;
  std::optional<Ideal> rhs_u;
  std::optional<Ideal> rhs_w;
  std::optional<Ideal> rhs;
  std::optional<MembershipVerdict> rhs_membership;
};

/// Confirms that x lies in every u-w path ideal and that no spline reaches
/// it: through a pasting decomposition (x outside the sum of the one-sided
/// intersections) or, over Z/mZ, exhaustive search. `cut` is searched for
/// among the vertices separating u from w when not given. Rejected when x is
/// 0 or misses a path ideal; Unconfirmed when any step is undecided.
WitnessReport verify_non_udp_witness(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                                     std::optional<VertexId> cut = std::nullopt,
                                     const MembershipOptions& options = {});

}  // namespace gspline
