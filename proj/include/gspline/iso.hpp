#pragma once

#include <string>
#include <vector>

#include "gspline/automorphism.hpp"
#include "gspline/spline.hpp"

namespace gspline {

/// Candidate isomorphism (G, α) -> (G', α'): vertex_map[v] is the image of v,
/// paired with a ring automorphism applied to labels and values.
struct LabeledIso {
  std::vector<VertexId> vertex_map;
  Automorphism automorphism;

  static LabeledIso identity(std::size_t vertex_count);
  friend bool operator==(const LabeledIso&, const LabeledIso&) = default;
};

/// The iso v -> second(first(v)).
LabeledIso compose(const LabeledIso& second, const LabeledIso& first);
LabeledIso inverse(const LabeledIso& iso);

enum class IsoStatus { Valid, Invalid, Unknown };

std::string_view to_string(IsoStatus s) noexcept;

struct IsoCheck {
  IsoStatus status = IsoStatus::Valid;
  std::string reason;

  bool valid() const noexcept { return status == IsoStatus::Valid; }
};

/// Bijectivity, adjacency in both directions and φ₂(α(e)) == α'(φ₁(e)) on
/// every edge. Unknown only when a Z[x] ideal comparison is undecided.
/// Throws RingMismatch when the graphs live over different rings.
IsoCheck verify_iso(const EdgeLabeledGraph& g, const EdgeLabeledGraph& target, const LabeledIso& iso,
                    const MembershipOptions& options = {});

/// γ(φ₁(v)) = φ₂(ρ(v)). Throws InvalidIso unless verify_iso reports valid.
Spline transport_spline(const Spline& rho, const EdgeLabeledGraph& target, const LabeledIso& iso,
                        const MembershipOptions& options = {});

}  // namespace gspline
