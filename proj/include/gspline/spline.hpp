#pragma once

#include <map>
#include <string>
#include <vector>

#include "gspline/graph.hpp"

namespace gspline {

/// Vertex labeling ρ: V(G) -> R. Whether it is a spline (every edge
/// difference lies in the edge's ideal) is established by verify_spline.
class Spline {
public:
  /// values[v] for every vertex id; throws MissingValue or RingMismatch.
  Spline(EdgeLabeledGraph graph, std::vector<RingValue> values);

  static Spline constant(const EdgeLabeledGraph& graph, const RingValue& value);
  /// Throws MissingValue for an unlabeled vertex, UnknownVertex for a foreign name.
  static Spline from_map(const EdgeLabeledGraph& graph, const std::map<std::string, RingValue>& values);

  const EdgeLabeledGraph& graph() const noexcept { return graph_; }
  const std::vector<RingValue>& values() const noexcept { return values_; }
  const RingValue& value(VertexId v) const { return values_.at(v); }
  const RingValue& value(std::string_view name) const { return values_.at(graph_.id(name)); }

  /// ρ(u) - ρ(w).
  RingValue difference(VertexId u, VertexId w) const { return value(u) - value(w); }

  friend bool operator==(const Spline&, const Spline&) = default;

private:
  EdgeLabeledGraph graph_;
  std::vector<RingValue> values_;
};

enum class SplineStatus { Valid, Invalid, Unknown };

std::string_view to_string(SplineStatus s) noexcept;

struct SplineCheck {
  SplineStatus status = SplineStatus::Valid;
  /// Indices into graph.edges() whose difference is certified outside the label.
  std::vector<std::size_t> violations;
  /// Edges whose membership could not be decided (Z[x] only).
  std::vector<std::size_t> undecided;

  bool valid() const noexcept { return status == SplineStatus::Valid; }
};

SplineCheck verify_spline(const Spline& labeling, const MembershipOptions& options = {});

Spline add_splines(const Spline& a, const Spline& b);
Spline multiply_splines(const Spline& a, const Spline& b);
Spline scale_spline(const RingValue& r, const Spline& a);

/// Adds the constant r - a(v) everywhere so the result takes value r at v.
Spline translate_spline(const Spline& a, VertexId v, const RingValue& r);

bool is_path_graph(const EdgeLabeledGraph& g);
bool is_tree(const EdgeLabeledGraph& g);
bool is_cycle(const EdgeLabeledGraph& g);

// Builders. Each returns a verified spline with ρ(u) - ρ(w) == x and ρ(w) == 0.

/// Decomposes x along the unique u-w path and accumulates from w; vertices
/// off that path copy their nearest path vertex. Throws NotAPath, NotInSum.
Spline build_path_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                         const MembershipOptions& options = {});

/// As build_path_spline on a tree. Throws NotATree, NotInSum.
Spline build_tree_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                         const MembershipOptions& options = {});

/// Decomposes x independently along both u-w arcs. Throws NotACycle,
/// NotInIntersection.
Spline build_cycle_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                          const MembershipOptions& options = {});

/// Inductive construction over Z or Z/mZ: vertices are visited in BFS order
/// from u (w last); each new value solves the CRT system
/// ξ ≡ ρ(v_j) mod ⋂α(P), P over the v_j-v_i paths, for every labeled v_j
/// (w included, anchored at 0). Throws UnsupportedRing, NotInIntersection,
/// and CrtInfeasible if a system turns out unsolvable.
Spline build_spline_crt(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x);

/// Visiting order used by build_spline_crt.
std::vector<VertexId> crt_vertex_order(const EdgeLabeledGraph& g, VertexId u, VertexId w);

}  // namespace gspline
