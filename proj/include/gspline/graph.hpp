#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gspline/ideal.hpp"

namespace gspline {

using VertexId = std::size_t;

struct EdgeSpec {
  std::string from;
  std::string to;
  Ideal label;
};

/// Undirected edge with endpoints ordered a < b.
struct Edge {
  VertexId a;
  VertexId b;
  Ideal label;
};

/// Simple undirected graph with an ideal on every edge. Immutable; copies
/// share the same underlying data.
class EdgeLabeledGraph {
public:
  /// Throws InvalidGraph on loops, parallel edges, duplicate or unknown
  /// vertex names, and RingMismatch on foreign edge labels.
  EdgeLabeledGraph(RingDescriptor ring, std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  const RingDescriptor& ring() const noexcept;
  std::size_t vertex_count() const noexcept;
  const std::vector<std::string>& vertex_names() const noexcept;
  const std::string& name(VertexId v) const;
  /// Throws UnknownVertex.
  VertexId id(std::string_view name) const;
  std::optional<VertexId> find(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept;
  /// Ascending by vertex id, i.e. declaration order.
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  /// Throws InvalidPath when a and b are not adjacent.
  const Ideal& label(VertexId a, VertexId b) const;

  /// component[v] = index of v's connected component, numbered by first vertex.
  std::vector<std::size_t> components() const;
  bool connected(VertexId a, VertexId b) const;
  bool is_connected() const;

  /// Subgraph induced on `vertices`, keeping their relative declaration order.
  EdgeLabeledGraph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const EdgeLabeledGraph& a, const EdgeLabeledGraph& b);

private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Simple path: distinct vertices, consecutive ones adjacent.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t edge_count() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

std::string render_path(const EdgeLabeledGraph& g, const Path& p);

/// Throws InvalidPath unless p is a simple path of g with at least one edge.
void validate_path(const EdgeLabeledGraph& g, const Path& p);

/// All simple u-w paths, depth-first with neighbors in declaration order.
/// Empty iff u and w lie in different components. Throws SameVertex.
std::vector<Path> enumerate_paths(const EdgeLabeledGraph& g, VertexId u, VertexId w);

/// Sum of the labels along p.
Ideal path_ideal(const EdgeLabeledGraph& g, const Path& p);

/// path_ideal of every enumerated u-w path. Throws Disconnected when there is none.
std::vector<Ideal> path_ideals(const EdgeLabeledGraph& g, VertexId u, VertexId w);

/// Intersection of all u-w path ideals. Throws Disconnected, and
/// NonPrincipalIntersection over Z[x] when a non-principal ideal is met.
Ideal paths_intersection_ideal(const EdgeLabeledGraph& g, VertexId u, VertexId w);

}  // namespace gspline
