#include "gspline/spline.hpp"

#include <algorithm>
#include <queue>

#include "gspline/crt.hpp"

namespace gspline {

std::string_view to_string(SplineStatus s) noexcept {
  switch (s) {
    case SplineStatus::Valid: return "valid";
    case SplineStatus::Invalid: return "invalid";
    case SplineStatus::Unknown: return "unknown";
  }
  return "?";
}

Spline::Spline(EdgeLabeledGraph graph, std::vector<RingValue> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (values_.size() != graph_.vertex_count())
    throw Error(ErrorCode::MissingValue, "labeling has " + std::to_string(values_.size()) + " values for " +
                                             std::to_string(graph_.vertex_count()) + " vertices");
  for (const auto& v : values_) require_same_ring(graph_.ring(), v.ring());
}

Spline Spline::constant(const EdgeLabeledGraph& graph, const RingValue& value) {
  return Spline(graph, std::vector<RingValue>(graph.vertex_count(), value));
}

Spline Spline::from_map(const EdgeLabeledGraph& graph, const std::map<std::string, RingValue>& values) {
  for (const auto& [name, _] : values) graph.id(name);
  std::vector<RingValue> ordered;
  ordered.reserve(graph.vertex_count());
  for (const auto& name : graph.vertex_names()) {
    auto it = values.find(name);
    if (it == values.end()) throw Error(ErrorCode::MissingValue, "no value for vertex '" + name + "'");
    ordered.push_back(it->second);
  }
  return Spline(graph, std::move(ordered));
}

SplineCheck verify_spline(const Spline& labeling, const MembershipOptions& options) {
  SplineCheck check;
  const auto& edges = labeling.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const auto v = ideal_contains(e.label, labeling.difference(e.a, e.b), options);
    if (v.no()) check.violations.push_back(i);
    else if (!v.yes()) check.undecided.push_back(i);
  }
  if (!check.violations.empty()) check.status = SplineStatus::Invalid;
  else if (!check.undecided.empty()) check.status = SplineStatus::Unknown;
  return check;
}

namespace {

void require_same_graph(const Spline& a, const Spline& b) {
  if (!(a.graph() == b.graph())) throw Error(ErrorCode::GraphMismatch, "splines live on different graphs");
}

template <typename Op>
Spline pointwise(const Spline& a, const Spline& b, Op op) {
  require_same_graph(a, b);
  std::vector<RingValue> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(op(a.values()[i], b.values()[i]));
  return Spline(a.graph(), std::move(out));
}

Spline require_verified(Spline s, std::string_view builder) {
  const auto check = verify_spline(s);
  if (!check.valid())
    throw Error(ErrorCode::Internal, std::string(builder) + " produced a labeling that is not a spline");
  return s;
}

}  // namespace

Spline add_splines(const Spline& a, const Spline& b) {
  return pointwise(a, b, [](const RingValue& x, const RingValue& y) { return x + y; });
}

Spline multiply_splines(const Spline& a, const Spline& b) {
  return pointwise(a, b, [](const RingValue& x, const RingValue& y) { return x * y; });
}

Spline scale_spline(const RingValue& r, const Spline& a) {
  require_same_ring(r.ring(), a.graph().ring());
  std::vector<RingValue> out;
  for (const auto& v : a.values()) out.push_back(r * v);
  return Spline(a.graph(), std::move(out));
}

Spline translate_spline(const Spline& a, VertexId v, const RingValue& r) {
  a.graph().name(v);
  const RingValue shift = r - a.value(v);
  std::vector<RingValue> out;
  for (const auto& value : a.values()) out.push_back(value + shift);
  return Spline(a.graph(), std::move(out));
}

namespace {

std::vector<std::size_t> degrees(const EdgeLabeledGraph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d[v] = g.neighbors(v).size();
  return d;
}

}  // namespace

bool is_tree(const EdgeLabeledGraph& g) {
  return g.vertex_count() > 0 && g.is_connected() && g.edges().size() + 1 == g.vertex_count();
}

bool is_path_graph(const EdgeLabeledGraph& g) {
  const auto d = degrees(g);
  return is_tree(g) && std::all_of(d.begin(), d.end(), [](std::size_t k) { return k <= 2; });
}

bool is_cycle(const EdgeLabeledGraph& g) {
  const auto d = degrees(g);
  return g.vertex_count() >= 3 && g.is_connected() && g.edges().size() == g.vertex_count() &&
         std::all_of(d.begin(), d.end(), [](std::size_t k) { return k == 2; });
}

namespace {

void check_endpoints(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x) {
  g.name(u);
  g.name(w);
  if (u == w) throw Error(ErrorCode::SameVertex, "u and w must differ");
  require_same_ring(g.ring(), x.ring());
}

// Labels the vertices of p (from u to w) with ρ(w) = 0 and consecutive
// differences taken from a decomposition of x over the edge labels.
void label_along(const EdgeLabeledGraph& g, const Path& p, const RingValue& x, std::vector<std::optional<RingValue>>& rho,
                 const MembershipOptions& options) {
  std::vector<Ideal> labels;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) labels.push_back(g.label(p.vertices[i - 1], p.vertices[i]));
  const auto parts = decompose_into_sum(x, labels, options);
  RingValue acc = RingValue::zero(g.ring());
  rho[p.vertices.back()] = acc;
  for (std::size_t i = parts.size(); i-- > 0;) {
    acc = acc + parts[i];
    rho[p.vertices[i]] = acc;
  }
}

// Every unlabeled vertex copies the value of the labeled vertex it is reached from.
std::vector<RingValue> spread_from_labeled(const EdgeLabeledGraph& g, std::vector<std::optional<RingValue>> rho) {
  std::queue<VertexId> q;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (rho[v]) q.push(v);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (VertexId nb : g.neighbors(v))
      if (!rho[nb]) {
        rho[nb] = rho[v];
        q.push(nb);
      }
  }
  std::vector<RingValue> out;
  for (auto& r : rho) out.push_back(r ? *r : RingValue::zero(g.ring()));
  return out;
}

Spline build_along_unique_path(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                               const MembershipOptions& options) {
  const auto paths = enumerate_paths(g, u, w);
  std::vector<std::optional<RingValue>> rho(g.vertex_count());
  label_along(g, paths.front(), x, rho, options);
  return Spline(g, spread_from_labeled(g, std::move(rho)));
}

}  // namespace

Spline build_path_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                         const MembershipOptions& options) {
  check_endpoints(g, u, w, x);
  if (!is_path_graph(g)) throw Error(ErrorCode::NotAPath, "graph is not a path");
  return require_verified(build_along_unique_path(g, u, w, x, options), "path builder");
}

Spline build_tree_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                         const MembershipOptions& options) {
  check_endpoints(g, u, w, x);
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  return require_verified(build_along_unique_path(g, u, w, x, options), "tree builder");
}

Spline build_cycle_spline(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                          const MembershipOptions& options) {
  check_endpoints(g, u, w, x);
  if (!is_cycle(g)) throw Error(ErrorCode::NotACycle, "graph is not a cycle");
  const auto paths = enumerate_paths(g, u, w);
  for (const auto& p : paths) {
    const Ideal I = path_ideal(g, p);
    const auto v = ideal_contains(I, x, options);
    if (v.no())
      throw Error(ErrorCode::NotInIntersection, x.to_string() + " ∉ α(" + render_path(g, p) + ") = " + I.to_string());
  }
  std::vector<std::optional<RingValue>> rho(g.vertex_count());
  for (const auto& p : paths) label_along(g, p, x, rho, options);
  return require_verified(Spline(g, spread_from_labeled(g, std::move(rho))), "cycle builder");
}

std::vector<VertexId> crt_vertex_order(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  std::vector<VertexId> order;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> q;
  q.push(u);
  seen[u] = true;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    if (v != w) order.push_back(v);
    for (VertexId nb : g.neighbors(v))
      if (!seen[nb]) {
        seen[nb] = true;
        q.push(nb);
      }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) order.push_back(v);
  order.push_back(w);
  return order;
}

Spline build_spline_crt(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x) {
  check_endpoints(g, u, w, x);
  const auto& ring = g.ring();
  if (!ring.is_scalar()) throw Error(ErrorCode::UnsupportedRing, "CRT construction over " + ring.name());
  if (!g.connected(u, w)) throw Error(ErrorCode::Disconnected, "'" + g.name(u) + "' and '" + g.name(w) + "' are not connected");
  const Ideal target = paths_intersection_ideal(g, u, w);
  if (!ideal_contains(target, x).yes())
    throw Error(ErrorCode::NotInIntersection, x.to_string() + " ∉ " + target.to_string());

  const auto comp = g.components();
  std::vector<std::optional<RingValue>> rho(g.vertex_count());
  std::vector<VertexId> labeled{u, w};
  rho[u] = x;
  rho[w] = RingValue::zero(ring);

  for (VertexId v : crt_vertex_order(g, u, w)) {
    if (rho[v]) continue;
    std::vector<Congruence> system;
    std::vector<VertexId> sources;
    for (VertexId j : labeled) {
      if (comp[j] != comp[v]) continue;
      system.push_back({*rho[j], paths_intersection_ideal(g, j, v)});
      sources.push_back(j);
    }
    const auto solved = crt_solve(ring, system);
    if (const auto* bad = std::get_if<CrtInfeasible>(&solved)) {
      throw Error(ErrorCode::CrtInfeasible, "congruences for '" + g.name(v) + "' from '" + g.name(sources[bad->first]) +
                                                "' and '" + g.name(sources[bad->second]) + "' are incompatible");
    }
    rho[v] = std::get<RingValue>(solved);
    labeled.push_back(v);
  }

  std::vector<RingValue> values;
  for (auto& r : rho) values.push_back(*r);
  return require_verified(Spline(g, std::move(values)), "CRT builder");
}

}  // namespace gspline
