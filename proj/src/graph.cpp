#include "gspline/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gspline {

struct EdgeLabeledGraph::Data {
  RingDescriptor ring;
  std::vector<std::string> names;
  std::map<std::string, VertexId, std::less<>> index;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> adjacency;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_at;
};

EdgeLabeledGraph::EdgeLabeledGraph(RingDescriptor ring, std::vector<std::string> vertices,
                                   std::vector<EdgeSpec> edges) {
  auto d = std::make_shared<Data>(Data{std::move(ring), std::move(vertices), {}, {}, {}, {}});
  for (VertexId v = 0; v < d->names.size(); ++v) {
    if (d->names[v].empty()) throw Error(ErrorCode::InvalidGraph, "empty vertex name");
    if (!d->index.emplace(d->names[v], v).second)
      throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + d->names[v] + "'");
  }
  d->adjacency.resize(d->names.size());
  for (auto& spec : edges) {
    auto lookup = [&](const std::string& n) {
      auto it = d->index.find(n);
      if (it == d->index.end()) throw Error(ErrorCode::InvalidGraph, "edge references unknown vertex '" + n + "'");
      return it->second;
    };
    VertexId a = lookup(spec.from);
    VertexId b = lookup(spec.to);
    if (a == b) throw Error(ErrorCode::InvalidGraph, "loop at '" + spec.from + "'");
    require_same_ring(d->ring, spec.label.ring());
    if (a > b) std::swap(a, b);
    if (!d->edge_at.emplace(std::pair{a, b}, d->edges.size()).second)
      throw Error(ErrorCode::InvalidGraph, "parallel edge " + spec.from + "-" + spec.to);
    d->edges.push_back(Edge{a, b, std::move(spec.label)});
    d->adjacency[a].push_back(b);
    d->adjacency[b].push_back(a);
  }
  for (auto& nbrs : d->adjacency) std::sort(nbrs.begin(), nbrs.end());
  data_ = std::move(d);
}

const RingDescriptor& EdgeLabeledGraph::ring() const noexcept { return data_->ring; }
std::size_t EdgeLabeledGraph::vertex_count() const noexcept { return data_->names.size(); }
const std::vector<std::string>& EdgeLabeledGraph::vertex_names() const noexcept { return data_->names; }

const std::string& EdgeLabeledGraph::name(VertexId v) const {
  if (v >= data_->names.size()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v));
  return data_->names[v];
}

std::optional<VertexId> EdgeLabeledGraph::find(std::string_view name) const {
  auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

VertexId EdgeLabeledGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

const std::vector<Edge>& EdgeLabeledGraph::edges() const noexcept { return data_->edges; }

const std::vector<VertexId>& EdgeLabeledGraph::neighbors(VertexId v) const {
  name(v);
  return data_->adjacency[v];
}

bool EdgeLabeledGraph::adjacent(VertexId a, VertexId b) const {
  return data_->edge_at.contains({std::min(a, b), std::max(a, b)});
}

const Ideal& EdgeLabeledGraph::label(VertexId a, VertexId b) const {
  auto it = data_->edge_at.find({std::min(a, b), std::max(a, b)});
  if (it == data_->edge_at.end())
    throw Error(ErrorCode::InvalidPath, "no edge between '" + name(a) + "' and '" + name(b) + "'");
  return data_->edges[it->second].label;
}

std::vector<std::size_t> EdgeLabeledGraph::components() const {
  const std::size_t n = vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId nb : data_->adjacency[v])
        if (comp[nb] == unset) {
          comp[nb] = next;
          q.push(nb);
        }
    }
    ++next;
  }
  return comp;
}

bool EdgeLabeledGraph::connected(VertexId a, VertexId b) const {
  name(a);
  name(b);
  const auto comp = components();
  return comp[a] == comp[b];
}

bool EdgeLabeledGraph::is_connected() const {
  const auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

EdgeLabeledGraph EdgeLabeledGraph::induced(std::span<const VertexId> vertices) const {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<bool> inside(vertex_count(), false);
  std::vector<std::string> names;
  for (VertexId v : keep) {
    inside[v] = true;
    names.push_back(name(v));
  }
  std::vector<EdgeSpec> specs;
  for (const auto& e : data_->edges)
    if (inside[e.a] && inside[e.b]) specs.push_back({data_->names[e.a], data_->names[e.b], e.label});
  return EdgeLabeledGraph(data_->ring, std::move(names), std::move(specs));
}

bool operator==(const EdgeLabeledGraph& a, const EdgeLabeledGraph& b) {
  if (a.data_ == b.data_) return true;
  if (!(a.ring() == b.ring()) || a.vertex_names() != b.vertex_names() || a.edges().size() != b.edges().size())
    return false;
  for (const auto& e : a.edges()) {
    auto it = b.data_->edge_at.find({e.a, e.b});
    if (it == b.data_->edge_at.end() || !(b.data_->edges[it->second].label == e.label)) return false;
  }
  return true;
}

std::string render_path(const EdgeLabeledGraph& g, const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += " - ";
    s += g.name(p.vertices[i]);
  }
  return s;
}

void validate_path(const EdgeLabeledGraph& g, const Path& p) {
  if (p.vertices.size() < 2) throw Error(ErrorCode::InvalidPath, "a path needs at least one edge");
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const VertexId v = p.vertices[i];
    if (v >= g.vertex_count()) throw Error(ErrorCode::InvalidPath, "vertex id out of range");
    if (seen[v]) throw Error(ErrorCode::InvalidPath, "vertex '" + g.name(v) + "' repeats");
    seen[v] = true;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v))
      throw Error(ErrorCode::InvalidPath, "'" + g.name(p.vertices[i - 1]) + "' and '" + g.name(v) + "' are not adjacent");
  }
}

namespace {

void extend_paths(const EdgeLabeledGraph& g, VertexId target, std::vector<VertexId>& stack,
                  std::vector<bool>& on_stack, std::vector<Path>& out) {
  const VertexId v = stack.back();
  if (v == target) {
    out.push_back(Path{stack});
    return;
  }
  for (VertexId nb : g.neighbors(v)) {
    if (on_stack[nb]) continue;
    on_stack[nb] = true;
    stack.push_back(nb);
    extend_paths(g, target, stack, on_stack, out);
    stack.pop_back();
    on_stack[nb] = false;
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  g.name(u);
  g.name(w);
  if (u == w) throw Error(ErrorCode::SameVertex, "paths from '" + g.name(u) + "' to itself are not enumerated");
  std::vector<Path> out;
  std::vector<VertexId> stack{u};
  std::vector<bool> on_stack(g.vertex_count(), false);
  on_stack[u] = true;
  extend_paths(g, w, stack, on_stack, out);
  return out;
}

Ideal path_ideal(const EdgeLabeledGraph& g, const Path& p) {
  validate_path(g, p);
  Ideal acc = g.label(p.vertices[0], p.vertices[1]);
  for (std::size_t i = 2; i < p.vertices.size(); ++i) acc = ideal_sum(acc, g.label(p.vertices[i - 1], p.vertices[i]));
  return acc;
}

std::vector<Ideal> path_ideals(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  const auto paths = enumerate_paths(g, u, w);
  if (paths.empty())
    throw Error(ErrorCode::Disconnected, "'" + g.name(u) + "' and '" + g.name(w) + "' are not connected");
  std::vector<Ideal> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(path_ideal(g, p));
  return out;
}

Ideal paths_intersection_ideal(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  const auto ideals = path_ideals(g, u, w);
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

}  // namespace gspline
