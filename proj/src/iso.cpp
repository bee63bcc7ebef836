#include "gspline/iso.hpp"

#include <numeric>

namespace gspline {

std::string_view to_string(IsoStatus s) noexcept {
  switch (s) {
    case IsoStatus::Valid: return "valid";
    case IsoStatus::Invalid: return "invalid";
    case IsoStatus::Unknown: return "unknown";
  }
  return "?";
}

LabeledIso LabeledIso::identity(std::size_t vertex_count) {
  LabeledIso iso;
  iso.vertex_map.resize(vertex_count);
  std::iota(iso.vertex_map.begin(), iso.vertex_map.end(), VertexId{0});
  return iso;
}

LabeledIso compose(const LabeledIso& second, const LabeledIso& first) {
  LabeledIso out;
  out.vertex_map.reserve(first.vertex_map.size());
  for (VertexId v : first.vertex_map) out.vertex_map.push_back(second.vertex_map.at(v));
  out.automorphism = compose(second.automorphism, first.automorphism);
  return out;
}

LabeledIso inverse(const LabeledIso& iso) {
  LabeledIso out;
  out.vertex_map.assign(iso.vertex_map.size(), 0);
  for (VertexId v = 0; v < iso.vertex_map.size(); ++v) out.vertex_map.at(iso.vertex_map[v]) = v;
  out.automorphism = iso.automorphism.inverse();
  return out;
}

IsoCheck verify_iso(const EdgeLabeledGraph& g, const EdgeLabeledGraph& target, const LabeledIso& iso,
                    const MembershipOptions& options) {
  require_same_ring(g.ring(), target.ring());
  auto invalid = [](std::string reason) { return IsoCheck{IsoStatus::Invalid, std::move(reason)}; };

  try {
    validate_automorphism(g.ring(), iso.automorphism);
  } catch (const Error& e) {
    return invalid(e.what());
  }
  const std::size_t n = g.vertex_count();
  if (iso.vertex_map.size() != n || target.vertex_count() != n)
    return invalid("vertex counts differ: map has " + std::to_string(iso.vertex_map.size()) + ", graphs have " +
                   std::to_string(n) + " and " + std::to_string(target.vertex_count()));
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId image = iso.vertex_map[v];
    if (image >= n) return invalid("image of '" + g.name(v) + "' is out of range");
    if (hit[image]) return invalid("'" + target.name(image) + "' is hit twice");
    hit[image] = true;
  }
  if (g.edges().size() != target.edges().size())
    return invalid("edge counts differ: " + std::to_string(g.edges().size()) + " and " +
                   std::to_string(target.edges().size()));

  IsoCheck result;
  for (const auto& e : g.edges()) {
    const VertexId a = iso.vertex_map[e.a], b = iso.vertex_map[e.b];
    const std::string edge = g.name(e.a) + "-" + g.name(e.b);
    if (!target.adjacent(a, b))
      return invalid("edge " + edge + " is not preserved: " + target.name(a) + "-" + target.name(b) + " is missing");
    const Ideal image = apply_automorphism(iso.automorphism, e.label);
    const Ideal& expected = target.label(a, b);
    switch (ideal_equal(image, expected, options)) {
      case Truth::True: break;
      case Truth::False:
        return invalid("label of " + edge + " maps to " + image.to_string() + ", target edge has " +
                       expected.to_string());
      case Truth::Unknown:
        result = {IsoStatus::Unknown, "cannot compare " + image.to_string() + " with " + expected.to_string()};
        break;
    }
  }
  // Equal edge counts plus an injective edge map make the inverse preserve edges too.
  return result;
}

Spline transport_spline(const Spline& rho, const EdgeLabeledGraph& target, const LabeledIso& iso,
                        const MembershipOptions& options) {
  const auto check = verify_iso(rho.graph(), target, iso, options);
  if (!check.valid()) throw Error(ErrorCode::InvalidIso, std::string(to_string(check.status)) + ": " + check.reason);
  std::vector<std::optional<RingValue>> values(target.vertex_count());
  for (VertexId v = 0; v < rho.graph().vertex_count(); ++v)
    values[iso.vertex_map[v]] = apply_automorphism(iso.automorphism, rho.value(v));
  std::vector<RingValue> flat;
  for (auto& v : values) flat.push_back(std::move(*v));
  return Spline(target, std::move(flat));
}

}  // namespace gspline
