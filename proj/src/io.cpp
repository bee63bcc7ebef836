#include "gspline/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace gspline::io {

namespace {

[[noreturn]] void fail(std::string_view field, const std::string& message) {
  throw Error(ErrorCode::Parse, "field '" + std::string(field) + "': " + message);
}

const Json& member(const Json& j, const char* key, std::string_view field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field, std::string("missing \"") + key + "\"");
  return *it;
}

std::string sub(std::string_view field, std::string_view key) { return std::string(field) + "." + std::string(key); }
std::string sub(std::string_view field, std::size_t index) {
  return std::string(field) + "[" + std::to_string(index) + "]";
}

Int integer_from_json(const Json& j, std::string_view field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      fail(field, "integer out of range");
    return j.get<Int>();
  }
  if (j.is_string()) {
    try {
      return parse_value(RingDescriptor::integers(), j.get<std::string>()).scalar();
    } catch (const Error& e) {
      fail(field, e.message());
    }
  }
  fail(field, "expected an integer");
}

std::string string_from_json(const Json& j, std::string_view field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

// Wraps core errors raised while assembling a parsed value so the message
// names the file.
template <class F>
auto with_source(std::string_view source, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source) + ": " + e.message());
  }
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string(source) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, path.string() + ": cannot write file");
  out << text;
}

RingDescriptor parse_ring(std::string_view text) {
  if (text == "Z") return RingDescriptor::integers();
  if (text.size() == 4 && text.substr(0, 2) == "Z[" && text.back() == ']' && std::isalpha(static_cast<unsigned char>(text[2])))
    return RingDescriptor::polynomials(std::string(1, text[2]));
  if (text.substr(0, 2) == "Z/") {
    std::string_view m = text.substr(2);
    if (!m.empty() && m.back() == 'Z') m.remove_suffix(1);
    if (!m.empty() && std::all_of(m.begin(), m.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      try {
        return RingDescriptor::integers_mod(std::stoll(std::string(m)));
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw Error(ErrorCode::Parse, "unrecognized ring '" + std::string(text) + "' (expected Z, Z/m or Z[x])");
}

Json ring_to_json(const RingDescriptor& ring) {
  Json j;
  switch (ring.kind()) {
    case RingKind::Integers: j["kind"] = "integers"; break;
    case RingKind::IntegersMod:
      j["kind"] = "integers_mod";
      j["modulus"] = ring.modulus();
      break;
    case RingKind::IntegerPolynomials:
      j["kind"] = "polynomials";
      j["variable"] = ring.variable();
      break;
  }
  return j;
}

RingDescriptor ring_from_json(const Json& j, std::string_view field) {
  if (j.is_string()) {
    try {
      return parse_ring(j.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.message());
    }
  }
  const std::string kind = string_from_json(member(j, "kind", field), sub(field, "kind"));
  if (kind == "integers") return RingDescriptor::integers();
  if (kind == "integers_mod") {
    const Int m = integer_from_json(member(j, "modulus", field), sub(field, "modulus"));
    if (m < 2) fail(sub(field, "modulus"), "modulus must be at least 2");
    return RingDescriptor::integers_mod(m);
  }
  if (kind == "polynomials") {
    std::string var = "x";
    if (j.contains("variable")) var = string_from_json(j["variable"], sub(field, "variable"));
    if (var.size() != 1 || !std::isalpha(static_cast<unsigned char>(var[0])))
      fail(sub(field, "variable"), "expected a single letter");
    return RingDescriptor::polynomials(var);
  }
  fail(sub(field, "kind"), "unknown ring kind '" + kind + "'");
}

Json value_to_json(const RingValue& v) {
  if (v.ring().is_scalar()) return v.scalar();
  Json arr = Json::array();
  const Poly p = v.poly();
  for (Int c : p.coefficients()) arr.push_back(c);
  return arr;
}

RingValue value_from_json(const RingDescriptor& ring, const Json& j, std::string_view field) {
  if (ring.is_polynomials()) {
    if (j.is_array()) {
      std::vector<Int> coeffs;
      for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(integer_from_json(j[i], sub(field, i)));
      return RingValue(ring, Poly(std::move(coeffs)));
    }
    if (j.is_string()) {
      try {
        return parse_value(ring, j.get<std::string>());
      } catch (const Error& e) {
        fail(field, e.message());
      }
    }
    return RingValue(ring, integer_from_json(j, field));
  }
  return RingValue(ring, integer_from_json(j, field));
}

Json graph_to_json(const EdgeLabeledGraph& g) {
  Json j;
  j["ring"] = ring_to_json(g.ring());
  j["vertices"] = g.vertex_names();
  struct Row {
    std::string lo, hi;
    const Ideal* label;
  };
  std::vector<Row> rows;
  for (const auto& e : g.edges()) {
    auto lo = g.name(e.a), hi = g.name(e.b);
    if (hi < lo) std::swap(lo, hi);
    rows.push_back({lo, hi, &e.label});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); });
  Json edges = Json::array();
  for (const auto& r : rows) {
    Json gens = Json::array();
    for (const auto& gen : r.label->generators()) gens.push_back(value_to_json(gen));
    edges.push_back(Json{{"from", r.lo}, {"to", r.hi}, {"ideal", gens}});
  }
  j["edges"] = edges;
  return j;
}

EdgeLabeledGraph graph_from_json(const Json& j) {
  const RingDescriptor ring = ring_from_json(member(j, "ring", "graph"), "ring");
  const Json& vs = member(j, "vertices", "graph");
  if (!vs.is_array()) fail("vertices", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) names.push_back(string_from_json(vs[i], sub("vertices", i)));
  const Json& es = member(j, "edges", "graph");
  if (!es.is_array()) fail("edges", "expected an array");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string f = sub("edges", i);
    std::string from = string_from_json(member(es[i], "from", f), sub(f, "from"));
    std::string to = string_from_json(member(es[i], "to", f), sub(f, "to"));
    const Json& ideal = member(es[i], "ideal", f);
    if (!ideal.is_array() || ideal.empty()) fail(sub(f, "ideal"), "expected a non-empty array of generators");
    std::vector<RingValue> gens;
    for (std::size_t k = 0; k < ideal.size(); ++k) gens.push_back(value_from_json(ring, ideal[k], sub(sub(f, "ideal"), k)));
    edges.push_back({std::move(from), std::move(to), Ideal(ring, std::move(gens))});
  }
  return EdgeLabeledGraph(ring, std::move(names), std::move(edges));
}

Json spline_to_json(const Spline& s, const std::optional<std::string>& graph_ref) {
  Json j;
  if (graph_ref) j["graph"] = *graph_ref;
  else j["graph"] = graph_to_json(s.graph());
  Json values = Json::object();
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v) values[s.graph().name(v)] = value_to_json(s.value(v));
  j["values"] = values;
  return j;
}

Spline spline_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& gj = member(j, "graph", "spline");
  const EdgeLabeledGraph g = gj.is_string() ? read_graph_file(base_dir / gj.get<std::string>()) : graph_from_json(gj);
  const Json& vj = member(j, "values", "spline");
  if (!vj.is_object()) fail("values", "expected an object mapping vertex names to values");
  std::map<std::string, RingValue> values;
  for (const auto& [name, value] : vj.items()) {
    if (!g.find(name)) fail(sub("values", name), "unknown vertex");
    values.emplace(name, value_from_json(g.ring(), value, sub("values", name)));
  }
  return Spline::from_map(g, values);
}

Json iso_to_json(const LabeledIso& iso, const EdgeLabeledGraph& source, const EdgeLabeledGraph& target) {
  Json j;
  Json map = Json::object();
  for (VertexId v = 0; v < source.vertex_count(); ++v) map[source.name(v)] = target.name(iso.vertex_map.at(v));
  j["vertex_map"] = map;
  if (iso.automorphism.is_identity()) j["automorphism"] = "identity";
  else j["automorphism"] = Json{{"epsilon", iso.automorphism.epsilon}, {"shift", iso.automorphism.shift}};
  return j;
}

LabeledIso iso_from_json(const Json& j, const EdgeLabeledGraph& source, const EdgeLabeledGraph& target) {
  const Json& mj = member(j, "vertex_map", "iso");
  if (!mj.is_object()) fail("vertex_map", "expected an object mapping names to names");
  LabeledIso iso;
  for (VertexId v = 0; v < source.vertex_count(); ++v) {
    auto it = mj.find(source.name(v));
    if (it == mj.end()) fail("vertex_map", "no image for '" + source.name(v) + "'");
    const auto image = target.find(string_from_json(*it, sub("vertex_map", source.name(v))));
    if (!image) fail(sub("vertex_map", source.name(v)), "'" + it->get<std::string>() + "' is not a target vertex");
    iso.vertex_map.push_back(*image);
  }
  for (const auto& [name, _] : mj.items())
    if (!source.find(name)) fail(sub("vertex_map", name), "unknown source vertex");
  if (j.contains("automorphism")) {
    const Json& a = j["automorphism"];
    if (a.is_string()) {
      if (a.get<std::string>() != "identity") fail("automorphism", "expected \"identity\" or an object");
    } else {
      iso.automorphism.epsilon = integer_from_json(member(a, "epsilon", "automorphism"), "automorphism.epsilon");
      if (a.contains("shift")) iso.automorphism.shift = integer_from_json(a["shift"], "automorphism.shift");
    }
  }
  return iso;
}

EdgeLabeledGraph read_graph_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  return with_source(path.string(), [&] { return graph_from_json(j); });
}

Spline read_spline_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  return with_source(path.string(), [&] { return spline_from_json(j, path.parent_path()); });
}

LabeledIso read_iso_file(const std::filesystem::path& path, const EdgeLabeledGraph& source,
                         const EdgeLabeledGraph& target) {
  const Json j = read_json_file(path);
  return with_source(path.string(), [&] { return iso_from_json(j, source, target); });
}

}  // namespace gspline::io
