// Bindings over the JSON documents the CLI reads and writes. Graphs, splines
// and isomorphisms cross the boundary as JSON text; the package wraps them in
// dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gspline/cli.hpp"
#include "gspline/io.hpp"
#include "gspline/iso.hpp"
#include "gspline/udp.hpp"

namespace py = pybind11;
using namespace gspline;

namespace {

EdgeLabeledGraph graph_of(const std::string& text) { return io::graph_from_json(io::parse_json(text, "graph")); }

Spline spline_of(const std::string& text) { return io::spline_from_json(io::parse_json(text, "spline")); }

MembershipOptions membership(std::optional<int> degree_bound) {
  MembershipOptions o;
  o.degree_bound = degree_bound;
  return o;
}

std::vector<std::string> names(const EdgeLabeledGraph& g, const Path& p) {
  std::vector<std::string> out;
  for (VertexId v : p.vertices) out.push_back(g.name(v));
  return out;
}

std::string spline_json(const Spline& s) { return io::dump(io::spline_to_json(s)); }

std::optional<std::string> ideal_text(const std::optional<Ideal>& i) {
  return i ? std::optional<std::string>(i->to_string()) : std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized splines on edge-labeled graphs";

  // Messages start with the error code, e.g. "UnknownVertex: ...".
  py::register_exception<Error>(m, "GsplineError", PyExc_ValueError);

  m.def("canonical_graph", [](const std::string& g) { return io::dump(io::graph_to_json(graph_of(g))); });

  m.def("paths", [](const std::string& text, const std::string& u, const std::string& w) {
    const auto g = graph_of(text);
    std::vector<std::vector<std::string>> out;
    for (const auto& p : enumerate_paths(g, g.id(u), g.id(w))) out.push_back(names(g, p));
    return out;
  });

  m.def("path_ideal", [](const std::string& text, const std::vector<std::string>& path) {
    const auto g = graph_of(text);
    Path p;
    for (const auto& n : path) p.vertices.push_back(g.id(n));
    return path_ideal(g, p).to_string();
  });

  m.def("intersection", [](const std::string& text, const std::string& u, const std::string& w) {
    const auto g = graph_of(text);
    return path_intersection(g, g.id(u), g.id(w)).to_string();
  });

  m.def(
      "contains",
      [](const std::string& ring, const std::vector<std::string>& gens, const std::string& target,
         std::optional<int> degree_bound) {
        const auto r = io::parse_ring(ring);
        std::vector<RingValue> values;
        for (const auto& g : gens) values.push_back(parse_value(r, g));
        const auto v = ideal_contains(Ideal(r, values), parse_value(r, target), membership(degree_bound));
        return std::string(to_string(v.outcome));
      },
      py::arg("ring"), py::arg("generators"), py::arg("target"), py::arg("degree_bound") = py::none());

  m.def(
      "verify",
      [](const std::string& text, std::optional<int> degree_bound) {
        return std::string(to_string(verify_spline(spline_of(text), membership(degree_bound)).status));
      },
      py::arg("spline"), py::arg("degree_bound") = py::none());

  m.def(
      "build",
      [](const std::string& text, const std::string& u, const std::string& w, const std::string& x,
         const std::string& method, std::optional<std::string> cut, std::optional<int> degree_bound) {
        const auto g = graph_of(text);
        const VertexId a = g.id(u), b = g.id(w);
        const RingValue target = parse_value(g.ring(), x);
        const auto opts = membership(degree_bound);
        if (method == "path") return spline_json(build_path_spline(g, a, b, target, opts));
        if (method == "tree") return spline_json(build_tree_spline(g, a, b, target, opts));
        if (method == "cycle") return spline_json(build_cycle_spline(g, a, b, target, opts));
        if (method == "crt") return spline_json(build_spline_crt(g, a, b, target));
        if (method == "pasted") {
          if (!cut) throw Error(ErrorCode::Parse, "method 'pasted' needs a cut vertex");
          return spline_json(build_pasted_spline(g, find_cut_decomposition(g, g.id(*cut)), a, b, target, opts));
        }
        throw Error(ErrorCode::Parse, "unknown method '" + method + "'");
      },
      py::arg("graph"), py::arg("u"), py::arg("w"), py::arg("x"), py::arg("method") = "crt",
      py::arg("cut") = py::none(), py::arg("degree_bound") = py::none());

  m.def(
      "pasting_check",
      [](const std::string& text, const std::string& cut, const std::string& u, const std::string& w,
         std::optional<int> degree_bound) {
        const auto g = graph_of(text);
        const auto c = check_pasting_equation(g, find_cut_decomposition(g, g.id(cut)), g.id(u), g.id(w),
                                              membership(degree_bound));
        py::dict out;
        out["verdict"] = std::string(to_string(c.verdict));
        out["lhs"] = c.lhs.to_string();
        out["rhs_u"] = ideal_text(c.rhs_u);
        out["rhs_w"] = ideal_text(c.rhs_w);
        out["rhs"] = ideal_text(c.rhs);
        out["witness"] = c.witness ? py::object(py::str(c.witness->to_string())) : py::object(py::none());
        return out;
      },
      py::arg("graph"), py::arg("cut"), py::arg("u"), py::arg("w"), py::arg("degree_bound") = py::none());

  m.def(
      "udp_brute",
      [](const std::string& text, std::uint64_t budget, unsigned jobs) {
        const auto g = graph_of(text);
        const auto r = brute_force_udp(g, {budget, jobs});
        py::list pairs;
        for (const auto& p : r.pairs) {
          py::dict d;
          d["u"] = g.name(p.u);
          d["w"] = g.name(p.w);
          d["intersection"] = p.intersection.to_string();
          d["achievable"] = p.achievable;
          d["verdict"] = std::string(to_string(p.verdict));
          d["witness"] = p.witness;
          pairs.append(d);
        }
        py::dict out;
        out["verdict"] = std::string(to_string(r.verdict));
        out["splines"] = r.splines;
        out["pairs"] = pairs;
        return out;
      },
      py::arg("graph"), py::arg("budget") = BruteForceOptions{}.budget, py::arg("jobs") = 1u);

  m.def(
      "witness_check",
      [](const std::string& text, const std::string& x, const std::string& u, const std::string& w,
         std::optional<std::string> cut, std::optional<int> degree_bound) {
        const auto g = graph_of(text);
        std::optional<VertexId> z;
        if (cut) z = g.id(*cut);
        const auto r =
            verify_non_udp_witness(g, g.id(u), g.id(w), parse_value(g.ring(), x), z, membership(degree_bound));
        py::dict out;
        out["outcome"] = std::string(to_string(r.outcome));
        out["reason"] = r.reason;
        out["rhs"] = ideal_text(r.rhs);
        return out;
      },
      py::arg("graph"), py::arg("x"), py::arg("u") = "u", py::arg("w") = "w", py::arg("cut") = py::none(),
      py::arg("degree_bound") = py::none());

  m.def("verify_iso", [](const std::string& source, const std::string& target, const std::string& iso) {
    const auto g = graph_of(source), h = graph_of(target);
    const auto c = verify_iso(g, h, io::iso_from_json(io::parse_json(iso, "iso"), g, h));
    return py::make_tuple(std::string(to_string(c.status)), c.reason);
  });

  m.def("transport", [](const std::string& spline, const std::string& target, const std::string& iso) {
    const auto s = spline_of(spline);
    const auto h = graph_of(target);
    return spline_json(transport_spline(s, h, io::iso_from_json(io::parse_json(iso, "iso"), s.graph(), h)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
