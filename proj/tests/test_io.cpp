#include <filesystem>

#include "doctest.h"
#include "gspline/io.hpp"
#include "support.hpp"

using namespace gspline;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    io::graph_from_json(io::parse_json(text, "inline"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rings") {
  CHECK(io::parse_ring("Z") == RingDescriptor::integers());
  CHECK(io::parse_ring("Z/6") == RingDescriptor::integers_mod(6));
  CHECK(io::parse_ring("Z/6Z") == RingDescriptor::integers_mod(6));
  CHECK(io::parse_ring("Z[t]") == RingDescriptor::polynomials("t"));
  CHECK_THROWS_AS(io::parse_ring("Q"), Error);
  CHECK_THROWS_AS(io::parse_ring("Z/1"), Error);
  for (const auto& r : {RingDescriptor::integers(), RingDescriptor::integers_mod(12), RingDescriptor::polynomials()})
    CHECK(io::ring_from_json(io::ring_to_json(r)) == r);
}

TEST_CASE("values") {
  const auto zx = RingDescriptor::polynomials();
  const auto x2m9 = parse_value(zx, "x^2 - 9");
  CHECK(io::value_to_json(x2m9) == io::Json::parse("[-9, 0, 1]"));
  CHECK(io::value_from_json(zx, io::Json::parse("[-9, 0, 1]"), "v") == x2m9);
  CHECK(io::value_from_json(zx, io::Json("x^2-9"), "v") == x2m9);
  const auto z = RingDescriptor::integers();
  CHECK(io::value_from_json(z, io::Json("-12"), "v") == RingValue(z, -12));
  CHECK(io::value_from_json(RingDescriptor::integers_mod(5), io::Json(-1), "v").scalar() == 4);
  CHECK_THROWS_AS(io::value_from_json(z, io::Json(1.5), "v"), Error);
  CHECK_THROWS_AS(io::value_from_json(z, io::Json(18446744073709551615ull), "v"), Error);
}

TEST_CASE("graph, spline and iso files round-trip") {
  for (const char* name : {"path10.json", "tree.json", "cycle11.json", "bowtie.json", "triangle_square.json",
                           "zx_pasted_cycles.json", "zx_pasted_cycles_mirror.json", "cycle_z6.json"}) {
    CAPTURE(name);
    const auto g = io::read_graph_file(testing::data_path(name));
    const auto j = io::graph_to_json(g);
    CHECK(io::graph_from_json(j) == g);
    // Canonical output is a fixed point.
    CHECK(io::dump(io::graph_to_json(io::graph_from_json(io::parse_json(io::dump(j), "dump")))) == io::dump(j));
  }
  const auto s = io::read_spline_file(testing::data_path("tree_known_spline.json"));
  CHECK(io::spline_from_json(io::spline_to_json(s)) == s);
  const auto tmp = std::filesystem::temp_directory_path() / "gspline_io_roundtrip.json";
  io::write_text_file(tmp, io::dump(io::spline_to_json(s)));
  CHECK(io::read_spline_file(tmp) == s);
  std::filesystem::remove(tmp);

  const auto g = io::read_graph_file(testing::data_path("zx_pasted_cycles.json"));
  const auto h = io::read_graph_file(testing::data_path("zx_pasted_cycles_mirror.json"));
  const auto iso = io::read_iso_file(testing::data_path("zx_mirror_iso.json"), g, h);
  CHECK(iso.automorphism == Automorphism{-1, 0});
  CHECK(io::iso_from_json(io::iso_to_json(iso, g, h), g, h) == iso);
}

TEST_CASE("canonical edge order") {
  const auto g = io::graph_from_json(io::Json::parse(R"({
    "ring": "Z", "vertices": ["c", "b", "a"],
    "edges": [{"from": "c", "to": "b", "ideal": [3]}, {"from": "b", "to": "a", "ideal": ["4"]}]})"));
  const auto j = io::graph_to_json(g);
  CHECK(j["edges"][0]["from"] == "a");
  CHECK(j["edges"][0]["to"] == "b");
  CHECK(j["edges"][1]["from"] == "b");
  CHECK(j["edges"][1]["to"] == "c");
  CHECK(j["vertices"] == io::Json::parse(R"(["c", "b", "a"])"));
}

TEST_CASE("parse errors name the location") {
  CHECK(parse_error_of("{\n  \"ring\": \"Z\",\n  \"vertices\": [\"a\" \"b\"]\n}").find("line 3") != std::string::npos);
  CHECK(parse_error_of(R"({"ring": "Z", "vertices": ["a", "b"], "edges": [{"from": "a", "to": "b", "ideal": 2}]})")
            .find("edges[0].ideal") != std::string::npos);
  CHECK(parse_error_of(R"({"ring": {"kind": "reals"}, "vertices": [], "edges": []})").find("ring.kind") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"ring": "Z", "edges": []})").find("vertices") != std::string::npos);
  CHECK(parse_error_of(R"({"ring": "Z", "vertices": ["a", 3], "edges": []})").find("vertices[1]") !=
        std::string::npos);
}
