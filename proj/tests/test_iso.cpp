#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gspline/io.hpp"
#include "gspline/iso.hpp"
#include "gspline/udp.hpp"
#include "support.hpp"

using namespace gspline;

namespace {

const RingDescriptor ZX = RingDescriptor::polynomials();

RingValue px(std::string_view s) { return parse_value(ZX, s); }

EdgeLabeledGraph load(const char* name) { return io::read_graph_file(testing::data_path(name)); }

// G relabeled by the permutation: vertex v of G becomes vertex perm[v].
EdgeLabeledGraph permuted(const EdgeLabeledGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::string> names(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) names[perm[v]] = "p" + g.name(v);
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) edges.push_back({names[perm[e.a]], names[perm[e.b]], e.label});
  return EdgeLabeledGraph(g.ring(), names, edges);
}

// Random spline on a Z/mZ graph: a random labeling filtered by the edge test.
std::optional<Spline> random_spline(std::mt19937& rng, const EdgeLabeledGraph& g) {
  const Int m = g.ring().modulus();
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<RingValue> values;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      values.emplace_back(g.ring(), std::uniform_int_distribution<Int>(0, m - 1)(rng));
    Spline s(g, values);
    if (verify_spline(s).valid()) return s;
  }
  return std::nullopt;
}

// A spline on the Z[x] pasted cycles: z = x^2 - 9, c = x + 3, d = x - 3, w = 0
// and the u side shifted by multiples of x.
Spline zx_spline(const EdgeLabeledGraph& g) {
  return Spline::from_map(g, {{"u", px("x^2+6x-9")},
                              {"a", px("x^2+3x-9")},
                              {"b", px("x^2+2x-9")},
                              {"z", px("x^2-9")},
                              {"c", px("x+3")},
                              {"d", px("x-3")},
                              {"w", RingValue(ZX, 0)}});
}

}  // namespace

TEST_CASE("verify_iso") {
  const auto path = load("path10.json");
  CHECK(verify_iso(path, path, LabeledIso::identity(path.vertex_count())).valid());

  const auto renamed = load("path10_renamed.json");
  CHECK(verify_iso(path, renamed, io::read_iso_file(testing::data_path("path10_rename_iso.json"), path, renamed)).valid());
  const auto broken = verify_iso(path, renamed, io::read_iso_file(testing::data_path("path10_broken_iso.json"), path, renamed));
  CHECK(broken.status == IsoStatus::Invalid);
  CHECK(broken.reason.find("not preserved") != std::string::npos);

  const auto zx = load("zx_pasted_cycles.json");
  const auto mirror = load("zx_pasted_cycles_mirror.json");
  const auto flip = io::read_iso_file(testing::data_path("zx_mirror_iso.json"), zx, mirror);
  CHECK(verify_iso(zx, mirror, flip).valid());
  // Without the automorphism the x + 3 and x - 3 labels do not line up.
  CHECK(verify_iso(zx, mirror, LabeledIso::identity(zx.vertex_count())).status == IsoStatus::Invalid);

  LabeledIso collapse = LabeledIso::identity(path.vertex_count());
  collapse.vertex_map[1] = 0;
  CHECK(verify_iso(path, path, collapse).status == IsoStatus::Invalid);
  LabeledIso bad_phi = LabeledIso::identity(path.vertex_count());
  bad_phi.automorphism = {-1, 0};
  CHECK(verify_iso(path, path, bad_phi).status == IsoStatus::Invalid);
  CHECK_THROWS_AS(verify_iso(path, zx, LabeledIso::identity(path.vertex_count())), Error);
}

TEST_CASE("transport on worked examples") {
  SUBCASE("identity") {
    const auto s = io::read_spline_file(testing::data_path("cycle11_known_spline.json"));
    CHECK(transport_spline(s, s.graph(), LabeledIso::identity(s.graph().vertex_count())) == s);
  }
  SUBCASE("vertex relabeling") {
    const auto s = io::read_spline_file(testing::data_path("path10_known_spline.json"));
    const auto renamed = load("path10_renamed.json");
    const auto iso = io::read_iso_file(testing::data_path("path10_rename_iso.json"), s.graph(), renamed);
    const auto t = transport_spline(s, renamed, iso);
    CHECK(verify_spline(t).valid());
    for (VertexId v = 0; v < s.graph().vertex_count(); ++v) {
      CHECK(t.value(iso.vertex_map[v]) == s.value(v));
      for (VertexId x = 0; x < s.graph().vertex_count(); ++x)
        CHECK(t.difference(iso.vertex_map[v], iso.vertex_map[x]) == s.difference(v, x));
    }
    const auto broken = io::read_iso_file(testing::data_path("path10_broken_iso.json"), s.graph(), renamed);
    CHECK_THROWS_AS(transport_spline(s, renamed, broken), Error);
  }
  SUBCASE("x -> -x on the Z[x] pasted cycles") {
    const auto g = load("zx_pasted_cycles.json");
    const auto mirror = load("zx_pasted_cycles_mirror.json");
    const auto s = zx_spline(g);
    REQUIRE(verify_spline(s).valid());
    const auto iso = io::read_iso_file(testing::data_path("zx_mirror_iso.json"), g, mirror);
    const auto t = transport_spline(s, mirror, iso);
    CHECK(verify_spline(t).valid());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto coeffs = s.value(v).poly().coefficients();
      for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
      CHECK(t.value(v) == RingValue(ZX, Poly(coeffs)));
    }
  }
}

TEST_CASE("transport over Z/mZ under random permutations") {
  std::mt19937 rng(41);
  int transported = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Int m = std::uniform_int_distribution<Int>(2, 6)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const auto ring = RingDescriptor::integers_mod(m);
    const auto g = testing::random_connected_graph(rng, ring, n, 0.4, testing::divisor_labels(rng, m));
    std::vector<VertexId> perm(n), perm2(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::iota(perm2.begin(), perm2.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(perm2.begin(), perm2.end(), rng);
    const auto h = permuted(g, perm);
    const auto k = permuted(h, perm2);
    const LabeledIso first{perm, {}}, second{perm2, {}};
    REQUIRE(verify_iso(g, h, first).valid());
    REQUIRE(verify_iso(h, k, second).valid());
    CHECK(verify_iso(h, g, inverse(first)).valid());

    // The achievable-difference sets carry over pair by pair.
    const auto bg = brute_force_udp(g), bh = brute_force_udp(h);
    CHECK(bg.verdict == bh.verdict);
    CHECK(bg.splines == bh.splines);

    const auto s = random_spline(rng, g);
    if (!s) continue;
    ++transported;
    const auto t = transport_spline(*s, h, first);
    CHECK(verify_spline(t).valid());
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b) CHECK(t.difference(perm[a], perm[b]) == s->difference(a, b));
    CHECK(transport_spline(t, k, second) == transport_spline(*s, k, compose(second, first)));
  }
  CHECK(transported > 50);
}
