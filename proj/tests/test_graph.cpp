#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gspline/io.hpp"
#include "support.hpp"

using namespace gspline;

namespace {

const RingDescriptor Z = RingDescriptor::integers();

Ideal zi(Int d) { return Ideal::principal(RingValue(Z, d)); }

// Every simple u-w path, found by trying each ordered selection of
// intermediate vertices.
std::set<std::vector<VertexId>> paths_by_permutation(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  std::vector<VertexId> others;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != u && v != w) others.push_back(v);
  std::set<std::vector<VertexId>> out;
  const std::size_t k = others.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<VertexId> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) chosen.push_back(others[i]);
    do {
      std::vector<VertexId> seq{u};
      seq.insert(seq.end(), chosen.begin(), chosen.end());
      seq.push_back(w);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) ok = g.adjacent(seq[i], seq[i + 1]);
      if (ok) out.insert(seq);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction is validated") {
  const std::vector<std::string> names{"a", "b", "c"};
  CHECK_NOTHROW(EdgeLabeledGraph(Z, names, {{"a", "b", zi(2)}}));
  CHECK_THROWS_AS(EdgeLabeledGraph(Z, names, {{"a", "a", zi(2)}}), Error);
  CHECK_THROWS_AS(EdgeLabeledGraph(Z, names, {{"a", "b", zi(2)}, {"b", "a", zi(3)}}), Error);
  CHECK_THROWS_AS(EdgeLabeledGraph(Z, names, {{"a", "d", zi(2)}}), Error);
  CHECK_THROWS_AS(EdgeLabeledGraph(Z, {"a", "a"}, {}), Error);
  const auto z6 = RingDescriptor::integers_mod(6);
  CHECK_THROWS_AS(EdgeLabeledGraph(Z, names, {{"a", "b", Ideal::principal(RingValue(z6, 2))}}), Error);
}

TEST_CASE("graph accessors") {
  const auto g = io::read_graph_file(testing::data_path("bowtie.json"));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edges().size() == 6);
  const VertexId u = g.id("u"), z = g.id("z"), w = g.id("w");
  CHECK(g.adjacent(u, z));
  CHECK_FALSE(g.adjacent(u, w));
  CHECK(g.label(z, w) == zi(3));
  CHECK_THROWS_AS(g.label(u, w), Error);
  CHECK_THROWS_AS(g.id("nope"), Error);
  CHECK(g.is_connected());

  const std::vector<VertexId> keep{u, g.id("a"), z};
  const auto tri = g.induced(keep);
  CHECK(tri.vertex_names() == std::vector<std::string>{"u", "a", "z"});
  CHECK(tri.edges().size() == 3);
}

TEST_CASE("path enumeration on the bowtie is depth first in declaration order") {
  const auto g = io::read_graph_file(testing::data_path("bowtie.json"));
  std::vector<std::string> rendered;
  for (const auto& p : enumerate_paths(g, g.id("u"), g.id("w"))) rendered.push_back(render_path(g, p));
  CHECK(rendered == std::vector<std::string>{"u - a - z - b - w", "u - a - z - w", "u - z - b - w", "u - z - w"});
  CHECK_THROWS_AS(enumerate_paths(g, g.id("u"), g.id("u")), Error);
}

TEST_CASE("path enumeration matches an exhaustive permutation search") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    // Sparse or dense, occasionally disconnected by dropping edges.
    const double extra = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
    auto g = testing::random_connected_graph(rng, Z, n, extra, testing::integer_labels(rng, 9));
    if (trial % 5 == 0 && !g.edges().empty()) {
      std::vector<EdgeSpec> kept;
      for (std::size_t i = 1; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        kept.push_back({g.name(e.a), g.name(e.b), e.label});
      }
      g = EdgeLabeledGraph(Z, g.vertex_names(), kept);
    }
    for (VertexId u = 0; u < n; ++u)
      for (VertexId w = 0; w < n; ++w) {
        if (u == w) continue;
        const auto found = enumerate_paths(g, u, w);
        std::set<std::vector<VertexId>> as_set;
        for (const auto& p : found) {
          validate_path(g, p);
          as_set.insert(p.vertices);
        }
        CHECK(as_set.size() == found.size());
        CHECK(as_set == paths_by_permutation(g, u, w));
        CHECK(found.empty() == !g.connected(u, w));
      }
  }
}

TEST_CASE("path ideals") {
  const auto path = io::read_graph_file(testing::data_path("path10.json"));
  const auto ideals = path_ideals(path, path.id("u"), path.id("w"));
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0] == zi(2));

  const auto cycle = io::read_graph_file(testing::data_path("cycle11.json"));
  const auto both = path_ideals(cycle, cycle.id("u"), cycle.id("w"));
  REQUIRE(both.size() == 2);
  CHECK(both[0] == zi(2));
  CHECK(both[1] == zi(1));
  // <2> ∩ <1> is <2>.
  CHECK(paths_intersection_ideal(cycle, cycle.id("u"), cycle.id("w")) == zi(2));

  const EdgeLabeledGraph split(Z, {"a", "b", "c"}, {{"a", "b", zi(2)}});
  CHECK_THROWS_AS(path_ideals(split, 0, 2), Error);
  CHECK_THROWS_AS(validate_path(split, Path{{0, 2}}), Error);
  CHECK_THROWS_AS(validate_path(split, Path{{0}}), Error);
}
