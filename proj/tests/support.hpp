#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gspline/graph.hpp"

namespace gspline::testing {

inline std::string data_path(const std::string& name) { return std::string(GSPLINE_TEST_DATA) + "/" + name; }

inline std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

/// Random spanning tree plus each remaining pair with probability `extra`.
inline EdgeLabeledGraph random_connected_graph(std::mt19937& rng, const RingDescriptor& ring, std::size_t n,
                                               double extra, const std::function<Ideal()>& label) {
  const auto names = vertex_names(n);
  std::vector<EdgeSpec> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.push_back({names[parent], names[v], label()});
    used[parent][v] = used[v][parent] = true;
  }
  std::bernoulli_distribution coin(extra);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!used[a][b] && coin(rng)) edges.push_back({names[a], names[b], label()});
  return EdgeLabeledGraph(ring, names, std::move(edges));
}

/// Principal ideal on a divisor of m (m itself is the zero ideal).
inline std::function<Ideal()> divisor_labels(std::mt19937& rng, Int m) {
  std::vector<Int> divisors;
  for (Int d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  const auto ring = RingDescriptor::integers_mod(m);
  return [&rng, divisors, ring] {
    const Int d = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    return Ideal::principal(RingValue(ring, d));
  };
}

inline std::function<Ideal()> integer_labels(std::mt19937& rng, Int max) {
  const auto ring = RingDescriptor::integers();
  return [&rng, max, ring] { return Ideal::principal(RingValue(ring, std::uniform_int_distribution<Int>(1, max)(rng))); };
}

}  // namespace gspline::testing
