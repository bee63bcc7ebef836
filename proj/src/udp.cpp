#include "gspline/udp.hpp"

#include <algorithm>
#include <queue>
#include <thread>

#include "gspline/crt.hpp"

namespace gspline {

std::string_view to_string(UdpVerdict v) noexcept {
  switch (v) {
    case UdpVerdict::Holds: return "holds";
    case UdpVerdict::Fails: return "fails";
    case UdpVerdict::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(WitnessOutcome o) noexcept {
  switch (o) {
    case WitnessOutcome::Confirmed: return "confirmed";
    case WitnessOutcome::Rejected: return "rejected";
    case WitnessOutcome::Unconfirmed: return "unconfirmed";
  }
  return "?";
}

bool PastingDecomposition::in_side1(VertexId v) const { return std::binary_search(side1.begin(), side1.end(), v); }
bool PastingDecomposition::in_side2(VertexId v) const { return std::binary_search(side2.begin(), side2.end(), v); }

PastingDecomposition find_cut_decomposition(const EdgeLabeledGraph& g, VertexId z) {
  const std::size_t n = g.vertex_count();
  g.name(z);
  std::vector<int> comp(n, -1);
  comp[z] = -2;
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId nb : g.neighbors(v))
        if (comp[nb] == -1) {
          comp[nb] = count;
          q.push(nb);
        }
    }
    ++count;
  }
  if (count < 2) throw Error(ErrorCode::NotACutVertex, "removing '" + g.name(z) + "' leaves the graph connected");
  if (count > 2)
    throw Error(ErrorCode::MoreThanTwoSides,
                "removing '" + g.name(z) + "' leaves " + std::to_string(count) + " components; pasting takes two sides");
  std::vector<bool> touches(2, false);
  for (VertexId nb : g.neighbors(z)) touches[comp[nb]] = true;
  if (!touches[0] || !touches[1]) throw Error(ErrorCode::Disconnected, "graph is not connected");

  PastingDecomposition d;
  d.cut = z;
  for (VertexId v = 0; v < n; ++v) {
    if (v == z || comp[v] == 0) d.side1.push_back(v);
    if (v == z || comp[v] == 1) d.side2.push_back(v);
  }
  return d;
}

PastingDecomposition make_decomposition(const EdgeLabeledGraph& g, VertexId z, std::vector<VertexId> side1) {
  const std::size_t n = g.vertex_count();
  g.name(z);
  std::vector<bool> first(n, false);
  for (VertexId v : side1) {
    g.name(v);
    first[v] = true;
  }
  first[z] = true;
  PastingDecomposition d;
  d.cut = z;
  for (VertexId v = 0; v < n; ++v) {
    if (first[v]) d.side1.push_back(v);
    if (v == z || !first[v]) d.side2.push_back(v);
  }
  if (d.side1.size() < 2 || d.side2.size() < 2)
    throw Error(ErrorCode::SidesViolated, "both sides need a vertex besides '" + g.name(z) + "'");
  for (const auto& e : g.edges())
    if (e.a != z && e.b != z && first[e.a] != first[e.b])
      throw Error(ErrorCode::SidesViolated, "edge " + g.name(e.a) + "-" + g.name(e.b) + " crosses the sides");
  for (const auto* side : {&d.side1, &d.side2})
    if (!g.induced(*side).is_connected())
      throw Error(ErrorCode::SidesViolated, "a side is not connected");
  return d;
}

std::string PathIntersection::to_string() const {
  if (value) return value->to_string();
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ∩ ";
    out += t.to_string();
  }
  return out;
}

PathIntersection path_intersection(const EdgeLabeledGraph& g, VertexId u, VertexId w) {
  PathIntersection p;
  p.terms = path_ideals(g, u, w);
  std::vector<Ideal> distinct;
  for (const auto& t : p.terms)
    if (std::find(distinct.begin(), distinct.end(), t) == distinct.end()) distinct.push_back(t);
  try {
    Ideal acc = distinct.front();
    for (std::size_t i = 1; i < distinct.size(); ++i) acc = ideal_intersect(acc, distinct[i]);
    p.value = std::move(acc);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonPrincipalIntersection) throw;
  }
  return p;
}

IntersectionMembership intersection_contains(const PathIntersection& p, const RingValue& x,
                                             const MembershipOptions& options) {
  IntersectionMembership r;
  bool all_yes = true, any_no = false;
  for (const auto& t : p.terms) {
    r.verdicts.push_back(ideal_contains(t, x, options));
    all_yes = all_yes && r.verdicts.back().yes();
    any_no = any_no || r.verdicts.back().no();
  }
  r.outcome = any_no ? Membership::No : all_yes ? Membership::Yes : Membership::Unknown;
  return r;
}

namespace {

void require_opposite(const EdgeLabeledGraph& g, const PastingDecomposition& d, VertexId u, VertexId w) {
  const bool ok = u != d.cut && w != d.cut &&
                  ((d.in_side1(u) && d.in_side2(w)) || (d.in_side2(u) && d.in_side1(w)));
  if (!ok)
    throw Error(ErrorCode::SidesViolated,
                "'" + g.name(u) + "' and '" + g.name(w) + "' are not on opposite sides of '" + g.name(d.cut) + "'");
}

// Generators of the path ideals, then signed sums of two and three of them.
std::vector<RingValue> witness_candidates(const PastingCheck& c) {
  std::vector<RingValue> gens;
  auto add = [&gens](const RingValue& v) {
    if (!v.is_zero() && std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
  };
  if (c.lhs.value)
    for (const auto& g : c.lhs.value->generators()) add(g);
  for (const auto& t : c.lhs.terms)
    for (const auto& g : t.generators()) add(g);

  std::vector<RingValue> out = gens;
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      out.push_back(gens[i] + gens[j]);
      out.push_back(gens[i] - gens[j]);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        for (int sj : {1, -1})
          for (int sl : {1, -1}) {
            RingValue v = gens[i];
            v = sj > 0 ? v + gens[j] : v - gens[j];
            v = sl > 0 ? v + gens[l] : v - gens[l];
            out.push_back(v);
          }
  std::vector<RingValue> distinct;
  for (auto& v : out)
    if (!v.is_zero() && std::find(distinct.begin(), distinct.end(), v) == distinct.end())
      distinct.push_back(std::move(v));
  return distinct;
}

bool find_witness(PastingCheck& c, const MembershipOptions& options) {
  if (!c.rhs) return false;
  for (const auto& candidate : witness_candidates(c)) {
    auto out = ideal_contains(*c.rhs, candidate, options);
    if (!out.no()) continue;
    auto in = intersection_contains(c.lhs, candidate, options);
    if (in.outcome != Membership::Yes) continue;
    c.witness = candidate;
    c.witness_in_lhs = std::move(in);
    c.witness_in_rhs = std::move(out);
    return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> opposite_pairs(const PastingDecomposition& d) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a : d.side1)
    for (VertexId b : d.side2)
      if (a != d.cut && b != d.cut) out.emplace_back(a, b);
  return out;
}

PastingCheck check_pasting_equation(const EdgeLabeledGraph& g, const PastingDecomposition& d, VertexId u,
                                    VertexId w, const MembershipOptions& options) {
  require_opposite(g, d, u, w);
  PastingCheck c;
  c.u = u;
  c.w = w;
  c.cut = d.cut;
  c.lhs = path_intersection(g, u, w);
  c.rhs_u = path_intersection(g, u, d.cut).value;
  c.rhs_w = path_intersection(g, d.cut, w).value;
  if (c.rhs_u && c.rhs_w) c.rhs = ideal_sum(*c.rhs_u, *c.rhs_w);

  if (c.lhs.value) {
    if (c.rhs_u) c.lhs_in_u_side = ideal_subset(*c.lhs.value, *c.rhs_u, options);
    if (c.rhs_w) c.lhs_in_w_side = ideal_subset(*c.lhs.value, *c.rhs_w, options);
  }

  Truth equal = Truth::Unknown;
  if (c.lhs.value && c.rhs) equal = ideal_equal(*c.lhs.value, *c.rhs, options);

  if (equal == Truth::True) {
    c.verdict = UdpVerdict::Holds;
    return c;
  }
  if (equal == Truth::False) {
    for (const auto& gen : c.lhs.value->generators()) {
      auto out = ideal_contains(*c.rhs, gen, options);
      if (!out.no()) continue;
      c.witness = gen;
      c.witness_in_lhs = intersection_contains(c.lhs, gen, options);
      c.witness_in_rhs = std::move(out);
      break;
    }
    if (!c.witness && !find_witness(c, options))
      throw Error(ErrorCode::Internal, "pasting equation fails without a generator witness");
    c.verdict = UdpVerdict::Fails;
    return c;
  }
  if (find_witness(c, options)) {
    c.verdict = UdpVerdict::Fails;
    if (c.rhs_u && ideal_contains(*c.rhs_u, *c.witness, options).no()) c.lhs_in_u_side = Truth::False;
    if (c.rhs_w && ideal_contains(*c.rhs_w, *c.witness, options).no()) c.lhs_in_w_side = Truth::False;
  }
  return c;
}

namespace {

Spline build_side(const EdgeLabeledGraph& g, VertexId a, VertexId b, const RingValue& x,
                  const MembershipOptions& options) {
  if (g.ring().is_scalar()) return build_spline_crt(g, a, b, x);
  if (is_tree(g)) return build_tree_spline(g, a, b, x, options);
  if (is_cycle(g)) return build_cycle_spline(g, a, b, x, options);
  throw Error(ErrorCode::UnsupportedRing, "no side builder for a " + g.ring().name() + " side that is not a tree or cycle");
}

VertexId local_id(const std::vector<VertexId>& side, VertexId v) {
  return static_cast<VertexId>(std::lower_bound(side.begin(), side.end(), v) - side.begin());
}

}  // namespace

Spline build_pasted_spline(const EdgeLabeledGraph& g, const PastingDecomposition& d, VertexId u, VertexId w,
                           const RingValue& x, const MembershipOptions& options) {
  require_same_ring(g.ring(), x.ring());
  auto check = check_pasting_equation(g, d, u, w, options);
  if (check.verdict != UdpVerdict::Holds)
    throw Error(ErrorCode::PastingEquationFails,
                "pasting equation " + std::string(to_string(check.verdict)) + " for " + g.name(u) + ", " + g.name(w));
  auto in = ideal_contains(*check.lhs.value, x, options);
  if (in.outcome == Membership::Unknown)
    throw Error(ErrorCode::MembershipUndecided, x.to_string() + " in " + check.lhs.value->to_string());
  if (!in.yes())
    throw Error(ErrorCode::NotInIntersection, x.to_string() + " is not in " + check.lhs.value->to_string());

  const std::vector<Ideal> parts{*check.rhs_u, *check.rhs_w};
  const auto st = decompose_into_sum(x, parts, options);

  const auto& side_u = d.in_side1(u) ? d.side1 : d.side2;
  const auto& side_w = d.in_side1(u) ? d.side2 : d.side1;
  const auto gu = g.induced(side_u);
  const auto gw = g.induced(side_w);
  const Spline rho_u = build_side(gu, local_id(side_u, u), local_id(side_u, d.cut), st[0], options);
  const Spline rho_w = build_side(gw, local_id(side_w, d.cut), local_id(side_w, w), st[1], options);

  // rho_u vanishes at z and rho_w takes t there: lift the u side by t.
  std::vector<std::optional<RingValue>> values(g.vertex_count());
  for (std::size_t i = 0; i < side_w.size(); ++i) values[side_w[i]] = rho_w.value(i);
  for (std::size_t i = 0; i < side_u.size(); ++i)
    if (side_u[i] != d.cut) values[side_u[i]] = rho_u.value(i) + st[1];
  std::vector<RingValue> flat;
  for (auto& v : values) flat.push_back(std::move(*v));
  Spline out(g, std::move(flat));
  if (!verify_spline(out, options).valid() || out.difference(u, w) != x)
    throw Error(ErrorCode::Internal, "pasted spline failed verification");
  return out;
}

namespace {

struct Enumerator {
  Int m = 0;
  std::vector<VertexId> order;
  std::vector<bool> root;
  // constraints[pos]: (earlier vertex, modulus of the difference)
  std::vector<std::vector<std::pair<VertexId, Int>>> constraints;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  struct State {
    std::vector<Int> rho;
    std::vector<std::vector<char>> seen;
    std::uint64_t splines = 0;
  };

  State fresh(std::size_t n) const {
    State s;
    s.rho.assign(n, 0);
    s.seen.assign(pairs.size(), std::vector<char>(static_cast<std::size_t>(m), 0));
    return s;
  }

  bool fits(const State& s, std::size_t pos, Int r) const {
    for (const auto& [nb, mod] : constraints[pos])
      if (floor_mod(r - s.rho[nb], mod) != 0) return false;
    return true;
  }

  void leaf(State& s) const {
    ++s.splines;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      s.seen[i][static_cast<std::size_t>(floor_mod(s.rho[pairs[i].first] - s.rho[pairs[i].second], m))] = 1;
  }

  void descend(State& s, std::size_t pos) const {
    if (pos == order.size()) {
      leaf(s);
      return;
    }
    const VertexId v = order[pos];
    if (root[pos]) {
      s.rho[v] = 0;
      descend(s, pos + 1);
      return;
    }
    for (Int r = 0; r < m; ++r)
      if (fits(s, pos, r)) {
        s.rho[v] = r;
        descend(s, pos + 1);
      }
  }
};

}  // namespace

UdpReport brute_force_udp(const EdgeLabeledGraph& g, const BruteForceOptions& options) {
  if (!g.ring().is_integers_mod())
    throw Error(ErrorCode::UnsupportedRing, "brute force needs Z/mZ, got " + g.ring().name());
  const Int m = g.ring().modulus();
  const std::size_t n = g.vertex_count();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > options.budget / static_cast<std::uint64_t>(m))
      throw Error(ErrorCode::BudgetExceeded, std::to_string(m) + "^" + std::to_string(n) + " labelings exceed budget " +
                                                 std::to_string(options.budget));
    space *= static_cast<std::uint64_t>(m);
  }

  Enumerator e;
  e.m = m;
  std::vector<std::size_t> position(n, n);
  const auto comp = g.components();
  for (VertexId s = 0; s < n; ++s) {
    if (position[s] != n) continue;
    std::queue<VertexId> q;
    q.push(s);
    position[s] = e.order.size();
    e.order.push_back(s);
    e.root.push_back(true);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (VertexId nb : g.neighbors(v))
        if (position[nb] == n) {
          position[nb] = e.order.size();
          e.order.push_back(nb);
          e.root.push_back(false);
          q.push(nb);
        }
    }
  }
  e.constraints.resize(n);
  for (const auto& edge : g.edges()) {
    const Int d = edge.label.generator().scalar();
    const Int mod = d == 0 ? m : d;
    const bool a_first = position[edge.a] < position[edge.b];
    const VertexId later = a_first ? edge.b : edge.a;
    const VertexId earlier = a_first ? edge.a : edge.b;
    e.constraints[position[later]].emplace_back(earlier, mod);
  }
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (comp[a] == comp[b]) e.pairs.emplace_back(a, b);

  // Split on the values of the first free position.
  std::size_t split = 0;
  while (split < n && e.root[split]) ++split;
  Enumerator::State total = e.fresh(n);
  if (split == n) {
    e.descend(total, 0);
  } else {
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(m)));
    std::vector<Enumerator::State> states;
    for (unsigned j = 0; j < jobs; ++j) states.push_back(e.fresh(n));
    auto work = [&](unsigned j) {
      auto& s = states[j];
      for (Int r = j; r < m; r += jobs) {
        if (!e.fits(s, split, r)) continue;
        s.rho[e.order[split]] = r;
        e.descend(s, split + 1);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
      for (auto& t : threads) t.join();
    }
    for (const auto& s : states) {
      total.splines += s.splines;
      for (std::size_t i = 0; i < e.pairs.size(); ++i)
        for (Int r = 0; r < m; ++r) total.seen[i][r] |= s.seen[i][r];
    }
  }

  UdpReport report;
  report.splines = total.splines;
  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    const auto [a, b] = e.pairs[i];
    PairReport p{a, b, paths_intersection_ideal(g, a, b), {}, {}, UdpVerdict::Holds, std::nullopt};
    const Int d = p.intersection.generator().scalar();
    for (Int r = 0; r < m; ++r) {
      if (total.seen[i][r]) p.achievable.push_back(r);
      if (d == 0 ? r == 0 : r % d == 0) p.expected.push_back(r);
    }
    if (!std::includes(p.expected.begin(), p.expected.end(), p.achievable.begin(), p.achievable.end()))
      throw Error(ErrorCode::Internal, "achieved difference outside the path intersection");
    if (p.achievable != p.expected) {
      p.verdict = UdpVerdict::Fails;
      for (Int r : p.expected)
        if (!std::binary_search(p.achievable.begin(), p.achievable.end(), r)) {
          p.witness = r;
          break;
        }
      report.verdict = UdpVerdict::Fails;
    }
    report.pairs.push_back(std::move(p));
  }
  return report;
}

WitnessReport verify_non_udp_witness(const EdgeLabeledGraph& g, VertexId u, VertexId w, const RingValue& x,
                                     std::optional<VertexId> cut, const MembershipOptions& options) {
  require_same_ring(g.ring(), x.ring());
  WitnessReport r;
  r.paths = enumerate_paths(g, u, w);
  if (r.paths.empty()) throw Error(ErrorCode::Disconnected, g.name(u) + " and " + g.name(w) + " are not connected");
  if (x.is_zero()) {
    r.outcome = WitnessOutcome::Rejected;
    r.reason = "0 is reached by every constant spline";
    return r;
  }

  bool undecided = false;
  for (const auto& p : r.paths) {
    r.path_ideals.push_back(path_ideal(g, p));
    r.path_memberships.push_back(ideal_contains(r.path_ideals.back(), x, options));
    const auto& v = r.path_memberships.back();
    if (v.no() && r.outcome != WitnessOutcome::Rejected) {
      r.outcome = WitnessOutcome::Rejected;
      r.reason = x.to_string() + " is outside " + r.path_ideals.back().to_string() + " on " + render_path(g, p);
    }
    undecided = undecided || v.outcome == Membership::Unknown;
  }
  if (r.outcome == WitnessOutcome::Rejected) return r;
  if (undecided) {
    r.reason = "membership in some path ideal is undecided";
    return r;
  }

  if (cut) {
    r.decomposition = find_cut_decomposition(g, *cut);
    require_opposite(g, *r.decomposition, u, w);
  } else {
    for (VertexId z = 0; z < g.vertex_count() && !r.decomposition; ++z) {
      if (z == u || z == w) continue;
      try {
        auto d = find_cut_decomposition(g, z);
        if ((d.in_side1(u) && d.in_side2(w)) || (d.in_side2(u) && d.in_side1(w))) r.decomposition = std::move(d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotACutVertex && e.code() != ErrorCode::MoreThanTwoSides) throw;
      }
    }
  }

  r.reason = "no vertex separates the pair";
  if (r.decomposition) {
    const VertexId z = r.decomposition->cut;
    r.rhs_u = path_intersection(g, u, z).value;
    r.rhs_w = path_intersection(g, z, w).value;
    if (!r.rhs_u || !r.rhs_w) {
      r.reason = "a one-sided intersection is not principal";
    } else {
      r.rhs = ideal_sum(*r.rhs_u, *r.rhs_w);
      r.rhs_membership = ideal_contains(*r.rhs, x, options);
      if (r.rhs_membership->no()) {
        r.outcome = WitnessOutcome::Confirmed;
        r.reason = "every spline difference lies in " + r.rhs->to_string() + ", which misses " + x.to_string();
        return r;
      }
      r.reason = r.rhs_membership->yes() ? x.to_string() + " lies in " + r.rhs->to_string()
                                         : "membership in " + r.rhs->to_string() + " is undecided";
    }
  }

  if (g.ring().is_integers_mod()) {
    try {
      const auto report = brute_force_udp(g);
      const VertexId a = std::min(u, w), b = std::max(u, w);
      const Int target = u < w ? x.scalar() : floor_mod(-x.scalar(), g.ring().modulus());
      for (const auto& p : report.pairs) {
        if (p.u != a || p.w != b) continue;
        if (std::binary_search(p.achievable.begin(), p.achievable.end(), target)) {
          r.outcome = WitnessOutcome::Rejected;
          r.reason = "some spline reaches " + x.to_string();
        } else {
          r.outcome = WitnessOutcome::Confirmed;
          r.reason = "no spline among " + std::to_string(report.splines) + " reaches " + x.to_string();
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
  }
  return r;
}

}  // namespace gspline
