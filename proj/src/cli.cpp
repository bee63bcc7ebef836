#include "gspline/cli.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "gspline/io.hpp"
#include "gspline/udp.hpp"

namespace gspline::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownVertex:
    case ErrorCode::SameVertex:
    case ErrorCode::InvalidGraph:
    case ErrorCode::InvalidPath:
    case ErrorCode::InvalidRing:
    case ErrorCode::RingMismatch:
    case ErrorCode::InvalidAutomorphism:
    case ErrorCode::MissingValue:
    case ErrorCode::GraphMismatch:
      return kUsage;
    case ErrorCode::MembershipUndecided:
    case ErrorCode::BudgetExceeded:
      return kUnknown;
    default:
      return kFails;
  }
}

std::string combination(const Ideal& ideal, const std::vector<RingValue>& cofactors) {
  std::string out;
  for (std::size_t i = 0; i < cofactors.size(); ++i) {
    if (i) out += " + ";
    out += "(" + cofactors[i].to_string() + ")*(" + ideal.generators()[i].to_string() + ")";
  }
  return out;
}

std::string verdict_line(const Ideal& ideal, const MembershipVerdict& v) {
  switch (v.outcome) {
    case Membership::Yes: return "yes, " + combination(ideal, v.cofactors);
    case Membership::No: return "no, " + describe(*v.certificate);
    case Membership::Unknown: break;
  }
  return "unknown";
}

std::string truth(Truth t) { return std::string(to_string(t)); }

void print_spline(std::ostream& out, const Spline& s) {
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v)
    out << s.graph().name(v) << ": " << s.value(v).to_string() << "\n";
}

struct Options {
  std::string graph, graph2, spline, iso, output;
  std::string from = "u", to = "w", target, cut, path, method, ring;
  std::vector<std::string> ideal;
  int degree_bound = 0;
  std::uint64_t budget = BruteForceOptions{}.budget;
  unsigned jobs = 1;

  MembershipOptions membership() const {
    MembershipOptions m;
    if (degree_bound > 0) m.degree_bound = degree_bound;
    return m;
  }
};

class Runner {
public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int paths() {
    const auto g = io::read_graph_file(o_.graph);
    for (const auto& p : enumerate_paths(g, g.id(o_.from), g.id(o_.to))) out_ << render_path(g, p) << "\n";
    return kOk;
  }

  int path_ideal() {
    const auto g = io::read_graph_file(o_.graph);
    if (!o_.path.empty()) {
      Path p;
      std::stringstream ss(o_.path);
      for (std::string name; std::getline(ss, name, ',');) p.vertices.push_back(g.id(name));
      validate_path(g, p);
      out_ << gspline::path_ideal(g, p).to_string() << "\n";
      return kOk;
    }
    for (const auto& p : enumerate_paths(g, g.id(o_.from), g.id(o_.to)))
      out_ << render_path(g, p) << ": " << gspline::path_ideal(g, p).to_string() << "\n";
    return kOk;
  }

  int intersect() {
    const auto g = io::read_graph_file(o_.graph);
    out_ << path_intersection(g, g.id(o_.from), g.id(o_.to)).to_string() << "\n";
    return kOk;
  }

  int member() {
    const RingDescriptor ring = io::parse_ring(o_.ring);
    std::vector<RingValue> gens;
    for (const auto& text : o_.ideal) gens.push_back(parse_value(ring, text));
    const Ideal ideal(ring, gens);
    const RingValue t = parse_value(ring, o_.target);
    const auto v = ideal_contains(ideal, t, o_.membership());
    out_ << "ideal: " << ideal.to_string() << "\n";
    out_ << "target: " << t.to_string() << "\n";
    out_ << "verdict: " << verdict_line(ideal, v) << "\n";
    return v.yes() ? kOk : v.no() ? kFails : kUnknown;
  }

  int verify() {
    const auto s = io::read_spline_file(o_.spline);
    const auto check = verify_spline(s, o_.membership());
    const auto& g = s.graph();
    auto edge_line = [&](const char* kind, std::size_t i) {
      const auto& e = g.edges()[i];
      out_ << kind << ": " << g.name(e.a) << " - " << g.name(e.b) << ", " << s.difference(e.a, e.b).to_string()
           << " vs " << e.label.to_string() << "\n";
    };
    for (auto i : check.violations) edge_line("violation", i);
    for (auto i : check.undecided) edge_line("undecided", i);
    out_ << "status: " << to_string(check.status) << "\n";
    return check.status == SplineStatus::Valid ? kOk : check.status == SplineStatus::Invalid ? kFails : kUnknown;
  }

  int build() {
    const auto g = io::read_graph_file(o_.graph);
    const VertexId u = g.id(o_.from), w = g.id(o_.to);
    const RingValue x = parse_value(g.ring(), o_.target);
    const auto opts = o_.membership();
    const std::map<std::string, std::function<Spline()>> methods{
        {"path", [&] { return build_path_spline(g, u, w, x, opts); }},
        {"tree", [&] { return build_tree_spline(g, u, w, x, opts); }},
        {"cycle", [&] { return build_cycle_spline(g, u, w, x, opts); }},
        {"crt", [&] { return build_spline_crt(g, u, w, x); }},
        {"pasted",
         [&] {
           if (o_.cut.empty()) throw Error(ErrorCode::Parse, "--method pasted needs --cut");
           return build_pasted_spline(g, find_cut_decomposition(g, g.id(o_.cut)), u, w, x, opts);
         }},
    };
    const Spline s = methods.at(o_.method)();
    print_spline(out_, s);
    out_ << "ρ(" << o_.from << ") - ρ(" << o_.to << ") = " << s.difference(u, w).to_string() << "\n";
    if (!o_.output.empty()) io::write_text_file(o_.output, io::dump(io::spline_to_json(s)));
    return kOk;
  }

  int pasting_check() {
    const auto g = io::read_graph_file(o_.graph);
    const auto d = find_cut_decomposition(g, g.id(o_.cut));
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (!o_.target.empty()) throw Error(ErrorCode::Parse, "pasting-check takes no --target");
    if (explicit_pair_) pairs.emplace_back(g.id(o_.from), g.id(o_.to));
    else pairs = opposite_pairs(d);
    UdpVerdict overall = UdpVerdict::Holds;
    for (const auto& [u, w] : pairs) {
      const auto c = check_pasting_equation(g, d, u, w, o_.membership());
      out_ << "pair " << g.name(u) << ", " << g.name(w) << " (cut " << g.name(d.cut) << ")\n";
      out_ << "  lhs: " << c.lhs.to_string() << "\n";
      if (c.rhs)
        out_ << "  rhs: " << c.rhs_u->to_string() << " + " << c.rhs_w->to_string() << " = " << c.rhs->to_string() << "\n";
      else
        out_ << "  rhs: not principal\n";
      out_ << "  lhs in u side: " << truth(c.lhs_in_u_side) << "\n";
      out_ << "  lhs in w side: " << truth(c.lhs_in_w_side) << "\n";
      if (c.witness) {
        out_ << "  witness: " << c.witness->to_string() << "\n";
        for (std::size_t i = 0; i < c.lhs.terms.size(); ++i)
          out_ << "    in " << c.lhs.terms[i].to_string() << ": " << verdict_line(c.lhs.terms[i], c.witness_in_lhs.verdicts[i])
               << "\n";
        out_ << "    in " << c.rhs->to_string() << ": " << verdict_line(*c.rhs, *c.witness_in_rhs) << "\n";
      }
      out_ << "  verdict: " << to_string(c.verdict) << "\n";
      if (c.verdict == UdpVerdict::Fails) overall = UdpVerdict::Fails;
      else if (c.verdict == UdpVerdict::Unknown && overall == UdpVerdict::Holds) overall = UdpVerdict::Unknown;
    }
    out_ << "pasting: " << to_string(overall) << "\n";
    return overall == UdpVerdict::Holds ? kOk : overall == UdpVerdict::Fails ? kFails : kUnknown;
  }

  int udp_brute() {
    const auto g = io::read_graph_file(o_.graph);
    const auto report = brute_force_udp(g, {o_.budget, o_.jobs});
    for (const auto& p : report.pairs) {
      out_ << "pair " << g.name(p.u) << ", " << g.name(p.w) << "\n";
      out_ << "  intersection: " << p.intersection.to_string() << "\n";
      out_ << "  achievable:";
      for (Int r : p.achievable) out_ << " " << r;
      out_ << "\n";
      if (p.witness) out_ << "  missing: " << *p.witness << "\n";
      out_ << "  verdict: " << to_string(p.verdict) << "\n";
    }
    out_ << "splines: " << report.splines << "\n";
    out_ << "udp: " << to_string(report.verdict) << "\n";
    return report.verdict == UdpVerdict::Holds ? kOk : kFails;
  }

  int witness_check() {
    const auto g = io::read_graph_file(o_.graph);
    const VertexId u = g.id(o_.from), w = g.id(o_.to);
    const RingValue x = parse_value(g.ring(), o_.target);
    std::optional<VertexId> cut;
    if (!o_.cut.empty()) cut = g.id(o_.cut);
    const auto r = verify_non_udp_witness(g, u, w, x, cut, o_.membership());
    out_ << "target: " << x.to_string() << "\n";
    for (std::size_t i = 0; i < r.path_memberships.size(); ++i)
      out_ << "path " << render_path(g, r.paths[i]) << ": " << r.path_ideals[i].to_string() << " "
           << verdict_line(r.path_ideals[i], r.path_memberships[i]) << "\n";
    if (r.decomposition) out_ << "cut: " << g.name(r.decomposition->cut) << "\n";
    if (r.rhs) {
      out_ << "rhs: " << r.rhs_u->to_string() << " + " << r.rhs_w->to_string() << " = " << r.rhs->to_string() << "\n";
      out_ << "rhs membership: " << verdict_line(*r.rhs, *r.rhs_membership) << "\n";
    }
    out_ << "outcome: " << to_string(r.outcome) << "\n";
    out_ << "reason: " << r.reason << "\n";
    switch (r.outcome) {
      case WitnessOutcome::Confirmed: return kOk;
      case WitnessOutcome::Rejected: return kFails;
      case WitnessOutcome::Unconfirmed: break;
    }
    return kUnknown;
  }

  int iso_verify() {
    const auto g = io::read_graph_file(o_.graph);
    const auto h = io::read_graph_file(o_.graph2);
    const auto iso = io::read_iso_file(o_.iso, g, h);
    const auto check = gspline::verify_iso(g, h, iso, o_.membership());
    out_ << "status: " << to_string(check.status) << "\n";
    if (!check.reason.empty()) out_ << "reason: " << check.reason << "\n";
    return check.status == IsoStatus::Valid ? kOk : check.status == IsoStatus::Invalid ? kFails : kUnknown;
  }

  int transport() {
    const auto s = io::read_spline_file(o_.spline);
    const auto h = io::read_graph_file(o_.graph2);
    const auto iso = io::read_iso_file(o_.iso, s.graph(), h);
    const Spline t = transport_spline(s, h, iso, o_.membership());
    print_spline(out_, t);
    if (!o_.output.empty()) io::write_text_file(o_.output, io::dump(io::spline_to_json(t)));
    return kOk;
  }

  bool explicit_pair_ = false;

private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splines on edge-labeled graphs over Z, Z/mZ and Z[x]", "gspline"};
  app.require_subcommand(1);
  Options o;
  Runner runner(o, out);
  std::function<int()> action;

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph, "Graph file")->required(); };
  auto pair_args = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "First vertex")->capture_default_str();
    sub->add_option("--to", o.to, "Second vertex")->capture_default_str();
  };
  auto bound_arg = [&](CLI::App* sub) {
    sub->add_option("--degree-bound", o.degree_bound, "Cofactor degree bound for Z[x] membership")
        ->check(CLI::PositiveNumber);
  };

  auto* paths = app.add_subcommand("paths", "Enumerate simple paths between two vertices");
  graph_arg(paths);
  pair_args(paths);
  paths->callback([&] { action = [&] { return runner.paths(); }; });

  auto* pideal = app.add_subcommand("path-ideal", "Sum of the labels along a path");
  graph_arg(pideal);
  pair_args(pideal);
  pideal->add_option("--path", o.path, "Comma-separated vertex names");
  pideal->callback([&] { action = [&] { return runner.path_ideal(); }; });

  auto* inter = app.add_subcommand("intersect", "Intersection of all path ideals between two vertices");
  graph_arg(inter);
  pair_args(inter);
  inter->callback([&] { action = [&] { return runner.intersect(); }; });

  auto* member = app.add_subcommand("member", "Ideal membership with a certificate");
  member->add_option("--ring", o.ring, "Z, Z/m or Z[x]")->required();
  member->add_option("--ideal", o.ideal, "Generator (repeatable)")->required();
  member->add_option("--target", o.target, "Element to test")->required();
  bound_arg(member);
  member->callback([&] { action = [&] { return runner.member(); }; });

  auto* verify = app.add_subcommand("verify", "Check a spline file");
  verify->add_option("spline", o.spline, "Spline file")->required();
  bound_arg(verify);
  verify->callback([&] { action = [&] { return runner.verify(); }; });

  auto* build = app.add_subcommand("build", "Build a spline with a prescribed difference");
  graph_arg(build);
  pair_args(build);
  build->add_option("--method", o.method, "Construction")
      ->required()
      ->check(CLI::IsMember({"path", "tree", "cycle", "crt", "pasted"}));
  build->add_option("--target", o.target, "Difference ρ(from) - ρ(to)")->required();
  build->add_option("--cut", o.cut, "Cut vertex for --method pasted");
  build->add_option("--output", o.output, "Write the spline file here");
  bound_arg(build);
  build->callback([&] { action = [&] { return runner.build(); }; });

  auto* pasting = app.add_subcommand("pasting-check", "Test the pasting equation at a cut vertex");
  graph_arg(pasting);
  pasting->add_option("--cut", o.cut, "Cut vertex")->required();
  auto* pfrom = pasting->add_option("--from", o.from, "Restrict to one pair");
  auto* pto = pasting->add_option("--to", o.to, "Restrict to one pair");
  pfrom->needs(pto);
  pto->needs(pfrom);
  bound_arg(pasting);
  pasting->callback([&] {
    runner.explicit_pair_ = pfrom->count() > 0;
    action = [&] { return runner.pasting_check(); };
  });

  auto* brute = app.add_subcommand("udp-brute", "Exhaustive UDP check over Z/mZ");
  graph_arg(brute);
  brute->add_option("--budget", o.budget, "Largest m^N to enumerate")->capture_default_str();
  brute->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  brute->callback([&] { action = [&] { return runner.udp_brute(); }; });

  auto* witness = app.add_subcommand("witness-check", "Confirm that a difference is never achieved");
  graph_arg(witness);
  pair_args(witness);
  witness->add_option("--target", o.target, "Candidate difference")->required();
  witness->add_option("--cut", o.cut, "Cut vertex separating the pair");
  bound_arg(witness);
  witness->callback([&] { action = [&] { return runner.witness_check(); }; });

  auto* isov = app.add_subcommand("iso-verify", "Check an edge-labeled isomorphism");
  isov->add_option("graph", o.graph, "Source graph file")->required();
  isov->add_option("target", o.graph2, "Target graph file")->required();
  isov->add_option("iso", o.iso, "Isomorphism file")->required();
  bound_arg(isov);
  isov->callback([&] { action = [&] { return runner.iso_verify(); }; });

  auto* transport = app.add_subcommand("transport", "Carry a spline across an isomorphism");
  transport->add_option("spline", o.spline, "Spline file")->required();
  transport->add_option("target", o.graph2, "Target graph file")->required();
  transport->add_option("iso", o.iso, "Isomorphism file")->required();
  transport->add_option("--output", o.output, "Write the transported spline here");
  bound_arg(transport);
  transport->callback([&] { action = [&] { return runner.transport(); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace gspline::cli
