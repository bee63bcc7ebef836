#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "gspline/cli.hpp"
#include "gspline/io.hpp"
#include "support.hpp"

using namespace gspline;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return testing::data_path(name); }

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("cli: paths and ideals") {
  auto r = run({"paths", data("bowtie.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "u - a - z - b - w\nu - a - z - w\nu - z - b - w\nu - z - w\n");

  r = run({"path-ideal", data("path10.json"), "--path", "u,v1,v2,v3,v4,v5,w"});
  CHECK(r.code == 0);
  CHECK(r.out == "⟨2⟩\n");
  CHECK(run({"path-ideal", data("path10.json"), "--path", "u,v2"}).code == cli::kUsage);

  r = run({"path-ideal", data("cycle11.json")});
  CHECK(r.out == "u - a1 - a2 - a3 - a4 - w: ⟨2⟩\nu - b1 - b2 - b3 - b4 - b5 - w: ⟨1⟩\n");
  CHECK(run({"intersect", data("cycle11.json")}).out == "⟨2⟩\n");
  CHECK(run({"intersect", data("zx_pasted_cycles.json")}).out == "⟨3, x + 3⟩ ∩ ⟨3, x - 3⟩ ∩ ⟨2, x + 3⟩ ∩ ⟨2, x - 3⟩\n");
}

TEST_CASE("cli: member") {
  auto r = run({"member", "--ring", "Z[x]", "--ideal", "6", "--ideal", "x^2-9", "--target", "x+3"});
  CHECK(r.code == cli::kFails);
  CHECK(contains(r.out, "verdict: no, prime 2"));
  r = run({"member", "--ring", "Z[x]", "--ideal", "2", "--ideal", "x-3", "--target", "x+3", "--degree-bound", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: yes"));
  r = run({"member", "--ring", "Z/12", "--ideal", "8", "--target", "5"});
  CHECK(r.code == cli::kFails);
  CHECK(contains(r.out, "ideal: ⟨4⟩"));
}

TEST_CASE("cli: verify and build") {
  CHECK(run({"verify", data("constant_spline.json")}).code == 0);
  CHECK(run({"verify", data("path10_known_spline.json")}).out == "status: valid\n");

  const auto out = std::filesystem::temp_directory_path() / "gspline_cli_cycle.json";
  auto r = run({"build", data("cycle11.json"), "--method", "cycle", "--from", "u", "--to", "w", "--target", "48",
                "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ρ(u) - ρ(w) = 48\n"));
  const auto s = io::read_spline_file(out);
  CHECK(s.graph() == io::read_graph_file(data("cycle11.json")));
  CHECK(run({"verify", out.string()}).code == 0);
  std::filesystem::remove(out);

  CHECK(run({"build", data("path10.json"), "--method", "path", "--target", "63"}).code == cli::kFails);
  CHECK(run({"build", data("cycle11.json"), "--method", "path", "--target", "48"}).code == cli::kFails);
  CHECK(run({"build", data("triangle_square.json"), "--method", "pasted", "--cut", "z", "--target", "38"}).code == 0);
  CHECK(run({"build", data("bowtie.json"), "--method", "crt", "--target", "1"}).code == 0);
  CHECK(run({"build", data("bowtie.json"), "--method", "magic", "--target", "1"}).code == cli::kUsage);
}

TEST_CASE("cli: pasting-check and witness-check") {
  auto r = run({"pasting-check", data("bowtie.json"), "--cut", "z", "--from", "u", "--to", "w"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "  lhs: ⟨1⟩\n  rhs: ⟨2⟩ + ⟨3⟩ = ⟨1⟩\n"));
  CHECK(run({"pasting-check", data("bowtie.json"), "--cut", "z"}).code == 0);
  CHECK(run({"pasting-check", data("cycle11.json"), "--cut", "u"}).code == cli::kFails);

  r = run({"pasting-check", data("zx_pasted_cycles.json"), "--cut", "z", "--from", "u", "--to", "w"});
  CHECK(r.code == cli::kFails);
  CHECK(contains(r.out, "witness: x + 3"));

  r = run({"witness-check", data("zx_pasted_cycles.json"), "--target", "x+3", "--degree-bound", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "outcome: confirmed"));
  CHECK(contains(r.out, "rhs membership: no, prime 2"));
  CHECK(run({"witness-check", data("zx_pasted_cycles.json"), "--target", "6"}).code == cli::kUnknown);
  CHECK(run({"witness-check", data("zx_pasted_cycles.json"), "--target", "0"}).code == cli::kFails);
}

TEST_CASE("cli: udp-brute is deterministic across worker counts") {
  const auto one = run({"udp-brute", data("cycle_z6.json")});
  const auto three = run({"udp-brute", data("cycle_z6.json"), "--jobs", "3"});
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(contains(one.out, "pair u, w\n  intersection: ⟨2⟩\n  achievable: 0 2 4\n  verdict: holds\n"));
  CHECK(run({"udp-brute", data("cycle_z6.json"), "--budget", "10"}).code == cli::kUnknown);
  CHECK(run({"udp-brute", data("bowtie.json")}).code == cli::kFails);
}

TEST_CASE("cli: isomorphisms") {
  CHECK(run({"iso-verify", data("zx_pasted_cycles.json"), data("zx_pasted_cycles_mirror.json"), data("zx_mirror_iso.json")}).code == 0);
  const auto bad = run({"iso-verify", data("path10.json"), data("path10_renamed.json"), data("path10_broken_iso.json")});
  CHECK(bad.code == cli::kFails);
  CHECK(contains(bad.out, "status: invalid"));
  const auto t = run({"transport", data("path10_known_spline.json"), data("path10_renamed.json"),
                      data("path10_rename_iso.json")});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "n8: 64\n"));
}

TEST_CASE("cli: usage and input errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({"paths"}).code == cli::kUsage);
  CHECK(run({"paths", "/nonexistent/graph.json"}).code == cli::kUsage);
  const auto r = run({"paths", data("bowtie.json"), "--from", "q"});
  CHECK(r.code == cli::kUsage);
  CHECK(contains(r.err, "q"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: identical invocations give identical output") {
  const std::vector<std::string> args{"pasting-check", data("zx_pasted_cycles.json"), "--cut", "z"};
  CHECK(run(args).out == run(args).out);
}
