#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("LMD_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "LMD_BIN must point at the lmd binary");
  return bin;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("lmd_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

const std::string kStar5 = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n";
const std::string kC5 = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
const std::string kBipComplete22 = "2 2 4\n0 0\n0 1\n1 0\n1 1\n";
const std::string kK3 = "3 3\n0 1\n0 2\n1 2\n";

}  // namespace

TEST_CASE("compute: worked examples, human output") {
  const auto star = write_file("star.el", kStar5);
  auto r = run("compute -i " + star + " --alg brute");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta_loc = 1") != std::string::npos);

  const auto c5 = write_file("c5.el", kC5);
  r = run("compute -i " + c5 + " --alg general");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta_loc = 2") != std::string::npos);

  const auto bip = write_file("k22.bel", kBipComplete22);
  r = run("compute -i " + bip + " -f bip-edgelist --alg bipartite");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta_loc = 1") != std::string::npos);

  r = run("compute -i " + bip + " --alg auto");  // sniffed bipartite input
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta_loc = 1") != std::string::npos);
}

TEST_CASE("compute: JSON record shape and determinism") {
  const auto c5 = write_file("c5.el", kC5);
  auto r = run("compute -i " + c5 + " --alg general --json");
  REQUIRE(r.exit_code == 0);
  const json record = json::parse(r.out);
  CHECK(record["command"] == "compute");
  CHECK(record["delta_loc"] == 2);
  CHECK(record["witness_kind"] == "deficient-cut");
  CHECK(record["witness"].is_array());
  CHECK(record["bounds"]["n"] == 5);
  CHECK(record.contains("wall_time_ms"));
  CHECK(record["input_digest"].is_string());

  const auto a = run("compute -i " + c5 + " --alg general --json --no-timing");
  const auto b = run("compute -i " + c5 + " --alg general --json --no-timing");
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).contains("wall_time_ms") == false);
}

TEST_CASE("compute: thread count does not change the JSON bytes") {
  const auto c5 = write_file("c5.el", kC5);
  const auto t1 = run("compute -i " + c5 + " --alg general --threads 1 --json --no-timing");
  const auto t4 = run("compute -i " + c5 + " --alg general --threads 4 --json --no-timing");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out == t4.out);

  const auto b1 = run("compute -i " + c5 + " --alg brute --threads 1 --json --no-timing");
  const auto b4 = run("compute -i " + c5 + " --alg brute --threads 4 --json --no-timing");
  CHECK(b1.out == b4.out);

  const auto bip = write_file("rb.bel", run("gen --type randbip --n1 6 --n2 7 -p 0.5 --seed 5").out);
  const auto p1 = run("compute -i " + bip + " --alg bipartite --threads 1 --json --no-timing");
  const auto p4 = run("compute -i " + bip + " --alg bipartite --threads 4 --json --no-timing");
  CHECK(p1.exit_code == 0);
  CHECK(p1.out == p4.out);
}

TEST_CASE("exit codes: parse errors and algorithm mismatch") {
  CHECK(run("compute -i /nonexistent/file").exit_code == 2);
  const auto bad = write_file("bad.el", "3 1\n0 x\n");
  CHECK(run("compute -i " + bad).exit_code == 2);
  const auto c5 = write_file("c5.el", kC5);
  CHECK(run("compute -i " + c5 + " --alg bipartite").exit_code == 3);
  const auto bip = write_file("k22.bel", kBipComplete22);
  CHECK(run("witness -i " + c5 + " --method plotkin").exit_code == 3);
  CHECK(run("reduce -i " + bip + " --direction es2blmd -k 0").exit_code == 2);
}

TEST_CASE("bounds: star with exact cover realizes the lemma bound") {
  const auto star = write_file("star.el", kStar5);
  auto r = run("bounds -i " + star + " --cover exact --json --no-timing");
  REQUIRE(r.exit_code == 0);
  const json record = json::parse(r.out);
  CHECK(record["bounds"]["cover_size"] == 1);
  CHECK(record["bounds"]["bound_lemma2"] == 1.0);
  CHECK(record["bounds"]["bound_thm2"] == doctest::Approx(0.375 * 6 + std::log2(6.0)));
  CHECK(record["thm2_strict_certified"] == true);
}

TEST_CASE("gen: paley 5 is the 5-cycle edge list") {
  auto r = run("gen --type paley --q 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kC5);
  CHECK(run("gen --type paley --q 7").exit_code == 2);

  const auto a = run("gen --type gnp -n 20 -p 0.5 --seed 9");
  const auto b = run("gen --type gnp -n 20 -p 0.5 --seed 9");
  CHECK(a.out == b.out);

  r = run("gen --type randbip --n1 3 --n2 4 -p 1.0 --seed 1");
  CHECK(r.out.substr(0, 7) == "3 4 12\n");

  CHECK(run("gen --type complete -n 4").out.substr(0, 4) == "4 6\n");
  CHECK(run("gen --type hypercube -d 3").out.substr(0, 5) == "8 12\n");
  CHECK(run("gen --type star --leaves 3").out == "4 3\n0 1\n0 2\n0 3\n");
  CHECK(run("gen --type nonsense").exit_code == 2);
}

TEST_CASE("gen: graph6 output round-trips through compute") {
  const auto path = (scratch() / "cycle7.g6").string();
  auto r = run("gen --type cycle -n 7 -f graph6 -o " + path);
  REQUIRE(r.exit_code == 0);
  r = run("compute -i " + path + " -f graph6 --alg brute");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta_loc = 2") != std::string::npos);
}

TEST_CASE("lc: complementing the middle of a path gives a triangle") {
  const auto p3 = write_file("p3.el", "3 2\n0 1\n1 2\n");
  auto r = run("lc -i " + p3 + " -v 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kK3);
  r = run("lc -i " + p3 + " -v 1,1");
  CHECK(r.out == "3 2\n0 1\n1 2\n");
  CHECK(run("lc -i " + p3 + " -v 7").exit_code == 2);
}

TEST_CASE("evenset command") {
  const auto inst = write_file("es.bel", "2 1 2\n0 0\n1 0\n");
  auto r = run("evenset -i " + inst + " -k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "solution = 0 1\n");
  r = run("evenset -i " + inst + " -k 1 --json --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["solvable"] == false);
}

TEST_CASE("reduce: five-copies gadget on K3") {
  const auto k3 = write_file("k3.el", kK3);
  const auto out = (scratch() / "gadget.bel").string();
  auto r = run("reduce -i " + k3 + " --direction lmd2es -k 1 -o " + out + " --json --no-timing");
  REQUIRE(r.exit_code == 0);
  const json record = json::parse(r.out);
  CHECK(record["parameter"] == 4);
  CHECK(record["vertices"] == 15);
  CHECK(record["edges"] == 21);

  std::ifstream prov(out + ".provenance.json");
  REQUIRE(prov.good());
  json sidecar;
  prov >> sidecar;
  CHECK(sidecar["vertices"].size() == 15);
  CHECK(sidecar["vertices"]["0"]["role"] == "A1");

  // the written gadget is a valid EvenSet input for the solver
  r = run("evenset -i " + out + " -k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("solution =") != std::string::npos);
}

TEST_CASE("witness: all three methods") {
  const auto star = write_file("star.el", kStar5);
  auto r = run("witness -i " + star + " --method cover --cover exact --json --no-timing");
  REQUIRE(r.exit_code == 0);
  json record = json::parse(r.out);
  CHECK(record["set"] == json::array({1}));
  CHECK(record["set_size"] == 2);
  CHECK(record["bound"] == 2);

  r = run("witness -i " + star + " --method thm2 --json --no-timing");
  REQUIRE(r.exit_code == 0);
  record = json::parse(r.out);
  CHECK(record["set_size"].get<int>() <= record["bound"].get<int>());

  const auto bip = write_file("k22.bel", kBipComplete22);
  r = run("witness -i " + bip + " --method plotkin --json --no-timing");
  REQUIRE(r.exit_code == 0);
  record = json::parse(r.out);
  CHECK(record["set"] == json::array({0, 1}));
  CHECK(record["odd_size"] == 0);
}

TEST_CASE("gen: bipartite double of K2 is the crossed matching") {
  const auto k2 = write_file("k2.el", "2 1\n0 1\n");
  auto r = run("gen --type bipdouble -i " + k2);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 2 2\n0 1\n1 0\n");
}

TEST_CASE("reduce: paley-block gadget summary") {
  const auto inst = write_file("es2.bel", "2 1 2\n0 0\n1 0\n");
  auto r = run("reduce -i " + inst + " --direction es2blmd -k 2 --json --no-timing");
  REQUIRE(r.exit_code == 0);
  const json record = json::parse(r.out);
  CHECK(record["prime"] == 5);
  CHECK(record["source_k"] == 2);
  CHECK(record["parameter"] == 1);
  CHECK(record["vertices"] == 2 + 2 * 3 * 5 * 1);
}
