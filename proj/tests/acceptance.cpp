// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  argv[1] must point at the lmd CLI binary (used by criteria 9
// and 10); everything else runs in-process.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmd/engine.hpp"
#include "lmd/graph.hpp"
#include "lmd/io.hpp"
#include "lmd/reductions.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using lmd::BipartiteGraph;
using lmd::Graph;
using lmd::VertexSet;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Runner {
  int failures = 0;
  void report(int index, const std::string& name, bool ok, const std::string& note = "") {
    std::printf("%s: criterion %d (%s)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

struct ShellResult {
  int exit_code = -1;
  std::string out;
};

ShellResult shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

template <class F>
void for_each_graph(std::size_t n, F&& f) {
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1u) g.add_edge(u, v);
    f(g);
  }
}

constexpr std::size_t kPaley13DeltaLoc = 4;  // computed once by brute force

}  // namespace

int main(int argc, char** argv) {
  const std::string lmd_bin = argc > 1 ? argv[1] : "";
  Runner runner;

  const double probabilities[] = {0.2, 0.5, 0.8};

  // Shared bound-suite tallies, fed by the graphs of criteria 1-3.
  std::size_t bound_checks = 0;
  std::size_t bound_violations = 0;
  auto check_bounds = [&](const Graph& g, std::size_t delta) {
    const std::size_t n = g.order();
    ++bound_checks;
    if (!(static_cast<double>(delta) < lmd::upper_bound_general(n))) ++bound_violations;
    const std::size_t c = lmd::exact_vertex_cover(g).count();
    if (c >= 1 &&
        !(2.0 * static_cast<double>(delta) <= c + std::log2(static_cast<double>(c)) + 1.0))
      ++bound_violations;
  };

  // ---- 1: oracle equivalence, general --------------------------------------
  {
    const auto start = Clock::now();
    std::size_t mismatches = 0, count = 0;
    for (int i = 0; i < 1014; ++i) {
      const std::size_t n = 1 + i % 13;
      const double p = probabilities[(i / 13) % 3];
      const Graph g = lmd::gnp_graph(n, p, 10000 + i);
      const auto brute = lmd::delta_loc_brute(g);
      const auto general = lmd::delta_loc_general(g);
      if (general.delta_loc != brute.delta_loc) ++mismatches;
      check_bounds(g, brute.delta_loc);
      ++count;
    }
    const double secs = seconds_since(start);
    std::ostringstream note;
    note << count << " graphs, " << mismatches << " mismatches, " << secs << " s";
    runner.report(1, "oracle equivalence, general", mismatches == 0 && secs < 120.0, note.str());
  }

  // ---- 2: oracle equivalence, bipartite ------------------------------------
  {
    std::size_t mismatches = 0, count = 0;
    for (int i = 0; i < 510; ++i) {
      const std::size_t n1 = 1 + i % 8;
      const std::size_t n2 = i % 9;
      const double p = probabilities[(i / 8) % 3];
      const BipartiteGraph b = lmd::random_bipartite_graph(n1, n2, p, 20000 + i);
      const auto emb = lmd::embed_bipartite(b);
      const auto brute = lmd::delta_loc_brute(emb.graph);
      if (lmd::delta_loc_bipartite(b).delta_loc != brute.delta_loc) ++mismatches;
      if (!(static_cast<double>(brute.delta_loc) < lmd::upper_bound_bipartite(emb.graph.order())))
        ++bound_violations;
      ++bound_checks;
      ++count;
    }
    std::ostringstream note;
    note << count << " instances, " << mismatches << " mismatches";
    runner.report(2, "oracle equivalence, bipartite", mismatches == 0, note.str());
  }

  // ---- 3: invariance under local complementation ---------------------------
  {
    std::mt19937_64 rng(30303);
    std::size_t violations = 0;
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + i % 12;
      const Graph g = lmd::gnp_graph(n, probabilities[i % 3], 30000 + i);
      Graph h = g;
      const std::size_t len = rng() % 21;
      for (std::size_t j = 0; j < len; ++j) h = lmd::local_complement(h, rng() % n);
      const auto before = lmd::delta_loc_brute(g);
      if (lmd::delta_loc_brute(h).delta_loc != before.delta_loc) ++violations;
      for (int c = 0; c < 20; ++c) {
        VertexSet a(n);
        for (std::size_t v = 0; v < n; ++v)
          if (rng() & 1u) a.set(v);
        if (lmd::cutrank(g, a) != lmd::cutrank(h, a)) ++violations;
      }
      check_bounds(g, before.delta_loc);
    }
    runner.report(3, "LC-invariance of delta_loc and cutrank", violations == 0,
                  "300 graphs, " + std::to_string(violations) + " violations");
  }

  // ---- 4: bound suite -------------------------------------------------------
  {
    bool stars_tight = true;
    for (std::size_t leaves = 1; leaves <= 10; ++leaves) {
      const Graph s = lmd::star_graph(leaves);
      const std::size_t delta = lmd::delta_loc_brute(s).delta_loc;
      const std::size_t c = lmd::exact_vertex_cover(s).count();
      if (!(delta == 1 && c == 1 &&
            2.0 * delta == c + std::log2(static_cast<double>(c)) + 1.0))
        stars_tight = false;
    }
    std::ostringstream note;
    note << bound_checks << " graphs checked, " << bound_violations
         << " violations; star equality " << (stars_tight ? "holds" : "fails");
    runner.report(4, "bound suite", bound_violations == 0 && stars_tight, note.str());
  }

  // ---- 5: constructive witnesses -------------------------------------------
  {
    bool ok = true;
    std::string why;

    for (int i = 0; i < 200 && ok; ++i) {
      const std::size_t n1 = 1 + i % 10;
      const std::size_t n2 = i % 12;
      const BipartiteGraph b = lmd::random_bipartite_graph(n1, n2, 0.2 + 0.2 * (i % 4), 50000 + i);
      const auto w = lmd::plotkin_witness(b);
      if (w.set.none() || lmd::odd_neighbourhood(b, w.set).count() != w.odd_size ||
          w.odd_size > w.bound) {
        ok = false;
        why = "plotkin witness violated its guarantee";
      }
    }

    for (int i = 0; i < 200 && ok; ++i) {
      const std::size_t n = 2 + i % 12;
      const Graph g = lmd::gnp_graph(n, 0.35, 51000 + i);
      const VertexSet cover = (i % 2) ? lmd::exact_vertex_cover(g) : lmd::greedy_vertex_cover(g);
      if (cover.none()) continue;
      const auto w = lmd::cover_witness(g, cover);
      const bool feasible =
          w.set.any() &&
          lmd::Bitset::union_count(w.set, lmd::odd_neighbourhood(g, w.set)) == w.set_size;
      if (!feasible || (!w.fallback_used && w.set_size > w.bound)) {
        ok = false;
        why = "cover witness violated its guarantee";
      }
    }

    for (int i = 0; i < 200 && ok; ++i) {
      const std::size_t n = 8 + i % 33;
      const Graph g = lmd::gnp_graph(n, 0.5, 52000 + i);
      const auto w = lmd::theorem2_witness(g);
      const bool feasible =
          w.set.any() &&
          lmd::Bitset::union_count(w.set, lmd::odd_neighbourhood(g, w.set)) == w.set_size;
      if (!feasible || w.set_size > w.bound) {
        ok = false;
        why = "half-split witness violated its guarantee";
      }
    }

    const auto start = Clock::now();
    const Graph big = lmd::gnp_graph(200, 0.5, 999);
    const auto w = lmd::theorem2_witness(big);
    const double secs = seconds_since(start);
    if (w.set.none() || w.set_size > w.bound || secs >= 10.0) {
      ok = false;
      why = "order-200 witness run failed or took " + std::to_string(secs) + " s";
    }

    runner.report(5, "constructive witnesses", ok,
                  ok ? "3 x 200 instances + order-200 run in " + std::to_string(secs) + " s" : why);
  }

  // ---- 6: reduction round trips ---------------------------------------------
  {
    bool ok = true;
    std::string why;
    std::size_t instances = 0;
    for (std::size_t n = 1; n <= 5 && ok; ++n)
      for_each_graph(n, [&](const Graph& g) {
        if (!ok) return;
        const std::size_t m = g.edge_count();
        const std::size_t delta = lmd::delta_loc_brute(g).delta_loc;
        for (std::size_t k = 0; k <= 2 && ok; ++k) {
          const auto out = lmd::reduce_lmd_to_evenset(g, k);
          ++instances;
          if (out.instance.graph.order() != 5 * n ||
              out.instance.graph.edge_count() != 3 * n + 4 * m || out.instance.k != 2 * k + 2) {
            ok = false;
            why = "five-copies size law failed";
            return;
          }
          if (lmd::solve_evenset(out.instance).has_value() != (delta <= k)) {
            ok = false;
            why = "five-copies positivity not preserved at order " + std::to_string(n);
          }
        }
      });

    for (std::size_t nr = 1; nr <= 3 && ok; ++nr)
      for (std::size_t nb = 0; nb <= 2 && ok; ++nb)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nr * nb)) && ok; ++mask) {
          BipartiteGraph g(nr, nb);
          std::size_t bit = 0;
          for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t b = 0; b < nb; ++b, ++bit)
              if ((mask >> bit) & 1u) g.add_edge(r, b);
          for (std::size_t k = 1; k <= 2 && ok; ++k) {
            const lmd::EvenSetInstance inst{g, k};
            const auto out = lmd::reduce_evenset_to_blmd(inst);
            ++instances;
            const std::size_t expect =
                nr + 2 * (k + 1) * static_cast<std::size_t>(out.prime) * nb;
            if (out.gadget.order() != expect) {
              ok = false;
              why = "paley-block size law failed";
              break;
            }
            const auto emb = lmd::embed_bipartite(out.gadget);
            if (lmd::decide_delta_loc(emb.graph, out.parameter).positive !=
                lmd::solve_evenset(inst).has_value()) {
              ok = false;
              why = "paley-block positivity not preserved";
            }
          }
        }
    runner.report(6, "reduction round trips", ok,
                  ok ? std::to_string(instances) + " instances, exhaustive" : why);
  }

  // ---- 7: frozen values -----------------------------------------------------
  {
    bool ok = true;
    auto expect = [&](const Graph& g, std::size_t want, const char* what) {
      if (lmd::delta_loc_brute(g).delta_loc != want) {
        ok = false;
        std::printf("  frozen value mismatch: %s\n", what);
      }
    };
    for (std::size_t leaves = 1; leaves <= 8; ++leaves)
      expect(lmd::star_graph(leaves), 1, "star");
    for (std::size_t n = 3; n <= 8; ++n) expect(lmd::complete_graph(n), 1, "complete");
    expect(lmd::cycle_graph(5), 2, "C5");
    expect(lmd::cycle_graph(4), 1, "C4");
    expect(lmd::paley_graph(5), 2, "paley 5");
    for (std::size_t n = 1; n <= 6; ++n) expect(Graph(n), 0, "edgeless");
    expect(lmd::paley_graph(13), kPaley13DeltaLoc, "paley 13");
    runner.report(7, "frozen brute-force values", ok);
  }

  // ---- 8: enumeration-volume certificates -----------------------------------
  {
    bool ok = true;
    std::ostringstream note;
    const double h38 = 0.9544340029249651;  // binary entropy at 3/8
    for (std::size_t n : {20u, 30u, 40u}) {
      const double count =
          mpz_get_d(lmd::enumeration_count(n, lmd::cap_general(n)).get_mpz_t());
      const double limit = n * n * std::exp2(h38 * n);
      if (!(count <= limit)) ok = false;

      const std::size_t n1 = static_cast<std::size_t>(std::llround(0.3885 * n));
      const std::size_t n2 = n - n1;
      const std::size_t cap = lmd::cap_bipartite(n1, n2);
      const double bip_count =
          mpz_get_d(lmd::enumeration_count(n1, std::min(cap, n1)).get_mpz_t()) +
          mpz_get_d(lmd::enumeration_count(n2, std::min(cap, n2)).get_mpz_t());
      const double bip_limit = n * n * std::pow(1.46557, static_cast<double>(n));
      if (!(bip_count <= bip_limit)) ok = false;
      note << "n=" << n << " ok ";
    }
    runner.report(8, "enumeration-volume certificates", ok, note.str());
  }

  // ---- 9: performance smoke --------------------------------------------------
  {
    bool ok = true;
    std::string why;
    const Graph g30 = lmd::gnp_graph(30, 0.5, 2030);
    const auto start = Clock::now();
    const auto result = lmd::delta_loc_general(g30);
    const double secs = seconds_since(start);
    if (secs >= 60.0) {
      ok = false;
      why = "general run took " + std::to_string(secs) + " s";
    }
    const mpz_class volume = lmd::enumeration_count(30, lmd::cap_general(30));
    if (mpz_class(static_cast<unsigned long>(result.sets_examined)) > volume) {
      ok = false;
      why = "sets_examined exceeds the enumeration volume";
    }

    if (lmd_bin.empty()) {
      ok = false;
      why = "lmd binary path missing (argv[1])";
    } else {
      const auto dir = std::filesystem::temp_directory_path() / "lmd_acceptance";
      std::filesystem::create_directories(dir);
      const std::string file = (dir / "g30.el").string();
      std::ofstream(file) << lmd::io::encode_edge_list(g30);
      const auto t1 = shell(lmd_bin + " compute -i " + file +
                            " --alg general --threads 1 --json --no-timing");
      const auto t4 = shell(lmd_bin + " compute -i " + file +
                            " --alg general --threads 4 --json --no-timing");
      if (t1.exit_code != 0 || t4.exit_code != 0 || t1.out != t4.out || t1.out.empty()) {
        ok = false;
        why = "thread counts 1 and 4 disagree on the JSON bytes";
      }
    }
    std::ostringstream note;
    note << "delta_loc=" << result.delta_loc << ", " << secs << " s, sets_examined="
         << result.sets_examined;
    runner.report(9, "performance smoke", ok, ok ? note.str() : why);
  }

  // ---- 10: I/O round trips ---------------------------------------------------
  {
    bool ok = true;
    std::vector<Graph> zoo;
    for (std::size_t n = 0; n <= 12; ++n) zoo.push_back(Graph(n));
    for (std::size_t n = 1; n <= 12; ++n) zoo.push_back(lmd::complete_graph(n));
    for (std::size_t l = 1; l <= 12; ++l) zoo.push_back(lmd::star_graph(l));
    for (std::size_t n = 3; n <= 12; ++n) zoo.push_back(lmd::cycle_graph(n));
    for (std::size_t d = 0; d <= 5; ++d) zoo.push_back(lmd::hypercube_graph(d));
    for (std::uint64_t q : {5ull, 13ull, 17ull, 29ull, 37ull, 41ull, 53ull, 61ull})
      zoo.push_back(lmd::paley_graph(q));
    std::mt19937_64 rng(606060);
    for (int i = 0; i < 60; ++i) zoo.push_back(lmd::gnp_graph(1 + rng() % 62, 0.4, rng()));
    zoo.push_back(lmd::gnp_graph(62, 0.5, 62));

    for (const Graph& g : zoo) {
      if (lmd::io::decode_graph6(lmd::io::encode_graph6(g)) != g) ok = false;
      if (lmd::io::decode_edge_list(lmd::io::encode_edge_list(g)) != g) ok = false;
    }
    for (int i = 0; i < 40; ++i) {
      const BipartiteGraph b = lmd::random_bipartite_graph(rng() % 13, rng() % 13, 0.5, rng());
      if (lmd::io::decode_bip_edge_list(lmd::io::encode_bip_edge_list(b)) != b) ok = false;
      const BipartiteGraph d = lmd::bipartite_double(lmd::gnp_graph(1 + rng() % 20, 0.5, rng()));
      if (lmd::io::decode_bip_edge_list(lmd::io::encode_bip_edge_list(d)) != d) ok = false;
    }

    if (!lmd_bin.empty()) {
      const auto r = shell(lmd_bin + " gen --type paley --q 5");
      if (r.exit_code != 0 || r.out != "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n") ok = false;
    }
    runner.report(10, "I/O round trips", ok,
                  std::to_string(zoo.size()) + " zoo graphs, both codecs");
  }

  std::printf("%d/10 criteria passed\n", 10 - runner.failures);
  return runner.failures;
}
