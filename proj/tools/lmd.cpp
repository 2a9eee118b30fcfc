#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lmd/engine.hpp"
#include "lmd/errors.hpp"
#include "lmd/graph.hpp"
#include "lmd/io.hpp"
#include "lmd/reductions.hpp"

namespace {

using ojson = nlohmann::ordered_json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::optional<lmd::io::Format> to_format(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto f = lmd::io::parse_format(name);
  if (!f) throw lmd::ParseError("unknown format '" + name + "'");
  return f;
}

lmd::io::GraphInput load(const std::string& path, const std::string& format) {
  return lmd::io::read_graph_file(path, to_format(format));
}

const lmd::BipartiteGraph& as_bipartite(const lmd::io::GraphInput& in, const char* need) {
  if (!std::holds_alternative<lmd::BipartiteGraph>(in.value))
    throw lmd::FormatMismatch(std::string(need) + " needs a bipartite input (bip-edgelist)");
  return std::get<lmd::BipartiteGraph>(in.value);
}

// General view of any input; bipartite inputs are embedded side-1-first.
lmd::Graph as_general(const lmd::io::GraphInput& in) {
  if (auto* g = std::get_if<lmd::Graph>(&in.value)) return *g;
  return lmd::embed_bipartite(std::get<lmd::BipartiteGraph>(in.value)).graph;
}

std::vector<std::size_t> sorted_indices(const lmd::VertexSet& s) { return s.indices(); }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lmd::ParseError("cannot write '" + path + "'");
  out << content;
}

ojson bounds_json(const lmd::BoundReport& b, const std::string& cover_kind) {
  ojson j;
  j["n"] = b.n;
  j["cover"] = cover_kind;
  j["cover_size"] = b.cover_size;
  j["bound_thm1"] = b.bound_thm1;
  j["bound_thm2"] = b.bound_thm2;
  if (b.bound_lemma2)
    j["bound_lemma2"] = *b.bound_lemma2;
  else
    j["bound_lemma2"] = nullptr;
  return j;
}

void emit_record(ojson& record, bool with_timing, const Timer& timer) {
  if (with_timing) record["wall_time_ms"] = timer.ms();
  std::cout << record.dump() << '\n';
}

// ---- compute ---------------------------------------------------------------

struct ComputeOpts {
  std::string input, format, alg = "auto";
  bool json = false;
  bool no_timing = false;
  unsigned threads = 1;
};

int run_compute(const ComputeOpts& o) {
  Timer timer;
  const auto in = load(o.input, o.format);
  const bool bip_input = std::holds_alternative<lmd::BipartiteGraph>(in.value);

  std::string alg = o.alg;
  if (alg == "auto") alg = bip_input ? "bipartite" : "general";

  lmd::LmdResult result;
  std::size_t order = 0;
  lmd::Graph general;
  if (alg == "bipartite") {
    const auto& b = as_bipartite(in, "--alg bipartite");
    order = b.order();
    general = lmd::embed_bipartite(b).graph;
    result = lmd::delta_loc_bipartite(b, o.threads);
  } else {
    general = as_general(in);
    order = general.order();
    if (alg == "brute")
      result = lmd::delta_loc_brute(general, o.threads);
    else if (alg == "general")
      result = lmd::delta_loc_general(general, o.threads);
    else
      throw lmd::ParseError("unknown algorithm '" + alg + "'");
  }

  const auto cover = lmd::greedy_vertex_cover(general);
  const auto bounds = lmd::bound_report(order, cover.count());

  if (o.json) {
    ojson record;
    record["command"] = "compute";
    record["input_digest"] = in.digest;
    record["format"] = lmd::io::to_string(in.format);
    record["algorithm"] = result.algorithm;
    record["n"] = order;
    record["delta_loc"] = result.delta_loc;
    record["witness"] = sorted_indices(result.witness);
    record["witness_kind"] = lmd::to_string(result.witness_kind);
    record["sets_examined"] = result.sets_examined;
    record["bounds"] = bounds_json(bounds, "greedy");
    emit_record(record, !o.no_timing, timer);
  } else {
    std::cout << "delta_loc = " << result.delta_loc << '\n';
    std::cout << "witness (" << lmd::to_string(result.witness_kind) << ") =";
    for (auto v : sorted_indices(result.witness)) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "algorithm = " << result.algorithm
              << ", sets_examined = " << result.sets_examined << '\n';
  }
  return 0;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsOpts {
  std::string input, format, cover = "greedy";
  bool json = false;
  bool no_timing = false;
};

int run_bounds(const BoundsOpts& o) {
  Timer timer;
  const auto in = load(o.input, o.format);
  const bool bip_input = std::holds_alternative<lmd::BipartiteGraph>(in.value);
  const lmd::Graph g = as_general(in);
  if (g.order() == 0) throw lmd::InvalidOrder("bounds: empty graph");

  lmd::VertexSet cover;
  if (o.cover == "exact")
    cover = lmd::exact_vertex_cover(g);
  else if (o.cover == "greedy")
    cover = lmd::greedy_vertex_cover(g);
  else
    throw lmd::ParseError("unknown cover mode '" + o.cover + "'");

  const auto b = lmd::bound_report(g.order(), cover.count());

  if (o.json) {
    ojson record;
    record["command"] = "bounds";
    record["input_digest"] = in.digest;
    record["format"] = lmd::io::to_string(in.format);
    record["bounds"] = bounds_json(b, o.cover);
    record["thm1_strict_certified"] = bip_input;
    record["thm2_strict_certified"] = true;
    record["lemma2_strict"] = false;
    emit_record(record, !o.no_timing, timer);
  } else {
    std::cout << "n = " << b.n << '\n';
    std::cout << "cover (" << o.cover << ") = " << b.cover_size << '\n';
    std::cout << "bound_thm1 = " << b.bound_thm1
              << (bip_input ? "  [strict, certified: bipartite input]" : "  [bipartite graphs only]")
              << '\n';
    std::cout << "bound_thm2 = " << b.bound_thm2 << "  [strict]" << '\n';
    if (b.bound_lemma2)
      std::cout << "bound_lemma2 = " << *b.bound_lemma2 << "  [non-strict]" << '\n';
    else
      std::cout << "bound_lemma2 = undefined (empty cover)" << '\n';
  }
  return 0;
}

// ---- witness ---------------------------------------------------------------

struct WitnessOpts {
  std::string input, format, method, cover = "greedy";
  bool remark_k = false;
  bool json = false;
  bool no_timing = false;
};

int run_witness(const WitnessOpts& o) {
  Timer timer;
  const auto in = load(o.input, o.format);

  ojson record;
  record["command"] = "witness";
  record["method"] = o.method;
  record["input_digest"] = in.digest;

  if (o.method == "plotkin") {
    const auto& b = as_bipartite(in, "--method plotkin");
    const auto w = lmd::plotkin_witness(b);
    if (o.json) {
      record["set"] = sorted_indices(w.set);
      record["odd_size"] = w.odd_size;
      record["bound"] = w.bound;
      emit_record(record, !o.no_timing, timer);
    } else {
      std::cout << "D =";
      for (auto v : sorted_indices(w.set)) std::cout << ' ' << v;
      std::cout << "\n|Odd(D)| = " << w.odd_size << "  (bound " << w.bound << ")\n";
    }
    return 0;
  }

  const lmd::Graph g = as_general(in);
  if (o.method == "cover") {
    lmd::VertexSet cover =
        o.cover == "exact" ? lmd::exact_vertex_cover(g) : lmd::greedy_vertex_cover(g);
    const auto w = lmd::cover_witness(g, cover);
    if (o.json) {
      record["cover"] = o.cover;
      record["cover_size"] = cover.count();
      record["set"] = sorted_indices(w.set);
      record["set_size"] = w.set_size;
      record["k"] = w.k;
      record["bound"] = w.bound;
      record["fallback_used"] = w.fallback_used;
      emit_record(record, !o.no_timing, timer);
    } else {
      std::cout << "D =";
      for (auto v : sorted_indices(w.set)) std::cout << ' ' << v;
      std::cout << "\n|D u Odd(D)| = " << w.set_size << "  (bound " << w.bound << ", k = " << w.k
                << (w.fallback_used ? ", fallback" : "") << ")\n";
    }
    return 0;
  }
  if (o.method == "thm2") {
    const auto w = lmd::theorem2_witness(g, o.remark_k);
    if (o.json) {
      record["remark_k"] = o.remark_k;
      record["set"] = sorted_indices(w.set);
      record["set_size"] = w.set_size;
      record["k"] = w.k;
      record["bound"] = w.bound;
      emit_record(record, !o.no_timing, timer);
    } else {
      std::cout << "F =";
      for (auto v : sorted_indices(w.set)) std::cout << ' ' << v;
      std::cout << "\n|F u Odd(F)| = " << w.set_size << "  (bound " << w.bound << ", k = " << w.k
                << ")\n";
    }
    return 0;
  }
  throw lmd::ParseError("unknown witness method '" + o.method + "'");
}

// ---- reduce ----------------------------------------------------------------

struct ReduceOpts {
  std::string input, format, direction, output, out_format = "bip-edgelist", provenance;
  std::size_t k = 0;
  bool json = false;
  bool no_timing = false;
};

ojson provenance_json(const std::vector<lmd::VertexProvenance>& prov) {
  ojson vertices;
  for (std::size_t i = 0; i < prov.size(); ++i) {
    const auto& p = prov[i];
    ojson entry;
    entry["role"] = lmd::to_string(p.role);
    entry["source"] = p.source;
    if (p.role == lmd::GadgetRole::PBlock || p.role == lmd::GadgetRole::PPrimeBlock) {
      entry["block"] = p.block;
      entry["residue"] = p.residue;
    }
    vertices[std::to_string(i)] = entry;
  }
  return vertices;
}

int run_reduce(const ReduceOpts& o) {
  Timer timer;
  const auto in = load(o.input, o.format);
  if (to_format(o.out_format) != lmd::io::Format::BipEdgeList)
    throw lmd::FormatMismatch("reduce gadgets are bipartite; use bip-edgelist output");

  ojson record;
  record["command"] = "reduce";
  record["direction"] = o.direction;
  record["input_digest"] = in.digest;

  lmd::BipartiteGraph gadget;
  ojson prov;
  if (o.direction == "lmd2es") {
    const lmd::Graph g = as_general(in);
    auto r = lmd::reduce_lmd_to_evenset(g, o.k);
    gadget = std::move(r.instance.graph);
    record["source_k"] = o.k;
    record["parameter"] = r.instance.k;
    prov["direction"] = "lmd2es";
    prov["parameter"] = r.instance.k;
    prov["source_k"] = o.k;
    prov["vertices"] = provenance_json(r.provenance);
  } else if (o.direction == "es2blmd") {
    lmd::EvenSetInstance inst{as_bipartite(in, "es2blmd"), o.k};
    auto r = lmd::reduce_evenset_to_blmd(inst);
    gadget = std::move(r.gadget);
    record["source_k"] = r.source_k;
    record["parameter"] = r.parameter;
    record["prime"] = r.prime;
    prov["direction"] = "es2blmd";
    prov["parameter"] = r.parameter;
    prov["source_k"] = r.source_k;
    prov["prime"] = r.prime;
    prov["vertices"] = provenance_json(r.provenance);
  } else {
    throw lmd::ParseError("unknown direction '" + o.direction + "' (lmd2es | es2blmd)");
  }

  record["vertices"] = gadget.order();
  record["edges"] = gadget.edge_count();

  const std::string encoded = lmd::io::encode_bip_edge_list(gadget);
  std::string prov_path = o.provenance;
  if (prov_path.empty() && !o.output.empty() && o.output != "-")
    prov_path = o.output + ".provenance.json";
  if (!prov_path.empty()) {
    std::ofstream out(prov_path);
    if (!out) throw lmd::ParseError("cannot write '" + prov_path + "'");
    out << prov.dump(2) << '\n';
    record["provenance_file"] = prov_path;
  }

  if (o.json) {
    if (o.output.empty() || o.output == "-")
      record["graph"] = encoded;
    else
      write_output(o.output, encoded);
    record["output"] = o.output.empty() ? "-" : o.output;
    emit_record(record, !o.no_timing, timer);
  } else {
    write_output(o.output, encoded);
    std::cerr << "parameter = " << record["parameter"] << ", vertices = " << gadget.order()
              << ", edges = " << gadget.edge_count() << '\n';
  }
  return 0;
}

// ---- gen -------------------------------------------------------------------

struct GenOpts {
  std::string type, input, in_format, output, format;
  std::size_t n = 0, leaves = 0, dim = 0, n1 = 0, n2 = 0;
  double p = 0.5;
  std::uint64_t seed = 0, q = 5;
};

int run_gen(const GenOpts& o) {
  std::optional<lmd::Graph> g;
  std::optional<lmd::BipartiteGraph> b;

  if (o.type == "complete")
    g = lmd::complete_graph(o.n);
  else if (o.type == "star")
    g = lmd::star_graph(o.leaves ? o.leaves : o.n);
  else if (o.type == "cycle")
    g = lmd::cycle_graph(o.n);
  else if (o.type == "hypercube")
    g = lmd::hypercube_graph(o.dim);
  else if (o.type == "gnp")
    g = lmd::gnp_graph(o.n, o.p, o.seed);
  else if (o.type == "paley")
    g = lmd::paley_graph(o.q);
  else if (o.type == "randbip")
    b = lmd::random_bipartite_graph(o.n1, o.n2, o.p, o.seed);
  else if (o.type == "bipdouble") {
    if (o.input.empty()) throw lmd::ParseError("gen --type bipdouble needs -i");
    b = lmd::bipartite_double(as_general(load(o.input, o.in_format)));
  } else {
    throw lmd::ParseError("unknown generator type '" + o.type + "'");
  }

  std::string encoded;
  if (g) {
    const auto f = to_format(o.format).value_or(lmd::io::Format::EdgeList);
    if (f == lmd::io::Format::Graph6)
      encoded = lmd::io::encode_graph6(*g) + "\n";
    else if (f == lmd::io::Format::EdgeList)
      encoded = lmd::io::encode_edge_list(*g);
    else
      throw lmd::FormatMismatch("a general graph cannot be written as bip-edgelist");
  } else {
    const auto f = to_format(o.format).value_or(lmd::io::Format::BipEdgeList);
    if (f != lmd::io::Format::BipEdgeList)
      throw lmd::FormatMismatch("a bipartite graph is written as bip-edgelist");
    encoded = lmd::io::encode_bip_edge_list(*b);
  }
  write_output(o.output, encoded);
  return 0;
}

// ---- lc --------------------------------------------------------------------

struct LcOpts {
  std::string input, format, output, out_format;
  std::vector<std::size_t> vertices;
};

int run_lc(const LcOpts& o) {
  const auto in = load(o.input, o.format);
  const lmd::Graph g = as_general(in);
  const lmd::Graph h = lmd::lc_sequence(g, o.vertices);
  const auto f = to_format(o.out_format).value_or(
      in.format == lmd::io::Format::Graph6 ? lmd::io::Format::Graph6 : lmd::io::Format::EdgeList);
  if (f == lmd::io::Format::Graph6)
    write_output(o.output, lmd::io::encode_graph6(h) + "\n");
  else if (f == lmd::io::Format::EdgeList)
    write_output(o.output, lmd::io::encode_edge_list(h));
  else
    throw lmd::FormatMismatch("lc output is a general graph; use graph6 or edgelist");
  return 0;
}

// ---- evenset ---------------------------------------------------------------

struct EvensetOpts {
  std::string input, format;
  std::size_t k = 0;
  bool json = false;
  bool no_timing = false;
};

int run_evenset(const EvensetOpts& o) {
  Timer timer;
  const auto in = load(o.input, o.format);
  lmd::EvenSetInstance inst{as_bipartite(in, "evenset"), o.k};
  const auto solution = lmd::solve_evenset(inst);

  if (o.json) {
    ojson record;
    record["command"] = "evenset";
    record["input_digest"] = in.digest;
    record["k"] = o.k;
    record["solvable"] = solution.has_value();
    if (solution)
      record["solution"] = sorted_indices(*solution);
    else
      record["solution"] = nullptr;
    emit_record(record, !o.no_timing, timer);
  } else {
    if (solution) {
      std::cout << "solution =";
      for (auto v : sorted_indices(*solution)) std::cout << ' ' << v;
      std::cout << '\n';
    } else {
      std::cout << "no solution\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local minimum degree toolkit"};
  app.require_subcommand(1);

  ComputeOpts compute;
  auto* c = app.add_subcommand("compute", "compute delta_loc of a graph");
  c->add_option("-i,--input", compute.input, "input graph file")->required();
  c->add_option("-f,--format", compute.format, "graph6 | edgelist | bip-edgelist");
  c->add_option("--alg", compute.alg, "brute | general | bipartite | auto");
  c->add_flag("--json", compute.json, "print one RunRecord JSON object");
  c->add_flag("--no-timing", compute.no_timing, "omit wall_time_ms for reproducible output");
  c->add_option("--threads", compute.threads, "enumeration worker count");

  BoundsOpts bounds;
  auto* bo = app.add_subcommand("bounds", "evaluate the delta_loc upper bounds");
  bo->add_option("-i,--input", bounds.input)->required();
  bo->add_option("-f,--format", bounds.format);
  bo->add_option("--cover", bounds.cover, "exact | greedy");
  bo->add_flag("--json", bounds.json);
  bo->add_flag("--no-timing", bounds.no_timing);

  WitnessOpts witness;
  auto* w = app.add_subcommand("witness", "construct a small odd-dominating set");
  w->add_option("-i,--input", witness.input)->required();
  w->add_option("-f,--format", witness.format);
  w->add_option("--method", witness.method, "plotkin | cover | thm2")->required();
  w->add_option("--cover", witness.cover, "exact | greedy (cover method)");
  w->add_flag("--remark-k", witness.remark_k, "use the log2(n)/2 split parameter");
  w->add_flag("--json", witness.json);
  w->add_flag("--no-timing", witness.no_timing);

  ReduceOpts reduce;
  auto* r = app.add_subcommand("reduce", "materialize a reduction gadget");
  r->add_option("-i,--input", reduce.input)->required();
  r->add_option("-f,--format", reduce.format);
  r->add_option("--direction", reduce.direction, "lmd2es | es2blmd")->required();
  r->add_option("-k", reduce.k, "parameter of the source instance")->required();
  r->add_option("-o,--output", reduce.output, "gadget file (default stdout)");
  r->add_option("--out-format", reduce.out_format);
  r->add_option("--provenance", reduce.provenance, "provenance sidecar path");
  r->add_flag("--json", reduce.json);
  r->add_flag("--no-timing", reduce.no_timing);

  GenOpts gen;
  auto* ge = app.add_subcommand("gen", "generate a graph");
  ge->add_option("--type", gen.type,
                 "gnp | star | cycle | complete | hypercube | paley | bipdouble | randbip")
      ->required();
  ge->add_option("-n", gen.n, "order (complete, cycle, gnp)");
  ge->add_option("--leaves", gen.leaves, "leaf count (star)");
  ge->add_option("-d,--dim", gen.dim, "dimension (hypercube)");
  ge->add_option("--n1", gen.n1, "side-1 size (randbip)");
  ge->add_option("--n2", gen.n2, "side-2 size (randbip)");
  ge->add_option("-p", gen.p, "edge probability");
  ge->add_option("--seed", gen.seed, "generator seed");
  ge->add_option("--q", gen.q, "Paley modulus (prime, 1 mod 4)");
  ge->add_option("-i,--input", gen.input, "input graph (bipdouble)");
  ge->add_option("--in-format", gen.in_format);
  ge->add_option("-o,--output", gen.output, "output file (default stdout)");
  ge->add_option("-f,--format", gen.format, "output format");

  LcOpts lc;
  auto* l = app.add_subcommand("lc", "apply a local complementation sequence");
  l->add_option("-i,--input", lc.input)->required();
  l->add_option("-f,--format", lc.format);
  l->add_option("-v,--vertices", lc.vertices, "comma-separated vertex sequence")
      ->required()
      ->delimiter(',');
  l->add_option("-o,--output", lc.output);
  l->add_option("--out-format", lc.out_format);

  EvensetOpts evenset;
  auto* e = app.add_subcommand("evenset", "solve an EvenSet instance by brute force");
  e->add_option("-i,--input", evenset.input)->required();
  e->add_option("-f,--format", evenset.format);
  e->add_option("-k", evenset.k, "weight bound")->required();
  e->add_flag("--json", evenset.json);
  e->add_flag("--no-timing", evenset.no_timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    app.exit(err);
    return 2;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (bo->parsed()) return run_bounds(bounds);
    if (w->parsed()) return run_witness(witness);
    if (r->parsed()) return run_reduce(reduce);
    if (ge->parsed()) return run_gen(gen);
    if (l->parsed()) return run_lc(lc);
    if (e->parsed()) return run_evenset(evenset);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const lmd::FormatMismatch& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 3;
  } catch (const lmd::NoSuchPrime& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
