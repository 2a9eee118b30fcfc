#include "lmd/graph.hpp"

#include <random>
#include <string>

#include "lmd/errors.hpp"

namespace lmd {

namespace {

void check_vertex(std::size_t u, std::size_t n, const char* where) {
  if (u >= n)
    throw VertexOutOfRange(std::string(where) + ": vertex " + std::to_string(u) +
                           " out of range for order " + std::to_string(n));
}

// Edge probability as a 64-bit threshold; one generator draw per pair keeps
// the sampling order stable regardless of p.
bool sample_edge(std::mt19937_64& rng, double p) {
  const std::uint64_t draw = rng();
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  const std::uint64_t threshold =
      scaled >= 18446744073709551615.0L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  return draw < threshold;
}

}  // namespace

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u, n_, "add_edge");
  check_vertex(v, n_, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
  check_vertex(u, n_, "toggle_edge");
  check_vertex(v, n_, "toggle_edge");
  if (u == v) throw std::invalid_argument("toggle_edge: self-loops are not allowed");
  if (adj_[u].test(v)) {
    adj_[u].reset(v);
    adj_[v].reset(u);
  } else {
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

std::size_t Graph::degree(std::size_t u) const {
  check_vertex(u, n_, "degree");
  return adj_[u].count();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

void BipartiteGraph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u, n1_, "add_edge(side1)");
  check_vertex(v, n2_, "add_edge(side2)");
  rows_[u].set(v);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& row : rows_) m += row.count();
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n1_; ++u)
    rows_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
  return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t(n2_, n1_);
  for (std::size_t u = 0; u < n1_; ++u)
    rows_[u].for_each([&](std::size_t v) { t.add_edge(v, u); });
  return t;
}

Graph local_complement(const Graph& g, std::size_t u) {
  check_vertex(u, g.order(), "local_complement");
  Graph h = g;
  const VertexSet& nbrs = g.neighbours(u);
  // XOR-ing N(u) into every row v in N(u) toggles exactly the pairs inside
  // N(u), symmetrically (each of v, w gets the other's bit flipped).  Bit v
  // of row v is toggled too since v is in N(u); clearing it restores
  // simplicity.  u itself is untouched: u is not in N(u).
  nbrs.for_each([&](std::size_t v) {
    h.adj_[v] ^= nbrs;
    h.adj_[v].reset(v);
  });
  return h;
}

Graph lc_sequence(const Graph& g, std::span<const std::size_t> vertices) {
  Graph h = g;
  for (std::size_t u : vertices) h = local_complement(h, u);
  return h;
}

VertexSet odd_neighbourhood(const Graph& g, const VertexSet& d) {
  if (d.size() != g.order()) throw CapacityMismatch("odd_neighbourhood: capacity mismatch");
  VertexSet acc(g.order());
  d.for_each([&](std::size_t u) { acc ^= g.neighbours(u); });
  return acc;
}

VertexSet odd_neighbourhood(const BipartiteGraph& g, const VertexSet& d) {
  if (d.size() != g.side1()) throw CapacityMismatch("odd_neighbourhood: capacity mismatch");
  VertexSet acc(g.side2());
  d.for_each([&](std::size_t u) { acc ^= g.row(u); });
  return acc;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw EmptyGraph("min_degree: empty graph");
  std::size_t best = g.degree(0);
  for (std::size_t u = 1; u < g.order(); ++u) best = std::min(best, g.degree(u));
  return best;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph hypercube_graph(std::size_t dim) {
  if (dim > 20) throw std::invalid_argument("hypercube_graph: dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) g.add_edge(u, v);
    }
  return g;
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp_graph: p must be in [0, 1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (sample_edge(rng, p)) g.add_edge(u, v);
  return g;
}

BipartiteGraph random_bipartite_graph(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_bipartite_graph: p must be in [0, 1]");
  BipartiteGraph b(n1, n2);
  std::mt19937_64 rng(seed);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v)
      if (sample_edge(rng, p)) b.add_edge(u, v);
  return b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Graph paley_graph(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 1)
    throw InvalidPaleyModulus("paley_graph: q must be a prime with q = 1 mod 4, got " +
                              std::to_string(q));
  std::vector<bool> is_square(q, false);
  for (std::uint64_t x = 1; x < q; ++x) is_square[(x * x) % q] = true;
  Graph g(static_cast<std::size_t>(q));
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = i + 1; j < q; ++j)
      if (is_square[(j - i) % q]) g.add_edge(i, j);
  return g;
}

BipartiteGraph bipartite_double(const Graph& g) {
  const std::size_t n = g.order();
  BipartiteGraph b(n, n);
  for (std::size_t u = 0; u < n; ++u)
    g.neighbours(u).for_each([&](std::size_t v) { b.add_edge(u, v); });
  return b;
}

EmbeddedBipartite embed_bipartite(const BipartiteGraph& b) {
  const std::size_t n1 = b.side1();
  Graph g(n1 + b.side2());
  for (std::size_t u = 0; u < n1; ++u)
    b.row(u).for_each([&](std::size_t v) { g.add_edge(u, n1 + v); });
  VertexSet side1(n1 + b.side2());
  for (std::size_t u = 0; u < n1; ++u) side1.set(u);
  return {std::move(g), std::move(side1)};
}

}  // namespace lmd
