#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lmd/bitset.hpp"

namespace lmd {

using VertexSet = Bitset;

/// Simple undirected graph on dense 0-based vertex indices, stored as
/// symmetric bitset adjacency rows.  Immutable in spirit: operations that
/// transform a graph return a new one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

  std::size_t order() const { return n_; }

  const VertexSet& neighbours(std::size_t u) const { return adj_[u]; }

  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

  void add_edge(std::size_t u, std::size_t v);
  void toggle_edge(std::size_t u, std::size_t v);

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph local_complement(const Graph& g, std::size_t u);

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Two-sided graph with biadjacency rows (rows = side-1 vertices, columns =
/// side-2 vertices); intra-side edges cannot exist by construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n1, std::size_t n2)
      : n1_(n1), n2_(n2), rows_(n1, VertexSet(n2)) {}

  std::size_t side1() const { return n1_; }
  std::size_t side2() const { return n2_; }
  std::size_t order() const { return n1_ + n2_; }

  const VertexSet& row(std::size_t u) const { return rows_[u]; }

  bool has_edge(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  void add_edge(std::size_t u, std::size_t v);

  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  BipartiteGraph transposed() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  std::vector<VertexSet> rows_;
};

/// G * u: toggles every edge between two distinct neighbours of u.
/// Throws VertexOutOfRange.
Graph local_complement(const Graph& g, std::size_t u);

/// Left-to-right fold of local_complement.
Graph lc_sequence(const Graph& g, std::span<const std::size_t> vertices);

/// Symmetric difference of the adjacency rows of d's members; equals
/// {v : |N(v) n d| odd}.  Throws CapacityMismatch.
VertexSet odd_neighbourhood(const Graph& g, const VertexSet& d);

/// Same over a biadjacency: d lives on side 1, the result on side 2.
VertexSet odd_neighbourhood(const BipartiteGraph& g, const VertexSet& d);

/// Throws EmptyGraph on the order-0 graph.
std::size_t min_degree(const Graph& g);

// ---- generator zoo ----

Graph complete_graph(std::size_t n);
/// Center at index 0, leaves 1..leaves.
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph hypercube_graph(std::size_t dim);

/// G(n, p) with one std::mt19937_64 draw per pair (u, v), u < v, in
/// lexicographic order; identical arguments give identical graphs.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
BipartiteGraph random_bipartite_graph(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);

/// Paley graph on Z_q: i ~ j iff i - j is a nonzero square mod q.
/// Requires q prime with q = 1 mod 4 (prime powers excluded); throws
/// InvalidPaleyModulus otherwise.
Graph paley_graph(std::uint64_t q);

/// (u, side1) ~ (v, side2) iff u ~ v in g; n1 = n2 = order.
BipartiteGraph bipartite_double(const Graph& g);

struct EmbeddedBipartite {
  Graph graph;      // order = n1 + n2, side-1 indices first
  VertexSet side1;  // indicator of side 1 in the embedded indexing
};
EmbeddedBipartite embed_bipartite(const BipartiteGraph& b);

bool is_prime(std::uint64_t n);

}  // namespace lmd
