#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "lmd/gf2.hpp"
#include "lmd/graph.hpp"

namespace lmd {

enum class WitnessKind { OddDominatingSet, DeficientCut };
const char* to_string(WitnessKind k);

/// delta_loc value plus the certifying set.
///  - odd-dominating-set: witness D is nonempty and |D u Odd(D)| = delta_loc + 1
///  - deficient-cut:      cutrank(witness) < |witness| = delta_loc + 1
struct LmdResult {
  std::size_t delta_loc = 0;
  VertexSet witness;
  WitnessKind witness_kind = WitnessKind::OddDominatingSet;
  std::uint64_t sets_examined = 0;
  std::string algorithm;
};

/// GF(2) rank of the |A| x |V \ A| cut matrix.  Throws CapacityMismatch.
std::size_t cutrank(const Graph& g, const VertexSet& a);

/// Exhaustive minimum of |D u Odd(D)| over all 2^n - 1 nonempty D.  The
/// witness is the minimizer reached first in canonical order (size
/// ascending, lexicographic within a size).  Project-wide oracle.
LmdResult delta_loc_brute(const Graph& g, unsigned threads = 1);

/// Deficient-cut search by size, capped per the 3n/8 + log2(n) bound.
/// Size classes are processed whole; sets_examined counts every cut in the
/// completed classes, so the result is identical for any thread count.
LmdResult delta_loc_general(const Graph& g, unsigned threads = 1);

/// One-sided enumeration for bipartite graphs, per-side caps derived from
/// the vertex-cover bound.  Witness indices refer to the embedded graph
/// (side-1 vertices first).
LmdResult delta_loc_bipartite(const BipartiteGraph& b, unsigned threads = 1);

struct DecideResult {
  bool positive = false;
  std::optional<VertexSet> witness;  // canonically first deficient cut
};
/// True iff delta_loc(g) <= k, by scanning cuts of size <= k + 1.
DecideResult decide_delta_loc(const Graph& g, std::size_t k);

/// (3/8) n + log2 n; strict upper bound on delta_loc.  Throws InvalidOrder
/// for n = 0.
double upper_bound_general(std::size_t n);
/// n/4 + log2 n; strict for bipartite graphs.
double upper_bound_bipartite(std::size_t n);
/// (c + log2 c + 1) / 2 with c the cover size; 2 delta_loc <= c + log2 c + 1.
double vertex_cover_bound(std::size_t cover_size);

struct BoundReport {
  std::size_t n = 0;
  double bound_thm1 = 0.0;
  double bound_thm2 = 0.0;
  std::size_t cover_size = 0;
  std::optional<double> bound_lemma2;  // only when cover_size >= 1
};
BoundReport bound_report(std::size_t n, std::size_t cover_size);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
/// Both endpoints of a maximal matching found in lexicographic edge order.
VertexSet greedy_vertex_cover(const Graph& g);
/// Minimum cover by branching on an uncovered edge; meant for small n.
VertexSet exact_vertex_cover(const Graph& g);

struct PlotkinWitness {
  VertexSet set;             // nonempty subset of side 1
  std::size_t odd_size = 0;  // |Odd(set)|
  std::size_t bound = 0;     // floor(n2 / (2 (1 - 2^-n1)))
};
/// Nonempty D on side 1 of minimum |Odd(D)|; odd_size <= bound always.
PlotkinWitness plotkin_witness(const BipartiteGraph& b);

struct CoverWitness {
  VertexSet set;
  std::size_t set_size = 0;  // |D u Odd(D)|
  std::size_t k = 0;
  std::size_t bound = 0;  // ceil((c+k)/(2(1-2^-k))); set_size on fallback
  bool fallback_used = false;
};
/// Witness from the vertex-cover construction; `cover` must cover every
/// edge and be nonempty (NotACover otherwise).
CoverWitness cover_witness(const Graph& g, const VertexSet& cover);

struct Theorem2Witness {
  VertexSet set;
  std::size_t set_size = 0;
  std::size_t k = 0;
  std::size_t bound = 0;
};
/// Polynomial-time witness from the half-split kernel construction;
/// set_size <= bound always.  remark_k switches the split parameter from
/// floor(4 log2(n) / 3) to floor(log2(n) / 2).
Theorem2Witness theorem2_witness(const Graph& g, bool remark_k = false);
/// floor(1/2 * floor((3/2) (floor(n/2) + k) / (1 - 2^(1-2k)))), exactly.
std::size_t theorem2_bound(std::size_t n, std::size_t k);

/// Sum of C(n, s) for s = 1..smax, exactly.
mpz_class enumeration_count(std::size_t n, std::size_t smax);

/// Cut-size cap used by delta_loc_general: n when n < 8, otherwise
/// min(n, floor(3n/8 + log2 n) + 1).
std::size_t cap_general(std::size_t n);
/// Per-side cap used by delta_loc_bipartite before clamping to each side:
/// floor(a/2 + log2(a)/2) + 1 with a = min(n1, n2), log term 0 for a <= 1.
std::size_t cap_bipartite(std::size_t n1, std::size_t n2);

}  // namespace lmd
