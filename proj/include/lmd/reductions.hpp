#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lmd/graph.hpp"

namespace lmd {

/// EvenSet instance: is there a nonempty D on side 1 (= R) with |D| <= k
/// whose odd-neighbourhood in side 2 (= B) is empty?
struct EvenSetInstance {
  BipartiteGraph graph;  // side 1 = R, side 2 = B
  std::size_t k = 0;
};

enum class GadgetRole { A1, A2, A3, A4, A5, R, PBlock, PPrimeBlock };
const char* to_string(GadgetRole role);

struct VertexProvenance {
  GadgetRole role = GadgetRole::R;
  std::size_t source = 0;   // original vertex: u for copies, r or b for blocks
  std::size_t block = 0;    // duplicate index i, Paley-block roles only
  std::size_t residue = 0;  // residue inside a Paley block
};

/// Five-copies gadget.  Gadget vertices are indexed in embedded order
/// (side 1 = A1|A2|A3 first, then side 2 = A4|A5); provenance[i] describes
/// embedded vertex i.  The instance is EvenSet-positive at parameter
/// 2k + 2 iff delta_loc(g) <= k.
struct LmdToEvensetResult {
  EvenSetInstance instance;
  std::vector<VertexProvenance> provenance;
};
LmdToEvensetResult reduce_lmd_to_evenset(const Graph& g, std::size_t k);

/// Paley-block gadget.  Side 1 = R then the P' blocks, side 2 = the P
/// blocks; each of the k+1 blocks per B vertex is the bipartite double of
/// the Paley graph on q residues plus the identity matching.  The gadget
/// satisfies delta_loc <= parameter iff the instance is EvenSet-positive;
/// parameter = k - 1 (see the provenance notes in the repository docs).
struct EvensetToBlmdResult {
  BipartiteGraph gadget;
  std::size_t parameter = 0;
  std::size_t source_k = 0;
  std::uint64_t prime = 0;
  std::vector<VertexProvenance> provenance;  // embedded indexing
};
EvensetToBlmdResult reduce_evenset_to_blmd(const EvenSetInstance& inst);

/// Smallest prime q in (k^2, 2k^2 + 5] with q = 1 mod 4, by trial division.
/// Throws NoSuchPrime when the range has none.
std::uint64_t find_reduction_prime(std::size_t k);
std::uint64_t smallest_prime_1mod4_in(std::uint64_t lo_exclusive, std::uint64_t hi_inclusive);

/// Canonically least nonempty D on side 1 with |D| <= k and empty
/// odd-neighbourhood, if any: a minimum-weight vector of the biadjacency
/// null space when that is small, otherwise a size-bounded subset scan.
std::optional<VertexSet> solve_evenset(const EvenSetInstance& inst);

}  // namespace lmd
