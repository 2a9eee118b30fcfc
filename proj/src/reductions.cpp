#include "lmd/reductions.hpp"

#include <string>

#include "lmd/errors.hpp"
#include "lmd/gf2.hpp"

namespace lmd {

const char* to_string(GadgetRole role) {
  switch (role) {
    case GadgetRole::A1: return "A1";
    case GadgetRole::A2: return "A2";
    case GadgetRole::A3: return "A3";
    case GadgetRole::A4: return "A4";
    case GadgetRole::A5: return "A5";
    case GadgetRole::R: return "R";
    case GadgetRole::PBlock: return "P";
    case GadgetRole::PPrimeBlock: return "P'";
  }
  return "?";
}

LmdToEvensetResult reduce_lmd_to_evenset(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) throw EmptyGraph("reduce_lmd_to_evenset: empty graph");

  // Side 1 = A1 | A2 | A3, side 2 = A4 | A5; copy u of block Ai sits at
  // offset (i - 1) * n within its side.
  BipartiteGraph gadget(3 * n, 2 * n);
  for (std::size_t u = 0; u < n; ++u) {
    gadget.add_edge(u, u);              // A1 - A4 matching
    gadget.add_edge(n + u, n + u);      // A2 - A5 matching
    gadget.add_edge(2 * n + u, n + u);  // A3 - A5 matching
  }
  for (auto [u, v] : g.edges()) {
    // bipartite double of g between A2 and each of A4, A5
    gadget.add_edge(n + u, v);
    gadget.add_edge(n + u, n + v);
    gadget.add_edge(n + v, u);
    gadget.add_edge(n + v, n + u);
  }

  std::vector<VertexProvenance> provenance(5 * n);
  for (std::size_t u = 0; u < n; ++u) {
    provenance[u] = {GadgetRole::A1, u, 0, 0};
    provenance[n + u] = {GadgetRole::A2, u, 0, 0};
    provenance[2 * n + u] = {GadgetRole::A3, u, 0, 0};
    provenance[3 * n + u] = {GadgetRole::A4, u, 0, 0};
    provenance[4 * n + u] = {GadgetRole::A5, u, 0, 0};
  }

  return {{std::move(gadget), 2 * k + 2}, std::move(provenance)};
}

std::uint64_t smallest_prime_1mod4_in(std::uint64_t lo_exclusive, std::uint64_t hi_inclusive) {
  for (std::uint64_t q = lo_exclusive + 1; q <= hi_inclusive; ++q)
    if (q % 4 == 1 && is_prime(q)) return q;
  throw NoSuchPrime("no prime q = 1 mod 4 in (" + std::to_string(lo_exclusive) + ", " +
                    std::to_string(hi_inclusive) + "]");
}

std::uint64_t find_reduction_prime(std::size_t k) {
  if (k == 0) throw ParameterTooSmall("find_reduction_prime: k must be >= 1");
  const std::uint64_t k2 = static_cast<std::uint64_t>(k) * k;
  return smallest_prime_1mod4_in(k2, 2 * k2 + 5);
}

EvensetToBlmdResult reduce_evenset_to_blmd(const EvenSetInstance& inst) {
  if (inst.k == 0) throw ParameterTooSmall("reduce_evenset_to_blmd: k must be >= 1");
  const std::size_t nr = inst.graph.side1();
  const std::size_t nb = inst.graph.side2();
  if (nr == 0) throw EmptyGraph("reduce_evenset_to_blmd: R is empty");

  const std::size_t k = inst.k;
  const std::uint64_t q = find_reduction_prime(k);
  const std::size_t copies = k + 1;
  const std::size_t block_total = nb * copies * static_cast<std::size_t>(q);

  // side 1 = R then the P' blocks; side 2 = the P blocks
  BipartiteGraph gadget(nr + block_total, block_total);

  std::vector<bool> is_square(q, false);
  for (std::uint64_t x = 0; x < q; ++x) is_square[(x * x) % q] = true;  // 0 included

  auto p_index = [&](std::size_t b, std::size_t i, std::uint64_t r) {
    return (b * copies + i) * static_cast<std::size_t>(q) + static_cast<std::size_t>(r);
  };

  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < copies; ++i)
      for (std::uint64_t rp = 0; rp < q; ++rp)  // rp indexes the P' side
        for (std::uint64_t r = 0; r < q; ++r)
          if (is_square[(r + q - rp) % q]) gadget.add_edge(nr + p_index(b, i, rp), p_index(b, i, r));

  for (auto [r, b] : inst.graph.edges())
    for (std::size_t i = 0; i < copies; ++i) gadget.add_edge(r, p_index(b, i, 0));

  std::vector<VertexProvenance> provenance(gadget.order());
  for (std::size_t r = 0; r < nr; ++r) provenance[r] = {GadgetRole::R, r, 0, 0};
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < copies; ++i)
      for (std::uint64_t res = 0; res < q; ++res) {
        provenance[nr + p_index(b, i, res)] = {GadgetRole::PPrimeBlock, b, i,
                                               static_cast<std::size_t>(res)};
        provenance[nr + block_total + p_index(b, i, res)] = {GadgetRole::PBlock, b, i,
                                                             static_cast<std::size_t>(res)};
      }

  // The delta_loc question on the gadget is asked at k - 1: a positive
  // instance transports a weight-<=k even set to a set with
  // |D u Odd(D)| <= k, i.e. delta_loc <= k - 1, and conversely.
  return {std::move(gadget), k - 1, k, q, std::move(provenance)};
}

std::optional<VertexSet> solve_evenset(const EvenSetInstance& inst) {
  const std::size_t nr = inst.graph.side1();
  if (nr == 0 || inst.k == 0) return std::nullopt;
  const std::size_t kmax = std::min(inst.k, nr);

  // Parity constraints: rows = B vertices, columns = R vertices.
  const BipartiteGraph bt = inst.graph.transposed();
  std::vector<BitVector> rows;
  rows.reserve(bt.side1());
  for (std::size_t b = 0; b < bt.side1(); ++b) rows.push_back(bt.row(b));
  const auto basis = kernel_basis(Gf2Matrix::from_rows(std::move(rows), nr));
  if (basis.empty()) return std::nullopt;

  if (basis.size() <= 20) {
    // Every solution is a nonzero kernel combination; keep the canonically
    // least one of weight <= k.
    BitVector acc(nr);
    std::optional<VertexSet> best;
    std::uint64_t prev_gray = 0;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t s = 1; s < total; ++s) {
      const std::uint64_t gray = s ^ (s >> 1);
      acc ^= basis[static_cast<std::size_t>(std::countr_zero(gray ^ prev_gray))];
      prev_gray = gray;
      if (acc.count() <= kmax && (!best || Bitset::canonical_less(acc, *best))) best = acc;
    }
    return best;
  }

  // Huge null space: scan subsets by size instead.
  VertexSet d(nr);
  VertexSet odd(inst.graph.side2());
  std::optional<VertexSet> found;
  for (std::size_t s = 1; s <= kmax && !found; ++s) {
    auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> bool {
      if (remaining == 0) {
        if (odd.none()) {
          found = d;
          return true;
        }
        return false;
      }
      for (std::size_t v = next; v + remaining <= nr; ++v) {
        d.set(v);
        odd ^= inst.graph.row(v);
        if (self(self, v + 1, remaining - 1)) return true;
        d.reset(v);
        odd ^= inst.graph.row(v);
      }
      return false;
    };
    rec(rec, 0, s);
  }
  return found;
}

}  // namespace lmd
