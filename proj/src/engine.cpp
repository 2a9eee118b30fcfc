#include "lmd/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lmd/errors.hpp"

namespace lmd {

namespace {

constexpr std::size_t kNoValue = std::numeric_limits<std::size_t>::max();

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::uint64_t to_u64_saturating(const mpz_class& z) {
  static const mpz_class kMax = []() {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, 64);
    return mpz_class(m - 1);
  }();
  if (z >= kMax) return ~std::uint64_t{0};
  mpz_class lo = z & 0xffffffff;
  mpz_class hi = z >> 32;
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

// Same-cardinality masks: the one owning the lowest differing bit precedes
// the other in lexicographic index order.
bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (!d) return false;
  return (a >> std::countr_zero(d)) & 1u;
}

// Runs scan(first) for every first in [0, first_count), partitioned by
// residue class when threads > 1.  scan must be safe to call concurrently
// for distinct firsts.
template <class Scan>
void run_partitioned(unsigned threads, std::size_t first_count, const Scan& scan) {
  if (threads <= 1 || first_count <= 1) {
    for (std::size_t f = 0; f < first_count; ++f) scan(f);
    return;
  }
  const unsigned t = std::min<std::size_t>(threads, first_count);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w]() {
      for (std::size_t f = w; f < first_count; f += t) scan(f);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Deficient-cut testing.  Fast path for n <= 64 keeps each cut as one word
// and each restricted adjacency row as one word.

struct CutTester64 {
  std::vector<std::uint64_t> adj;

  explicit CutTester64(const Graph& g) {
    adj.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) adj.push_back(g.neighbours(v).low_word());
  }

  // True iff the rows of `cut` restricted to its complement are linearly
  // dependent, i.e. cutrank < |cut|.
  bool deficient(std::uint64_t cut) const {
    std::uint64_t slots[64];
    std::uint64_t occupied = 0;
    const std::uint64_t outside = ~cut;  // bits past n are zero in adj rows
    for (std::uint64_t m = cut; m; m &= m - 1) {
      std::uint64_t r = adj[static_cast<std::size_t>(std::countr_zero(m))] & outside;
      for (;;) {
        if (!r) return true;
        const int h = 63 - std::countl_zero(r);
        if ((occupied >> h) & 1u) {
          r ^= slots[h];
        } else {
          slots[h] = r;
          occupied |= std::uint64_t{1} << h;
          break;
        }
      }
    }
    return false;
  }
};

bool deficient_generic(const Graph& g, const VertexSet& cut) {
  const VertexSet outside = cut.complemented();
  std::vector<std::pair<int, Bitset>> basis;  // (pivot bit, reduced row)
  bool dependent = false;
  cut.for_each([&](std::size_t v) {
    if (dependent) return;
    Bitset r = g.neighbours(v) & outside;
    for (;;) {
      int h = -1;
      auto words = r.words();
      for (std::size_t w = words.size(); w-- > 0;)
        if (words[w]) {
          h = static_cast<int>(w * 64 + (63 - std::countl_zero(words[w])));
          break;
        }
      if (h < 0) {
        dependent = true;
        return;
      }
      auto it = std::find_if(basis.begin(), basis.end(),
                             [h](const auto& e) { return e.first == h; });
      if (it == basis.end()) {
        basis.emplace_back(h, std::move(r));
        return;
      }
      r ^= it->second;
    }
  });
  return dependent;
}

// Canonically first deficient cut of exactly size s, or nullopt.
std::optional<VertexSet> find_deficient_cut_of_size(const Graph& g, std::size_t s, unsigned threads) {
  const std::size_t n = g.order();
  if (s == 0 || s > n) return std::nullopt;

  if (n <= 64) {
    const CutTester64 tester(g);
    const std::size_t first_count = n - s + 1;
    std::atomic<std::size_t> best_first{kNoValue};
    std::vector<std::uint64_t> found(first_count, 0);

    auto scan = [&](std::size_t first) {
      if (first > best_first.load(std::memory_order_relaxed)) return;
      std::uint64_t result = 0;
      auto rec = [&](auto&& self, std::uint64_t mask, std::size_t next, std::size_t remaining) -> bool {
        if (remaining == 0) {
          if (tester.deficient(mask)) {
            result = mask;
            return true;
          }
          return false;
        }
        for (std::size_t v = next; v + remaining <= n; ++v)
          if (self(self, mask | (std::uint64_t{1} << v), v + 1, remaining - 1)) return true;
        return false;
      };
      if (rec(rec, std::uint64_t{1} << first, first + 1, s - 1)) {
        found[first] = result;
        std::size_t cur = best_first.load(std::memory_order_relaxed);
        while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
        }
      }
    };

    // A worker stops after its first hit: later subtrees in its residue
    // class only contain lexicographically later cuts.
    if (threads <= 1) {
      for (std::size_t f = 0; f < first_count; ++f) {
        scan(f);
        if (found[f]) break;
      }
    } else {
      const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, first_count));
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w]() {
          for (std::size_t f = w; f < first_count; f += t) {
            scan(f);
            if (found[f]) break;
          }
        });
      for (auto& th : pool) th.join();
    }

    for (std::size_t f = 0; f < first_count; ++f)
      if (found[f]) return Bitset::from_word(n, found[f]);
    return std::nullopt;
  }

  // Generic width: same scan with bitsets, single-threaded recursion per
  // first index (mutate-and-undo).
  std::optional<VertexSet> best;
  for (std::size_t first = 0; first + s <= n; ++first) {
    VertexSet cut(n);
    cut.set(first);
    bool hit = false;
    auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> bool {
      if (remaining == 0) {
        if (deficient_generic(g, cut)) return true;
        return false;
      }
      for (std::size_t v = next; v + remaining <= n; ++v) {
        cut.set(v);
        if (self(self, v + 1, remaining - 1)) return true;
        cut.reset(v);
      }
      return false;
    };
    hit = rec(rec, first + 1, s - 1);
    if (hit) {
      best = cut;
      break;
    }
  }
  return best;
}

}  // namespace

const char* to_string(WitnessKind k) {
  return k == WitnessKind::OddDominatingSet ? "odd-dominating-set" : "deficient-cut";
}

std::size_t cutrank(const Graph& g, const VertexSet& a) {
  if (a.size() != g.order()) throw CapacityMismatch("cutrank: capacity mismatch");
  const VertexSet outside = a.complemented();
  std::vector<BitVector> rows;
  rows.reserve(a.count());
  a.for_each([&](std::size_t u) { rows.push_back(g.neighbours(u) & outside); });
  // Columns inside A stay zero and do not affect the rank.
  return rank(Gf2Matrix::from_rows(std::move(rows), g.order()));
}

// ---------------------------------------------------------------------------
// delta_loc_brute

LmdResult delta_loc_brute(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  if (n == 0) throw EmptyGraph("delta_loc_brute: empty graph");

  struct Candidate {
    std::size_t value = kNoValue;
    VertexSet set;
  };

  Candidate best;

  if (n <= 64) {
    const CutTester64 packed(g);  // reuse the packed adjacency words
    const auto& adj = packed.adj;

    struct Candidate64 {
      std::size_t value = kNoValue;
      std::uint64_t mask = 0;
      std::size_t mask_size = 0;
    };
    const unsigned t = std::max(1u, threads);
    std::vector<Candidate64> local(t);

    // Full sweep: size ascending, then first index; each worker owns the
    // first indices of its residue class for every size.
    for (std::size_t s = 1; s <= n; ++s) {
      auto scan = [&](std::size_t first) {
        Candidate64& mine = local[first % t];
        auto rec = [&](auto&& self, std::uint64_t mask, std::uint64_t odd, std::size_t next,
                       std::size_t remaining) -> void {
          if (remaining == 0) {
            const std::size_t value = static_cast<std::size_t>(std::popcount(mask | odd));
            if (value < mine.value) {
              mine.value = value;
              mine.mask = mask;
              mine.mask_size = s;
            }
            return;
          }
          for (std::size_t v = next; v + remaining <= n; ++v)
            self(self, mask | (std::uint64_t{1} << v), odd ^ adj[v], v + 1, remaining - 1);
        };
        rec(rec, std::uint64_t{1} << first, adj[first], first + 1, s - 1);
      };
      run_partitioned(threads, n - s + 1, scan);
    }

    // Canonical merge: value, then witness size, then lexicographic.
    Candidate64 merged;
    for (const auto& c : local) {
      if (c.value == kNoValue) continue;
      if (c.value < merged.value ||
          (c.value == merged.value &&
           (c.mask_size < merged.mask_size ||
            (c.mask_size == merged.mask_size && lex_less_mask(c.mask, merged.mask)))))
        merged = c;
    }
    best.value = merged.value;
    best.set = Bitset::from_word(n, merged.mask);
  } else {
    // Generic width, single pass in canonical order.
    VertexSet d(n);
    VertexSet odd(n);
    for (std::size_t s = 1; s <= n; ++s) {
      auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
        if (remaining == 0) {
          const std::size_t value = Bitset::union_count(d, odd);
          if (value < best.value) {
            best.value = value;
            best.set = d;
          }
          return;
        }
        for (std::size_t v = next; v + remaining <= n; ++v) {
          d.set(v);
          odd ^= g.neighbours(v);
          self(self, v + 1, remaining - 1);
          d.reset(v);
          odd ^= g.neighbours(v);
        }
      };
      rec(rec, 0, s);
    }
  }

  mpz_class examined;
  mpz_ui_pow_ui(examined.get_mpz_t(), 2, static_cast<unsigned long>(n));
  examined -= 1;
  return {best.value - 1, best.set, WitnessKind::OddDominatingSet, to_u64_saturating(examined),
          "brute"};
}

// ---------------------------------------------------------------------------
// delta_loc_general / decide_delta_loc

LmdResult delta_loc_general(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  if (n == 0) throw EmptyGraph("delta_loc_general: empty graph");
  const std::size_t cap = cap_general(n);
  mpz_class examined = 0;
  for (std::size_t s = 1; s <= cap; ++s) {
    examined += binomial(n, s);
    if (auto cut = find_deficient_cut_of_size(g, s, threads)) {
      return {s - 1, *cut, WitnessKind::DeficientCut, to_u64_saturating(examined), "general"};
    }
  }
  // The cap is derived from a strict upper bound on delta_loc, so a
  // deficient cut always exists within it.
  throw std::logic_error("delta_loc_general: no deficient cut within the size cap");
}

DecideResult decide_delta_loc(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) throw EmptyGraph("decide_delta_loc: empty graph");
  const std::size_t cap = std::min(k + 1, n);
  for (std::size_t s = 1; s <= cap; ++s)
    if (auto cut = find_deficient_cut_of_size(g, s, 1)) return {true, std::move(cut)};
  return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// delta_loc_bipartite

namespace {

struct SideCandidate {
  std::size_t value = kNoValue;
  VertexSet set;  // embedded indexing
};

// Scans the size-s subsets of one side in lexicographic order and returns
// the canonically first minimizer of |D| + |Odd(D)|.
SideCandidate scan_side(const BipartiteGraph& rows, std::size_t embed_offset,
                        std::size_t embed_order, std::size_t s, unsigned threads) {
  const std::size_t n = rows.side1();
  struct Local {
    std::size_t value = kNoValue;
    VertexSet d;
  };
  const unsigned t = std::max(1u, threads);
  std::vector<Local> local(t);

  auto scan = [&](std::size_t first) {
    Local& mine = local[first % t];
    VertexSet d(n);
    VertexSet odd(rows.side2());
    d.set(first);
    odd ^= rows.row(first);
    auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
      if (remaining == 0) {
        const std::size_t value = s + odd.count();
        if (value < mine.value) {
          mine.value = value;
          mine.d = d;
        }
        return;
      }
      for (std::size_t v = next; v + remaining <= n; ++v) {
        d.set(v);
        odd ^= rows.row(v);
        self(self, v + 1, remaining - 1);
        d.reset(v);
        odd ^= rows.row(v);
      }
    };
    rec(rec, first + 1, s - 1);
  };
  run_partitioned(threads, n - s + 1, scan);

  SideCandidate best;
  for (const auto& c : local) {
    if (c.value == kNoValue) continue;
    if (c.value < best.value) {
      best.value = c.value;
      best.set = VertexSet(embed_order);
      c.d.for_each([&](std::size_t v) { best.set.set(embed_offset + v); });
    } else if (c.value == best.value) {
      VertexSet embedded(embed_order);
      c.d.for_each([&](std::size_t v) { embedded.set(embed_offset + v); });
      if (Bitset::canonical_less(embedded, best.set)) best.set = std::move(embedded);
    }
  }
  return best;
}

}  // namespace

LmdResult delta_loc_bipartite(const BipartiteGraph& b, unsigned threads) {
  const std::size_t n1 = b.side1();
  const std::size_t n2 = b.side2();
  const std::size_t order = n1 + n2;
  if (order == 0) throw EmptyGraph("delta_loc_bipartite: empty graph");

  const std::size_t cap = cap_bipartite(n1, n2);
  const std::size_t cap1 = std::min(cap, n1);
  const std::size_t cap2 = std::min(cap, n2);
  const BipartiteGraph bt = b.transposed();

  std::size_t best_value = kNoValue;
  VertexSet best_witness;
  mpz_class examined = 0;

  // Level-synchronous sweep: size s on side 1, then size s on side 2.  A
  // set of size s has value >= s, so levels at or past the current best
  // cannot improve it; completed levels are what sets_examined counts.
  for (std::size_t s = 1; s <= std::max(cap1, cap2); ++s) {
    if (s >= best_value) break;
    if (s <= cap1) {
      examined += binomial(n1, s);
      SideCandidate c = scan_side(b, 0, order, s, threads);
      if (c.value < best_value) {
        best_value = c.value;
        best_witness = std::move(c.set);
      }
    }
    if (s <= cap2) {
      examined += binomial(n2, s);
      SideCandidate c = scan_side(bt, n1, order, s, threads);
      if (c.value < best_value) {
        best_value = c.value;
        best_witness = std::move(c.set);
      }
    }
  }

  return {best_value - 1, best_witness, WitnessKind::OddDominatingSet,
          to_u64_saturating(examined), "bipartite"};
}

// ---------------------------------------------------------------------------
// Bound formulas

double upper_bound_general(std::size_t n) {
  if (n == 0) throw InvalidOrder("upper_bound_general: n must be positive");
  return 0.375 * static_cast<double>(n) + std::log2(static_cast<double>(n));
}

double upper_bound_bipartite(std::size_t n) {
  if (n == 0) throw InvalidOrder("upper_bound_bipartite: n must be positive");
  return 0.25 * static_cast<double>(n) + std::log2(static_cast<double>(n));
}

double vertex_cover_bound(std::size_t cover_size) {
  if (cover_size == 0) throw InvalidOrder("vertex_cover_bound: cover size must be positive");
  return 0.5 * (static_cast<double>(cover_size) + std::log2(static_cast<double>(cover_size)) + 1.0);
}

BoundReport bound_report(std::size_t n, std::size_t cover_size) {
  BoundReport r;
  r.n = n;
  r.bound_thm1 = upper_bound_bipartite(n);
  r.bound_thm2 = upper_bound_general(n);
  r.cover_size = cover_size;
  if (cover_size >= 1) r.bound_lemma2 = vertex_cover_bound(cover_size);
  return r;
}

// ---------------------------------------------------------------------------
// Vertex covers

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  if (cover.size() != g.order()) throw CapacityMismatch("is_vertex_cover: capacity mismatch");
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (cover.test(u)) continue;
    if (g.neighbours(u).and_not(cover).any()) return false;
  }
  return true;
}

VertexSet greedy_vertex_cover(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet cover(n);
  VertexSet matched(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (matched.test(u)) continue;
    // Any unmatched neighbour below u would have been matched at its own
    // turn, so the lowest unmatched neighbour is the lexicographic choice.
    const int v = g.neighbours(u).and_not(matched).lowest_bit();
    if (v < 0) continue;
    matched.set(u).set(static_cast<std::size_t>(v));
    cover.set(u).set(static_cast<std::size_t>(v));
  }
  return cover;
}

namespace {

void cover_branch(const Graph& g, VertexSet& cover, std::size_t size, VertexSet& best,
                  std::size_t& best_size) {
  if (size >= best_size) return;
  // lexicographically first uncovered edge
  std::size_t eu = kNoValue, ev = kNoValue;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (cover.test(u)) continue;
    const int v = g.neighbours(u).and_not(cover).lowest_bit();
    if (v >= 0) {
      eu = u;
      ev = static_cast<std::size_t>(v);
      break;
    }
  }
  if (eu == kNoValue) {
    best = cover;
    best_size = size;
    return;
  }
  cover.set(eu);
  cover_branch(g, cover, size + 1, best, best_size);
  cover.reset(eu);
  cover.set(ev);
  cover_branch(g, cover, size + 1, best, best_size);
  cover.reset(ev);
}

}  // namespace

VertexSet exact_vertex_cover(const Graph& g) {
  VertexSet best = greedy_vertex_cover(g);
  std::size_t best_size = best.count();
  if (best_size == 0) return best;  // edgeless
  VertexSet cover(g.order());
  cover_branch(g, cover, 0, best, best_size);
  return best;
}

// ---------------------------------------------------------------------------
// Constructive witnesses

namespace {

// floor(n2 * 2^(n1-1) / (2^n1 - 1)), the Plotkin right-hand side.
std::size_t plotkin_floor_bound(std::size_t n1, std::size_t n2) {
  mpz_class num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(n1 - 1));
  num *= static_cast<unsigned long>(n2);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n1));
  den -= 1;
  mpz_class q = num / den;
  return static_cast<std::size_t>(q.get_ui());
}

}  // namespace

PlotkinWitness plotkin_witness(const BipartiteGraph& b) {
  const std::size_t n1 = b.side1();
  const std::size_t n2 = b.side2();
  if (n1 == 0) throw EmptySideOne("plotkin_witness: side 1 is empty");

  PlotkinWitness out;
  out.bound = plotkin_floor_bound(n1, n2);

  if (n1 <= 20) {
    // Exhaustive over all nonempty subsets, canonical order.
    std::size_t best_odd = kNoValue;
    VertexSet best(n1);
    VertexSet d(n1);
    VertexSet odd(n2);
    for (std::size_t s = 1; s <= n1; ++s) {
      auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
        if (remaining == 0) {
          const std::size_t w = odd.count();
          if (w < best_odd) {
            best_odd = w;
            best = d;
          }
          return;
        }
        for (std::size_t v = next; v + remaining <= n1; ++v) {
          d.set(v);
          odd ^= b.row(v);
          self(self, v + 1, remaining - 1);
          d.reset(v);
          odd ^= b.row(v);
        }
      };
      rec(rec, 0, s);
      if (best_odd == 0) break;  // cannot improve on an empty odd-neighbourhood
    }
    out.set = best;
    out.odd_size = best_odd;
    return out;
  }

  // Wide side 1: check row independence first.
  std::vector<BitVector> rows;
  rows.reserve(n1);
  for (std::size_t u = 0; u < n1; ++u) rows.push_back(b.row(u));
  const Gf2Matrix m = Gf2Matrix::from_rows(rows, n2);
  if (rank(m) == n1) {
    // Nonempty subsets correspond bijectively to nonzero codewords.
    CodewordSearchResult r = min_weight_nonzero_codeword(rows);
    VertexSet d(n1);
    for (std::size_t i = 0; i < n1; ++i)
      if ((r.selector >> i) & 1u) d.set(i);
    out.set = d;
    out.odd_size = r.weight;
    return out;
  }
  // Dependent rows: a nonempty combination with empty odd-neighbourhood
  // exists, which is the exact minimum; take the first kernel vector of the
  // transposed biadjacency.
  auto basis = kernel_basis(m.transposed());
  out.set = basis.front();
  out.odd_size = 0;
  return out;
}

CoverWitness cover_witness(const Graph& g, const VertexSet& cover) {
  const std::size_t n = g.order();
  if (cover.size() != n) throw CapacityMismatch("cover_witness: capacity mismatch");
  for (std::size_t u = 0; u < n; ++u) {
    if (cover.test(u)) continue;
    if (g.neighbours(u).and_not(cover).any())
      throw NotACover("cover_witness: an edge is uncovered");
  }
  const std::size_t c = cover.count();
  if (c == 0) throw NotACover("cover_witness: cover must be nonempty");

  CoverWitness out;
  const VertexSet independent = cover.complemented();
  if (independent.none()) {
    // No independent vertices to build the auxiliary bipartite graph from.
    LmdResult oracle = delta_loc_brute(g);
    out.set = oracle.witness;
    out.set_size = oracle.delta_loc + 1;
    out.k = 0;
    out.bound = out.set_size;
    out.fallback_used = true;
    return out;
  }

  const std::size_t s_size = independent.count();
  const std::size_t k = std::min<std::size_t>(std::bit_width(c), s_size);
  std::vector<std::size_t> r_vertices;
  independent.for_each([&](std::size_t v) {
    if (r_vertices.size() < k) r_vertices.push_back(v);
  });

  // Exhaustive over the 2^k - 1 nonempty subsets of R, canonical order.
  std::size_t best_value = kNoValue;
  VertexSet best(n);
  VertexSet d(n);
  for (std::size_t s = 1; s <= k; ++s) {
    auto rec = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
      if (remaining == 0) {
        const std::size_t value = Bitset::union_count(d, odd_neighbourhood(g, d));
        if (value < best_value) {
          best_value = value;
          best = d;
        }
        return;
      }
      for (std::size_t i = next; i + remaining <= k; ++i) {
        d.set(r_vertices[i]);
        self(self, i + 1, remaining - 1);
        d.reset(r_vertices[i]);
      }
    };
    rec(rec, 0, s);
  }

  out.set = best;
  out.set_size = best_value;
  out.k = k;
  // ceil((c + k) * 2^(k-1) / (2^k - 1))
  const std::uint64_t num = static_cast<std::uint64_t>(c + k) << (k - 1);
  const std::uint64_t den = (std::uint64_t{1} << k) - 1;
  out.bound = static_cast<std::size_t>((num + den - 1) / den);
  return out;
}

std::size_t theorem2_bound(std::size_t n, std::size_t k) {
  const std::size_t m = n / 2 + k;
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
  mpz_class inner = (3 * mpz_class(static_cast<unsigned long>(m)) * t) / (2 * (t - 1));
  mpz_class outer = inner / 2;
  return static_cast<std::size_t>(outer.get_ui());
}

Theorem2Witness theorem2_witness(const Graph& g, bool remark_k) {
  const std::size_t n = g.order();
  if (n == 0) throw EmptyGraph("theorem2_witness: empty graph");

  const double log2n = std::log2(static_cast<double>(n));
  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(remark_k ? std::floor(log2n / 2.0)
                                           : std::floor(4.0 * log2n / 3.0)));

  Theorem2Witness out;
  out.k = k;
  out.bound = theorem2_bound(n, k);

  if (n <= 2) {
    LmdResult oracle = delta_loc_brute(g);
    out.set = oracle.witness;
    out.set_size = oracle.delta_loc + 1;
    return out;
  }

  const std::size_t want = 2 * k - 1;
  if (want > 63) throw std::invalid_argument("theorem2_witness: order too large");

  const std::size_t m = std::min(n, n / 2 + k);
  // S is the first m vertices; the cut map sends D in S to Odd(D) \ S.
  // Rows are the outside vertices restricted to S, so the kernel lives on S.
  Gf2Matrix cut(n - m, m);
  for (std::size_t v = m; v < n; ++v) {
    const VertexSet& row = g.neighbours(v);
    for (std::size_t j = 0; j < m; ++j)
      if (row.test(j)) cut.set_bit(v - m, j);
  }
  std::vector<BitVector> basis = kernel_basis(cut);
  if (basis.size() < want)
    throw std::logic_error("theorem2_witness: kernel smaller than rank-nullity guarantees");
  basis.resize(want);

  // Extend each kernel vector to the full vertex range and precompute its
  // odd-neighbourhood once; both fold linearly along the Gray walk.
  std::vector<VertexSet> gens(want, VertexSet(n));
  std::vector<VertexSet> odds;
  odds.reserve(want);
  for (std::size_t i = 0; i < want; ++i) {
    basis[i].for_each([&](std::size_t j) { gens[i].set(j); });
    odds.push_back(odd_neighbourhood(g, gens[i]));
  }

  VertexSet f(n);
  VertexSet odd(n);
  std::size_t best_value = kNoValue;
  std::uint64_t best_selector = 0;
  std::uint64_t prev_gray = 0;
  const std::uint64_t total = std::uint64_t{1} << want;
  for (std::uint64_t s = 1; s < total; ++s) {
    const std::uint64_t gray = s ^ (s >> 1);
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(gray ^ prev_gray));
    f ^= gens[flip];
    odd ^= odds[flip];
    prev_gray = gray;
    const std::size_t value = Bitset::union_count(f, odd);
    if (value < best_value || (value == best_value && gray < best_selector)) {
      best_value = value;
      best_selector = gray;
    }
  }

  VertexSet result(n);
  for (std::size_t i = 0; i < want; ++i)
    if ((best_selector >> i) & 1u) result ^= gens[i];
  out.set = result;
  out.set_size = best_value;
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration accounting

mpz_class enumeration_count(std::size_t n, std::size_t smax) {
  if (smax > n) throw std::invalid_argument("enumeration_count: smax > n");
  mpz_class total = 0;
  for (std::size_t s = 1; s <= smax; ++s) total += binomial(n, s);
  return total;
}

std::size_t cap_general(std::size_t n) {
  if (n == 0) return 0;
  if (n < 8) return n;
  const double f = 0.375 * static_cast<double>(n) + std::log2(static_cast<double>(n));
  return std::min(n, static_cast<std::size_t>(std::floor(f)) + 1);
}

std::size_t cap_bipartite(std::size_t n1, std::size_t n2) {
  const std::size_t a = std::min(n1, n2);
  const double log_term = a <= 1 ? 0.0 : std::log2(static_cast<double>(a)) / 2.0;
  const double f = static_cast<double>(a) / 2.0 + log_term;
  return static_cast<std::size_t>(std::floor(f)) + 1;
}

}  // namespace lmd
