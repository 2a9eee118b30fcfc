#include "lmd/gf2.hpp"

#include <stdexcept>

#include "lmd/errors.hpp"

namespace lmd {

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw CapacityMismatch("row length does not match column count");
  Gf2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    rows_[r].for_each([&](std::size_t c) { t.set_bit(c, r); });
  return t;
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<BitVector> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < work.size(); ++col) {
    std::size_t pivot = rk;
    while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rk], work[pivot]);
    for (std::size_t r = rk + 1; r < work.size(); ++r)
      if (work[r].test(col)) work[r] ^= work[rk];
    ++rk;
  }
  return rk;
}

std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<BitVector> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

  // Reduced row echelon form, recording the pivot column of each pivot row.
  std::vector<std::size_t> pivot_col;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < work.size(); ++col) {
    std::size_t pivot = rk;
    while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rk], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r)
      if (r != rk && work[r].test(col)) work[r] ^= work[rk];
    pivot_col.push_back(col);
    ++rk;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<BitVector> basis;
  basis.reserve(cols - rk);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols);
    v.set(free);
    for (std::size_t r = 0; r < rk; ++r)
      if (work[r].test(free)) v.set(pivot_col[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector multiply(const Gf2Matrix& m, const BitVector& x) {
  if (x.size() != m.cols()) throw CapacityMismatch("vector length does not match column count");
  BitVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t parity = 0;
    auto rw = m.row(r).words();
    auto xw = x.words();
    for (std::size_t w = 0; w < rw.size(); ++w) parity ^= static_cast<std::size_t>(std::popcount(rw[w] & xw[w]));
    if (parity & 1) y.set(r);
  }
  return y;
}

CodewordSearchResult min_weight_nonzero_codeword(const std::vector<BitVector>& generators) {
  if (generators.empty()) throw EmptyGeneratorSet("min_weight_nonzero_codeword: no generators");
  const std::size_t g = generators.size();
  if (g > 63) throw std::invalid_argument("min_weight_nonzero_codeword: more than 63 generators");
  const std::size_t len = generators[0].size();
  for (const auto& v : generators)
    if (v.size() != len) throw CapacityMismatch("generators of unequal length");

  // Gray-code walk: one XOR per step.  The contract is selector-order
  // independent: among minimum-weight codewords the one with the smallest
  // selector integer wins.
  BitVector acc(len);
  CodewordSearchResult best;
  bool have_best = false;
  std::uint64_t prev_gray = 0;
  const std::uint64_t total = std::uint64_t{1} << g;
  for (std::uint64_t s = 1; s < total; ++s) {
    const std::uint64_t gray = s ^ (s >> 1);
    acc ^= generators[static_cast<std::size_t>(std::countr_zero(gray ^ prev_gray))];
    prev_gray = gray;
    const std::size_t w = acc.count();
    if (!have_best || w < best.weight || (w == best.weight && gray < best.selector)) {
      best = {acc, w, gray};
      have_best = true;
    }
  }
  return best;
}

}  // namespace lmd
