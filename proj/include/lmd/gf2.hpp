#pragma once

#include <cstdint>
#include <vector>

#include "lmd/bitset.hpp"

namespace lmd {

using BitVector = Bitset;

/// Dense bit matrix over the two-element field, rows stored as packed bit
/// vectors.  The 0xc and rx0 matrices are valid.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// All rows must already have length `cols`.
  static Gf2Matrix from_rows(std::vector<BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool bit(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set_bit(std::size_t r, std::size_t c, bool value = true) {
    if (value)
      rows_[r].set(c);
    else
      rows_[r].reset(c);
  }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  Gf2Matrix transposed() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// GF(2) rank by Gaussian elimination on a working copy; the argument is
/// never modified.
std::size_t rank(const Gf2Matrix& m);

/// Basis of {x : Mx = 0}; vectors have length cols().  The result is
/// deterministic: free columns ascending, back-substituted from the reduced
/// row echelon form.  size() == cols() - rank(m).
std::vector<BitVector> kernel_basis(const Gf2Matrix& m);

/// M * x over GF(2).
BitVector multiply(const Gf2Matrix& m, const BitVector& x);

struct CodewordSearchResult {
  BitVector word;
  std::size_t weight = 0;
  // Bit i set means generators[i] participates in the combination.
  std::uint64_t selector = 0;
};

/// Minimum-weight nonzero codeword in the span of linearly independent
/// generators, by exhaustive enumeration of all 2^g - 1 combinations.
/// Ties resolve to the smallest selector integer.  Throws EmptyGeneratorSet
/// when the list is empty.
CodewordSearchResult min_weight_nonzero_codeword(const std::vector<BitVector>& generators);

}  // namespace lmd
