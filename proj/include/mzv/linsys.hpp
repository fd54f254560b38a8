// Exact linear systems over Q: rank and kernel by fraction-free elimination.
#pragma once

#include <vector>

#include "mzv/exactnum.hpp"

namespace mzv {

class LinSystem {
 public:
  explicit LinSystem(size_t ncols) : ncols_(ncols) {}
  size_t ncols() const { return ncols_; }
  size_t nrows() const { return rows_.size(); }
  // zero rows are dropped
  void add_row(const std::vector<Rational>& row);

  size_t rank() const;
  // basis of the null space; each vector is integral, content 1, first nonzero entry positive
  std::vector<std::vector<Integer>> kernel() const;

 private:
  // row echelon form with integer rows; pivot columns in increasing order
  void eliminate(std::vector<std::vector<Integer>>& rows, std::vector<size_t>& pivots) const;
  size_t ncols_;
  std::vector<std::vector<Integer>> rows_;
};

// divide by the gcd of the entries and make the first nonzero entry positive
void normalize_content(std::vector<Integer>& v);

}  // namespace mzv
