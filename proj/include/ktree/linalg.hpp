#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ktree/matrix.hpp"

namespace ktree {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental row echelon form over Q. Rows are reduced on insertion, so
// memory stays proportional to the rank.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of those already added.
  bool add(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  // Basis of {x : row·x = 0 for every added row}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row, leading entry 1
};

SparseRow dense_to_sparse(const std::vector<Rational>& v);

}  // namespace ktree
