#pragma once

#include <vector>

#include "dlg/arith.hpp"

namespace dlg {

using Row = std::vector<Q>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form over Q.  Zero rows are dropped.
struct Echelon {
  Matrix rows;
  std::vector<int> pivots;  // pivot column of each row
};

Echelon row_reduce(Matrix m, int cols);
int rank(const Matrix& m, int cols);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
Matrix kernel_basis(const Matrix& m, int cols);

}  // namespace dlg
