#pragma once

#include <cstdint>
#include <vector>

#include "fitt/budget.hpp"
#include "fitt/polynomial.hpp"

namespace fitt {

class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Polynomial>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial& at(int r, int c) const { return a_.at(r).at(c); }
  void set(int r, int c, Polynomial p) { a_.at(r).at(c) = std::move(p); }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<int>& row_idx,
                       const std::vector<int>& col_idx) const;

 private:
  int rows_, cols_;
  std::vector<std::vector<Polynomial>> a_;
};

// Cofactor expansion along the sparsest row or column, with zero pruning.
Polynomial determinant(const PolyMatrix& m);

// Fraction-free (Bareiss) elimination backend; must agree with determinant().
Polynomial determinant_bareiss(const PolyMatrix& m);

// All t x t minors in lexicographic (row-set, column-set) order, duplicates
// and zeros retained. t <= 0 yields {1}; t beyond the dimensions yields {}.
// Throws BudgetExceeded when C(rows,t)*C(cols,t) > max_minors.
std::vector<Polynomial> minors(const PolyMatrix& m, int t,
                               std::int64_t max_minors = default_budget().max_minors);

// Rank over the rationals, fraction-free elimination.
int rational_rank(std::vector<std::vector<mpz_class>> m);

std::int64_t binomial(int n, int k);  // saturates at INT64_MAX

}  // namespace fitt
