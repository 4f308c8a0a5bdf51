#include "fitt/matrix.hpp"

#include <algorithm>
#include <limits>

#include "fitt/errors.hpp"

namespace fitt {

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, a_[r][c]);
  return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
  PolyMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c)
      s.set(static_cast<int>(r), static_cast<int>(c), at(row_idx[r], col_idx[c]));
  return s;
}

namespace {

// active submatrix given by index lists; expands along the sparsest line
Polynomial det_rec(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return Polynomial::one();
  if (n == 1) return m.at(rows[0], cols[0]);

  int best_row = -1, best_row_nz = n + 1;
  for (int i = 0; i < n; ++i) {
    int nz = 0;
    for (int j = 0; j < n; ++j)
      if (!m.at(rows[i], cols[j]).is_zero()) ++nz;
    if (nz < best_row_nz) best_row_nz = nz, best_row = i;
  }
  if (best_row_nz == 0) return Polynomial::zero();

  int best_col = -1, best_col_nz = n + 1;
  for (int j = 0; j < n; ++j) {
    int nz = 0;
    for (int i = 0; i < n; ++i)
      if (!m.at(rows[i], cols[j]).is_zero()) ++nz;
    if (nz < best_col_nz) best_col_nz = nz, best_col = j;
  }

  Polynomial det;
  if (best_row_nz <= best_col_nz) {
    const int i = best_row;
    std::vector<int> sub_rows;
    for (int r = 0; r < n; ++r)
      if (r != i) sub_rows.push_back(rows[r]);
    for (int j = 0; j < n; ++j) {
      const Polynomial& e = m.at(rows[i], cols[j]);
      if (e.is_zero()) continue;
      std::vector<int> sub_cols;
      for (int c = 0; c < n; ++c)
        if (c != j) sub_cols.push_back(cols[c]);
      Polynomial cof = e * det_rec(m, sub_rows, sub_cols);
      if ((i + j) % 2 == 0)
        det += cof;
      else
        det -= cof;
    }
  } else {
    const int j = best_col;
    std::vector<int> sub_cols;
    for (int c = 0; c < n; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    for (int i = 0; i < n; ++i) {
      const Polynomial& e = m.at(rows[i], cols[j]);
      if (e.is_zero()) continue;
      std::vector<int> sub_rows;
      for (int r = 0; r < n; ++r)
        if (r != i) sub_rows.push_back(rows[r]);
      Polynomial cof = e * det_rec(m, sub_rows, sub_cols);
      if ((i + j) % 2 == 0)
        det += cof;
      else
        det -= cof;
    }
  }
  return det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionViolated("determinant of non-square matrix");
  std::vector<int> rows(m.rows()), cols(m.cols());
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  for (int j = 0; j < m.cols(); ++j) cols[j] = j;
  return det_rec(m, rows, cols);
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionViolated("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Polynomial::one();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Polynomial prev = Polynomial::one();
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!a[r][k].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Polynomial::zero();
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
      a[i][k] = Polynomial::zero();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (!r.fits_slong_p()) return std::numeric_limits<std::int64_t>::max();
  return r.get_si();
}

std::vector<Polynomial> minors(const PolyMatrix& m, int t, std::int64_t max_minors) {
  if (t <= 0) return {Polynomial::one()};
  if (t > m.rows() || t > m.cols()) return {};

  const std::int64_t nr = binomial(m.rows(), t);
  const std::int64_t nc = binomial(m.cols(), t);
  if (nr > max_minors / std::max<std::int64_t>(nc, 1) || nr * nc > max_minors)
    throw BudgetExceeded("minor enumeration needs " + std::to_string(nr) + "*" +
                         std::to_string(nc) + " submatrices, budget " +
                         std::to_string(max_minors));

  auto first_subset = [](int t_) {
    std::vector<int> s(t_);
    for (int i = 0; i < t_; ++i) s[i] = i;
    return s;
  };
  auto next_subset = [](std::vector<int>& s, int n) {
    int t_ = static_cast<int>(s.size());
    int i = t_ - 1;
    while (i >= 0 && s[i] == n - t_ + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < t_; ++j) s[j] = s[j - 1] + 1;
    return true;
  };

  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(std::min<std::int64_t>(nr * nc, 1 << 20)));
  std::vector<int> rows = first_subset(t);
  do {
    std::vector<int> cols = first_subset(t);
    do {
      out.push_back(determinant(m.submatrix(rows, cols)));
    } while (next_subset(cols, m.cols()));
  } while (next_subset(rows, m.rows()));
  return out;
}

int rational_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const mpz_class f = m[r][col], p = m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] * p - m[rank][c] * f;
    }
    ++rank;
  }
  return rank;
}

}  // namespace fitt
