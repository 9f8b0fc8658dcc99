#include "lcs/matrix.hpp"

#include <stdexcept>

namespace lcs {

int rref_inplace(Mat& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    Q inv = m.at(rank, col);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) /= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      Q f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

int rank_of(Mat m) { return rref_inplace(m); }

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> piv;
  int rank = rref_inplace(r, &piv);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat k(m.cols - rank, m.cols);
  int out = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    k.at(out, f) = 1;
    for (int i = 0; i < rank; ++i) k.at(out, piv[i]) = -r.at(i, f);
    ++out;
  }
  rref_inplace(k);
  return k;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul shape mismatch");
  Mat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows == 0) return b;
  if (b.rows == 0) return a;
  if (a.cols != b.cols) throw std::invalid_argument("vstack width mismatch");
  Mat r(a.rows + b.rows, a.cols);
  r.a.assign(a.a.begin(), a.a.end());
  r.a.insert(r.a.end(), b.a.begin(), b.a.end());
  return r;
}

Mat submatrix_cols(const Mat& m, const std::vector<int>& cols) {
  Mat r(m.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
  return r;
}

int rank_of_cols(const Mat& m, const std::vector<int>& cols) {
  return rank_of(submatrix_cols(m, cols));
}

Mat row_space_rref(Mat m) {
  int rank = rref_inplace(m);
  Mat r(rank, m.cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
  return r;
}

bool same_row_space(const Mat& a, const Mat& b) {
  if (a.cols != b.cols) return false;
  return row_space_rref(a) == row_space_rref(b);
}

std::optional<std::vector<Q>> solve_linear(const Mat& A, const std::vector<Q>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv;
  int rank = rref_inplace(aug, &piv);
  for (int i = 0; i < rank; ++i)
    if (piv[i] == A.cols) return std::nullopt;  // inconsistent
  std::vector<Q> x(A.cols, Q(0));
  for (int i = 0; i < rank; ++i) x[piv[i]] = aug.at(i, A.cols);
  return x;
}

Q det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det needs a square matrix");
  Q d = 1;
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Q(0);
    if (piv != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(col, c));
      d = -d;
    }
    d *= m.at(col, col);
    Q inv = m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Q f = m.at(r, col) / inv;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return d;
}

}  // namespace lcs
