#pragma once
// Dense exact rational matrices and Gaussian elimination (first-nonzero
// pivoting, reduced row echelon form). Small sizes; clarity over speed.

#include <optional>
#include <vector>

#include "lcs/rat.hpp"

namespace lcs {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Q(0)) {}

  Q& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Q& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Mat&) const = default;
};

// In-place reduction to RREF; returns the rank. Pivot columns (ascending) are
// reported through pivots when non-null.
int rref_inplace(Mat& m, std::vector<int>* pivots = nullptr);

int rank_of(Mat m);

// Rows form an RREF basis of the null space {x : m x = 0}.
Mat kernel_basis(const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat vstack(const Mat& a, const Mat& b);
Mat submatrix_cols(const Mat& m, const std::vector<int>& cols);
int rank_of_cols(const Mat& m, const std::vector<int>& cols);

// RREF with zero rows dropped: canonical representation of the row space.
Mat row_space_rref(Mat m);
bool same_row_space(const Mat& a, const Mat& b);

// One solution of A x = b, if consistent.
std::optional<std::vector<Q>> solve_linear(const Mat& A, const std::vector<Q>& b);

Q det(Mat m);  // square only

}  // namespace lcs
