#pragma once

#include <cstddef>
#include <vector>

#include "krein/common.hpp"
#include "krein/errors.hpp"

namespace krein {

/// Row-major dense complex matrix. Row-major is the single storage
/// convention of the whole library; every 2D flattening goes through
/// GridPartition ordinals, so the index map lives in exactly one place.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  cplx* row(std::size_t i) { return a_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

/// PA = LU, partial pivoting, L and U packed in one matrix (unit diagonal of
/// L implied). `pivots[k]` is the row swapped into position k at step k.
struct Lu {
  Mat lu;
  std::vector<std::size_t> pivots;
  int parity = 1;
  double min_pivot = 0.0;
  double scale = 0.0;  // max row sum norm of the input, used by the pivot threshold
};

Lu lu_factor(const Mat& m);
Vec lu_solve(const Lu& f, const Vec& rhs);
/// Solves m^H x = rhs reusing the factorization of m.
Vec lu_solve_adjoint(const Lu& f, const Vec& rhs);
Mat dense_inverse(const Mat& m);

Vec apply(const Mat& m, const Vec& v);
Vec apply_adjoint(const Mat& m, const Vec& v);
Mat gemm(const Mat& a, const Mat& b);
Mat transpose_conj(const Mat& m);

void axpy(cplx alpha, const Vec& x, Vec& y);
Vec scaled(cplx alpha, const Vec& x);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
/// Conjugate-linear in the first argument: sum conj(a_k) b_k.
cplx dot(const Vec& a, const Vec& b);
/// Plain dual pairing, no conjugation: sum a_k b_k.
cplx dot_bilinear(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm_inf(const Vec& v);
double mat_norm_inf(const Mat& m);
double mat_norm_frobenius(const Mat& m);

/// ||m x - rhs||_2 / ||rhs||_2 (absolute norm when rhs = 0). Solvers report
/// this instead of assuming their own accuracy.
double residual(const Mat& m, const Vec& x, const Vec& rhs);

}  // namespace krein
