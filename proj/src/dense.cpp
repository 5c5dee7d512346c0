#include "krein/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "krein/kernels.hpp"

namespace krein {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}
}  // namespace

Mat Mat::identity(std::size_t n) {
  Mat e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = 1.0;
  return e;
}

Lu lu_factor(const Mat& m) {
  require(m.rows() == m.cols(), "lu_factor: matrix must be square");
  const std::size_t n = m.rows();
  Lu f;
  f.lu = m;
  f.pivots.resize(n);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(f.lu(i, j));
    scale = std::max(scale, s);
  }
  f.scale = scale;
  if (scale == 0.0) throw SingularMatrix("lu_factor: zero matrix");
  const double threshold = 1e-13 * scale;

  f.min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    f.min_pivot = std::min(f.min_pivot, best);
    if (best < threshold) throw SingularMatrix("lu_factor: pivot below threshold");
    if (p != k) {
      std::swap_ranges(f.lu.row(k), f.lu.row(k) + n, f.lu.row(p));
      f.parity = -f.parity;
    }
    f.pivots[k] = p;
    const cplx inv = 1.0 / f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx factor = f.lu(i, k) * inv;
      f.lu(i, k) = factor;
      kern::ops().caxpy(f.lu.row(i) + k + 1, -factor, f.lu.row(k) + k + 1, n - k - 1);
    }
  }
  return f;
}

Vec lu_solve(const Lu& f, const Vec& rhs) {
  const std::size_t n = f.lu.rows();
  require(rhs.size() == n, "lu_solve: rhs length mismatch");
  Vec x = rhs;
  for (std::size_t k = 0; k < n; ++k)
    if (f.pivots[k] != k) std::swap(x[k], x[f.pivots[k]]);
  // L y = Px (unit lower), then U x = y
  for (std::size_t i = 1; i < n; ++i) x[i] -= kern::ops().cdotu(f.lu.row(i), x.data(), i);
  for (std::size_t i = n; i-- > 0;) {
    x[i] -= kern::ops().cdotu(f.lu.row(i) + i + 1, x.data() + i + 1, n - i - 1);
    x[i] /= f.lu(i, i);
  }
  return x;
}

Vec lu_solve_adjoint(const Lu& f, const Vec& rhs) {
  // PA = LU gives A^H = U^H L^H P, so solve U^H w = rhs (lower triangular),
  // L^H y = w (unit upper), then undo the row swaps in reverse.
  const std::size_t n = f.lu.rows();
  require(rhs.size() == n, "lu_solve_adjoint: rhs length mismatch");
  Vec x = rhs;
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= std::conj(f.lu(k, i)) * x[k];
    x[i] = s / std::conj(f.lu(i, i));
  }
  for (std::size_t i = n; i-- > 0;) {
    cplx s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(f.lu(k, i)) * x[k];
    x[i] = s;
  }
  for (std::size_t k = n; k-- > 0;)
    if (f.pivots[k] != k) std::swap(x[k], x[f.pivots[k]]);
  return x;
}

Mat dense_inverse(const Mat& m) {
  const std::size_t n = m.rows();
  Lu f = lu_factor(m);
  Mat inv(n, n);
  Vec e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), cplx{});
    e[j] = 1.0;
    Vec col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

Vec apply(const Mat& m, const Vec& v) {
  require(v.size() == m.cols(), "apply: size mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    out[i] = kern::ops().cdotu(m.row(i), v.data(), m.cols());
  return out;
}

Vec apply_adjoint(const Mat& m, const Vec& v) {
  require(v.size() == m.rows(), "apply_adjoint: size mismatch");
  Vec out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const cplx* r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += std::conj(r[j]) * v[i];
  }
  return out;
}

Mat gemm(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "gemm: inner dimension mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      kern::ops().caxpy(c.row(i), a(i, k), b.row(k), b.cols());
  return c;
}

Mat transpose_conj(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

void axpy(cplx alpha, const Vec& x, Vec& y) {
  require(x.size() == y.size(), "axpy: size mismatch");
  kern::ops().caxpy(y.data(), alpha, x.data(), x.size());
}

Vec scaled(cplx alpha, const Vec& x) {
  Vec out(x.size());
  kern::ops().cscale(out.data(), alpha, x.data(), x.size());
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "add: size mismatch");
  Vec out = a;
  kern::ops().caxpy(out.data(), cplx{1.0, 0.0}, b.data(), b.size());
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "sub: size mismatch");
  Vec out = a;
  kern::ops().caxpy(out.data(), cplx{-1.0, 0.0}, b.data(), b.size());
  return out;
}

cplx dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  return kern::ops().cdot(a.data(), b.data(), a.size());
}

cplx dot_bilinear(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot_bilinear: size mismatch");
  return kern::ops().cdotu(a.data(), b.data(), a.size());
}

double norm2(const Vec& v) { return std::sqrt(kern::ops().norm2sq(v.data(), v.size())); }

double norm_inf(const Vec& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

double mat_norm_inf(const Mat& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

double mat_norm_frobenius(const Mat& m) {
  return std::sqrt(kern::ops().norm2sq(m.data(), m.rows() * m.cols()));
}

double residual(const Mat& m, const Vec& x, const Vec& rhs) {
  Vec r = apply(m, x);
  kern::ops().caxpy(r.data(), cplx{-1.0, 0.0}, rhs.data(), rhs.size());
  double denom = norm2(rhs);
  return denom > 0.0 ? norm2(r) / denom : norm2(r);
}

}  // namespace krein
