#include "krein/kernels.hpp"

namespace krein::kern {
namespace {

void cmul_scalar(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void caxpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void cscale_scalar(cplx* dst, cplx alpha, const cplx* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = alpha * a[i];
}

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx cdotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm2sq_scalar(const cplx* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void butterfly_scalar(cplx* u, cplx* v, const cplx* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx t = v[i] * w[i];
    v[i] = u[i] - t;
    u[i] += t;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{cmul_scalar, caxpy_scalar,  cscale_scalar,  cdot_scalar,
                         cdotu_scalar, norm2sq_scalar, butterfly_scalar};
  return table;
}

}  // namespace krein::kern
