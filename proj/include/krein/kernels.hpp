#pragma once

#include <cstddef>
#include <string>

#include "krein/common.hpp"

namespace krein::kern {

/// Hot complex-arithmetic loops, provided as a table of function pointers so
/// the scalar reference and the AVX2 variants stay interchangeable. All
/// pointers work on interleaved std::complex<double> arrays; `n` counts
/// complex elements. `dst` may alias `a` exactly (full overlap), never
/// partially.
struct Ops {
  /// dst[i] = a[i] * b[i]
  void (*cmul)(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*caxpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
  /// dst[i] = alpha * a[i]
  void (*cscale)(cplx* dst, cplx alpha, const cplx* a, std::size_t n);
  /// sum conj(a[i]) * b[i]  (conjugate-linear in the first argument)
  cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
  /// sum a[i] * b[i]  (bilinear dual pairing, no conjugation)
  cplx (*cdotu)(const cplx* a, const cplx* b, std::size_t n);
  /// sum |a[i]|^2
  double (*norm2sq)(const cplx* a, std::size_t n);
  /// Radix-2 butterfly over a contiguous half-block:
  /// t = v[i]*w[i]; v[i] = u[i] - t; u[i] = u[i] + t
  void (*butterfly)(cplx* u, cplx* v, const cplx* w, std::size_t n);
};

const Ops& scalar_ops();

bool avx2_available();
/// Valid only when avx2_available(); compiled in on x86-64 builds.
const Ops& avx2_ops();

/// Variant picked at startup: AVX2 when the CPU supports it, else scalar.
/// Environment override KREIN_KERNELS=scalar|avx2 wins (used by the
/// equivalence tests).
const Ops& ops();
const std::string& active_kernel_name();

}  // namespace krein::kern
