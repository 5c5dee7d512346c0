// AVX2/FMA variants of the complex kernels. Two complex doubles per 256-bit
// register, interleaved (re, im) layout. Compiled with -mavx2 -mfma on
// x86-64 only; selection happens at runtime in kernels_dispatch.cpp.

#include "krein/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace krein::kern {
namespace {

// (a0.im, a0.re, a1.im, a1.re)
inline __m256d swap_pairs(__m256d a) { return _mm256_permute_pd(a, 0x5); }

// c = a * b elementwise: even lane a.re*b.re - a.im*b.im, odd a.im*b.re + a.re*b.im
inline __m256d cplx_mul(__m256d a, __m256d b) {
  __m256d b_re = _mm256_movedup_pd(b);
  __m256d b_im = _mm256_permute_pd(b, 0xF);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(swap_pairs(a), b_im));
}

void cmul_avx2(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  std::size_t i = 0;
  auto* d = reinterpret_cast<double*>(dst);
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(d + 2 * i, cplx_mul(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void caxpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  __m256d ar = _mm256_set1_pd(alpha.real());
  __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  auto* py = reinterpret_cast<double*>(y);
  const auto* px = reinterpret_cast<const double*>(x);
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d t = _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(swap_pairs(vx), ai));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), t));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void cscale_avx2(cplx* dst, cplx alpha, const cplx* a, std::size_t n) {
  __m256d ar = _mm256_set1_pd(alpha.real());
  __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  auto* d = reinterpret_cast<double*>(dst);
  const auto* pa = reinterpret_cast<const double*>(a);
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    _mm256_storeu_pd(d + 2 * i,
                     _mm256_fmaddsub_pd(va, ar, _mm256_mul_pd(swap_pairs(va), ai)));
  }
  for (; i < n; ++i) dst[i] = alpha * a[i];
}

// Shared accumulation for both dot products:
//   acc1 lanes hold a.re*b.re (even) and a.im*b.im (odd),
//   acc2 lanes hold a.im*b.re (even) and a.re*b.im (odd).
// Conjugated:   re = even1 + odd1, im = odd2 - even2.
// Bilinear:     re = even1 - odd1, im = odd2 + even2.
struct DotAcc {
  double even1, odd1, even2, odd2;
};

DotAcc dot_accumulate(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  std::size_t i = 0;
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc1 = _mm256_fmadd_pd(va, vb, acc1);
    acc2 = _mm256_fmadd_pd(swap_pairs(va), vb, acc2);
  }
  __m128d s1 = _mm_add_pd(_mm256_castpd256_pd128(acc1), _mm256_extractf128_pd(acc1, 1));
  __m128d s2 = _mm_add_pd(_mm256_castpd256_pd128(acc2), _mm256_extractf128_pd(acc2, 1));
  DotAcc r{_mm_cvtsd_f64(s1), _mm_cvtsd_f64(_mm_unpackhi_pd(s1, s1)),
           _mm_cvtsd_f64(s2), _mm_cvtsd_f64(_mm_unpackhi_pd(s2, s2))};
  for (; i < n; ++i) {
    r.even1 += a[i].real() * b[i].real();
    r.odd1 += a[i].imag() * b[i].imag();
    r.even2 += a[i].imag() * b[i].real();
    r.odd2 += a[i].real() * b[i].imag();
  }
  return r;
}

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  DotAcc r = dot_accumulate(a, b, n);
  return {r.even1 + r.odd1, r.odd2 - r.even2};
}

cplx cdotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  DotAcc r = dot_accumulate(a, b, n);
  return {r.even1 - r.odd1, r.odd2 + r.even2};
}

double norm2sq_avx2(const cplx* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const auto* pa = reinterpret_cast<const double*>(a);
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
  for (; i < n; ++i)
    total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return total;
}

void butterfly_avx2(cplx* u, cplx* v, const cplx* w, std::size_t n) {
  std::size_t i = 0;
  auto* pu = reinterpret_cast<double*>(u);
  auto* pv = reinterpret_cast<double*>(v);
  const auto* pw = reinterpret_cast<const double*>(w);
  for (; i + 2 <= n; i += 2) {
    __m256d vu = _mm256_loadu_pd(pu + 2 * i);
    __m256d t = cplx_mul(_mm256_loadu_pd(pv + 2 * i), _mm256_loadu_pd(pw + 2 * i));
    _mm256_storeu_pd(pv + 2 * i, _mm256_sub_pd(vu, t));
    _mm256_storeu_pd(pu + 2 * i, _mm256_add_pd(vu, t));
  }
  for (; i < n; ++i) {
    cplx t = v[i] * w[i];
    v[i] = u[i] - t;
    u[i] += t;
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table{cmul_avx2, caxpy_avx2,  cscale_avx2,  cdot_avx2,
                         cdotu_avx2, norm2sq_avx2, butterfly_avx2};
  return table;
}

}  // namespace krein::kern

#endif  // x86-64
