#pragma once

#include <cstddef>
#include <vector>

#include "krein/common.hpp"

namespace krein {

/// Unitary DFT, 1/sqrt(N) normalization in both directions:
///   forward: (Ff)(x) = N^{-1/2} sum_y exp(-2*pi*i*x*y/N) f(y)
///   inverse conjugates the kernel.
/// Power-of-two sizes run an iterative radix-2 transform; everything else
/// falls back to direct O(N^2) summation.
class DftPlan {
 public:
  enum class Direction { forward, inverse };
  enum class Strategy { automatic, radix2, direct };

  DftPlan(std::size_t n, Direction dir, Strategy strategy = Strategy::automatic);

  std::size_t size() const { return n_; }
  Direction direction() const { return dir_; }
  bool uses_radix2() const { return radix2_; }

  void apply(cplx* data) const;
  void apply(Vec& v) const;

 private:
  std::size_t n_;
  Direction dir_;
  bool radix2_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::vector<cplx>> stage_twiddles_;  // radix-2 path
  std::vector<cplx> kernel_;                       // direct path: exp(sign*2*pi*i*k/n)
};

Vec dft_forward(const Vec& v);
Vec dft_inverse(const Vec& v);

/// Separable 2D transform on a row-major nx-by-ny grid (1D passes along both
/// axes). Row passes may run in parallel, see parallel.hpp.
void dft2_forward_inplace(Vec& grid, std::size_t nx, std::size_t ny);
void dft2_inverse_inplace(Vec& grid, std::size_t nx, std::size_t ny);

}  // namespace krein
