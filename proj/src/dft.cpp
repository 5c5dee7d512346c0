#include "krein/dft.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "krein/kernels.hpp"
#include "krein/parallel.hpp"

namespace krein {

namespace {

// Twiddles by repeated multiplication, re-seeded from sin/cos every 32 steps
// to bound phase drift.
std::vector<cplx> make_twiddles(std::size_t count, double theta_step) {
  std::vector<cplx> w(count);
  cplx cur{1.0, 0.0};
  const cplx step = std::polar(1.0, theta_step);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 32 == 0) cur = std::polar(1.0, theta_step * static_cast<double>(i));
    w[i] = cur;
    cur *= step;
  }
  return w;
}

std::vector<std::size_t> make_bitrev(std::size_t n) {
  std::vector<std::size_t> rev(n, 0);
  for (std::size_t i = 1; i < n; ++i) rev[i] = (rev[i >> 1] >> 1) | ((i & 1) ? n >> 1 : 0);
  return rev;
}

}  // namespace

DftPlan::DftPlan(std::size_t n, Direction dir, Strategy strategy) : n_(n), dir_(dir) {
  const double sign = (dir == Direction::forward) ? -1.0 : 1.0;
  radix2_ = (strategy == Strategy::radix2) ||
            (strategy == Strategy::automatic && is_power_of_two(n));
  if (radix2_ && !is_power_of_two(n)) radix2_ = false;
  if (radix2_) {
    bitrev_ = make_bitrev(n);
    for (std::size_t m = 2; m <= n; m <<= 1)
      stage_twiddles_.push_back(make_twiddles(m / 2, sign * 2.0 * kPi / static_cast<double>(m)));
  } else {
    kernel_ = make_twiddles(n, sign * 2.0 * kPi / static_cast<double>(n));
  }
}

void DftPlan::apply(cplx* data) const {
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_));
  if (radix2_) {
    for (std::size_t i = 0; i < n_; ++i)
      if (bitrev_[i] > i) std::swap(data[i], data[bitrev_[i]]);
    std::size_t stage = 0;
    for (std::size_t m = 2; m <= n_; m <<= 1, ++stage) {
      const std::size_t mh = m >> 1;
      const cplx* w = stage_twiddles_[stage].data();
      for (std::size_t r = 0; r < n_; r += m)
        kern::ops().butterfly(data + r, data + r + mh, w, mh);
    }
    kern::ops().cscale(data, cplx{norm, 0.0}, data, n_);
    return;
  }
  Vec out(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    cplx s{};
    for (std::size_t y = 0; y < n_; ++y) s += kernel_[(x * y) % n_] * data[y];
    out[x] = s * norm;
  }
  std::copy(out.begin(), out.end(), data);
}

void DftPlan::apply(Vec& v) const { apply(v.data()); }

Vec dft_forward(const Vec& v) {
  Vec out = v;
  DftPlan(v.size(), DftPlan::Direction::forward).apply(out);
  return out;
}

Vec dft_inverse(const Vec& v) {
  Vec out = v;
  DftPlan(v.size(), DftPlan::Direction::inverse).apply(out);
  return out;
}

namespace {

void dft2_inplace(Vec& grid, std::size_t nx, std::size_t ny, DftPlan::Direction dir) {
  const DftPlan row_plan(ny, dir);
  const DftPlan col_plan(nx, dir);
  parallel_for(nx, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) row_plan.apply(grid.data() + i * ny);
  });
  parallel_for(ny, [&](std::size_t begin, std::size_t end) {
    Vec scratch(nx);
    for (std::size_t j = begin; j < end; ++j) {
      for (std::size_t i = 0; i < nx; ++i) scratch[i] = grid[i * ny + j];
      col_plan.apply(scratch);
      for (std::size_t i = 0; i < nx; ++i) grid[i * ny + j] = scratch[i];
    }
  });
}

}  // namespace

void dft2_forward_inplace(Vec& grid, std::size_t nx, std::size_t ny) {
  dft2_inplace(grid, nx, ny, DftPlan::Direction::forward);
}

void dft2_inverse_inplace(Vec& grid, std::size_t nx, std::size_t ny) {
  dft2_inplace(grid, nx, ny, DftPlan::Direction::inverse);
}

}  // namespace krein
