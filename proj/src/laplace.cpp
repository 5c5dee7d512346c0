#include "krein/laplace.hpp"

#include <algorithm>
#include <cmath>

#include "krein/dft.hpp"
#include "krein/kernels.hpp"

namespace krein {

namespace {

struct Symbol1DState {
  DftPlan fwd;
  DftPlan inv;
  Vec symbol;
  Vec symbol_conj;
};

Vec sandwich_1d(const std::shared_ptr<const Symbol1DState>& st, const Vec& v, bool adjoint) {
  // R = F diag(symbol) F^*; unitary F makes the adjoint the same sandwich
  // with the conjugated symbol.
  Vec u = v;
  st->inv.apply(u);
  const Vec& s = adjoint ? st->symbol_conj : st->symbol;
  kern::ops().cmul(u.data(), u.data(), s.data(), u.size());
  st->fwd.apply(u);
  return u;
}

constexpr double kSpectralDistanceMin = 1e-10;

}  // namespace

ResolventHandle periodic_resolvent_1d(std::size_t n, cplx lambda, double coeff) {
  if (n < 2) throw DimensionMismatch("periodic_resolvent_1d: n must be >= 2");
  Vec symbol(n), symbol_conj(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double s = std::sin(kPi * static_cast<double>(m) / static_cast<double>(n));
    const cplx den = coeff * (-4.0 * s * s) - lambda;
    if (std::abs(den) < kSpectralDistanceMin)
      throw LambdaOnSpectrum("periodic_resolvent_1d: lambda within 1e-10 of the symbol");
    symbol[m] = 1.0 / den;
    symbol_conj[m] = std::conj(symbol[m]);
  }
  auto st = std::make_shared<const Symbol1DState>(Symbol1DState{
      DftPlan(n, DftPlan::Direction::forward), DftPlan(n, DftPlan::Direction::inverse),
      std::move(symbol), std::move(symbol_conj)});
  return ResolventHandle(
      n, lambda, [st](const Vec& v) { return sandwich_1d(st, v, false); },
      [st](const Vec& v) { return sandwich_1d(st, v, true); });
}

namespace {

struct Symbol2DState {
  std::size_t nx, ny;
  Vec symbol;
  Vec symbol_conj;
};

Vec sandwich_2d(const std::shared_ptr<const Symbol2DState>& st, const Vec& v, bool adjoint) {
  Vec u = v;
  dft2_inverse_inplace(u, st->nx, st->ny);
  const Vec& s = adjoint ? st->symbol_conj : st->symbol;
  kern::ops().cmul(u.data(), u.data(), s.data(), u.size());
  dft2_forward_inplace(u, st->nx, st->ny);
  return u;
}

}  // namespace

ResolventHandle periodic_resolvent_2d(std::size_t nx, std::size_t ny, cplx lambda) {
  if (nx < 2 || ny < 2) throw DimensionMismatch("periodic_resolvent_2d: sides must be >= 2");
  auto axis_eigs = [](std::size_t n) {
    std::vector<double> e(n);
    for (std::size_t m = 0; m < n; ++m) {
      const double s = std::sin(kPi * static_cast<double>(m) / static_cast<double>(n));
      e[m] = -4.0 * s * s;
    }
    return e;
  };
  const std::vector<double> ex = axis_eigs(nx), ey = axis_eigs(ny);
  Vec symbol(nx * ny), symbol_conj(nx * ny);
  for (std::size_t j = 0; j < nx; ++j)
    for (std::size_t k = 0; k < ny; ++k) {
      const cplx den = cplx{ex[j] + ey[k], 0.0} - lambda;
      if (std::abs(den) < kSpectralDistanceMin)
        throw LambdaOnSpectrum("periodic_resolvent_2d: lambda within 1e-10 of the symbol");
      symbol[j * ny + k] = 1.0 / den;
      symbol_conj[j * ny + k] = std::conj(symbol[j * ny + k]);
    }
  auto st = std::make_shared<const Symbol2DState>(
      Symbol2DState{nx, ny, std::move(symbol), std::move(symbol_conj)});
  return ResolventHandle(
      nx * ny, lambda, [st](const Vec& v) { return sandwich_2d(st, v, false); },
      [st](const Vec& v) { return sandwich_2d(st, v, true); });
}

std::size_t Geometry::rectangle_size() const {
  if (dim == 1) return static_cast<std::size_t>(n);
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
}

namespace {

GridPartition make_partition(const Geometry& geom, const Stencil& stencil) {
  if (geom.dim == 1) {
    if (geom.n < 2) throw ConfigError("geometry: 1D problems need n >= 2");
    return classify(stencil, segment_points(geom.n));
  }
  if (geom.dim != 2) throw ConfigError("geometry: dim must be 1 or 2");
  if (geom.n < 2 || geom.m < 2) throw ConfigError("geometry: 2D problems need n, m >= 2");
  return classify(stencil, rectangle_points(geom.n, geom.m));
}

ResolventHandle make_periodic_base(const Geometry& geom, cplx lambda) {
  if (geom.dim == 1) return periodic_resolvent_1d(static_cast<std::size_t>(geom.n), lambda);
  return periodic_resolvent_2d(static_cast<std::size_t>(geom.n),
                               static_cast<std::size_t>(geom.m), lambda);
}

}  // namespace

BvpSolver::BvpSolver(const Geometry& geom, const ExtensionOperator& ext, cplx lambda)
    : stencil_(geom.dim == 1 ? Stencil::laplacian_1d() : Stencil::laplacian_2d()),
      ext_(ext),
      lambda_(lambda),
      base_(make_periodic_base(geom, lambda)) {
  if (!geom.holes.empty())
    throw ConfigError("BvpSolver: holes require the defect solver");
  part_ = std::make_shared<const GridPartition>(make_partition(geom, stencil_));
  perturbation_ =
      perturbation_between(stencil_, *part_, ExtensionOperator::periodic(*part_), ext_);
  system_ = build_boundary_system(base_, perturbation_);
}

Vec BvpSolver::solve(const Vec& f) const {
  return solve_with_system(base_, perturbation_, system_, f);
}

double BvpSolver::solution_residual(const Vec& x, const Vec& f) const {
  Vec r = apply_extended(stencil_, *part_, ext_, x);
  axpy(-lambda_, x, r);
  axpy(cplx{-1.0, 0.0}, f, r);
  const double fn = norm2(f);
  return fn > 0.0 ? norm2(r) / fn : norm2(r);
}

ResolventHandle BvpSolver::corrected_handle() const {
  struct State {
    ResolventHandle base;
    LowRankPerturbation d;
    BoundarySystem sys;
  };
  auto st = std::make_shared<const State>(State{base_, perturbation_, system_});
  return ResolventHandle(base_.dim(), lambda_, [st](const Vec& v) {
    return solve_with_system(st->base, st->d, st->sys, v);
  });
}

BvpResult solve_bvp(const Geometry& geom, const ExtensionOperator& ext, cplx lambda,
                    const Vec& f) {
  BvpSolver solver(geom, ext, lambda);
  BvpResult out;
  out.values = solver.solve(f);
  out.residual = solver.solution_residual(out.values, f);
  out.boundary_system_size = solver.boundary_system_size();
  out.base_applies = solver.base().apply_count();
  return out;
}

Vec sweep_solve_tridiagonal(const Vec& sub, const Vec& diag, const Vec& sup, const Vec& rhs) {
  const std::size_t n = diag.size();
  if (sub.size() != n || sup.size() != n || rhs.size() != n)
    throw DimensionMismatch("sweep: band/rhs lengths must match the diagonal");
  if (n == 0) return {};

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max({scale, std::abs(diag[i]), std::abs(sub[i]), std::abs(sup[i])});
  const double tiny = 1e-14 * scale;

  Vec c(n), d(n);
  if (std::abs(diag[0]) <= tiny) throw ZeroPivot("sweep: zero pivot at row 0");
  c[0] = sup[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const cplx den = diag[i] - sub[i] * c[i - 1];
    if (std::abs(den) <= tiny) throw ZeroPivot("sweep: zero pivot during elimination");
    c[i] = sup[i] / den;
    d[i] = (rhs[i] - sub[i] * d[i - 1]) / den;
  }
  Vec x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

namespace {

constexpr std::array<Point, 4> kUnitOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

std::shared_ptr<BvpSolver> make_rectangle_solver(const Geometry& geom,
                                                 const ExtensionOperator& outer,
                                                 const std::vector<HoleSpec>& holes,
                                                 cplx lambda) {
  if (geom.dim != 2) throw ConfigError("defects are defined for 2D rectangles only");
  if (holes.empty()) throw ConfigError("DefectSolver: no holes given");
  Geometry rect = geom;
  rect.holes.clear();
  return std::make_shared<BvpSolver>(rect, outer, lambda);
}

}  // namespace

DefectSolver::DefectSolver(const Geometry& geom, const ExtensionOperator& outer,
                           const std::vector<HoleSpec>& holes, cplx lambda)
    : rect_(make_rectangle_solver(geom, outer, holes, lambda)),
      holes_(holes),
      rect_handle_(rect_->corrected_handle()),
      lambda_(lambda) {
  const GridPartition& part = rect_->partition();

  hole_rows_.dim = part.size();
  std::vector<std::size_t> hole_set;
  for (const HoleSpec& h : holes_) {
    auto it = part.omega_index.find(h.p);
    if (it == part.omega_index.end()) throw ConfigError("hole lies outside the rectangle");
    hole_set.push_back(it->second);
  }
  std::sort(hole_set.begin(), hole_set.end());
  if (std::adjacent_find(hole_set.begin(), hole_set.end()) != hole_set.end())
    throw ConfigError("duplicate hole point");

  // Each hole row rewrites the equation at p into the ghost relation
  // g(p) = sum_e alpha(e) g(p+e): neighbor rows of the rectangle operator
  // then read the correct extension value through g(p) itself. Exactly one
  // factored row per hole.
  std::sort(holes_.begin(), holes_.end(),
            [&](const HoleSpec& a, const HoleSpec& b) {
              return part.omega_index.at(a.p) < part.omega_index.at(b.p);
            });
  for (const HoleSpec& h : holes_) {
    const std::size_t ord = part.omega_index.at(h.p);
    hole_ords_.push_back(ord);
    SparseFunctional func;
    func.emplace_back(ord, lambda_ + cplx{5.0, 0.0});  // (lambda + c) - (-4), c = 1
    for (std::size_t ei = 0; ei < 4; ++ei) {
      const Point q = h.p + kUnitOffsets[ei];
      auto qi = part.omega_index.find(q);
      if (qi == part.omega_index.end())
        throw ConfigError("hole must be an inner point of the rectangle");
      if (std::binary_search(hole_set.begin(), hole_set.end(), qi->second))
        throw ConfigError("holes must not be adjacent to each other");
      func.emplace_back(qi->second, -h.alpha[ei] - cplx{1.0, 0.0});
    }
    std::sort(func.begin(), func.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    hole_rows_.rows.push_back({ord, std::move(func)});
  }
  std::sort(hole_rows_.rows.begin(), hole_rows_.rows.end(),
            [](const auto& a, const auto& b) { return a.row < b.row; });

  for (std::size_t i = 0; i < part.size(); ++i)
    if (!std::binary_search(hole_ords_.begin(), hole_ords_.end(), i)) kept_.push_back(i);

  if (holes_.size() == 1) {
    Vec e(part.size()), phi(part.size());
    e[hole_ords_[0]] = 1.0;
    for (const auto& [ord, c] : hole_rows_.rows[0].func) phi[ord] = c;
    rank1_ = std::make_unique<Rank1Solver>(rect_handle_, std::move(e), std::move(phi));
  } else {
    hole_system_ = build_boundary_system(rect_handle_, hole_rows_);
  }
}

Vec DefectSolver::embed(const Vec& f) const {
  if (f.size() != kept_.size())
    throw DimensionMismatch("DefectSolver: rhs must cover the punctured set");
  Vec full(rect_->partition().size());
  for (std::size_t i = 0; i < kept_.size(); ++i) full[kept_[i]] = f[i];
  return full;
}

Vec DefectSolver::solve(const Vec& f) const {
  const Vec full_rhs = embed(f);
  const Vec full = rank1_ ? rank1_->solve(full_rhs)
                          : solve_with_system(rect_handle_, hole_rows_, hole_system_, full_rhs);
  Vec out(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) out[i] = full[kept_[i]];
  return out;
}

double DefectSolver::solution_residual(const Vec& x, const Vec& f) const {
  const GridPartition& part = rect_->partition();
  // Reconstruct the full grid with the hole carrying its ghost value; plain
  // rectangle rows then realize the punctured operator at every kept point.
  Vec full(part.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) full[kept_[i]] = x[i];
  for (std::size_t hi = 0; hi < holes_.size(); ++hi) {
    cplx ghost{};
    for (std::size_t ei = 0; ei < 4; ++ei)
      ghost += holes_[hi].alpha[ei] * full[part.omega_index.at(holes_[hi].p + kUnitOffsets[ei])];
    full[hole_ords_[hi]] = ghost;
  }
  const Vec ax = apply_extended(Stencil::laplacian_2d(), part, rect_->extension(), full);
  Vec r(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i)
    r[i] = ax[kept_[i]] - lambda_ * full[kept_[i]] - f[i];
  const double fn = norm2(f);
  return fn > 0.0 ? norm2(r) / fn : norm2(r);
}

std::size_t DefectSolver::boundary_system_size() const {
  return rect_->boundary_system_size() + holes_.size();
}

}  // namespace krein
