#include "krein/krein.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace krein {

ResolventHandle dense_resolvent(const Mat& a, cplx lambda) {
  Mat shifted = a;
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
  auto lu = std::make_shared<Lu>(lu_factor(shifted));
  return ResolventHandle(
      a.rows(), lambda, [lu](const Vec& v) { return lu_solve(*lu, v); },
      [lu](const Vec& v) { return lu_solve_adjoint(*lu, v); });
}

ResolventHandle dense_inverse_handle(const Mat& a) { return dense_resolvent(a, cplx{}); }

BoundarySystem build_boundary_system(const ResolventHandle& base,
                                     const LowRankPerturbation& d) {
  BoundarySystem sys;
  sys.support = d.support();
  const std::size_t s = sys.support.size();
  sys.matrix = Mat(s, s);
  if (s == 0) return sys;

  // Column q of (E + D R)|support needs R delta_q; one base application per
  // support point. Off-support components never enter: the correction
  // unknown z shares D's row support because the reduced RHS D R f does.
  Vec probe(base.dim());
  for (std::size_t qi = 0; qi < s; ++qi) {
    std::fill(probe.begin(), probe.end(), cplx{});
    probe[sys.support[qi]] = 1.0;
    const Vec col = base.apply(probe);
    for (std::size_t pi = 0; pi < s; ++pi) {
      cplx v = eval_functional(d.rows[pi].func, col);
      if (pi == qi) v += 1.0;
      sys.matrix(pi, qi) = v;
    }
  }

  try {
    sys.factorization = lu_factor(sys.matrix);
  } catch (const SingularMatrix&) {
    throw SingularBoundarySystem(
        "boundary system is singular: lambda is an eigenvalue of the target extension "
        "or the reduction collapsed numerically");
  }
  if (sys.factorization.min_pivot < 1e-12 * sys.factorization.scale)
    throw SingularBoundarySystem("boundary system pivot below 1e-12 * scale");
  return sys;
}

Vec solve_with_system(const ResolventHandle& base, const LowRankPerturbation& d,
                      const BoundarySystem& sys, const Vec& f) {
  if (f.size() != base.dim()) throw DimensionMismatch("solve_with_system: size mismatch");
  Vec y = base.apply(f);
  const std::size_t s = sys.support.size();
  if (s == 0) return y;

  Vec g(s);
  for (std::size_t pi = 0; pi < s; ++pi) g[pi] = eval_functional(d.rows[pi].func, y);
  const Vec z = lu_solve(sys.factorization, g);

  Vec z_full(base.dim());
  for (std::size_t pi = 0; pi < s; ++pi) z_full[sys.support[pi]] = z[pi];
  const Vec corr = base.apply(z_full);
  return sub(y, corr);
}

Vec krein_solve(const ResolventHandle& base, const LowRankPerturbation& d, const Vec& f) {
  const BoundarySystem sys = build_boundary_system(base, d);
  return solve_with_system(base, d, sys, f);
}

Rank1CorrectionInverse::Rank1CorrectionInverse(const ResolventHandle& base, Vec e,
                                               const Vec& phi)
    : e_(std::move(e)) {
  if (e_.size() != base.dim() || phi.size() != base.dim())
    throw DimensionMismatch("Rank1CorrectionInverse: size mismatch");
  denom_ = cplx{1.0, 0.0} + dot_bilinear(phi, base.apply(e_));
  if (std::abs(denom_) < 1e-12)
    throw ResonantRankOne("rank-1 denominator 1 + phi.(R e) vanishes");
  Vec phi_conj(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi_conj[i] = std::conj(phi[i]);
  row_conj_ = base.adjoint_apply(phi_conj);  // <row_conj, v> == phi . (R v)
}

Vec Rank1CorrectionInverse::apply(const Vec& v) const {
  const cplx gamma = dot(row_conj_, v) / denom_;
  Vec out = v;
  axpy(-gamma, e_, out);
  return out;
}

Rank1Solver::Rank1Solver(ResolventHandle base, Vec e, Vec phi)
    : base_(std::move(base)), phi_(std::move(phi)) {
  if (e.size() != base_.dim() || phi_.size() != base_.dim())
    throw DimensionMismatch("Rank1Solver: size mismatch");
  re_ = base_.apply(e);
  denom_ = cplx{1.0, 0.0} + dot_bilinear(phi_, re_);
  if (std::abs(denom_) < 1e-12)
    throw ResonantRankOne("rank-1 denominator 1 + phi.(R e) vanishes");
}

Vec Rank1Solver::solve(const Vec& f) const {
  Vec y = base_.apply(f);
  const cplx s = dot_bilinear(phi_, y) / denom_;
  axpy(-s, re_, y);
  return y;
}

}  // namespace krein
