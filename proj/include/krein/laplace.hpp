#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "krein/extension.hpp"
#include "krein/grid.hpp"
#include "krein/krein.hpp"

namespace krein {

/// Resolvent of coeff * Delta_0 on n periodic points, diagonalized by the
/// DFT: eigenvalue of mode m is coeff * (-4 sin^2(pi m / n)). coeff = 1 is
/// the plain difference Laplacian; -1/h^2 gives the scaled second-difference
/// operator used by the point-interaction study.
ResolventHandle periodic_resolvent_1d(std::size_t n, cplx lambda, double coeff = 1.0);

/// Resolvent of the periodic 2D Laplacian on nx-by-ny, symbol
/// -4 sin^2(pi j / nx) - 4 sin^2(pi k / ny).
ResolventHandle periodic_resolvent_2d(std::size_t nx, std::size_t ny, cplx lambda);

struct Geometry {
  int dim = 1;
  int n = 0;                 // x extent
  int m = 0;                 // y extent, 2D only
  std::vector<Point> holes;  // removed inner points, 2D only

  std::size_t rectangle_size() const;
  std::size_t unknowns() const { return rectangle_size() - holes.size(); }
};

/// Laplacian difference boundary-value problem on a full segment/rectangle:
/// periodic base resolvent plus the boundary-system correction for the
/// requested extension. Build once, solve many right-hand sides.
class BvpSolver {
 public:
  BvpSolver(const Geometry& geom, const ExtensionOperator& ext, cplx lambda);

  Vec solve(const Vec& f) const;
  double solution_residual(const Vec& x, const Vec& f) const;

  const GridPartition& partition() const { return *part_; }
  const ExtensionOperator& extension() const { return ext_; }
  const ResolventHandle& base() const { return base_; }
  std::size_t boundary_system_size() const { return system_.size(); }
  cplx lambda() const { return lambda_; }

  /// The corrected resolvent as a black-box handle (no adjoint); lets the
  /// defect solver stack a further low-rank update on top.
  ResolventHandle corrected_handle() const;

 private:
  std::shared_ptr<const GridPartition> part_;
  Stencil stencil_;
  ExtensionOperator ext_;
  cplx lambda_;
  ResolventHandle base_;
  LowRankPerturbation perturbation_;
  BoundarySystem system_;
};

struct BvpResult {
  Vec values;
  double residual = 0.0;
  std::size_t boundary_system_size = 0;
  std::uint64_t base_applies = 0;
};

BvpResult solve_bvp(const Geometry& geom, const ExtensionOperator& ext, cplx lambda,
                    const Vec& f);

/// Thomas recursion, O(N), no pivoting: the independent oracle for 1D
/// problems. sub[i] multiplies x[i-1] (sub[0] unused), sup[i] multiplies
/// x[i+1] (sup[n-1] unused).
Vec sweep_solve_tridiagonal(const Vec& sub, const Vec& diag, const Vec& sup, const Vec& rhs);

/// One removed inner point with ghost value sum_e alpha[e] f(p+e); alpha is
/// ordered (+x, -x, +y, -y).
struct HoleSpec {
  Point p;
  std::array<cplx, 4> alpha{};
};

/// Rectangle-with-holes solver: the rectangle problem is solved by BvpSolver
/// and each hole adds one factored row on top of that corrected resolvent,
/// so the total support grows by exactly one per hole.
class DefectSolver {
 public:
  DefectSolver(const Geometry& geom, const ExtensionOperator& outer,
               const std::vector<HoleSpec>& holes, cplx lambda);

  /// f is given on the punctured set (rectangle ordinals minus holes);
  /// returns values on the same index set.
  Vec solve(const Vec& f) const;
  double solution_residual(const Vec& x, const Vec& f) const;

  const BvpSolver& rectangle_solver() const { return *rect_; }
  const std::vector<std::size_t>& kept_ordinals() const { return kept_; }
  std::size_t hole_count() const { return holes_.size(); }
  /// Rectangle boundary support plus one per hole.
  std::size_t boundary_system_size() const;
  const LowRankPerturbation& hole_perturbation() const { return hole_rows_; }

 private:
  Vec embed(const Vec& f) const;

  std::shared_ptr<BvpSolver> rect_;
  std::vector<HoleSpec> holes_;
  std::vector<std::size_t> kept_;       // rectangle ordinals that survive
  std::vector<std::size_t> hole_ords_;  // rectangle ordinals of the holes
  LowRankPerturbation hole_rows_;
  std::unique_ptr<Rank1Solver> rank1_;  // single hole
  ResolventHandle rect_handle_;
  BoundarySystem hole_system_;          // several holes
  cplx lambda_;
};

}  // namespace krein
