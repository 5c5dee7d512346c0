#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>

#include "krein/dense.hpp"
#include "krein/extension.hpp"

namespace krein {

/// Black-box applicator for a resolvent R(lambda) = (A - lambda E)^{-1}.
/// Copies share the invocation counter, which is how the per-RHS cost
/// contract (two base applications per solve) is asserted.
class ResolventHandle {
 public:
  using Fn = std::function<Vec(const Vec&)>;

  ResolventHandle(std::size_t dim, cplx lambda, Fn apply_fn, Fn adjoint_fn = nullptr)
      : dim_(dim),
        lambda_(lambda),
        apply_(std::move(apply_fn)),
        adjoint_(std::move(adjoint_fn)),
        count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

  std::size_t dim() const { return dim_; }
  cplx lambda() const { return lambda_; }

  Vec apply(const Vec& v) const {
    count_->fetch_add(1, std::memory_order_relaxed);
    return apply_(v);
  }

  bool has_adjoint() const { return static_cast<bool>(adjoint_); }
  /// v -> R^* v (conjugate transpose action).
  Vec adjoint_apply(const Vec& v) const {
    if (!adjoint_) throw NotFound("ResolventHandle: no adjoint applicator");
    return adjoint_(v);
  }

  std::uint64_t apply_count() const { return count_->load(std::memory_order_relaxed); }
  void reset_apply_count() const { count_->store(0, std::memory_order_relaxed); }

 private:
  std::size_t dim_;
  cplx lambda_;
  Fn apply_;
  Fn adjoint_;
  std::shared_ptr<std::atomic<std::uint64_t>> count_;
};

/// Dense resolvent of (a - lambda E) backed by an LU factorization; the
/// oracle-grade handle used in tests and the dense fallback in the CLI.
ResolventHandle dense_resolvent(const Mat& a, cplx lambda);
/// Handle wrapping a^{-1} directly (lambda = 0 tag).
ResolventHandle dense_inverse_handle(const Mat& a);

/// The small system (E + D R)|support. Solving it once per lambda lets every
/// further right-hand side cost two base applications plus one
/// back-substitution.
struct BoundarySystem {
  std::vector<std::size_t> support;
  Mat matrix;
  Lu factorization;  // valid when support is nonempty

  std::size_t size() const { return support.size(); }
};

BoundarySystem build_boundary_system(const ResolventHandle& base, const LowRankPerturbation& d);

/// x = R f - R z with (E + D R) z = D R f, z supported on d's rows.
/// Exactly two base applications when d is nonempty, one when it is empty.
Vec solve_with_system(const ResolventHandle& base, const LowRankPerturbation& d,
                      const BoundarySystem& sys, const Vec& f);

/// One-shot (A + B - lambda E)^{-1} f via the low-rank update identity:
/// builds the boundary system and solves.
Vec krein_solve(const ResolventHandle& base, const LowRankPerturbation& d, const Vec& f);

/// Closed form of (E + (e (x) phi) R)^{-1} for a rank-1 perturbation:
///   v -> v - e * (phi . R v) / (1 + phi . R e)
/// phi pairs bilinearly (no conjugation); the precomputed row phi . R comes
/// from one adjoint application of the base.
class Rank1CorrectionInverse {
 public:
  Rank1CorrectionInverse(const ResolventHandle& base, Vec e, const Vec& phi);

  Vec apply(const Vec& v) const;
  cplx denominator() const { return denom_; }

 private:
  Vec e_;
  Vec row_conj_;  // conj pairing with this vector realizes v -> phi . (R v)
  cplx denom_;
};

/// Multi-RHS rank-1 solver for (A + e (x) phi - lambda E) x = f on top of a
/// base resolvent; needs no adjoint (R e is cached instead).
class Rank1Solver {
 public:
  Rank1Solver(ResolventHandle base, Vec e, Vec phi);

  Vec solve(const Vec& f) const;
  cplx denominator() const { return denom_; }
  const ResolventHandle& base() const { return base_; }

 private:
  ResolventHandle base_;
  Vec phi_;
  Vec re_;  // R e
  cplx denom_;
};

}  // namespace krein
