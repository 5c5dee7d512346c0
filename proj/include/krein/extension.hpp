#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "krein/dense.hpp"
#include "krein/grid.hpp"

namespace krein {

/// Sparse linear functional on C(Omega): list of (omega ordinal, coefficient).
using SparseFunctional = std::vector<std::pair<std::size_t, cplx>>;

cplx eval_functional(const SparseFunctional& f, const Vec& values);

/// Extension of grid functions from Omega to Omega union exterior: identity
/// on Omega, one functional per exterior point. A missing (nullopt) rule is
/// an error when assembly touches that point; an empty functional is a valid
/// zero-ghost rule.
class ExtensionOperator {
 public:
  ExtensionOperator() = default;
  explicit ExtensionOperator(std::size_t exterior_count) : rules_(exterior_count) {}

  /// Wrap-around in every coordinate, modulo the bounding box of omega.
  /// Requires omega to be a full segment/rectangle.
  static ExtensionOperator periodic(const GridPartition& part);
  /// Ghost at p gets k(p) * f(p + e(p)) where e(p) is the unique unit step
  /// back into omega. `k` is indexed by exterior ordinal.
  static ExtensionOperator third_kind(const GridPartition& part, const std::vector<cplx>& k);
  static ExtensionOperator third_kind_uniform(const GridPartition& part, cplx k);
  /// Ghost = -(nearest interior value); the 1D case matches the classic
  /// Dirichlet convention with corner entries -3.
  static ExtensionOperator dirichlet(const GridPartition& part);

  void set_rule(std::size_t exterior_ordinal, SparseFunctional f);
  const std::optional<SparseFunctional>& rule(std::size_t exterior_ordinal) const;
  std::size_t exterior_count() const { return rules_.size(); }

  /// Ghost values on the exterior, in exterior ordinal order.
  Vec extend(const GridPartition& part, const Vec& values) const;

 private:
  std::vector<std::optional<SparseFunctional>> rules_;
};

/// Operator supported on few rows, kept in factored (row, functional) form.
struct LowRankPerturbation {
  std::size_t dim = 0;
  struct Row {
    std::size_t row;
    SparseFunctional func;
  };
  std::vector<Row> rows;  // sorted by row ordinal, functionals sorted by column

  bool empty() const { return rows.empty(); }
  std::vector<std::size_t> support() const;
  Vec apply(const Vec& f) const;
  Mat densify() const;

  /// Merges rows of both operands (used to stack boundary and defect rows).
  static LowRankPerturbation merge(const LowRankPerturbation& a, const LowRankPerturbation& b);
};

/// Dense matrix of the extended operator: interior rows are plain stencil
/// rows, boundary rows fold exterior taps through the extension rules.
Mat assemble_extended(const Stencil& stencil, const GridPartition& part,
                      const ExtensionOperator& ext);

/// Matrix-free action of the same operator.
Vec apply_extended(const Stencil& stencil, const GridPartition& part,
                   const ExtensionOperator& ext, const Vec& f);

/// D = A_Omega (K - L), supported on boundary rows; rows that cancel exactly
/// are dropped, so identical extensions give an empty perturbation.
LowRankPerturbation perturbation_between(const Stencil& stencil, const GridPartition& part,
                                         const ExtensionOperator& l, const ExtensionOperator& k);

}  // namespace krein
