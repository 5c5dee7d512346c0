#include "krein/extension.hpp"

#include <algorithm>
#include <map>

namespace krein {

cplx eval_functional(const SparseFunctional& f, const Vec& values) {
  cplx s{};
  for (const auto& [ord, c] : f) s += c * values[ord];
  return s;
}

namespace {

struct Box {
  int nx, ny;
};

// Bounding box of omega; extensions that wrap or reflect are only defined on
// full segments / rectangles, so verify the box is filled.
Box full_box(const GridPartition& part) {
  int max_x = 0, max_y = 0;
  for (const Point& p : part.omega) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
    if (p.x < 0 || p.y < 0)
      throw NotFound("extension: omega must live in the nonnegative quadrant");
  }
  Box box{max_x + 1, max_y + 1};
  if (part.size() != static_cast<std::size_t>(box.nx) * static_cast<std::size_t>(box.ny))
    throw NotFound("extension: omega is not a full segment/rectangle");
  return box;
}

int wrap(int v, int n) {
  int r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ExtensionOperator ExtensionOperator::periodic(const GridPartition& part) {
  const Box box = full_box(part);
  ExtensionOperator ext(part.exterior.size());
  for (std::size_t e = 0; e < part.exterior.size(); ++e) {
    const Point q = part.exterior[e];
    const Point target{wrap(q.x, box.nx), wrap(q.y, box.ny)};
    ext.set_rule(e, {{part.omega_index.at(target), cplx{1.0, 0.0}}});
  }
  return ext;
}

ExtensionOperator ExtensionOperator::third_kind(const GridPartition& part,
                                                const std::vector<cplx>& k) {
  if (k.size() != part.exterior.size())
    throw DimensionMismatch("third_kind: one coefficient per exterior point required");
  ExtensionOperator ext(part.exterior.size());
  for (std::size_t e = 0; e < part.exterior.size(); ++e) {
    const Point q = part.exterior[e];
    const Point target = q + unit_step_into(part, q);
    if (k[e] == cplx{})
      ext.set_rule(e, {});  // zero ghost
    else
      ext.set_rule(e, {{part.omega_index.at(target), k[e]}});
  }
  return ext;
}

ExtensionOperator ExtensionOperator::third_kind_uniform(const GridPartition& part, cplx k) {
  return third_kind(part, std::vector<cplx>(part.exterior.size(), k));
}

ExtensionOperator ExtensionOperator::dirichlet(const GridPartition& part) {
  return third_kind_uniform(part, cplx{-1.0, 0.0});
}

void ExtensionOperator::set_rule(std::size_t exterior_ordinal, SparseFunctional f) {
  std::sort(f.begin(), f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  rules_.at(exterior_ordinal) = std::move(f);
}

const std::optional<SparseFunctional>& ExtensionOperator::rule(std::size_t e) const {
  return rules_.at(e);
}

Vec ExtensionOperator::extend(const GridPartition& part, const Vec& values) const {
  if (values.size() != part.size())
    throw DimensionMismatch("extend: values must cover omega");
  Vec ghost(part.exterior.size());
  for (std::size_t e = 0; e < rules_.size(); ++e) {
    if (!rules_[e])
      throw MissingExteriorRule("extend: no rule for an exterior point");
    ghost[e] = eval_functional(*rules_[e], values);
  }
  return ghost;
}

std::vector<std::size_t> LowRankPerturbation::support() const {
  std::vector<std::size_t> s;
  s.reserve(rows.size());
  for (const Row& r : rows) s.push_back(r.row);
  return s;
}

Vec LowRankPerturbation::apply(const Vec& f) const {
  if (f.size() != dim) throw DimensionMismatch("LowRankPerturbation::apply: size mismatch");
  Vec out(dim);
  for (const Row& r : rows) out[r.row] = eval_functional(r.func, f);
  return out;
}

Mat LowRankPerturbation::densify() const {
  Mat m(dim, dim);
  for (const Row& r : rows)
    for (const auto& [ord, c] : r.func) m(r.row, ord) += c;
  return m;
}

LowRankPerturbation LowRankPerturbation::merge(const LowRankPerturbation& a,
                                               const LowRankPerturbation& b) {
  if (a.dim != b.dim) throw DimensionMismatch("LowRankPerturbation::merge: dim mismatch");
  std::map<std::size_t, std::map<std::size_t, cplx>> acc;
  for (const auto& src : {a, b})
    for (const Row& r : src.rows)
      for (const auto& [ord, c] : r.func) acc[r.row][ord] += c;
  LowRankPerturbation out;
  out.dim = a.dim;
  for (auto& [row, cols] : acc) {
    SparseFunctional func;
    for (auto& [ord, c] : cols)
      if (c != cplx{}) func.emplace_back(ord, c);
    if (!func.empty()) out.rows.push_back({row, std::move(func)});
  }
  return out;
}

namespace {

// Shared row walker: hands each stencil tap of row x either to the in-omega
// sink or, folded through the extension rule, to the same sink per target.
template <typename Sink>
void fold_row(const Stencil& stencil, const GridPartition& part, const ExtensionOperator& ext,
              const Point& x, Sink&& sink) {
  for (const auto& [off, a] : stencil.taps) {
    const Point y = x + off;
    auto it = part.omega_index.find(y);
    if (it != part.omega_index.end()) {
      sink(it->second, a);
      continue;
    }
    const std::size_t e = part.exterior_index.at(y);
    const auto& rule = ext.rule(e);
    if (!rule) throw MissingExteriorRule("assemble: no rule for a touched exterior point");
    for (const auto& [ord, c] : *rule) sink(ord, a * c);
  }
}

}  // namespace

Mat assemble_extended(const Stencil& stencil, const GridPartition& part,
                      const ExtensionOperator& ext) {
  const std::size_t n = part.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    fold_row(stencil, part, ext, part.omega[i],
             [&](std::size_t j, cplx v) { m(i, j) += v; });
  return m;
}

Vec apply_extended(const Stencil& stencil, const GridPartition& part,
                   const ExtensionOperator& ext, const Vec& f) {
  if (f.size() != part.size()) throw DimensionMismatch("apply_extended: size mismatch");
  Vec out(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    cplx s{};
    fold_row(stencil, part, ext, part.omega[i],
             [&](std::size_t j, cplx v) { s += v * f[j]; });
    out[i] = s;
  }
  return out;
}

LowRankPerturbation perturbation_between(const Stencil& stencil, const GridPartition& part,
                                         const ExtensionOperator& l,
                                         const ExtensionOperator& k) {
  LowRankPerturbation d;
  d.dim = part.size();
  for (std::size_t b : part.boundary) {
    const Point x = part.omega[b];
    std::map<std::size_t, cplx> combo;
    for (const auto& [off, a] : stencil.taps) {
      const Point y = x + off;
      if (part.in_omega(y)) continue;
      const std::size_t e = part.exterior_index.at(y);
      const auto& rule_k = k.rule(e);
      const auto& rule_l = l.rule(e);
      if (!rule_k || !rule_l)
        throw MissingExteriorRule("perturbation_between: extension not total on the exterior");
      for (const auto& [ord, c] : *rule_k) combo[ord] += a * c;
      for (const auto& [ord, c] : *rule_l) combo[ord] -= a * c;
    }
    SparseFunctional func;
    for (auto& [ord, c] : combo)
      if (c != cplx{}) func.emplace_back(ord, c);
    if (!func.empty()) d.rows.push_back({b, std::move(func)});
  }
  return d;
}

}  // namespace krein
