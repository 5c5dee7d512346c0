#include "krein/grid.hpp"

#include <algorithm>

namespace krein {

Stencil Stencil::laplacian_1d() {
  return {{{{1, 0}, 1.0}, {{0, 0}, -2.0}, {{-1, 0}, 1.0}}};
}

Stencil Stencil::laplacian_2d() {
  return {{{{1, 0}, 1.0}, {{-1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, -1}, 1.0}, {{0, 0}, -4.0}}};
}

GridPartition classify(const Stencil& stencil, std::vector<Point> omega) {
  if (omega.empty()) throw EmptyOmega("classify: omega is empty");
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());

  GridPartition part;
  part.omega = std::move(omega);
  part.omega_index.reserve(part.omega.size());
  for (std::size_t i = 0; i < part.omega.size(); ++i) part.omega_index.emplace(part.omega[i], i);

  std::vector<Point> exterior;
  for (std::size_t i = 0; i < part.omega.size(); ++i) {
    bool leaves = false;
    for (const auto& [off, coeff] : stencil.taps) {
      Point q = part.omega[i] + off;
      if (!part.in_omega(q)) {
        leaves = true;
        exterior.push_back(q);
      }
    }
    (leaves ? part.boundary : part.interior).push_back(i);
  }
  std::sort(exterior.begin(), exterior.end());
  exterior.erase(std::unique(exterior.begin(), exterior.end()), exterior.end());
  part.exterior = std::move(exterior);
  part.exterior_index.reserve(part.exterior.size());
  for (std::size_t i = 0; i < part.exterior.size(); ++i)
    part.exterior_index.emplace(part.exterior[i], i);
  return part;
}

Point unit_step_into(const GridPartition& part, const Point& q) {
  static const Point unit[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const Point* found = nullptr;
  for (const Point& e : unit) {
    if (part.in_omega(q + e)) {
      if (found != nullptr)
        throw NotUnique("unit_step_into: several unit neighbors are inside omega");
      found = &e;
    }
  }
  if (found == nullptr)
    throw NotFound("unit_step_into: no unit neighbor lands inside omega");
  return *found;
}

std::vector<Point> segment_points(int n) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) pts.push_back({x, 0});
  return pts;
}

std::vector<Point> rectangle_points(int nx, int ny) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) pts.push_back({x, y});
  return pts;
}

}  // namespace krein
