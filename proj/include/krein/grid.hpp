#pragma once

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <unordered_map>
#include <vector>

#include "krein/common.hpp"
#include "krein/errors.hpp"

namespace krein {

/// Lattice point in Z or Z^2. 1D problems live on the y = 0 row.
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;  // lexicographic (x, y)
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  int l1() const { return std::abs(x) + std::abs(y); }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    return std::hash<long long>()((static_cast<long long>(p.x) << 32) ^
                                  static_cast<unsigned>(p.y));
  }
};

/// Translation-invariant finite stencil: the neighborhood of x is
/// { x + offset } with the attached coefficients.
struct Stencil {
  std::vector<std::pair<Point, cplx>> taps;

  /// f(x+1) - 2 f(x) + f(x-1)
  static Stencil laplacian_1d();
  /// Five-point: f(x+1,y) + f(x-1,y) + f(x,y+1) + f(x,y-1) - 4 f(x,y)
  static Stencil laplacian_2d();
};

/// Omega split into interior / boundary points (stencil leaves the set) plus
/// the stencil-reachable exterior points. Orderings are lexicographic in
/// (x, y), so ordinals are deterministic regardless of input order.
struct GridPartition {
  std::vector<Point> omega;
  std::vector<std::size_t> interior;  // ordinals into omega
  std::vector<std::size_t> boundary;  // ordinals into omega
  std::vector<Point> exterior;

  std::unordered_map<Point, std::size_t, PointHash> omega_index;
  std::unordered_map<Point, std::size_t, PointHash> exterior_index;

  std::size_t size() const { return omega.size(); }
  bool in_omega(const Point& p) const { return omega_index.count(p) != 0; }
};

GridPartition classify(const Stencil& stencil, std::vector<Point> omega);

/// Unique unit offset e with q + e inside omega; defined for exterior points
/// of full 1D segments / 2D rectangles. Throws NotFound when no unit
/// neighbor lands in omega and NotUnique when several do (defect
/// geometries).
Point unit_step_into(const GridPartition& part, const Point& q);

std::vector<Point> segment_points(int n);              // {0..n-1} on the y=0 row
std::vector<Point> rectangle_points(int nx, int ny);   // {0..nx-1} x {0..ny-1}

/// Values over omega in partition ordinal order.
struct GridFunction {
  std::shared_ptr<const GridPartition> partition;
  Vec values;
};

}  // namespace krein
