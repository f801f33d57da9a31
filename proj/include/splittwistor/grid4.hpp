#pragma once

/**
 * @file grid4.hpp
 * @brief Product grid over S²×S² (two per-chart stereographic sphere grids)
 *        and flat field containers over it.
 *
 * Finite-difference work needs every weight-bearing node to own a full
 * stencil inside its chart.  Partition-of-unity weights are negligible
 * beyond |w| ≈ 1.27, so resolution n covers [−1.3, 1.3]² with n×n cells
 * (h = 2.6/n) and a ring of `margin` extra (weightless) ghost cells is
 * appended outside: extent = 1.3 + margin·h, (n + 2·margin)² nodes per
 * chart.  Every node with |coord| ≤ 1.3 then has a width-`margin` in-chart
 * stencil, and the quadrature rule is independent of the margin.
 */

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "splittwistor/common.hpp"
#include "splittwistor/sphere.hpp"

namespace stw {

/// Coordinate half-width of the quadrature support covered at resolution n.
inline constexpr double kGridSupport = 1.3;

/// Extent of a resolution-n chart grid padded with `margin` ghost cells per
/// side: 1.3 + margin·h with h = 2.6/n.  All nodes with |coord| ≤ 1.3 then
/// have width-`margin` in-chart stencils.
inline double padded_extent(int n, int margin) {
  if (n < 2) throw ConfigError("grid resolution too small");
  return kGridSupport * (1.0 + 2.0 * double(margin) / double(n));
}

/// Resolution-n chart grid (h = 2.6/n over [−1.3,1.3]²) with a ring of
/// `margin` weightless ghost cells appended outside; (n+2·margin)² nodes
/// per chart.
inline SphereGrid padded_sphere_grid(int n, int margin) {
  return SphereGrid(n + 2 * margin, padded_extent(n, margin));
}

/// (chart, iy, ix) triple of a sphere-grid node id.
struct SphereIndex {
  Chart chart;
  int iy;
  int ix;
};

inline SphereIndex sphere_index(const SphereGrid& g, int id) {
  const int n = g.n();
  const int local = id % (n * n);
  return {g.chart_of(id), local / n, local % n};
}

/**
 * Tensor product of two sphere grids (same resolution and FD margin on
 * both factors).  Node ids are i1 * sphere2.size() + i2.
 */
class ProductGrid {
 public:
  explicit ProductGrid(int n, int fd_margin = 2)
      : s1_(padded_sphere_grid(n, fd_margin)),
        s2_(padded_sphere_grid(n, fd_margin)),
        resolution_(n),
        margin_(fd_margin) {
    if (n < 8) throw ConfigError("product grid needs resolution >= 8 per dimension");
  }

  const SphereGrid& sphere1() const { return s1_; }
  const SphereGrid& sphere2() const { return s2_; }
  /// Resolution (cells across the quadrature support, excluding ghost ring).
  int n() const { return resolution_; }
  int margin() const { return margin_; }

  long size() const { return static_cast<long>(s1_.size()) * s2_.size(); }
  long join(int i1, int i2) const { return static_cast<long>(i1) * s2_.size() + i2; }
  std::pair<int, int> split(long id) const {
    return {static_cast<int>(id / s2_.size()), static_cast<int>(id % s2_.size())};
  }

  /// 4-volume quadrature weight (product of per-sphere area weights).
  double weight4(long id) const {
    const auto [i1, i2] = split(id);
    return s1_.node(i1).qw * s2_.node(i2).qw;
  }

  /// Both sphere stencils of half-width `hw` fit inside their charts.
  bool stencil_fits(long id, int hw) const {
    const auto [i1, i2] = split(id);
    return s1_.stencil_fits(i1, hw) && s2_.stencil_fits(i2, hw);
  }

  /// The spacetime point of a node.
  SpacetimePoint point(long id) const {
    const auto [i1, i2] = split(id);
    const SphereNode a = s1_.node(i1);
    const SphereNode b = s2_.node(i2);
    return SpacetimePoint::from_charts(a.chart, a.w, b.chart, b.w);
  }

 private:
  SphereGrid s1_;
  SphereGrid s2_;
  int resolution_;
  int margin_;
};

/// Real scalar samples over a product grid.
struct ScalarField4 {
  ProductGrid grid;
  std::vector<double> v;

  explicit ScalarField4(const ProductGrid& g) : grid(g), v(g.size(), 0.0) {}

  double& at(long id) { return v[static_cast<std::size_t>(id)]; }
  double at(long id) const { return v[static_cast<std::size_t>(id)]; }

  /// Sample fn(node1, node2) at every node pair.
  template <class F>
  static ScalarField4 from_callable(const ProductGrid& g, F&& fn) {
    ScalarField4 out(g);
    const int n1 = g.sphere1().size();
    const int n2 = g.sphere2().size();
    for (int i1 = 0; i1 < n1; ++i1) {
      const SphereNode a = g.sphere1().node(i1);
      for (int i2 = 0; i2 < n2; ++i2)
        out.v[static_cast<std::size_t>(g.join(i1, i2))] = fn(a, g.sphere2().node(i2));
    }
    return out;
  }
};

/**
 * A bank of `comps` complex n×n matrices per node, stored flat
 * (node-major, then component, then column-major matrix entries).
 */
class MatrixField4 {
 public:
  MatrixField4(const ProductGrid& g, int rank, int comps)
      : grid_(g), rank_(rank), comps_(comps),
        data_(static_cast<std::size_t>(g.size()) * comps * rank * rank, cplx(0.0)) {}

  const ProductGrid& grid() const { return grid_; }
  int rank() const { return rank_; }
  int comps() const { return comps_; }

  MatX get(long id, int comp) const {
    MatX m(rank_, rank_);
    const cplx* p = data_.data() + offset(id, comp);
    for (int c = 0; c < rank_; ++c)
      for (int r = 0; r < rank_; ++r) m(r, c) = p[c * rank_ + r];
    return m;
  }

  void set(long id, int comp, const MatX& m) {
    cplx* p = data_.data() + offset(id, comp);
    for (int c = 0; c < rank_; ++c)
      for (int r = 0; r < rank_; ++r) p[c * rank_ + r] = m(r, c);
  }

 private:
  std::size_t offset(long id, int comp) const {
    return (static_cast<std::size_t>(id) * comps_ + comp) *
           static_cast<std::size_t>(rank_) * rank_;
  }

  ProductGrid grid_;
  int rank_;
  int comps_;
  std::vector<cplx> data_;
};

}  // namespace stw
