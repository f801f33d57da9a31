#pragma once

/**
 * @file laplacian.hpp
 * @brief Round-sphere Laplace–Beltrami stencils and the ultrahyperbolic
 *        wave-equation residual Δ_x φ − Δ_y φ on S²×S².
 *
 * The round metric ds² = 4|dw|²/(1+|w|²)² gives
 *   Δ = (1+|w|²)² ∂_w ∂_w̄ = ((1+|w|²)²/4)(∂_xx + ∂_yy),
 * with eigenvalue −l(l+1) on degree-l spherical harmonics.
 *
 * Two evaluation styles:
 *  - grid: in-chart 5-point stencils on a materialized ScalarField4, exact
 *    quadrature-weighted L² of the defect (small grids);
 *  - callable: per-axis order-4 stencils with Richardson extrapolation to
 *    order 6/8 on a point-evaluable φ, combined with a seeded uniform sphere
 *    sample to estimate the same L² norm at any effective resolution.
 */

#include <cmath>
#include <cstdint>
#include <functional>

#include "splittwistor/common.hpp"
#include "splittwistor/grid4.hpp"
#include "splittwistor/spinor.hpp"

namespace stw {

/// z = cos θ of the point with stereographic coordinate w (chart 1).
inline double sphere_z(cplx w) {
  const double r2 = std::norm(w);
  return (1.0 - r2) / (1.0 + r2);
}

/// Legendre polynomial P_l(z), l = 0..4.
inline double legendre_p(int l, double z) {
  switch (l) {
    case 0: return 1.0;
    case 1: return z;
    case 2: return 0.5 * (3 * z * z - 1.0);
    case 3: return 0.5 * (5 * z * z * z - 3 * z);
    case 4: return 0.125 * ((35 * z * z - 30) * z * z + 3);
    default: throw ConfigError("legendre_p implemented for l = 0..4");
  }
}

/// Zonal spherical harmonic Y_{l,0} up to normalization: the Legendre
/// polynomial P_l(cos θ) in the chart-1 coordinate.  Eigenvalue of Δ is
/// −l(l+1).
inline double y_l0(int l, cplx w) { return legendre_p(l, sphere_z(w)); }

/// Y_{l,0} as a global function on the sphere: on chart 2 the coordinate
/// transition w ↦ 1/w sends cos θ to −cos θ.
inline double y_l0_global(int l, Chart c, cplx coord) {
  const double z = sphere_z(coord);
  return legendre_p(l, c == Chart::kOne ? z : -z);
}

namespace detail {

/// Order-4 flat Laplacian (∂_xx + ∂_yy) by per-axis 5-point stencils.
template <class F>
double flat_lap4(F&& f, cplx w, double h) {
  const double x = w.real(), y = w.imag();
  auto fx = [&](double dx) { return f(cplx(x + dx, y)); };
  auto fy = [&](double dy) { return f(cplx(x, y + dy)); };
  const double f0 = f(w);
  const double xx = (-fx(2 * h) + 16 * fx(h) - 30 * f0 + 16 * fx(-h) - fx(-2 * h)) /
                    (12 * h * h);
  const double yy = (-fy(2 * h) + 16 * fy(h) - 30 * f0 + 16 * fy(-h) - fy(-2 * h)) /
                    (12 * h * h);
  return xx + yy;
}

}  // namespace detail

/**
 * Laplace–Beltrami of a callable f(w) at w, by finite differences of order
 * 2, 4, 6, or 8 (6 and 8 are Richardson extrapolations of the order-4
 * stencil at steps h, h/2[, h/4]).
 */
template <class F>
double laplace_beltrami(F&& f, cplx w, double h, int order = 8) {
  const double conf = (1.0 + std::norm(w)) * (1.0 + std::norm(w)) / 4.0;
  switch (order) {
    case 2: {
      const double x = w.real(), y = w.imag();
      const double flat = (f(cplx(x + h, y)) + f(cplx(x - h, y)) + f(cplx(x, y + h)) +
                           f(cplx(x, y - h)) - 4.0 * f(w)) /
                          (h * h);
      return conf * flat;
    }
    case 4:
      return conf * detail::flat_lap4(f, w, h);
    case 6: {
      const double a = detail::flat_lap4(f, w, h);
      const double b = detail::flat_lap4(f, w, h / 2);
      return conf * (16.0 * b - a) / 15.0;
    }
    case 8: {
      const double a = detail::flat_lap4(f, w, h);
      const double b = detail::flat_lap4(f, w, h / 2);
      const double c = detail::flat_lap4(f, w, h / 4);
      const double l6h = (16.0 * b - a) / 15.0;
      const double l6h2 = (16.0 * c - b) / 15.0;
      return conf * (64.0 * l6h2 - l6h) / 63.0;
    }
    default:
      throw ConfigError("laplace_beltrami order must be 2, 4, 6 or 8");
  }
}

/**
 * Pointwise ultrahyperbolic defect (Δ_x − Δ_y)φ of a callable
 * φ(chart_x, w1, chart_y, w2), differentiated in the given charts (the
 * Laplace–Beltrami operator is chart-covariant, so the chart choice only
 * affects conditioning).
 */
template <class Phi>
double wave_defect(Phi&& phi, Chart cx, cplx w1, Chart cy, cplx w2, double h,
                   int order = 8) {
  auto fx = [&](cplx u) { return phi(cx, u, cy, w2); };
  auto fy = [&](cplx u) { return phi(cx, w1, cy, u); };
  return laplace_beltrami(fx, w1, h, order) - laplace_beltrami(fy, w2, h, order);
}

/**
 * Exact quadrature-weighted L² norm of (Δ_x − Δ_y)φ over a materialized
 * field, order-2 in-chart stencils; nodes whose stencil leaves the chart
 * are skipped (their partition-of-unity weight is negligible by the
 * FD-margin construction of ProductGrid).
 */
inline double wave_residual(const ScalarField4& phi) {
  const ProductGrid& g = phi.grid;
  const SphereGrid& s1 = g.sphere1();
  const SphereGrid& s2 = g.sphere2();
  const int n1 = static_cast<int>(s1.size());
  const int n2 = static_cast<int>(s2.size());

  // per-sphere-node flat 5-point Laplacian of a slice, as lambdas over ids
  auto lap_slice = [&](const SphereGrid& s, int i, auto&& value) -> double {
    const SphereIndex si = sphere_index(s, i);
    const double h = s.h();
    const double flat =
        (value(s.id_of(si.chart, si.iy, si.ix + 1)) +
         value(s.id_of(si.chart, si.iy, si.ix - 1)) +
         value(s.id_of(si.chart, si.iy + 1, si.ix)) +
         value(s.id_of(si.chart, si.iy - 1, si.ix)) - 4.0 * value(i)) /
        (h * h);
    const double r2 = std::norm(s.coord_of(i));
    return (1.0 + r2) * (1.0 + r2) / 4.0 * flat;
  };

  double acc = 0.0;
  for (int i1 = 0; i1 < n1; ++i1) {
    if (!s1.stencil_fits(i1, 1)) continue;
    for (int i2 = 0; i2 < n2; ++i2) {
      if (!s2.stencil_fits(i2, 1)) continue;
      const double lx = lap_slice(s1, i1, [&](int j) { return phi.at(g.join(j, i2)); });
      const double ly = lap_slice(s2, i2, [&](int j) { return phi.at(g.join(i1, j)); });
      const double d = lx - ly;
      acc += g.weight4(g.join(i1, i2)) * d * d;
    }
  }
  return std::sqrt(acc);
}

/// One uniformly distributed sphere point in its preferred chart.
inline std::pair<Chart, cplx> random_chart_point(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double ph = rng.uniform(0.0, 2.0 * kPi);
  const double t = std::sqrt((1.0 - std::abs(z)) / (1.0 + std::abs(z)));  // |w| ≤ 1
  const cplx w = t * std::exp(cplx(0.0, ph));
  return {z >= 0.0 ? Chart::kOne : Chart::kTwo, w};
}

/**
 * Monte-Carlo estimate (seeded, deterministic) of the L²(S²×S²) norm of
 * (Δ_x − Δ_y)φ using callable stencils of the given order and step.
 * Estimates sqrt(E|defect|² · (4π)²) over uniform product-sphere samples.
 */
template <class Phi>
double wave_residual_sampled(Phi&& phi, int probes, std::uint64_t seed, double h,
                             int order = 8) {
  Rng rng(seed);
  double acc = 0.0;
  for (int k = 0; k < probes; ++k) {
    const auto [cx, w1] = random_chart_point(rng);
    const auto [cy, w2] = random_chart_point(rng);
    const double d = wave_defect(phi, cx, w1, cy, w2, h, order);
    acc += d * d;
  }
  const double area = 4.0 * kPi;
  return std::sqrt(acc / probes) * area;
}

}  // namespace stw
