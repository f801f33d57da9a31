#pragma once

/**
 * @file fields.hpp
 * @brief Lattice gauge fields on S²×S²: connections, finite-difference
 *        curvature, SD/ASD decomposition, Chern integrals, parallel
 *        transport and holonomy.
 *
 * Conventions:
 *  - connection components are stored per node in the node's preferred
 *    chart pair, ordered (A_{w1}, A_{w̄1}, A_{w2}, A_{w̄2});
 *  - curvature components follow the FormComp pair order of forms.hpp;
 *  - Chern integrands use the flat chart measure h² with the partition of
 *    unity (2-forms integrate without the metric); L² residuals use the
 *    full metric quadrature weight.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "splittwistor/common.hpp"
#include "splittwistor/forms.hpp"
#include "splittwistor/grid4.hpp"
#include "splittwistor/threading.hpp"

namespace stw {

/// Component order of a LatticeGaugeField.
enum GaugeComp : int { kAW1 = 0, kAW1b = 1, kAW2 = 2, kAW2b = 3 };

/**
 * In-chart Wirtinger derivatives (∂_w, ∂_w̄) of a matrix-valued lattice
 * function at sphere node `id` by central differences (order 2 or 4).
 * `value(id)` must return the n×n matrix at a sphere node; the caller is
 * responsible for `stencil_fits(id, order/2)`.
 */
template <class V>
std::pair<MatX, MatX> wirtinger_fd(const SphereGrid& s, int id, V&& value,
                                   int order = 2) {
  const SphereIndex si = sphere_index(s, id);
  const double h = s.h();
  auto vx = [&](int d) { return value(static_cast<int>(s.id_of(si.chart, si.iy, si.ix + d))); };
  auto vy = [&](int d) { return value(static_cast<int>(s.id_of(si.chart, si.iy + d, si.ix))); };
  MatX dx, dy;
  if (order == 2) {
    dx = (vx(1) - vx(-1)) / (2.0 * h);
    dy = (vy(1) - vy(-1)) / (2.0 * h);
  } else if (order == 4) {
    dx = (-vx(2) + 8.0 * vx(1) - 8.0 * vx(-1) + vx(-2)) / (12.0 * h);
    dy = (-vy(2) + 8.0 * vy(1) - 8.0 * vy(-1) + vy(-2)) / (12.0 * h);
  } else {
    throw ConfigError("wirtinger_fd order must be 2 or 4");
  }
  return {0.5 * (dx - kI * dy), 0.5 * (dx + kI * dy)};
}

/**
 * U(n) connection 1-form sampled on a product grid.  In unitary gauge the
 * pairing A_{w̄} = −A_w† holds on both factors.
 */
struct LatticeGaugeField {
  ProductGrid grid;
  int rank;
  bool unitary;       ///< expected anti-hermitian pairing A_{w̄} = −A_w†
  MatrixField4 comps; ///< 4 components in GaugeComp order

  LatticeGaugeField(const ProductGrid& g, int rank_, bool unitary_ = true)
      : grid(g), rank(rank_), unitary(unitary_), comps(g, rank_, 4) {}

  MatX get(long id, int comp) const { return comps.get(id, comp); }
  void set(long id, int comp, const MatX& m) { comps.set(id, comp, m); }

  /// Sample fn(chart1, w1, chart2, w2) -> {A_{w1}, A_{w̄1}, A_{w2}, A_{w̄2}}.
  template <class Fn>
  static LatticeGaugeField from_callable(const ProductGrid& g, int rank, Fn&& fn,
                                         bool unitary = true) {
    LatticeGaugeField out(g, rank, unitary);
    const int n1 = static_cast<int>(g.sphere1().size());
    const int n2 = static_cast<int>(g.sphere2().size());
    parallel_for(static_cast<std::size_t>(n1), [&](std::size_t k) {
      const int i1 = static_cast<int>(k);
      const SphereNode a = g.sphere1().node(i1);
      for (int i2 = 0; i2 < n2; ++i2) {
        const SphereNode b = g.sphere2().node(i2);
        const std::array<MatX, 4> v = fn(a.chart, a.w, b.chart, b.w);
        for (int c = 0; c < 4; ++c) out.comps.set(g.join(i1, i2), c, v[c]);
      }
    });
    return out;
  }

  /// Largest violation of the unitary-gauge pairing over all nodes.
  double unitary_gauge_defect() const {
    double worst = 0.0;
    for (long id = 0; id < grid.size(); ++id) {
      const double d1 = (get(id, kAW1b) + get(id, kAW1).adjoint()).norm();
      const double d2 = (get(id, kAW2b) + get(id, kAW2).adjoint()).norm();
      worst = std::max(worst, std::max(d1, d2));
    }
    return worst;
  }
};

/**
 * Curvature F = dA + A∧A per node, six components in FormComp pair order
 * over the directions (w1, w̄1, w2, w̄2).  Nodes whose FD stencil leaves
 * the chart are marked invalid (their quadrature weight is negligible).
 * SD/ASD parts are derived on demand (sd_asd_at).
 */
struct CurvatureField4 {
  ProductGrid grid;
  int rank;
  int halfwidth;  ///< stencil half-width used (order / 2)
  MatrixField4 comps;
  std::vector<std::uint8_t> valid;

  CurvatureField4(const ProductGrid& g, int rank_, int hw)
      : grid(g), rank(rank_), halfwidth(hw), comps(g, rank_, 6),
        valid(static_cast<std::size_t>(g.size()), 0) {}

  MatX get(long id, int comp) const { return comps.get(id, comp); }
  bool is_valid(long id) const { return valid[static_cast<std::size_t>(id)] != 0; }

  Form2 form_at(long id) const {
    Form2 f;
    for (int c = 0; c < 6; ++c) f.c[static_cast<std::size_t>(c)] = comps.get(id, c);
    return f;
  }
};

/**
 * Central finite-difference curvature of a lattice connection,
 * F_{μν} = ∂_μ A_ν − ∂_ν A_μ + [A_μ, A_ν], order 2 (default) or 4.
 */
inline CurvatureField4 curvature(const LatticeGaugeField& A, int order = 2) {
  if (order != 2 && order != 4) throw ConfigError("curvature order must be 2 or 4");
  const int hw = order / 2;
  const ProductGrid& g = A.grid;
  CurvatureField4 out(g, A.rank, hw);
  const SphereGrid& s1 = g.sphere1();
  const SphereGrid& s2 = g.sphere2();
  const int n2 = static_cast<int>(s2.size());

  parallel_for(static_cast<std::size_t>(s1.size()), [&](std::size_t k) {
    const int i1 = static_cast<int>(k);
    if (!s1.stencil_fits(i1, hw)) return;
    for (int i2 = 0; i2 < n2; ++i2) {
      if (!s2.stencil_fits(i2, hw)) continue;
      const long id = g.join(i1, i2);

      std::array<MatX, 4> a;
      for (int c = 0; c < 4; ++c) a[static_cast<std::size_t>(c)] = A.get(id, c);

      // der[mu][nu] = derivative in direction mu of component A_nu,
      // directions ordered (w1, w̄1, w2, w̄2)
      MatX der[4][4];
      for (int nu = 0; nu < 4; ++nu) {
        auto [d1, d1b] = wirtinger_fd(
            s1, i1, [&](int j) { return A.get(g.join(j, i2), nu); }, order);
        auto [d2, d2b] = wirtinger_fd(
            s2, i2, [&](int j) { return A.get(g.join(i1, j), nu); }, order);
        der[0][nu] = std::move(d1);
        der[1][nu] = std::move(d1b);
        der[2][nu] = std::move(d2);
        der[3][nu] = std::move(d2b);
      }

      static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                           {1, 2}, {1, 3}, {2, 3}};
      for (int c = 0; c < 6; ++c) {
        const int mu = kPairs[c][0], nu = kPairs[c][1];
        const auto m = static_cast<std::size_t>(mu), n = static_cast<std::size_t>(nu);
        out.comps.set(id, c, der[mu][nu] - der[nu][mu] + a[m] * a[n] - a[n] * a[m]);
      }
      out.valid[static_cast<std::size_t>(id)] = 1;
    }
  });
  return out;
}

/// Pointwise SD/ASD split of the curvature 2-form at a node, using the
/// conformal factors of the node's chart coordinates.
inline SdAsdParts sd_asd_at(const CurvatureField4& F, long id) {
  const auto [i1, i2] = F.grid.split(id);
  const double f1 = conformal_factor(F.grid.sphere1().coord_of(i1));
  const double f2 = conformal_factor(F.grid.sphere2().coord_of(i2));
  return sd_asd_decompose(F.form_at(id), f1, f2);
}

/**
 * L² norm (metric quadrature, Frobenius norm of the three SD coefficient
 * matrices) of the self-dual part of F — the anti-self-duality defect.
 */
inline double asd_residual(const CurvatureField4& F) {
  double acc = 0.0;
  for (long id = 0; id < F.grid.size(); ++id) {
    if (!F.is_valid(id)) continue;
    const SdAsdParts p = sd_asd_at(F, id);
    double s = 0.0;
    for (const MatX& m : p.sd) s += m.squaredNorm();
    acc += F.grid.weight4(id) * s;
  }
  return std::sqrt(acc);
}

/// First and second Chern numbers estimated by quadrature; `non_integral`
/// is set when any of them is farther than 0.05 from the nearest integer.
struct ChernResult {
  double c1_factor1 = 0.0;
  double c1_factor2 = 0.0;
  double c2_total = 0.0;
  bool non_integral = false;
  std::string message;
};

namespace detail {

inline void check_integrality(ChernResult& r) {
  std::ostringstream msg;
  const char* names[3] = {"c1_factor1", "c1_factor2", "c2_total"};
  const double vals[3] = {r.c1_factor1, r.c1_factor2, r.c2_total};
  for (int i = 0; i < 3; ++i) {
    const double d = std::abs(vals[i] - std::round(vals[i]));
    if (d > 0.05) {
      if (r.non_integral) msg << "; ";
      msg << names[i] << " = " << vals[i] << " is " << d
          << " away from the nearest integer";
      r.non_integral = true;
    }
  }
  r.message = msg.str();
}

/// Evenly spread sphere-node ids whose width-hw stencil fits the chart.
inline std::vector<int> spread_base_ids(const SphereGrid& s, int hw, int count) {
  std::vector<int> valid;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.stencil_fits(i, hw)) valid.push_back(static_cast<int>(i));
  std::vector<int> out;
  const std::size_t m = valid.size();
  for (int k = 1; k <= count; ++k)
    out.push_back(valid[m * static_cast<std::size_t>(k) / (count + 1)]);
  return out;
}

}  // namespace detail

/**
 * Chern integrals of a materialized curvature field:
 *   c1(factor k) = (1/π) ∫ Re tr F_{w_k w̄_k} dx dy  (chart measure × PoU),
 *     averaged over `bases` interior base nodes of the other factor;
 *   c2 = (1/π²) ∫ Re tr(F₀F₅ − F₁F₄ + F₂F₃) over the product grid.
 */
inline ChernResult chern_integrals(const CurvatureField4& F, int bases = 5) {
  const ProductGrid& g = F.grid;
  const SphereGrid& s1 = g.sphere1();
  const SphereGrid& s2 = g.sphere2();
  ChernResult r;

  auto c1_sum = [&](int factor, int base) {
    const SphereGrid& s = factor == 1 ? s1 : s2;
    const int comp = factor == 1 ? kW1W1b : kW2W2b;
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const long id = factor == 1 ? g.join(static_cast<int>(i), base)
                                  : g.join(base, static_cast<int>(i));
      if (!F.is_valid(id)) continue;
      const double pw = pou_weight(std::abs(s.coord_of(i))) * s.h() * s.h();
      acc += pw * F.get(id, comp).trace().real();
    }
    return acc / kPi;
  };

  for (int factor = 1; factor <= 2; ++factor) {
    const SphereGrid& other = factor == 1 ? s2 : s1;
    double avg = 0.0;
    const std::vector<int> ids = detail::spread_base_ids(other, F.halfwidth, bases);
    for (int b : ids) avg += c1_sum(factor, b);
    avg /= static_cast<double>(ids.size());
    (factor == 1 ? r.c1_factor1 : r.c1_factor2) = avg;
  }

  double acc2 = 0.0;
  for (long id = 0; id < g.size(); ++id) {
    if (!F.is_valid(id)) continue;
    const auto [i1, i2] = g.split(id);
    const double pw = pou_weight(std::abs(s1.coord_of(i1))) * s1.h() * s1.h() *
                      pou_weight(std::abs(s2.coord_of(i2))) * s2.h() * s2.h();
    const cplx t = (F.get(id, kW1W1b) * F.get(id, kW2W2b) -
                    F.get(id, kW1W2) * F.get(id, kW1bW2b) +
                    F.get(id, kW1W2b) * F.get(id, kW1bW2))
                       .trace();
    acc2 += pw * t.real();
  }
  r.c2_total = acc2 / (kPi * kPi);

  detail::check_integrality(r);
  return r;
}

/// curvature + chern_integrals in one call.
inline ChernResult chern_integrals(const LatticeGaugeField& A, int order = 2,
                                   int bases = 5) {
  return chern_integrals(curvature(A, order), bases);
}

/**
 * First Chern number of one sphere factor from a point-evaluable connection
 * conn(chart1, w1, chart2, w2) -> {A_{w1}, A_{w̄1}, A_{w2}, A_{w̄2}},
 * computed on slice grids of per-chart resolution n (so large-n c1 checks
 * never materialize a product-grid field).  Averaged over `bases` fixed
 * interior base points of the other factor.
 */
template <class Conn>
double chern_c1_factor(Conn&& conn, int factor, int n, int order = 2,
                       int bases = 5) {
  const int hw = order / 2;
  const SphereGrid s = padded_sphere_grid(n, hw);
  static const std::array<std::pair<Chart, cplx>, 5> kBases = {{
      {Chart::kOne, cplx(0.0, 0.0)},
      {Chart::kOne, cplx(0.35, 0.20)},
      {Chart::kOne, cplx(-0.50, 0.10)},
      {Chart::kTwo, cplx(0.15, -0.60)},
      {Chart::kTwo, cplx(-0.25, 0.40)},
  }};
  if (bases < 1 || bases > static_cast<int>(kBases.size()))
    throw ConfigError("chern_c1_factor supports 1..5 base points");

  const int nn = static_cast<int>(s.size());
  double avg = 0.0;
  for (int b = 0; b < bases; ++b) {
    const auto [cb, wb] = kBases[static_cast<std::size_t>(b)];
    // materialize the two in-slice components on the slice grid
    std::vector<MatX> aw(static_cast<std::size_t>(nn)), awb(static_cast<std::size_t>(nn));
    parallel_for(static_cast<std::size_t>(nn), [&](std::size_t i) {
      const SphereNode nd = s.node(i);
      const std::array<MatX, 4> v = factor == 1 ? conn(nd.chart, nd.w, cb, wb)
                                                : conn(cb, wb, nd.chart, nd.w);
      aw[i] = v[factor == 1 ? kAW1 : kAW2];
      awb[i] = v[factor == 1 ? kAW1b : kAW2b];
    });
    double acc = 0.0;
    for (int i = 0; i < nn; ++i) {
      if (!s.stencil_fits(static_cast<std::size_t>(i), hw)) continue;
      const MatX d_awb = wirtinger_fd(
          s, i, [&](int j) { return awb[static_cast<std::size_t>(j)]; }, order).first;
      const MatX d_aw = wirtinger_fd(
          s, i, [&](int j) { return aw[static_cast<std::size_t>(j)]; }, order).second;
      const std::size_t iu = static_cast<std::size_t>(i);
      const MatX f = d_awb - d_aw + aw[iu] * awb[iu] - awb[iu] * aw[iu];
      acc += pou_weight(std::abs(s.coord_of(static_cast<std::size_t>(i)))) * s.h() *
             s.h() * f.trace().real();
    }
    avg += acc / kPi;
  }
  return avg / bases;
}

/// Parametrized curve on S²×S².
struct Path4 {
  std::function<SpacetimePoint(double)> gamma;
  double t0 = 0.0;
  double t1 = 1.0;
};

/**
 * Solve dU/dt = m(t) U, U(t0) = I, by classical RK4; optionally project U
 * back to the unitary group (polar factor) after every step.
 */
template <class M>
MatX transport_ode(M&& m, double t0, double t1, int steps, bool unitarize) {
  if (steps < 1) throw ConfigError("transport_ode needs at least one step");
  const double h = (t1 - t0) / steps;
  MatX m0 = m(t0);
  MatX U = MatX::Identity(m0.rows(), m0.cols());
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    const MatX mh = m(t + 0.5 * h);
    const MatX m1 = m(t + h);
    const MatX k1 = m0 * U;
    const MatX k2 = mh * (U + (0.5 * h) * k1);
    const MatX k3 = mh * (U + (0.5 * h) * k2);
    const MatX k4 = m1 * (U + h * k3);
    U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (unitarize) U = polar_unitary(U);
    m0 = m1;
  }
  return U;
}

/**
 * Path-ordered transport of a point-evaluable connection along a path:
 * dU/dt = −(A·γ')U with the pullback A·γ' = Σ A_μ d(coord_μ)/dt evaluated
 * in the preferred charts at each time (velocities by central differences).
 */
template <class Conn>
MatX parallel_transport(Conn&& conn, const Path4& path, int steps = 512,
                        bool unitarize = true) {
  const double dt = 1e-6 * (path.t1 - path.t0);
  auto m = [&](double t) -> MatX {
    const SpacetimePoint p = path.gamma(t);
    const Chart c1 = preferred_chart(p.x);
    const Chart c2 = preferred_chart(p.y);
    const SpacetimePoint pp = path.gamma(t + dt);
    const SpacetimePoint pm = path.gamma(t - dt);
    const cplx v1 =
        (chart_coordinate(c1, pp.x) - chart_coordinate(c1, pm.x)) / (2.0 * dt);
    const cplx v2 =
        (chart_coordinate(c2, pp.y) - chart_coordinate(c2, pm.y)) / (2.0 * dt);
    const std::array<MatX, 4> a =
        conn(c1, chart_coordinate(c1, p.x), c2, chart_coordinate(c2, p.y));
    return -(a[kAW1] * v1 + a[kAW1b] * std::conj(v1) + a[kAW2] * v2 +
             a[kAW2b] * std::conj(v2));
  };
  return transport_ode(m, path.t0, path.t1, steps, unitarize);
}

namespace detail {

/// Per-axis linear interpolation stencil on cell-centered coordinates.
struct AxisStencil {
  int i0;
  double t;  // weight of i0+1
};

inline AxisStencil axis_stencil(double coord, double extent, double h, int n) {
  double f = (coord + extent) / h - 0.5;
  int i0 = static_cast<int>(std::floor(f));
  double t = f - i0;
  if (i0 < 0) { i0 = 0; t = 0.0; }
  if (i0 > n - 2) { i0 = n - 2; t = 1.0; }
  return {i0, t};
}

/// Four (node id, weight) bilinear corners around coordinate w in chart c.
inline std::array<std::pair<int, double>, 4> sphere_corners(const SphereGrid& s,
                                                            Chart c, cplx w) {
  const AxisStencil ax = axis_stencil(w.real(), s.extent(), s.h(), s.n());
  const AxisStencil ay = axis_stencil(w.imag(), s.extent(), s.h(), s.n());
  std::array<std::pair<int, double>, 4> out;
  int k = 0;
  for (int dy = 0; dy <= 1; ++dy)
    for (int dx = 0; dx <= 1; ++dx) {
      const double wgt = (dy ? ay.t : 1.0 - ay.t) * (dx ? ax.t : 1.0 - ax.t);
      out[static_cast<std::size_t>(k++)] = {
          static_cast<int>(s.id_of(c, ay.i0 + dy, ax.i0 + dx)), wgt};
    }
  return out;
}

}  // namespace detail

/// Bilinear (16-corner) interpolation of all four connection components.
inline std::array<MatX, 4> interpolate_connection(const LatticeGaugeField& A,
                                                  Chart c1, cplx w1, Chart c2,
                                                  cplx w2) {
  const auto k1 = detail::sphere_corners(A.grid.sphere1(), c1, w1);
  const auto k2 = detail::sphere_corners(A.grid.sphere2(), c2, w2);
  std::array<MatX, 4> out;
  for (int c = 0; c < 4; ++c) {
    MatX acc = MatX::Zero(A.rank, A.rank);
    for (const auto& [i1, u1] : k1)
      for (const auto& [i2, u2] : k2)
        acc += (u1 * u2) * A.get(A.grid.join(i1, i2), c);
    out[static_cast<std::size_t>(c)] = std::move(acc);
  }
  return out;
}

/// Transport of a lattice connection along a path (bilinear interpolation
/// in the preferred charts; re-unitarized per step iff A is unitary-gauge).
inline MatX parallel_transport(const LatticeGaugeField& A, const Path4& path,
                               int steps = 512) {
  auto conn = [&](Chart c1, cplx w1, Chart c2, cplx w2) {
    return interpolate_connection(A, c1, w1, c2, w2);
  };
  return parallel_transport(conn, path, steps, A.unitary);
}

}  // namespace stw
