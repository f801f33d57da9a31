#pragma once

/**
 * @file spinor.hpp
 * @brief Two-component spinors, the quaternionic hat map, stereographic
 *        charts on each sphere factor, and space-time points of S²×S².
 *
 * Conventions (fixed once for the whole library):
 *  - ε₀₁ = +1 and indices lower as x_α = ε_{αβ} x^β, so the skew pairing is
 *    ⟨x, y⟩ = x⁰y¹ − x¹y⁰ and x^α x̂_α = |x⁰|² + |x¹|².
 *  - hat(x) = (−x̄¹, x̄⁰): antilinear, hat∘hat = −id.
 *  - Chart 1 covers the pole x = (1,0) with coordinate w = x¹/x⁰ and unit
 *    section (1, w)/√(1+|w|²); chart 2 covers the opposite pole with u = 1/w
 *    and section (u, 1)/√(1+|u|²).  The antipodal map is w ↦ −1/w̄.
 */

#include <cmath>

#include "splittwistor/common.hpp"

namespace stw {

struct Spinor {
  cplx c0{0.0, 0.0};
  cplx c1{0.0, 0.0};

  Vec2 vec() const { return Vec2(c0, c1); }
  static Spinor of(const Vec2& v) { return {v(0), v(1)}; }

  double norm2() const { return std::norm(c0) + std::norm(c1); }
  double norm() const { return std::sqrt(norm2()); }

  Spinor normalized() const {
    const double n = norm();
    return {c0 / n, c1 / n};
  }
};

/// Antilinear hat map (−x̄¹, x̄⁰).
inline Spinor hat(const Spinor& s) {
  return {-std::conj(s.c1), std::conj(s.c0)};
}

/// Skew pairing x^α y_α = x⁰y¹ − x¹y⁰.
inline cplx skew(const Spinor& a, const Spinor& b) {
  return a.c0 * b.c1 - a.c1 * b.c0;
}

enum class Chart { kOne, kTwo };

inline Chart other(Chart c) { return c == Chart::kOne ? Chart::kTwo : Chart::kOne; }

/// Unit-norm spinor section of the given chart at coordinate w.
inline Spinor chart_section(Chart chart, cplx w) {
  const double n = std::sqrt(1.0 + std::norm(w));
  if (chart == Chart::kOne) return {1.0 / n, w / n};
  return {w / n, 1.0 / n};
}

/// Chart coordinate of a spinor direction.  Throws ChartOverflow when the
/// direction is too close to the chart's excluded pole (|coord| > max_abs).
inline cplx chart_coordinate(Chart chart, const Spinor& s, double max_abs = 1e12) {
  const cplx num = (chart == Chart::kOne) ? s.c1 : s.c0;
  const cplx den = (chart == Chart::kOne) ? s.c0 : s.c1;
  if (std::abs(num) > max_abs * std::abs(den))
    throw ChartOverflow("spinor direction outside chart domain");
  return num / den;
}

/// Preferred chart: the one in which the coordinate has |w| <= 1.
inline Chart preferred_chart(const Spinor& s) {
  return std::abs(s.c1) <= std::abs(s.c0) ? Chart::kOne : Chart::kTwo;
}

/// Canonical phase representative: rotate the dominant component (index 0 on
/// ties) to the positive real axis.  Two unit spinors represent the same
/// direction iff their phase-fixed forms agree; this is the stored-spinor
/// convention of SpacetimePoint, which makes disc parameters well defined.
inline Spinor phase_fixed(const Spinor& s) {
  const cplx dom = std::abs(s.c0) >= std::abs(s.c1) ? s.c0 : s.c1;
  const cplx ph = std::abs(dom) / dom;
  return {s.c0 * ph, s.c1 * ph};
}

/**
 * A point of S²×S², stored as a pair of unit spinors.  x parametrizes the
 * first factor, y the second.  The factory functions store the canonical
 * phase-fixed representatives, so points built from chart coordinates and
 * points recovered from twistors carry identical spinor frames.
 */
struct SpacetimePoint {
  Spinor x;
  Spinor y;

  static SpacetimePoint from_charts(Chart cx, cplx w1, Chart cy, cplx w2) {
    return {phase_fixed(chart_section(cx, w1)), phase_fixed(chart_section(cy, w2))};
  }

  /// Both factors in chart 1: p(w1, w2).
  static SpacetimePoint from_w(cplx w1, cplx w2) {
    return from_charts(Chart::kOne, w1, Chart::kOne, w2);
  }

  cplx w1() const { return chart_coordinate(Chart::kOne, x); }
  cplx w2() const { return chart_coordinate(Chart::kOne, y); }

  double normalization_defect() const {
    return std::max(std::abs(x.norm2() - 1.0), std::abs(y.norm2() - 1.0));
  }
};

/// Antipodal map on both factors: (x, y) ↦ (x̂, ŷ), i.e. w ↦ −1/w̄.
inline SpacetimePoint antipode(const SpacetimePoint& p) {
  return {hat(p.x), hat(p.y)};
}

/// Conformal factor of the round metric in a stereographic chart.
inline double conformal_factor(cplx w) {
  return 4.0 / sq(1.0 + std::norm(w));
}

/**
 * Value of the split-signature metric on a tangent vector with chart
 * components (v1, v2) = (dw₁(v), dw₂(v)):
 *   g(v, v) = F₁|v1|² − F₂|v2|²,  Fᵢ = 4/(1+|wᵢ|²)².
 * Throws ChartOverflow outside the chart's working region.
 */
inline double metric_eval(const SpacetimePoint& p, cplx v1, cplx v2,
                          double chart_limit = 1.3) {
  const cplx w1 = p.w1();
  const cplx w2 = p.w2();
  if (std::abs(w1) > chart_limit || std::abs(w2) > chart_limit)
    throw ChartOverflow("point outside metric chart working region");
  return conformal_factor(w1) * std::norm(v1) - conformal_factor(w2) * std::norm(v2);
}

}  // namespace stw
