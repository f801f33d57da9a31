#pragma once

/**
 * @file twistor.hpp
 * @brief Twistor points as 2×2 complex matrices, the incidence relation with
 *        its disc parametrization, and the inverse map from a non-real
 *        twistor to the unique interior point of its disc.
 */

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "splittwistor/common.hpp"
#include "splittwistor/spinor.hpp"

namespace stw {

/// Homogeneous coordinates (λ₀, λ₁) on the disc family; affine λ = λ₁/λ₀
/// with |λ| ≤ 1, boundary at |λ| = 1.
struct DiscParam {
  cplx l0{1.0, 0.0};
  cplx l1{0.0, 0.0};

  cplx affine() const { return l1 / l0; }
  bool on_boundary(double tol = 1e-9) const {
    return std::abs(std::abs(affine()) - 1.0) < tol;
  }
  static DiscParam boundary(double theta) {
    return {cplx(1.0, 0.0), std::exp(cplx(0.0, theta))};
  }
};

/**
 * A twistor point, i.e. a nonzero 2×2 complex matrix Z^{αα̇} considered
 * projectively (Z ~ μZ).
 */
struct TwistorPoint {
  Mat2 Z;

  /// Q(Z) = Z^{αα̇} Z_{αα̇} = 2 det Z; the quadric Q = 0 is the rank-1 locus.
  cplx quadric() const { return 2.0 * Z.determinant(); }

  /// Scale-invariant distance from the real (unitary-up-to-scale) slice:
  /// ‖Z†Z − sI‖_F / s with s = tr(Z†Z)/2.
  double reality_residual() const {
    const Mat2 m = Z.adjoint() * Z;
    const double s = m.trace().real() / 2.0;
    return (m - s * Mat2::Identity()).norm() / s;
  }

  bool is_real(double tol = 1e-9) const { return reality_residual() < tol; }

  /**
   * Canonical projective representative: Frobenius-normalized with the
   * largest-modulus entry rotated to the positive real axis.  Two
   * TwistorPoints are projectively equal iff their representatives agree.
   */
  Mat2 representative() const {
    Mat2 m = Z / Z.norm();
    int rmax = 0, cmax = 0;
    double best = -1.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (std::abs(m(r, c)) > best) {
          best = std::abs(m(r, c));
          rmax = r;
          cmax = c;
        }
    const cplx ph = m(rmax, cmax) / std::abs(m(rmax, cmax));
    return m / ph;
  }

  /// Projective (chordal) distance min over phases of ‖Ẑ − e^{iφ}Ẑ'‖ for the
  /// Frobenius-normalized matrices; zero iff the points are projectively
  /// equal.  Robust on the real slice, where entry moduli tie and the
  /// canonical representative's entry selection is not stable.
  double projective_distance(const TwistorPoint& o) const {
    const Mat2 a = Z / Z.norm();
    const Mat2 b = o.Z / o.Z.norm();
    const cplx inner = (a.adjoint() * b).trace();
    const cplx ph = inner == cplx(0.0) ? cplx(1.0) : inner / std::abs(inner);
    return (b - ph * a).norm();
  }
};

/// Quaternionic conjugate Ẑ = (hat ⊗ hat)(Z̄); Z is on the real slice iff
/// Ẑ ∝ Z with a positive real factor.
inline Mat2 hat_matrix(const Mat2& z) {
  Mat2 out;
  out << std::conj(z(1, 1)), -std::conj(z(1, 0)),
        -std::conj(z(0, 1)),  std::conj(z(0, 0));
  return out;
}

/**
 * Incidence relation: Z = λ₀ x⊗y + λ₁ x̂⊗ŷ (outer products of the spinor
 * pairs, no conjugation).  For unit-norm p and |λ₁| = |λ₀| the result lies
 * on the real slice; det Z = λ₀λ₁ for unit-norm p.
 */
inline TwistorPoint incidence(const SpacetimePoint& p, const DiscParam& d) {
  const Spinor xh = hat(p.x);
  const Spinor yh = hat(p.y);
  Mat2 z = d.l0 * p.x.vec() * p.y.vec().transpose() +
           d.l1 * xh.vec() * yh.vec().transpose();
  return {z};
}

/// Boundary-circle sample Z(θ) = incidence(p, (1, e^{iθ})).
inline TwistorPoint boundary_twistor(const SpacetimePoint& p, double theta) {
  return incidence(p, DiscParam::boundary(theta));
}

struct PointAndDisc {
  SpacetimePoint p;
  DiscParam d;
};

/**
 * Inverse of the incidence relation off the real slice.
 *
 * The two singular directions of Z recover x and y (the singular values are
 * |λ₀| ≥ |λ₁|, so the interior representative |λ| < 1 comes out
 * automatically); phases are fixed to the canonical spinor representative,
 * matching the convention of SpacetimePoint's factories so that the disc
 * parameter round-trips exactly.  Throws RealTwistorInput within tolerance
 * of the real slice, where the interior point is not defined.
 */
inline PointAndDisc point_from_twistor(const TwistorPoint& t, double real_tol = 1e-9) {
  if (t.reality_residual() < real_tol)
    throw RealTwistorInput("twistor is on (or too near) the real slice");
  Eigen::JacobiSVD<Mat2> svd(t.Z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Spinor xs = phase_fixed(Spinor::of(svd.matrixU().col(0)));
  const Spinor ys = phase_fixed(Spinor::of(svd.matrixV().col(0).conjugate()));
  const Vec2 x = xs.vec();
  const Vec2 y = ys.vec();
  const Vec2 xh = hat(xs).vec();
  const Vec2 yh = hat(ys).vec();
  const cplx l0 = (x.adjoint() * t.Z * y.conjugate())(0);
  const cplx l1 = (xh.adjoint() * t.Z * yh.conjugate())(0);
  return {SpacetimePoint{xs, ys}, DiscParam{l0, l1}};
}

}  // namespace stw
