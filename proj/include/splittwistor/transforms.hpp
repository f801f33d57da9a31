#pragma once

/**
 * @file transforms.hpp
 * @brief Scalar integral transforms over the real twistor lines: the line
 *        mean (X-ray transform), its first Fourier moment, the associated
 *        first-order compatibility pair, and the anti-self-dual Maxwell
 *        contour formula, together with the affine twistor frame and a
 *        band-limited test-function corpus.
 *
 * Affine frame.  The linear coordinates (ω⁰, ω¹, π₀, π₁) on twistor space
 *   ω⁰ = (Z¹¹ − Z⁰⁰)/√2,   ω¹ = i(Z¹¹ + Z⁰⁰)/√2,
 *   π₀ = Z⁰¹ + Z¹⁰,        π₁ = i(Z⁰¹ − Z¹⁰)
 * are the unique frame (up to one joint complex scale) in which
 *  (a) real twistors have projectively real coordinates, and
 *  (b) the incidence relation reads ω = X(p)·π with X(p) the real 2×2
 *      affine chart matrix of affine_chart() below.
 * On the real line of a point the fibre parameter t ∈ [0, π) with
 * π(t) = (cos t, sin t) traverses the line exactly once and satisfies
 * π₀ dπ₁ − π₁ dπ₀ = dt, which fixes the contour measure used by
 * maxwell_asd up to the constant kMaxwellMeasure documented there.
 */

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "splittwistor/common.hpp"
#include "splittwistor/forms.hpp"
#include "splittwistor/spinor.hpp"
#include "splittwistor/twistor.hpp"

namespace stw {

// ---------------------------------------------------------------------------
// affine twistor frame
// ---------------------------------------------------------------------------

/// ω-part of the affine frame of a twistor matrix.
inline Vec2 omega_of(const Mat2& z) {
  const double s = 1.0 / std::sqrt(2.0);
  return Vec2((z(1, 1) - z(0, 0)) * s, cplx(0.0, 1.0) * (z(1, 1) + z(0, 0)) * s);
}

/// π-part of the affine frame of a twistor matrix.
inline Vec2 pi_of(const Mat2& z) {
  return Vec2(z(0, 1) + z(1, 0), cplx(0.0, 1.0) * (z(0, 1) - z(1, 0)));
}

/// Inverse of (omega_of, pi_of): rebuild the twistor matrix.
inline Mat2 twistor_from_affine(const Vec2& om, const Vec2& pi) {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  Mat2 z;
  z(0, 0) = -(om(0) + i * om(1)) * s;
  z(1, 1) = (om(0) - i * om(1)) * s;
  z(0, 1) = (pi(0) - i * pi(1)) * 0.5;
  z(1, 0) = (pi(0) + i * pi(1)) * 0.5;
  return z;
}

// ---------------------------------------------------------------------------
// affine spacetime chart
// ---------------------------------------------------------------------------

/// Unit 3-vector of a sphere factor, n = s†σ⃗s / ‖s‖² (chart independent).
inline Vec3r unit_vector(const Spinor& s) {
  const cplx m = std::conj(s.c0) * s.c1;
  const double n2 = s.norm2();
  return Vec3r(2.0 * m.real(), 2.0 * m.imag(),
               std::norm(s.c0) - std::norm(s.c1)) / n2;
}

/**
 * Real 2×2 affine chart matrix X(p) of a point with factor unit vectors
 * a, b:  X = [[a₁−b₁, a₂+b₂], [−a₂+b₂, a₁+b₁]] / (√2 (a₃−b₃)).
 *
 * The chart degenerates where the two heights agree (a₃ = b₃, i.e.
 * |w₁| = |w₂| in chart-1 coordinates); ChartBoundary is thrown when
 * |a₃ − b₃| < margin.  Antipodal points share one X (the chart is a double
 * cover), and the incidence relation in the affine frame is ω = X π.
 */
inline Eigen::Matrix2d affine_chart(const SpacetimePoint& p, double margin = 1e-12) {
  const Vec3r a = unit_vector(p.x);
  const Vec3r b = unit_vector(p.y);
  const double den = a(2) - b(2);
  if (std::abs(den) < margin)
    throw ChartBoundary("point too close to the affine-chart degeneration locus");
  const double s = 1.0 / (std::sqrt(2.0) * den);
  Eigen::Matrix2d x;
  x << a(0) - b(0), a(1) + b(1),
      -a(1) + b(1), a(0) + b(0);
  return x * s;
}

// ---------------------------------------------------------------------------
// scalar functions on real twistor space
// ---------------------------------------------------------------------------

/**
 * A scalar function on (a neighbourhood of) the real twistor slice,
 * evaluated on representative matrices.  `degree` is the homogeneity weight
 * under real rescaling, f(μZ) = μ^degree f(Z) for μ > 0; the line
 * transforms below require degree 0.
 *
 * `omega_hessian`, when set, returns the analytic 2×2 matrix of second
 * ω-derivatives at fixed π in the affine frame; maxwell_asd then skips its
 * finite-difference fallback.
 */
struct TwistorScalarFunction {
  std::function<cplx(const Mat2&)> value;
  int degree = 0;
  std::function<Mat2(const Vec2&, const Vec2&)> omega_hessian{};

  cplx operator()(const Mat2& z) const { return value(z); }
};

/// Max deviation |f(μZ) − μ^deg f(Z)| over random real-slice samples and
/// random scales μ ∈ [0.2, 5].
inline double homogeneity_defect(const TwistorScalarFunction& f, Rng& rng,
                                 int samples = 20) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const SpacetimePoint p = SpacetimePoint::from_w(
        cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal()));
    const Mat2 z = boundary_twistor(p, rng.uniform(0.0, 2.0 * kPi)).Z;
    const double mu = rng.uniform(0.2, 5.0);
    const cplx expect = std::pow(mu, f.degree) * f(z);
    worst = std::max(worst, std::abs(f(Mat2(mu * z)) - expect));
  }
  return worst;
}

namespace detail {

/// Boundary-line sample λ₀ x⊗y + e^{iθ} x̂⊗ŷ for raw (not necessarily unit)
/// spinor pairs; matches incidence() on unit pairs and extends it
/// holomorphically off the real slice for perturbed arguments.
inline Mat2 line_sample(const Spinor& x, const Spinor& y, double theta) {
  const Vec2 xv = x.vec(), yv = y.vec();
  const Vec2 xh = hat(x).vec(), yh = hat(y).vec();
  return xv * yv.transpose() +
         std::exp(cplx(0.0, theta)) * (xh * yh.transpose());
}

inline void require_degree_zero(const TwistorScalarFunction& f, const char* op) {
  if (f.degree != 0)
    throw ConfigError(std::string(op) + " requires a degree-0 function");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// line transforms
// ---------------------------------------------------------------------------

/// Trapezoidal mean of f over the boundary circle of the line through the
/// raw spinor pair (x, y); spectrally accurate in M, complex-valued so that
/// it extends holomorphically to perturbed spinors.
inline cplx xray_mean(const TwistorScalarFunction& f, const Spinor& x,
                      const Spinor& y, int M = 128) {
  cplx acc = 0.0;
  for (int j = 0; j < M; ++j)
    acc += f(detail::line_sample(x, y, 2.0 * kPi * j / M));
  return acc / double(M);
}

/**
 * X-ray transform: the mean of a degree-0 function over the real twistor
 * line of p, i.e. the zero Fourier mode of θ ↦ f(Z(θ)).  Real for real f.
 * `orientation` = −1 integrates over the reversed contour and flips the
 * sign; with the natural parametrizations this realizes the identity
 * xray(f, p, M, −1) == −xray(f, antipode(p)) for every f.
 */
inline double xray(const TwistorScalarFunction& f, const SpacetimePoint& p,
                   int M = 128, int orientation = +1) {
  detail::require_degree_zero(f, "xray");
  return double(orientation) * xray_mean(f, p.x, p.y, M).real();
}

/// First positive Fourier mode of θ ↦ f(Z(θ)) on the raw spinor pair.
inline cplx gprime0_mean(const TwistorScalarFunction& f, const Spinor& x,
                         const Spinor& y, int M = 128) {
  cplx acc = 0.0;
  for (int j = 0; j < M; ++j) {
    const double th = 2.0 * kPi * j / M;
    acc += f(detail::line_sample(x, y, th)) * std::exp(cplx(0.0, -th));
  }
  return acc / double(M);
}

/// First-moment potential: the λ-coefficient of the interior Cauchy
/// extension of f along the line of p (equals the degree-1 coefficient of
/// cauchy_split applied to the same loop samples).
inline cplx gprime0(const TwistorScalarFunction& f, const SpacetimePoint& p,
                    int M = 128) {
  detail::require_degree_zero(f, "gprime0");
  return gprime0_mean(f, p.x, p.y, M);
}

// ---------------------------------------------------------------------------
// weighted sphere derivatives (edth) and the compatibility pair
// ---------------------------------------------------------------------------

enum class SphereSlot { kX, kY };

/**
 * Weighted sphere derivative of an equivariant function G(x, y) of two
 * spinors, realized by central differences along the conjugate-spinor
 * perturbation: slot kX differentiates ε ↦ G(x + ε x̂, y), slot kY uses the
 * opposite-signed perturbation ε ↦ G(x, y − ε ŷ).  `conjugated` selects
 * d/dε̄ instead of d/dε.  The y-sign is chosen so the first-order
 * compatibility pair of transform_pair_residual holds with plus signs.
 */
template <class G>
cplx edth(G&& g, const Spinor& x, const Spinor& y, SphereSlot slot,
          bool conjugated, double h = 1e-3) {
  auto at = [&](cplx eps) -> cplx {
    if (slot == SphereSlot::kX)
      return g(Spinor::of(x.vec() + eps * hat(x).vec()), y);
    return g(x, Spinor::of(y.vec() - eps * hat(y).vec()));
  };
  const cplx dre = (at(cplx(h, 0.0)) - at(cplx(-h, 0.0))) / (2.0 * h);
  const cplx dim = (at(cplx(0.0, h)) - at(cplx(0.0, -h))) / (2.0 * h);
  const cplx i(0.0, 1.0);
  return conjugated ? (dre + i * dim) * 0.5 : (dre - i * dim) * 0.5;
}

/**
 * Residuals (|∂̄_x g′₀ − ∂_y φ|, |∂̄_y g′₀ − ∂_x φ|) of the first-order
 * compatibility pair linking the line mean φ and the first moment g′₀ of a
 * degree-0 function; both vanish to O(h²) in the differencing step.
 */
inline std::pair<double, double> transform_pair_residual(
    const TwistorScalarFunction& f, const SpacetimePoint& p, int M = 128,
    double h = 1e-3) {
  detail::require_degree_zero(f, "transform_pair_residual");
  auto phi = [&](const Spinor& x, const Spinor& y) { return xray_mean(f, x, y, M); };
  auto gp = [&](const Spinor& x, const Spinor& y) { return gprime0_mean(f, x, y, M); };
  const cplx r1 = edth(gp, p.x, p.y, SphereSlot::kX, true, h) -
                  edth(phi, p.x, p.y, SphereSlot::kY, false, h);
  const cplx r2 = edth(gp, p.x, p.y, SphereSlot::kY, true, h) -
                  edth(phi, p.x, p.y, SphereSlot::kX, false, h);
  return {std::abs(r1), std::abs(r2)};
}

// ---------------------------------------------------------------------------
// anti-self-dual Maxwell contour formula
// ---------------------------------------------------------------------------

/**
 * Normalization of the real-line contour mean in maxwell_asd.  Fixed
 * empirically (not by any closed-form convention): with φ_AB equal to
 * kMaxwellMeasure times the t-mean of ω-Hessians over π(t) = (cos t, sin t),
 * and the −i of maxwell_curvature, the assembled 2-form of the bilinear
 * test function reproduces the curvature −∂∂̄ of its own line mean exactly,
 * which is the normalization the rank-1 reconstruction tests compare
 * against.  The same constant makes the cross-checks below hold for every
 * member of the band-limited corpus.
 */
inline constexpr double kMaxwellMeasure = 0.25;

/// Symmetric real field-strength spinor φ_AB (components φ₀₀, φ₀₁, φ₁₁).
struct MaxwellSpinor {
  Eigen::Matrix2d phi = Eigen::Matrix2d::Zero();
};

/**
 * ASD Maxwell contour integral: φ_AB(p) = kMaxwellMeasure × the mean over
 * t ∈ [0, π) of the second ω-derivatives of f restricted to the real line
 * of p, written in the affine frame (M nodes; analytic Hessian used when f
 * provides one, otherwise central differences of step fd_step).
 *
 * Requires a point inside one affine chart sheet; throws ChartBoundary
 * within `margin` of the degeneration locus |w₁| = |w₂|.  Real symmetric
 * output for real f; identically zero for constants and for degree-0
 * ratios with fibrewise-affine numerators.
 */
inline MaxwellSpinor maxwell_asd(const TwistorScalarFunction& f,
                                 const SpacetimePoint& p, int M = 128,
                                 double fd_step = 1e-4, double margin = 0.05) {
  const Eigen::Matrix2d x = affine_chart(p, margin);
  Mat2 acc = Mat2::Zero();
  for (int j = 0; j < M; ++j) {
    const double t = kPi * j / M;
    const Vec2 pi_t(std::cos(t), std::sin(t));
    const Vec2 om0 = x.cast<cplx>() * pi_t;
    if (f.omega_hessian) {
      acc += f.omega_hessian(om0, pi_t);
      continue;
    }
    auto value = [&](cplx d0, cplx d1) {
      return f(twistor_from_affine(om0 + Vec2(d0, d1), pi_t));
    };
    const double h = fd_step;
    const cplx f0 = value(0.0, 0.0);
    Mat2 hess;
    hess(0, 0) = (value(h, 0.0) - 2.0 * f0 + value(-h, 0.0)) / (h * h);
    hess(1, 1) = (value(0.0, h) - 2.0 * f0 + value(0.0, -h)) / (h * h);
    hess(0, 1) = (value(h, h) - value(h, -h) - value(-h, h) + value(-h, -h)) /
                 (4.0 * h * h);
    hess(1, 0) = hess(0, 1);
    acc += hess;
  }
  MaxwellSpinor out;
  const Mat2 mean = kMaxwellMeasure / double(M) * acc;
  out.phi << mean(0, 0).real(), 0.5 * (mean(0, 1) + mean(1, 0)).real(),
      0.5 * (mean(0, 1) + mean(1, 0)).real(), mean(1, 1).real();
  return out;
}

/**
 * Assemble the rank-1 curvature 2-form of a Maxwell spinor at p in the
 * chart-1 cobasis (dw₁, dw̄₁, dw₂, dw̄₂):
 *   F_{μν} = −i · φ_AB ε_{A'B'} e^{AA'}_μ e^{BB'}_ν − (μ ↔ ν),
 * with e the Wirtinger Jacobian of the affine chart (central differences of
 * step jac_step) and ε_{A'B'} = [[0, 1], [−1, 0]].  The −i converts the
 * real-parametrization contour mean into the holomorphic-contour
 * normalization under which F matches rank-1 reconstruction curvatures.
 * The self-dual part of the result vanishes (up to Hessian noise) and dF = 0
 * to O(step²) in an exterior-derivative check.
 */
inline Form2 maxwell_curvature(const MaxwellSpinor& ms, const SpacetimePoint& p,
                               double jac_step = 1e-6, double margin = 0.05) {
  const cplx w1 = p.w1(), w2 = p.w2();
  // Wirtinger tetrad e[A][A'][mu], mu over (w1, w1bar, w2, w2bar)
  cplx e[2][2][4];
  const double rc[4] = {w1.real(), w1.imag(), w2.real(), w2.imag()};
  for (int k = 0; k < 4; ++k) {
    double up[4], dn[4];
    for (int m = 0; m < 4; ++m) up[m] = dn[m] = rc[m];
    up[k] += jac_step;
    dn[k] -= jac_step;
    const Eigen::Matrix2d d =
        (affine_chart(SpacetimePoint::from_w(cplx(up[0], up[1]), cplx(up[2], up[3])),
                      margin) -
         affine_chart(SpacetimePoint::from_w(cplx(dn[0], dn[1]), cplx(dn[2], dn[3])),
                      margin)) /
        (2.0 * jac_step);
    const int re_mu = (k / 2) * 2;      // w-index of this coordinate pair
    const cplx i(0.0, 1.0);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (k % 2 == 0) {               // real part: contributes 1/2 to both
          e[a][b][re_mu] = 0.5 * d(a, b);
          e[a][b][re_mu + 1] = 0.5 * d(a, b);
        } else {                        // imaginary part: ∓i/2
          e[a][b][re_mu] += -0.5 * i * d(a, b);
          e[a][b][re_mu + 1] += 0.5 * i * d(a, b);
        }
      }
  }
  const double eps[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};
  cplx f4[4][4] = {};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      cplx s = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int ap = 0; ap < 2; ++ap)
            for (int bp = 0; bp < 2; ++bp)
              s += ms.phi(a, b) * eps[ap][bp] * e[a][ap][m] * e[b][bp][n];
      f4[m][n] = s;
    }
  Form2 out = Form2::zero(1);
  const cplx mi(0.0, -1.0);
  out.c[kW1W1b](0, 0) = mi * (f4[0][1] - f4[1][0]);
  out.c[kW1W2](0, 0) = mi * (f4[0][2] - f4[2][0]);
  out.c[kW1W2b](0, 0) = mi * (f4[0][3] - f4[3][0]);
  out.c[kW1bW2](0, 0) = mi * (f4[1][2] - f4[2][1]);
  out.c[kW1bW2b](0, 0) = mi * (f4[1][3] - f4[3][1]);
  out.c[kW2W2b](0, 0) = mi * (f4[2][3] - f4[3][2]);
  return out;
}

/// Contour formula and form assembly in one call.
inline Form2 maxwell_curvature(const TwistorScalarFunction& f,
                               const SpacetimePoint& p, int M = 128,
                               double fd_step = 1e-4, double margin = 0.05) {
  return maxwell_curvature(maxwell_asd(f, p, M, fd_step, margin), p, 1e-6, margin);
}

// ---------------------------------------------------------------------------
// band-limited test corpus
// ---------------------------------------------------------------------------

/**
 * One term of a band-limited expansion: coeff × the degree-d harmonic
 * ((a·v)^d + (ā·v)^d) / (2 Q(v)^{d/2}) in the affine frame v = (ω, π),
 * where Q(v) = v·v is the holomorphic quadratic form and a is a null
 * complex 4-vector (a·a = 0, which makes the numerator harmonic on R⁴).
 * Even degree makes the ratio invariant under every complex rescaling of v,
 * so the term descends to real projective twistor space; it is real and
 * analytic near the real slice.
 */
struct HarmonicTerm {
  double coeff = 0.0;
  int degree = 0;                 // even, >= 0
  Eigen::Vector4cd direction = Eigen::Vector4cd::Zero();
};

namespace detail {

inline cplx ipow(cplx z, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

/// ω-block Hessian of u^d / Q^{d/2} at v (u = a·v), A,B ∈ {0,1} = ω slots:
///   d(d−1)u^{d−2}a_A a_B/Q^{d/2} − d²u^{d−1}(a_A v_B + a_B v_A)/Q^{d/2+1}
///   − d u^d δ_AB/Q^{d/2+1} + d(d+2)u^d v_A v_B/Q^{d/2+2}.
inline Mat2 term_hessian(const Eigen::Vector4cd& a, const Eigen::Vector4cd& v,
                         int d) {
  const cplx u = a.cwiseProduct(v).sum();
  const cplx q = v.cwiseProduct(v).sum();
  const cplx qk = ipow(q, d / 2);
  const cplx c1 = double(d * (d - 1)) * ipow(u, d - 2) / qk;
  const cplx c2 = -double(d) * double(d) * ipow(u, d - 1) / (qk * q);
  const cplx c3 = -double(d) * ipow(u, d) / (qk * q);
  const cplx c4 = double(d) * double(d + 2) * ipow(u, d) / (qk * q * q);
  Mat2 h;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      h(A, B) = c1 * a(A) * a(B) + c2 * (a(A) * v(B) + a(B) * v(A)) +
                (A == B ? c3 : cplx(0.0)) + c4 * v(A) * v(B);
  return h;
}

}  // namespace detail

/// Build the degree-0 scalar function of a finite harmonic expansion,
/// with its analytic ω-Hessian attached.
inline TwistorScalarFunction harmonic_function(std::vector<HarmonicTerm> terms) {
  for (const auto& t : terms) {
    if (t.degree < 0 || t.degree % 2 != 0)
      throw ConfigError("harmonic terms must have even non-negative degree");
    if (t.degree > 0) {
      const cplx aa = t.direction.cwiseProduct(t.direction).sum();
      if (std::abs(aa) > 1e-9 * t.direction.squaredNorm())
        throw ConfigError("harmonic term direction must be null");
    }
  }
  auto shared = std::make_shared<std::vector<HarmonicTerm>>(std::move(terms));
  TwistorScalarFunction f;
  f.degree = 0;
  f.value = [shared](const Mat2& z) -> cplx {
    const Vec2 om = omega_of(z), pi = pi_of(z);
    Eigen::Vector4cd v;
    v << om(0), om(1), pi(0), pi(1);
    const cplx q = v.cwiseProduct(v).sum();
    cplx out = 0.0;
    for (const auto& t : *shared) {
      if (t.degree == 0) {
        out += t.coeff;
        continue;
      }
      const cplx u = t.direction.cwiseProduct(v).sum();
      const cplx ub = t.direction.conjugate().cwiseProduct(v).sum();
      out += t.coeff * (detail::ipow(u, t.degree) + detail::ipow(ub, t.degree)) /
             (2.0 * detail::ipow(q, t.degree / 2));
    }
    return out;
  };
  f.omega_hessian = [shared](const Vec2& om, const Vec2& pi) -> Mat2 {
    Eigen::Vector4cd v;
    v << om(0), om(1), pi(0), pi(1);
    Mat2 h = Mat2::Zero();
    for (const auto& t : *shared) {
      if (t.degree == 0) continue;
      h += 0.5 * t.coeff *
           (detail::term_hessian(t.direction, v, t.degree) +
            detail::term_hessian(t.direction.conjugate(), v, t.degree));
    }
    return h;
  };
  return f;
}

/// Seeded random term list: one term per even degree up to max_degree, null
/// directions from Gaussian orthogonal equal-norm real pairs, coefficients
/// damped geometrically with the degree.
inline std::vector<HarmonicTerm> random_harmonic_terms(std::uint64_t seed,
                                                       int max_degree = 8) {
  Rng rng(seed);
  std::vector<HarmonicTerm> terms;
  terms.push_back({rng.normal(), 0, Eigen::Vector4cd::Zero()});
  for (int d = 2; d <= max_degree; d += 2) {
    Eigen::Vector4d u, v;
    for (int k = 0; k < 4; ++k) u(k) = rng.normal();
    for (int k = 0; k < 4; ++k) v(k) = rng.normal();
    v -= v.dot(u) / u.squaredNorm() * u;           // v ⊥ u
    v *= u.norm() / v.norm();                      // ‖v‖ = ‖u‖  ⇒ a·a = 0
    const Eigen::Vector4cd a =
        (u.cast<cplx>() + cplx(0.0, 1.0) * v.cast<cplx>()) / u.norm();
    terms.push_back({rng.normal() * std::pow(0.5, d / 2), d, a});
  }
  return terms;
}

/// Seeded random band-limited function built from random_harmonic_terms.
inline TwistorScalarFunction random_band_limited(std::uint64_t seed,
                                                 int max_degree = 8) {
  return harmonic_function(random_harmonic_terms(seed, max_degree));
}

// ---------------------------------------------------------------------------
// fixed closed-form examples
// ---------------------------------------------------------------------------

/// f(Z) = Re(Z⁰⁰ Z̄¹¹)/‖Z‖²_F: the degree-0 bilinear entry product whose
/// line mean has the closed form bilinear_test_xray below.
inline TwistorScalarFunction bilinear_test_function() {
  TwistorScalarFunction f;
  f.degree = 0;
  f.value = [](const Mat2& z) -> cplx {
    return (z(0, 0) * std::conj(z(1, 1))).real() / z.squaredNorm();
  };
  return f;
}

/// Closed form of xray(bilinear_test_function(), p):
/// Re[s(x) s(y)] with s = w̄/(1+|w|²) per factor in chart-1 coordinates
/// (equivalently u/(1+|u|²) in chart-2 coordinates).
inline double bilinear_test_xray(const SpacetimePoint& p) {
  auto s = [](const Spinor& sp) -> cplx {
    return std::conj(sp.c1) * sp.c0 / sp.norm2();
  };
  return (s(p.x) * s(p.y)).real();
}

/// f(Z) = det Z / ‖Z‖²_F: degree 0, restricting to e^{iθ}/2 on every real
/// line, so its line mean vanishes and its first moment is exactly 1/2.
inline TwistorScalarFunction determinant_ratio_function() {
  TwistorScalarFunction f;
  f.degree = 0;
  f.value = [](const Mat2& z) -> cplx { return z.determinant() / z.squaredNorm(); };
  return f;
}

}  // namespace stw
