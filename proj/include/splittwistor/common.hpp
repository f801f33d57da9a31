#pragma once

/**
 * @file common.hpp
 * @brief Shared aliases, error types, deterministic RNG and small numeric
 *        helpers used throughout the library.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace stw {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using Mat3r = Eigen::Matrix3d;
using Vec3r = Eigen::Vector3d;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cplx kI = cplx(0.0, 1.0);

// ---------------------------------------------------------------------------
// Error taxonomy.  Every failure mode that callers are expected to handle has
// its own type; all derive from Error so coarse handling remains possible.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion of the incidence relation requested at (or too near) the real
/// twistor locus, where the interior point is not defined.
struct RealTwistorInput : Error { using Error::Error; };

/// Loop matrix data that must be hermitian positive definite is not.
struct NotPositiveDefinite : Error { using Error::Error; };

/// Fourier tail of circle samples carries too much energy; the sample count
/// does not resolve the function.
struct UndersampledLoop : Error { using Error::Error; };

/// Iterative refinement of a Birkhoff factorization failed to reach the
/// requested residual.
struct FactorizationDiverged : Error { using Error::Error; };

/// Input to the Riemann-Hilbert step is not unitary to tolerance.
struct UnitarityViolation : Error { using Error::Error; };

/// The Riemann-Hilbert linear system is singular: the jump data is outside
/// the small-data regime (nonzero partial indices).
struct LargeDataJump : Error { using Error::Error; };

/// det of the quadratic-form matrix in the instanton construction vanished at
/// a grid node (a jumping line was hit).
struct DegenerateDelta : Error { using Error::Error; };

/// A selector/constraint required by a solution ansatz is violated.
struct ConstraintViolation : Error { using Error::Error; };

/// Characteristic data violates its required support margins.
struct SupportViolation : Error { using Error::Error; };

/// A stereographic coordinate left the region its chart is responsible for.
struct ChartOverflow : Error { using Error::Error; };

/// A spacetime point lies too close to the affine-chart degeneration locus
/// (equal heights of the two sphere factors) for a chart-based computation.
struct ChartBoundary : Error { using Error::Error; };

/// Malformed configuration or input file.
struct ConfigError : Error { using Error::Error; };

/// Filesystem / serialization failure.
struct IoError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Small numeric helpers.
// ---------------------------------------------------------------------------

inline double sq(double x) { return x * x; }

/// Distance from x to the nearest integer, and that integer.
inline long nearest_integer(double x) { return std::lround(x); }
inline double integer_defect(double x) {
  return std::abs(x - static_cast<double>(std::lround(x)));
}

/// Frobenius norm of a dynamic complex matrix.
inline double frob(const MatX& m) { return m.norm(); }

/// Hermitian square root of a positive semi-definite matrix.
inline MatX hermitian_sqrt(const MatX& a) {
  Eigen::SelfAdjointEigenSolver<MatX> es(a);
  Eigen::VectorXd ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
  return es.eigenvectors() * ev.asDiagonal().toDenseMatrix().cast<cplx>() *
         es.eigenvectors().adjoint();
}

/// Unitary (polar) projection: the U in m = U P with P hermitian PSD.
inline MatX polar_unitary(const MatX& m) {
  Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Hermiticity defect ‖m − m†‖_F.
inline double hermiticity_defect(const MatX& m) {
  return (m - m.adjoint()).norm();
}

/// Smallest eigenvalue of a (nearly) hermitian matrix.
inline double min_eigenvalue(const MatX& m) {
  Eigen::SelfAdjointEigenSolver<MatX> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// C-infinity cutoff machinery.  ramp01 rises from 0 at t<=0 to 1 at t>=1 with
// all derivatives vanishing at both ends, and satisfies
// ramp01(t) + ramp01(1-t) == 1 exactly, which the two-chart partition of
// unity relies on.
// ---------------------------------------------------------------------------

namespace detail {
inline double bump_half(double t) {
  return t <= 0.0 ? 0.0 : std::exp(-1.0 / t);
}
}  // namespace detail

inline double ramp01(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = detail::bump_half(t);
  const double b = detail::bump_half(1.0 - t);
  return a / (a + b);
}

// ---------------------------------------------------------------------------
// Deterministic RNG.  splitmix64 core; identical streams on every platform
// (std:: distributions are not bit-portable and are avoided on purpose).
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (one value per call; cache unused twin).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * kPi * u2);
    have_cached_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  cplx cnormal() { return cplx(normal(), normal()); }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace stw
