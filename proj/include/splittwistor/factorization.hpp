#pragma once

/**
 * @file factorization.hpp
 * @brief Circle factorizations: scalar additive Cauchy splitting,
 *        positive-definite hermitian Birkhoff factorization g H g* = I, and
 *        the two-sided Riemann–Hilbert factorization h g⁻ = g⁺ of unitary
 *        loops on the Cayley circle.
 *
 * All factorizations are deterministic direct methods (block-Toeplitz
 * Cholesky / projection systems), chosen over iterative Riemann–Hilbert
 * solvers because the residual is directly measurable and the matrix ranks
 * here are small (n ≤ 4, N ≤ 1024).
 */

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "splittwistor/common.hpp"
#include "splittwistor/fourier.hpp"
#include "splittwistor/loop.hpp"

namespace stw {

/**
 * Additive splitting of a real function on the circle into holomorphic
 * halves.  Two normalizations of the constant term are exposed:
 *   g      : g(λ) = ½f̂₀ + Σ_{n≥1} f̂_n λⁿ, so g + ḡ = f exactly on the circle;
 *   g_full : same positive modes but g_full(0) = f̂₀, so g + ḡ = f + f̂₀.
 * Both appear in the literature on the logarithmic ansatz; consumers choose.
 */
struct CauchySplit {
  std::vector<cplx> g;        ///< coefficients of λⁿ, n = 0..N/2−1
  std::vector<cplx> g_full;  ///< same with doubled constant term
};

inline CauchySplit cauchy_split(const std::vector<double>& f) {
  const int N = static_cast<int>(f.size());
  if (N < 16 || (N & (N - 1)) != 0)
    throw ConfigError("cauchy_split sample count must be a power of two >= 16");
  std::vector<cplx> buf(f.begin(), f.end());
  dft(buf, -1);
  CauchySplit out;
  out.g.resize(N / 2);
  out.g_full.resize(N / 2);
  out.g[0] = 0.5 * buf[0] / double(N);
  out.g_full[0] = buf[0] / double(N);
  for (int n = 1; n < N / 2; ++n) {
    out.g[n] = buf[n] / double(N);
    out.g_full[n] = out.g[n];
  }
  return out;
}

/**
 * Result of a matrix factorization on the circle.
 *
 * g_plus[k] is the coefficient of λ^k (holomorphic inside the disc);
 * g_minus[k] is the coefficient of λ^{−k} (holomorphic outside; g_minus[0]
 * is the value at ∞).  `residual` is the sup over samples of the Frobenius
 * defect of the factorization identity, recomputed from these coefficient
 * lists, and `normalization` names the gauge fixing applied.
 */
struct FactorizationResult {
  std::vector<MatX> g_plus;
  std::vector<MatX> g_minus;
  double residual = 0.0;
  std::string normalization;
  int sample_count = 0;  ///< N of the input loop (for reconstructions)

  MatX eval_plus(cplx lambda) const { return eval_power_series(g_plus, lambda); }
  MatX eval_minus(cplx lambda) const { return eval_power_series(g_minus, 1.0 / lambda); }
};

namespace detail {

/// Reversed last block row of the lower Cholesky factor of the block
/// Toeplitz matrix T_{jk} = K̂_{k−j} (j,k = 0..M), adjointed: these are the
/// coefficients a_k with (Σ a_k λ^k)* (Σ a_k λ^k) ≈ K on the circle.
inline std::vector<MatX> toeplitz_spectral_factor(const LoopMatrixFunction& K, int M) {
  const int n = K.dim();
  const int dim = (M + 1) * n;
  MatX T(dim, dim);
  for (int j = 0; j <= M; ++j)
    for (int k = 0; k <= M; ++k)
      T.block(j * n, k * n, n, n) = K.mode(k - j);
  Eigen::LLT<MatX> llt(T);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("block Toeplitz section is not positive definite");
  const MatX L = llt.matrixL();
  std::vector<MatX> coeff(M + 1);
  for (int k = 0; k <= M; ++k)
    coeff[k] = L.block(M * n, (M - k) * n, n, n).adjoint();
  return coeff;
}

}  // namespace detail

/**
 * Birkhoff factorization of a pointwise hermitian positive-definite loop:
 * find g holomorphic in the closed disc with g H g* = I on the circle.
 *
 * Algorithm: g*g = H⁻¹ on the circle, so the coefficients of g are read off
 * a truncated block-Toeplitz Cholesky factorization of the Fourier operator
 * of H⁻¹ (truncation order N/4, refined once to N/2 if the residual target
 * is missed).  The left-unitary ambiguity g → Ag (AA* = I) is fixed by
 * making g(0) hermitian positive definite.
 *
 * Throws NotPositiveDefinite (input not hermitian to 1e−10 or min eigenvalue
 * ≤ 1e−8), UndersampledLoop (Fourier tail above 1e−6 of total energy), or
 * FactorizationDiverged (residual above `tol` after refinement).
 */
inline FactorizationResult birkhoff_hermitian(const LoopMatrixFunction& H,
                                              double tol = 1e-8) {
  if (H.hermiticity_defect() > 1e-10)
    throw NotPositiveDefinite("loop is not hermitian to 1e-10");
  if (H.min_eigenvalue() <= 1e-8)
    throw NotPositiveDefinite("loop has eigenvalues below 1e-8");
  if (H.tail_fraction() > 1e-6)
    throw UndersampledLoop("Fourier tail above 1e-6 of total energy");

  const int N = H.size();
  const int n = H.dim();
  const LoopMatrixFunction K = H.inverse();
  const MatX id = MatX::Identity(n, n);

  FactorizationResult out;
  out.sample_count = N;
  out.normalization = "g0_hpd";
  for (const int M : {N / 4, N / 2}) {
    out.g_plus = detail::toeplitz_spectral_factor(K, M);
    out.residual = 0.0;
    for (int j = 0; j < N; ++j) {
      const MatX g = out.eval_plus(std::exp(cplx(0.0, H.theta(j))));
      out.residual = std::max(out.residual, (g * H.sample(j) * g.adjoint() - id).norm());
    }
    if (out.residual <= tol) break;
  }
  if (out.residual > tol)
    throw FactorizationDiverged("birkhoff residual " + std::to_string(out.residual) +
                                " above tolerance after refinement");

  // gauge fixing: with g₀ = U P the polar decomposition (P hermitian
  // positive definite), left-multiply every coefficient by the unitary U*
  // so that g(0) = P.  Note (g₀g₀*)^{1/2} g₀⁻¹ is NOT unitary; the adjoint
  // orders only cancel for P = (g₀*g₀)^{1/2}.
  const MatX A = polar_unitary(out.g_plus[0]).adjoint();
  for (MatX& c : out.g_plus) c = A * c;
  return out;
}

/**
 * Two-sided Riemann–Hilbert factorization of a pointwise unitary loop h on
 * the Cayley circle (the real z₃-line mapped by z₃ ↦ (z₃−i)/(z₃+i), so
 * z₃ = ∞ sits at ζ = 1 = the θ = 0 sample): find g⁺ holomorphic inside
 * (upper half z₃-plane) and g⁻ holomorphic outside (lower half plane) with
 *   h g⁻ = g⁺,   g⁺(1) = g⁻(1) = I.
 *
 * Projection method: write g⁻ = Σ_{k=0..M} b_k ζ^{−k} (M = N/4) and demand
 * that h g⁻ has vanishing Fourier modes −1..−M together with the boundary
 * normalization Σ b_k = I; this is a square block linear system.  g⁺ is the
 * nonnegative-mode part of h g⁻.
 *
 * Throws UnitarityViolation (pointwise unitarity defect above 1e−10),
 * ConstraintViolation (h(ζ=1) ≠ I beyond 1e−8), UndersampledLoop, or
 * LargeDataJump (singular projection system or residual above `tol`; both
 * signal data outside the small-jump regime where the partial indices
 * vanish).
 */
inline FactorizationResult rhp_factorize(const LoopMatrixFunction& h, double tol = 1e-8) {
  const int N = h.size();
  const int n = h.dim();
  const MatX id = MatX::Identity(n, n);
  if (h.unitarity_defect() > 1e-10)
    throw UnitarityViolation("loop is not unitary to 1e-10");
  if ((h.sample(0) - id).norm() > 1e-8)
    throw ConstraintViolation("loop is not the identity at the point at infinity");
  if (h.tail_fraction() > 1e-6)
    throw UndersampledLoop("Fourier tail above 1e-6 of total energy");

  const int M = N / 4;
  const int dim = (M + 1) * n;
  MatX S = MatX::Zero(dim, dim);
  MatX rhs = MatX::Zero(dim, n);
  for (int k = 0; k <= M; ++k) S.block(0, k * n, n, n) = id;  // Σ b_k = I
  rhs.block(0, 0, n, n) = id;
  for (int m = 1; m <= M; ++m)
    for (int k = 0; k <= M; ++k)
      S.block(m * n, k * n, n, n) = h.mode(-m + k);  // mode −m of h g⁻ = 0

  Eigen::FullPivLU<MatX> lu(S);
  if (!lu.isInvertible())
    throw LargeDataJump("projection system is singular: data outside the small regime");
  const MatX b = lu.solve(rhs);

  FactorizationResult out;
  out.sample_count = N;
  out.normalization = "identity_at_z3_infinity";
  out.g_minus.resize(M + 1);
  for (int k = 0; k <= M; ++k) out.g_minus[k] = b.block(k * n, 0, n, n);

  // g⁺ := nonnegative-mode part of h g⁻
  std::vector<MatX> u(N);
  for (int j = 0; j < N; ++j)
    u[j] = h.sample(j) * out.eval_minus(std::exp(cplx(0.0, h.theta(j))));
  LoopMatrixFunction uloop{std::move(u)};
  out.g_plus.resize(N / 2);
  for (int k = 0; k < N / 2; ++k) out.g_plus[k] = uloop.mode(k);

  out.residual = 0.0;
  for (int j = 0; j < N; ++j) {
    const cplx z = std::exp(cplx(0.0, h.theta(j)));
    out.residual = std::max(
        out.residual, (h.sample(j) * out.eval_minus(z) - out.eval_plus(z)).norm());
  }
  if (out.residual > tol)
    throw LargeDataJump("factorization residual " + std::to_string(out.residual) +
                        " above tolerance: data outside the small regime");
  return out;
}

/**
 * The hermitian positive-definite loop H := g⁻* g⁻ built from a
 * Riemann–Hilbert factor; equal to g⁺* g⁺ up to the factorization residual
 * when h is unitary.
 */
inline LoopMatrixFunction hermitian_from_rhp(const FactorizationResult& f) {
  const int N = f.sample_count;
  std::vector<MatX> s(N);
  for (int j = 0; j < N; ++j) {
    const MatX gm = f.eval_minus(std::exp(cplx(0.0, 2.0 * kPi * j / N)));
    s[j] = gm.adjoint() * gm;
  }
  return LoopMatrixFunction(std::move(s));
}

}  // namespace stw
