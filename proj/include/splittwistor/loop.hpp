#pragma once

/**
 * @file loop.hpp
 * @brief Sampled matrix-valued functions on the unit circle with a lazily
 *        computed Fourier-coefficient view; the common input type of all
 *        circle factorizations.
 */

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "splittwistor/common.hpp"
#include "splittwistor/fourier.hpp"

namespace stw {

/**
 * N equispaced samples (θ_j = 2πj/N) of an n×n complex matrix function on
 * the unit circle.  N must be a power of two, N ≥ 16.  Fourier coefficients
 * M̂_k = (1/N) Σ_j M(θ_j) e^{−ikθ_j} are computed on first use and cached.
 */
class LoopMatrixFunction {
 public:
  explicit LoopMatrixFunction(std::vector<MatX> samples) : samples_(std::move(samples)) {
    const std::size_t N = samples_.size();
    if (N < 16 || (N & (N - 1)) != 0)
      throw ConfigError("loop sample count must be a power of two >= 16");
    n_ = static_cast<int>(samples_[0].rows());
    for (const MatX& m : samples_)
      if (m.rows() != n_ || m.cols() != n_)
        throw ConfigError("loop samples must be square matrices of equal size");
  }

  static LoopMatrixFunction constant(const MatX& m, int N) {
    return LoopMatrixFunction(std::vector<MatX>(N, m));
  }

  /// Sample fn(θ_j) for j = 0..N−1.
  static LoopMatrixFunction from_function(int N, const std::function<MatX(double)>& fn) {
    std::vector<MatX> s(N);
    for (int j = 0; j < N; ++j) s[j] = fn(2.0 * kPi * j / N);
    return LoopMatrixFunction(std::move(s));
  }

  int size() const { return static_cast<int>(samples_.size()); }
  int dim() const { return n_; }
  double theta(int j) const { return 2.0 * kPi * j / size(); }
  const MatX& sample(int j) const { return samples_[j]; }
  const std::vector<MatX>& samples() const { return samples_; }

  /// Fourier coefficient of order k (any k; reduced mod N into FFT storage).
  const MatX& mode(int k) const {
    ensure_modes();
    const int N = size();
    return modes_[((k % N) + N) % N];
  }

  /// ‖modes of order > N/4‖² / ‖all modes‖² (energy fraction above the
  /// trusted band; large values mean the loop is undersampled).
  double tail_fraction() const {
    ensure_modes();
    const int N = size();
    double total = 0.0, tail = 0.0;
    for (int k = 0; k < N; ++k) {
      const int ord = k <= N / 2 ? k : N - k;  // |frequency|
      const double e = modes_[k].squaredNorm();
      total += e;
      if (ord > N / 4) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
  }

  double hermiticity_defect() const {
    double d = 0.0;
    for (const MatX& m : samples_) d = std::max(d, (m - m.adjoint()).norm());
    return d;
  }

  double unitarity_defect() const {
    double d = 0.0;
    const MatX id = MatX::Identity(n_, n_);
    for (const MatX& m : samples_) d = std::max(d, (m.adjoint() * m - id).norm());
    return d;
  }

  /// Smallest eigenvalue over all samples (meaningful for hermitian loops).
  double min_eigenvalue() const {
    double mn = std::numeric_limits<double>::infinity();
    for (const MatX& m : samples_) {
      Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (m + m.adjoint()));
      mn = std::min(mn, es.eigenvalues().minCoeff());
    }
    return mn;
  }

  /// Pointwise inverse loop.
  LoopMatrixFunction inverse() const {
    std::vector<MatX> out(samples_.size());
    for (std::size_t j = 0; j < samples_.size(); ++j)
      out[j] = samples_[j].partialPivLu().inverse();
    return LoopMatrixFunction(std::move(out));
  }

 private:
  void ensure_modes() const {
    if (!modes_.empty()) return;
    const int N = size();
    modes_.assign(N, MatX::Zero(n_, n_));
    std::vector<cplx> scratch(N);
    for (int r = 0; r < n_; ++r)
      for (int col = 0; col < n_; ++col) {
        for (int j = 0; j < N; ++j) scratch[j] = samples_[j](r, col);
        dft(scratch, -1);
        for (int k = 0; k < N; ++k) modes_[k](r, col) = scratch[k] / double(N);
      }
  }

  int n_;
  std::vector<MatX> samples_;
  mutable std::vector<MatX> modes_;
};

}  // namespace stw
