#pragma once

/**
 * @file fourier.hpp
 * @brief FFT plumbing (FFTW backend) and Fourier series on the unit circle.
 *
 * Sampling convention: N equispaced samples f_j = f(θ_j), θ_j = 2πj/N.
 * Coefficient convention: f̂_k = (1/N) Σ_j f_j e^{-ikθ_j}, so that
 * f(θ) = Σ_k f̂_k e^{ikθ} for band-limited f.  Modes are stored in FFT order
 * (k = 0..N-1 with negative modes aliased to k+N).
 */

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <fftw3.h>

#include "splittwistor/common.hpp"

namespace stw {

namespace detail {

/// Cached FFTW plans.  Plan creation is not thread-safe; execution via
/// fftw_execute_dft on caller-owned buffers is.
class FftwPlans {
 public:
  static FftwPlans& instance() {
    static FftwPlans p;
    return p;
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    // Plan on a scratch buffer; FFTW_ESTIMATE keeps the buffer untouched and
    // the plan reusable on any equally aligned arrays.
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    fftw_plan plan =
        fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  FftwPlans() = default;
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

}  // namespace detail

/// In-place DFT, FFTW sign convention (sign = -1 forward: Σ f_j e^{-2πijk/N}).
inline void dft(std::vector<cplx>& data, int sign) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  fftw_plan plan = detail::FftwPlans::instance().get(n, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

/// Fourier coefficients of circle samples (see file header for conventions).
class FourierModes {
 public:
  FourierModes() = default;

  static FourierModes of_samples(std::vector<cplx> samples) {
    FourierModes fm;
    fm.n_ = static_cast<int>(samples.size());
    dft(samples, -1);
    for (auto& c : samples) c /= static_cast<double>(fm.n_);
    fm.m_ = std::move(samples);
    return fm;
  }

  int sample_count() const { return n_; }

  /// Coefficient f̂_k for any k in (-N/2, N/2]; others alias mod N.
  cplx mode(int k) const {
    int i = k % n_;
    if (i < 0) i += n_;
    return m_[static_cast<std::size_t>(i)];
  }

  /// Energy Σ|f̂_k|² restricted to |k| > cutoff (tail diagnostic).
  double tail_energy(int cutoff) const {
    double e = 0.0;
    for (int k = -n_ / 2; k < n_ - n_ / 2; ++k)
      if (std::abs(k) > cutoff) e += std::norm(mode(k));
    return e;
  }

  double total_energy() const {
    double e = 0.0;
    for (const auto& c : m_) e += std::norm(c);
    return e;
  }

  /// Reconstruct samples from (possibly modified) modes.
  std::vector<cplx> to_samples() const {
    std::vector<cplx> s = m_;
    dft(s, +1);
    return s;
  }

 private:
  int n_ = 0;
  std::vector<cplx> m_;
};

/// Evaluate Σ_{k=0..K} c_k λ^k (one-sided power series) by Horner.
inline cplx eval_power_series(const std::vector<cplx>& c, cplx lambda) {
  cplx acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

/// Matrix power series Σ_k C_k λ^k.
inline MatX eval_power_series(const std::vector<MatX>& c, cplx lambda) {
  MatX acc = MatX::Zero(c.front().rows(), c.front().cols());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

/// θ_j = 2πj/N sample angles.
inline std::vector<double> circle_angles(int n) {
  std::vector<double> th(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) th[static_cast<std::size_t>(j)] = 2.0 * kPi * j / n;
  return th;
}

}  // namespace stw
