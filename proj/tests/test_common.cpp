#include <gtest/gtest.h>

#include <vector>

#include "splittwistor/common.hpp"
#include "splittwistor/fourier.hpp"
#include "splittwistor/threading.hpp"

using namespace stw;

namespace {

// Direct O(N^2) DFT, written independently of the FFT path.
std::vector<cplx> naive_modes(const std::vector<cplx>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<cplx> m(f.size());
  for (int k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j)
      s += f[j] * std::exp(cplx(0.0, -2.0 * kPi * j * k / n));
    m[k] = s / static_cast<double>(n);
  }
  return m;
}

}  // namespace

TEST(Fourier, MatchesReferenceValues) {
  // f(θ) = cos θ + 0.5 sin 2θ + 0.25 sampled at N = 8.
  const int n = 8;
  std::vector<cplx> f(n);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    f[j] = std::cos(th) + 0.5 * std::sin(2.0 * th) + 0.25;
  }
  auto fm = FourierModes::of_samples(f);
  // Reference values computed with an independent implementation.
  EXPECT_NEAR(fm.mode(0).real(), 0.25, 1e-14);
  EXPECT_NEAR(fm.mode(0).imag(), 0.0, 1e-14);
  EXPECT_NEAR(fm.mode(1).real(), 0.5, 1e-14);
  EXPECT_NEAR(fm.mode(-1).real(), 0.5, 1e-14);
  EXPECT_NEAR(fm.mode(2).imag(), -0.25, 1e-14);
  EXPECT_NEAR(fm.mode(-2).imag(), 0.25, 1e-14);
}

TEST(Fourier, MatchesNaiveDftOnRandomData) {
  Rng rng(7);
  for (int n : {16, 64, 256}) {
    std::vector<cplx> f(static_cast<std::size_t>(n));
    for (auto& c : f) c = rng.cnormal();
    auto fm = FourierModes::of_samples(f);
    auto ref = naive_modes(f);
    for (int k = 0; k < n; ++k)
      EXPECT_NEAR(std::abs(fm.mode(k) - ref[static_cast<std::size_t>(k)]), 0.0, 1e-11);
    // Round trip.
    auto back = fm.to_samples();
    for (int j = 0; j < n; ++j)
      EXPECT_NEAR(std::abs(back[static_cast<std::size_t>(j)] - f[static_cast<std::size_t>(j)]), 0.0, 1e-11);
  }
}

TEST(Fourier, TailEnergy) {
  const int n = 32;
  std::vector<cplx> f(n);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    f[j] = std::cos(5.0 * th);
  }
  auto fm = FourierModes::of_samples(f);
  EXPECT_NEAR(fm.tail_energy(5), 0.0, 1e-24);
  EXPECT_NEAR(fm.tail_energy(4), 0.5, 1e-12);  // |f̂_5|² + |f̂_-5|² = 0.25+0.25
}

TEST(Common, HermitianSqrt) {
  MatX a(2, 2);
  a << cplx(2, 0), cplx(1, 1), cplx(1, -1), cplx(3, 0);
  MatX s = hermitian_sqrt(a);
  // Reference values computed with an independent implementation.
  EXPECT_NEAR(s(0, 0).real(), 1.3333333333333333, 1e-12);
  EXPECT_NEAR(s(0, 1).real(), 0.3333333333333332, 1e-12);
  EXPECT_NEAR(s(0, 1).imag(), 0.33333333333333326, 1e-12);
  EXPECT_NEAR(s(1, 1).real(), 1.6666666666666647, 1e-12);
  EXPECT_NEAR((s * s - a).norm(), 0.0, 1e-12);
}

TEST(Common, PolarUnitary) {
  MatX m(2, 2);
  m << cplx(1.0, 0.5), cplx(0.2, 0.0), cplx(0.0, -0.3), cplx(0.8, -0.1);
  MatX u = polar_unitary(m);
  // Reference values computed with an independent implementation.
  EXPECT_NEAR(u(0, 0).real(), 0.8622776358103545, 1e-12);
  EXPECT_NEAR(u(0, 0).imag(), 0.4592010770458162, 1e-12);
  EXPECT_NEAR(u(1, 0).real(), -0.09354086380212971, 1e-12);
  EXPECT_NEAR(u(1, 0).imag(), -0.19199415725594096, 1e-12);
  EXPECT_NEAR((u * u.adjoint() - MatX::Identity(2, 2)).norm(), 0.0, 1e-12);
  // Hermitian positive part: u† m should be hermitian PSD.
  MatX p = u.adjoint() * m;
  EXPECT_NEAR(hermiticity_defect(p), 0.0, 1e-12);
  EXPECT_GT(min_eigenvalue(p), 0.0);
}

TEST(Common, Ramp01) {
  EXPECT_DOUBLE_EQ(ramp01(-1.0), 0.0);
  EXPECT_DOUBLE_EQ(ramp01(2.0), 1.0);
  EXPECT_NEAR(ramp01(0.5), 0.5, 1e-15);
  // Reference value computed with an independent implementation.
  EXPECT_NEAR(ramp01(0.3), 0.1295704693997059, 1e-14);
  // Exact complementarity, the property the partition of unity needs.
  for (double t : {0.1, 0.25, 0.4, 0.77}) {
    EXPECT_DOUBLE_EQ(ramp01(t) + ramp01(1.0 - t), 1.0);
  }
}

TEST(Common, RngIsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng c(42);
  double mean = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) mean += c.uniform();
  mean /= n;
  EXPECT_NEAR(mean, 0.5, 0.02);
}

TEST(Threading, ParallelForCoversAllIndices) {
  const std::size_t n = 10007;
  std::vector<int> hits(n, 0);
  parallel_for(n, [&](std::size_t i) { hits[i] += 1; }, 4);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(hits[i], 1);
}

TEST(Threading, ParallelSumIsThreadCountInvariant) {
  const std::size_t n = 54321;
  auto f = [](std::size_t i) {
    return std::sin(0.001 * static_cast<double>(i)) / (1.0 + static_cast<double>(i % 97));
  };
  const double s1 = parallel_sum(n, f, 1);
  const double s4 = parallel_sum(n, f, 4);
  const double s13 = parallel_sum(n, f, 13);
  EXPECT_EQ(s1, s4);   // bitwise identical by construction
  EXPECT_EQ(s1, s13);
}

TEST(Common, PowerSeriesHorner) {
  std::vector<cplx> c = {cplx(1, 0), cplx(0, 1), cplx(2, 0)};
  const cplx lam(0.5, 0.25);
  const cplx direct = c[0] + c[1] * lam + c[2] * lam * lam;
  EXPECT_NEAR(std::abs(eval_power_series(c, lam) - direct), 0.0, 1e-15);
}
