#pragma once

/**
 * @file forms.hpp
 * @brief Pointwise 2-form algebra in a stereographic chart pair: component
 *        storage, the self-dual / anti-self-dual bases and projections.
 *
 * Components live in the complex chart cobasis (dw₁, dw̄₁, dw₂, dw̄₂), index
 * order (0,1,2,3).  A 2-form is stored by its six independent components
 * in the fixed pair order
 *   [0] (dw₁∧dw̄₁)  [1] (dw₁∧dw₂)  [2] (dw₁∧dw̄₂)
 *   [3] (dw̄₁∧dw₂)  [4] (dw̄₁∧dw̄₂) [5] (dw₂∧dw̄₂),
 * each an n×n complex matrix (n = 1 for scalar/abelian forms).
 *
 * With F₁, F₂ the conformal factors at the point and the orientation fixed by
 * the volume form (F₁F₂/4)·dw₁∧dw̄₁∧dw₂∧dw̄₂, the +1 eigenspace of the Hodge
 * star (self-dual side) is spanned by
 *   dw₁∧dw₂,  dw̄₁∧dw̄₂,  F₁·dw₁∧dw̄₁ − F₂·dw₂∧dw̄₂,
 * and the −1 eigenspace (anti-self-dual) by
 *   dw₁∧dw̄₂,  dw̄₁∧dw₂,  F₁·dw₁∧dw̄₁ + F₂·dw₂∧dw̄₂.
 * (Verified against an independent real-coordinate Hodge-star computation.)
 */

#include <array>

#include "splittwistor/common.hpp"
#include "splittwistor/spinor.hpp"

namespace stw {

struct Form2 {
  std::array<MatX, 6> c;

  static Form2 zero(int rank) {
    Form2 f;
    for (auto& m : f.c) m = MatX::Zero(rank, rank);
    return f;
  }

  int rank() const { return static_cast<int>(c[0].rows()); }

  Form2 operator+(const Form2& o) const {
    Form2 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Form2 operator-(const Form2& o) const {
    Form2 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Form2 operator*(cplx s) const {
    Form2 r;
    for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
    return r;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& m : c) s += m.squaredNorm();
    return std::sqrt(s);
  }
};

/// Component index constants for readability.
enum FormComp { kW1W1b = 0, kW1W2 = 1, kW1W2b = 2, kW1bW2 = 3, kW1bW2b = 4, kW2W2b = 5 };

/// Spinor-decomposition coefficients of a 2-form: three SD (a) and three ASD
/// (b) matrix coefficients relative to the bases in the file header.
struct SdAsdParts {
  std::array<MatX, 3> sd;   ///< a₁ (dw₁∧dw₂), a₂ (dw̄₁∧dw̄₂), a₃ (weighted diagonal)
  std::array<MatX, 3> asd;  ///< b₁ (dw₁∧dw̄₂), b₂ (dw̄₁∧dw₂), b₃ (weighted diagonal)
};

/// Pointwise SD/ASD projection coefficients at conformal factors (F1, F2).
inline SdAsdParts sd_asd_decompose(const Form2& f, double f1, double f2) {
  SdAsdParts p;
  p.sd[0] = f.c[kW1W2];
  p.sd[1] = f.c[kW1bW2b];
  p.sd[2] = (f.c[kW1W1b] / f1 - f.c[kW2W2b] / f2) / 2.0;
  p.asd[0] = f.c[kW1W2b];
  p.asd[1] = f.c[kW1bW2];
  p.asd[2] = (f.c[kW1W1b] / f1 + f.c[kW2W2b] / f2) / 2.0;
  return p;
}

inline SdAsdParts sd_asd_decompose(const Form2& f, const SpacetimePoint& pt) {
  return sd_asd_decompose(f, conformal_factor(pt.w1()), conformal_factor(pt.w2()));
}

/// Reassemble a form from decomposition coefficients (inverse of
/// sd_asd_decompose; exact linear algebra).
inline Form2 assemble_form(const SdAsdParts& p, double f1, double f2) {
  Form2 f = Form2::zero(static_cast<int>(p.sd[0].rows()));
  f.c[kW1W2] = p.sd[0];
  f.c[kW1bW2b] = p.sd[1];
  f.c[kW1W2b] = p.asd[0];
  f.c[kW1bW2] = p.asd[1];
  f.c[kW1W1b] = (p.sd[2] + p.asd[2]) * f1;
  f.c[kW2W2b] = (p.asd[2] - p.sd[2]) * f2;
  return f;
}

/// Self-dual part as a 2-form.
inline Form2 sd_part(const Form2& f, double f1, double f2) {
  SdAsdParts p = sd_asd_decompose(f, f1, f2);
  for (auto& m : p.asd) m.setZero();
  return assemble_form(p, f1, f2);
}

/// Anti-self-dual part as a 2-form.
inline Form2 asd_part(const Form2& f, double f1, double f2) {
  SdAsdParts p = sd_asd_decompose(f, f1, f2);
  for (auto& m : p.sd) m.setZero();
  return assemble_form(p, f1, f2);
}

/// The six basis forms at a point, SD triple first (rank-1 components).
inline std::array<Form2, 6> sd_asd_bases(const SpacetimePoint& pt) {
  const double f1 = conformal_factor(pt.w1());
  const double f2 = conformal_factor(pt.w2());
  std::array<Form2, 6> b;
  for (auto& f : b) f = Form2::zero(1);
  b[0].c[kW1W2](0, 0) = 1.0;
  b[1].c[kW1bW2b](0, 0) = 1.0;
  b[2].c[kW1W1b](0, 0) = f1;
  b[2].c[kW2W2b](0, 0) = -f2;
  b[3].c[kW1W2b](0, 0) = 1.0;
  b[4].c[kW1bW2](0, 0) = 1.0;
  b[5].c[kW1W1b](0, 0) = f1;
  b[5].c[kW2W2b](0, 0) = f2;
  return b;
}

/**
 * Metric pairing ⟨α, β⟩ = ½ α_{μν} β_{ρσ} g^{μρ} g^{νσ} (bilinear, no
 * conjugation; matrix components are traced).  Nonzero inverse-metric entries
 * in the complex cobasis: g^{w₁w̄₁} = 2/F₁, g^{w₂w̄₂} = −2/F₂.
 */
inline cplx form_pairing(const Form2& a, const Form2& b, double f1, double f2) {
  const double g1 = 2.0 / f1;
  const double g2 = -2.0 / f2;
  auto tr = [](const MatX& x, const MatX& y) { return (x * y).trace(); };
  cplx s = 0.0;
  s += -tr(a.c[kW1W1b], b.c[kW1W1b]) * g1 * g1;
  s += -tr(a.c[kW2W2b], b.c[kW2W2b]) * g2 * g2;
  s += (tr(a.c[kW1W2], b.c[kW1bW2b]) + tr(a.c[kW1bW2b], b.c[kW1W2])) * g1 * g2;
  s += (tr(a.c[kW1W2b], b.c[kW1bW2]) + tr(a.c[kW1bW2], b.c[kW1W2b])) * g1 * g2;
  return s;
}

}  // namespace stw
