// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants of the waveform kernels. Compiled with -mavx2 only on
// x86-64; the dispatcher checks cpuid before routing here.

#if defined(FSOLINK_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "kernels_internal.hpp"

namespace fso::kernels::avx2 {

namespace {

// sin on [-pi/4, pi/4] + pi/2 quadrant step, fdlibm kernel polynomials.
constexpr double kPio2Hi = 1.57079632679489655800e+00;
constexpr double kPio2Lo = 6.12323399573676603587e-17;

constexpr double S1 = -1.66666666666666324348e-01;
constexpr double S2 = 8.33333333332248946124e-03;
constexpr double S3 = -1.98412698298579493134e-04;
constexpr double S4 = 2.75573137070700676789e-06;
constexpr double S5 = -2.50507602534068634195e-08;
constexpr double S6 = 1.58969099521155010221e-10;

constexpr double C1 = 4.16666666666666019037e-02;
constexpr double C2 = -1.38888888888741095749e-03;
constexpr double C3 = 2.48015872894767294178e-05;
constexpr double C4 = -2.75573143513906633035e-07;
constexpr double C5 = 2.08757232129817482790e-09;
constexpr double C6 = -1.13596475577881948265e-11;

// sin(d * pi/2) for d in [0, 1]: the quadrant index is just round(d).
inline __m256d sin_half_pi(__m256d d) {
  const __m256d n = _mm256_round_pd(d, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d t = _mm256_sub_pd(d, n);  // exact
  const __m256d r = _mm256_add_pd(_mm256_mul_pd(t, _mm256_set1_pd(kPio2Hi)),
                                  _mm256_mul_pd(t, _mm256_set1_pd(kPio2Lo)));
  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(S6);
  ps = _mm256_add_pd(_mm256_mul_pd(ps, z), _mm256_set1_pd(S5));
  ps = _mm256_add_pd(_mm256_mul_pd(ps, z), _mm256_set1_pd(S4));
  ps = _mm256_add_pd(_mm256_mul_pd(ps, z), _mm256_set1_pd(S3));
  ps = _mm256_add_pd(_mm256_mul_pd(ps, z), _mm256_set1_pd(S2));
  ps = _mm256_add_pd(_mm256_mul_pd(ps, z), _mm256_set1_pd(S1));
  const __m256d sin_r =
      _mm256_add_pd(r, _mm256_mul_pd(_mm256_mul_pd(r, z), ps));

  __m256d pc = _mm256_set1_pd(C6);
  pc = _mm256_add_pd(_mm256_mul_pd(pc, z), _mm256_set1_pd(C5));
  pc = _mm256_add_pd(_mm256_mul_pd(pc, z), _mm256_set1_pd(C4));
  pc = _mm256_add_pd(_mm256_mul_pd(pc, z), _mm256_set1_pd(C3));
  pc = _mm256_add_pd(_mm256_mul_pd(pc, z), _mm256_set1_pd(C2));
  pc = _mm256_add_pd(_mm256_mul_pd(pc, z), _mm256_set1_pd(C1));
  const __m256d zz = _mm256_mul_pd(z, z);
  // cos(r) = 1 - z/2 + z^2 * poly
  const __m256d cos_r = _mm256_add_pd(
      _mm256_sub_pd(_mm256_set1_pd(1.0),
                    _mm256_mul_pd(z, _mm256_set1_pd(0.5))),
      _mm256_mul_pd(zz, pc));

  // quadrant 0 -> sin(r), quadrant 1 -> cos(r)
  const __m256d in_q1 = _mm256_cmp_pd(n, _mm256_set1_pd(1.0), _CMP_EQ_OQ);
  return _mm256_blendv_pd(sin_r, cos_r, in_q1);
}

inline double sin_half_pi_scalar(double d) {
  const double n = std::nearbyint(d);
  const double t = d - n;
  const double r = t * kPio2Hi + t * kPio2Lo;
  const double z = r * r;
  if (n == 1.0) {
    const double pc = C1 + z * (C2 + z * (C3 + z * (C4 + z * (C5 + z * C6))));
    return 1.0 - z * 0.5 + (z * z) * pc;
  }
  const double ps = S1 + z * (S2 + z * (S3 + z * (S4 + z * (S5 + z * S6))));
  return r + (r * z) * ps;
}

}  // namespace

void scale(const double* x, double* y, std::size_t n, double a) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction) {
  const double swing = 1.0 - floor_fraction;
  const __m256d vswing = _mm256_set1_pd(swing);
  const __m256d vfloor = _mm256_set1_pd(floor_fraction);
  const __m256d vpeak = _mm256_set1_pd(peak_w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = sin_half_pi(_mm256_loadu_pd(drive + i));
    const __m256d s2 = _mm256_mul_pd(s, s);
    const __m256d v =
        _mm256_mul_pd(vpeak, _mm256_add_pd(_mm256_mul_pd(vswing, s2), vfloor));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) {
    const double s = sin_half_pi_scalar(drive[i]);
    out[i] = peak_w * (swing * (s * s) + floor_fraction);
  }
}

void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2) {
  const __m256d vaw = _mm256_set1_pd(amps_per_watt);
  const __m256d vshot = _mm256_set1_pd(shot_a2_per_w);
  const __m256d vfloor = _mm256_set1_pd(var_floor_a2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_loadu_pd(p_w + i);
    _mm256_storeu_pd(current_a + i, _mm256_mul_pd(vaw, p));
    const __m256d var = _mm256_add_pd(_mm256_mul_pd(vshot, p), vfloor);
    _mm256_storeu_pd(sigma_a + i, _mm256_sqrt_pd(var));
  }
  for (; i < n; ++i) {
    current_a[i] = amps_per_watt * p_w[i];
    sigma_a[i] = std::sqrt(shot_a2_per_w * p_w[i] + var_floor_a2);
  }
}

void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(re + i);
    const __m256d b = _mm256_loadu_pd(im + i);
    const __m256d c = _mm256_loadu_pd(h_re + i);
    const __m256d d = _mm256_loadu_pd(h_im + i);
    _mm256_storeu_pd(
        re + i, _mm256_sub_pd(_mm256_mul_pd(a, c), _mm256_mul_pd(b, d)));
    _mm256_storeu_pd(
        im + i, _mm256_add_pd(_mm256_mul_pd(a, d), _mm256_mul_pd(b, c)));
  }
  for (; i < n; ++i) {
    const double r = re[i] * h_re[i] - im[i] * h_im[i];
    const double s = re[i] * h_im[i] + im[i] * h_re[i];
    re[i] = r;
    im[i] = s;
  }
}

}  // namespace fso::kernels::avx2

#endif  // FSOLINK_HAVE_AVX2
