// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#include "fso/kernels.hpp"

#include <stdexcept>

#include "kernels_internal.hpp"

namespace fso::kernels {

namespace {

struct Vtable {
  void (*scale)(const double*, double*, std::size_t, double);
  void (*mzm_transfer)(const double*, double*, std::size_t, double, double);
  void (*apd_response)(const double*, double*, double*, std::size_t, double,
                       double, double);
  void (*complex_multiply)(double*, double*, const double*, const double*,
                           std::size_t);
};

constexpr Vtable kScalar{scalar::scale, scalar::mzm_transfer,
                         scalar::apd_response, scalar::complex_multiply};

#if defined(FSOLINK_HAVE_AVX2)
constexpr Vtable kAvx2{avx2::scale, avx2::mzm_transfer, avx2::apd_response,
                       avx2::complex_multiply};
#endif

bool cpu_has_avx2() {
#if defined(FSOLINK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct State {
  Backend backend;
  const Vtable* table;
  State() {
#if defined(FSOLINK_HAVE_AVX2)
    if (cpu_has_avx2()) {
      backend = Backend::Avx2;
      table = &kAvx2;
      return;
    }
#endif
    backend = Backend::Scalar;
    table = &kScalar;
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  return cpu_has_avx2();
}

Backend active_backend() { return state().backend; }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw std::invalid_argument(std::string("kernel backend '") +
                                backend_name(b) +
                                "' is not available on this machine");
  state().backend = b;
#if defined(FSOLINK_HAVE_AVX2)
  state().table = b == Backend::Avx2 ? &kAvx2 : &kScalar;
#else
  state().table = &kScalar;
#endif
}

void scale(const double* x, double* y, std::size_t n, double a) {
  state().table->scale(x, y, n, a);
}

void mzm_transfer(const double* drive, double* out, std::size_t n,
                  double peak_w, double floor_fraction) {
  state().table->mzm_transfer(drive, out, n, peak_w, floor_fraction);
}

void apd_response(const double* p_w, double* current_a, double* sigma_a,
                  std::size_t n, double amps_per_watt, double shot_a2_per_w,
                  double var_floor_a2) {
  state().table->apd_response(p_w, current_a, sigma_a, n, amps_per_watt,
                              shot_a2_per_w, var_floor_a2);
}

void complex_multiply(double* re, double* im, const double* h_re,
                      const double* h_im, std::size_t n) {
  state().table->complex_multiply(re, im, h_re, h_im, n);
}

}  // namespace fso::kernels
