// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/kernels.hpp"

namespace mirage::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend g_backend = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;

}  // namespace

bool avx2_supported() { return cpu_has_avx2(); }

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !cpu_has_avx2()) return;
  g_backend = b;
}

void conic_form_eval(const ConicForm& f, const double* xs, const double* ys,
                     double* out, std::size_t n) {
  if (g_backend == Backend::Avx2)
    detail::conic_form_eval_avx2(f, xs, ys, out, n);
  else
    detail::conic_form_eval_scalar(f, xs, ys, out, n);
}

void sector_margins(double fx, double fy, double cl, double sl, double ch,
                    double sh, const double* xs, const double* ys, double* lo,
                    double* hi, std::size_t n) {
  if (g_backend == Backend::Avx2)
    detail::sector_margins_avx2(fx, fy, cl, sl, ch, sh, xs, ys, lo, hi, n);
  else
    detail::sector_margins_scalar(fx, fy, cl, sl, ch, sh, xs, ys, lo, hi, n);
}

}  // namespace mirage::kernels
