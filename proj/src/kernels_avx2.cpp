// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace mirage::kernels::detail {

// Four doubles per step; the remainder falls through to the scalar kernel so
// the two backends agree bit for bit on any length.

void conic_form_eval_avx2(const ConicForm& f, const double* xs,
                          const double* ys, double* out, std::size_t n) {
  const __m256d kx = _mm256_set1_pd(f.kx);
  const __m256d ky = _mm256_set1_pd(f.ky);
  const __m256d s = _mm256_set1_pd(f.s);
  const __m256d tx = _mm256_set1_pd(f.tx);
  const __m256d ty = _mm256_set1_pd(f.ty);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d xb = _mm256_add_pd(_mm256_mul_pd(x, s), tx);
    const __m256d yb = _mm256_add_pd(_mm256_mul_pd(y, s), ty);
    const __m256d vx = _mm256_mul_pd(kx, _mm256_mul_pd(xb, xb));
    const __m256d vy = _mm256_mul_pd(ky, _mm256_mul_pd(yb, yb));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_add_pd(vx, vy), one));
  }
  if (i < n) conic_form_eval_scalar(f, xs + i, ys + i, out + i, n - i);
}

void sector_margins_avx2(double fx, double fy, double cl, double sl, double ch,
                         double sh, const double* xs, const double* ys,
                         double* lo, double* hi, std::size_t n) {
  const __m256d vfx = _mm256_set1_pd(fx);
  const __m256d vfy = _mm256_set1_pd(fy);
  const __m256d vcl = _mm256_set1_pd(cl);
  const __m256d vsl = _mm256_set1_pd(sl);
  const __m256d vch = _mm256_set1_pd(ch);
  const __m256d vsh = _mm256_set1_pd(sh);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d dx = _mm256_sub_pd(x, vfx);
    const __m256d dy = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(y, vfy));
    const __m256d mlo =
        _mm256_sub_pd(_mm256_mul_pd(dy, vcl), _mm256_mul_pd(dx, vsl));
    const __m256d mhi =
        _mm256_sub_pd(_mm256_mul_pd(dx, vsh), _mm256_mul_pd(dy, vch));
    _mm256_storeu_pd(lo + i, mlo);
    _mm256_storeu_pd(hi + i, mhi);
  }
  if (i < n)
    sector_margins_scalar(fx, fy, cl, sl, ch, sh, xs + i, ys + i, lo + i,
                          hi + i, n - i);
}

}  // namespace mirage::kernels::detail

#else  // !__AVX2__

namespace mirage::kernels::detail {

void conic_form_eval_avx2(const ConicForm& f, const double* xs,
                          const double* ys, double* out, std::size_t n) {
  conic_form_eval_scalar(f, xs, ys, out, n);
}

void sector_margins_avx2(double fx, double fy, double cl, double sl, double ch,
                         double sh, const double* xs, const double* ys,
                         double* lo, double* hi, std::size_t n) {
  sector_margins_scalar(fx, fy, cl, sl, ch, sh, xs, ys, lo, hi, n);
}

}  // namespace mirage::kernels::detail

#endif
