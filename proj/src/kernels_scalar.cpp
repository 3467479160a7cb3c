// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "mirage/kernels.hpp"

namespace mirage::kernels::detail {

void conic_form_eval_scalar(const ConicForm& f, const double* xs,
                            const double* ys, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xb = xs[i] * f.s + f.tx;
    const double yb = ys[i] * f.s + f.ty;
    out[i] = f.kx * (xb * xb) + f.ky * (yb * yb) - 1.0;
  }
}

void sector_margins_scalar(double fx, double fy, double cl, double sl,
                           double ch, double sh, const double* xs,
                           const double* ys, double* lo, double* hi,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - fx;
    const double dy = std::fabs(ys[i] - fy);
    lo[i] = dy * cl - dx * sl;
    hi[i] = dx * sh - dy * ch;
  }
}

}  // namespace mirage::kernels::detail
