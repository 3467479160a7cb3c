// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace mirage::kernels {

/// Flattened implicit conic F(p) = kx*(x*s + tx)^2 + ky*(y*s + ty)^2 - 1.
/// The (s, tx, ty) affine pulls a point back through the dilation about a
/// stated center, so dilated conics evaluate through the same five numbers.
struct ConicForm {
  double kx{1.0};
  double ky{1.0};
  double s{1.0};
  double tx{0.0};
  double ty{0.0};
};

enum class Backend { Scalar, Avx2 };

/// Backend active for the batch kernels. Defaults to the widest instruction
/// set the CPU reports at startup. set_backend is not synchronized against
/// concurrent kernel calls; select the backend before spawning workers.
Backend active_backend();
void set_backend(Backend b);
bool avx2_supported();

/// out[i] = F(xs[i], ys[i]) for the given form.
void conic_form_eval(const ConicForm& f, const double* xs, const double* ys,
                     double* out, std::size_t n);

/// Sector membership margins about a focus at (fx, fy), with the y offset
/// folded to |y - fy| so one call covers both mirror-image sectors. Both
/// outputs are signed lengths: lo[i] >= 0 iff the point's focal angle is at
/// least the lower bound (direction (cl, sl)), hi[i] >= 0 iff it is at most
/// the upper bound (direction (ch, sh)).
void sector_margins(double fx, double fy, double cl, double sl, double ch,
                    double sh, const double* xs, const double* ys, double* lo,
                    double* hi, std::size_t n);

namespace detail {
void conic_form_eval_scalar(const ConicForm& f, const double* xs,
                            const double* ys, double* out, std::size_t n);
void sector_margins_scalar(double fx, double fy, double cl, double sl,
                           double ch, double sh, const double* xs,
                           const double* ys, double* lo, double* hi,
                           std::size_t n);
void conic_form_eval_avx2(const ConicForm& f, const double* xs,
                          const double* ys, double* out, std::size_t n);
void sector_margins_avx2(double fx, double fy, double cl, double sl, double ch,
                         double sh, const double* xs, const double* ys,
                         double* lo, double* hi, std::size_t n);
}  // namespace detail

}  // namespace mirage::kernels
