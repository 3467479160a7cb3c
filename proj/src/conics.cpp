// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/conics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mirage {

namespace {

double rel_gap(double lhs, double rhs) {
  const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  return std::fabs(lhs - rhs) / scale;
}

}  // namespace

ConfocalPair make_confocal_pair(double a, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  if (!(a > b)) throw std::invalid_argument("a must exceed b");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("semi-axes must be finite");
  ConfocalPair pair;
  pair.a = a;
  pair.b = b;
  pair.c = std::sqrt(a * a - b * b);
  pair.alpha = pair.c * pair.c / a;
  pair.beta = b * pair.c / a;
  if (rel_gap(pair.c * pair.c, a * a - b * b) > 1e-12 ||
      rel_gap(pair.c * pair.c, pair.alpha * pair.alpha + pair.beta * pair.beta) >
          1e-12 ||
      rel_gap(1.0 / (pair.beta * pair.beta) - 1.0 / (b * b),
              1.0 / (pair.c * pair.c)) > 1e-12)
    throw std::logic_error("confocal pair derivation out of tolerance");
  return pair;
}

std::pair<Vec2, Vec2> foci(const ConfocalPair& pair) {
  return {Vec2{-pair.c, 0.0}, Vec2{pair.c, 0.0}};
}

kernels::ConicForm conic_form_of(const Conic& conic) {
  kernels::ConicForm f;
  f.kx = 1.0 / (conic.semi_u * conic.semi_u);
  f.ky = 1.0 / (conic.semi_v * conic.semi_v);
  if (conic.kind == ConicKind::HyperbolaRightBranch) f.ky = -f.ky;
  f.s = 1.0 / conic.dilation;
  f.tx = conic.dilation_center.x * (1.0 - f.s);
  f.ty = conic.dilation_center.y * (1.0 - f.s);
  return f;
}

double conic_eval(const Conic& conic, Vec2 p) {
  const kernels::ConicForm f = conic_form_of(conic);
  const double xb = p.x * f.s + f.tx;
  const double yb = p.y * f.s + f.ty;
  return f.kx * xb * xb + f.ky * yb * yb - 1.0;
}

Vec2 conic_gradient(const Conic& conic, Vec2 p) {
  const kernels::ConicForm f = conic_form_of(conic);
  const double xb = p.x * f.s + f.tx;
  const double yb = p.y * f.s + f.ty;
  return {2.0 * f.kx * xb * f.s, 2.0 * f.ky * yb * f.s};
}

Vec2 normal_at(const Conic& conic, Vec2 p) {
  const Vec2 g = conic_gradient(conic, p);
  const double gn = norm(g);
  if (!(gn > 0.0)) throw std::invalid_argument("gradient vanishes at point");
  const double offset = std::fabs(conic_eval(conic, p)) / gn;
  if (offset > 1e-9 * conic.semi_u)
    throw std::invalid_argument("point is not on the conic");
  Vec2 n = g / gn;
  if (conic.kind == ConicKind::HyperbolaRightBranch) n = -1.0 * n;
  return n;
}

RayHits ray_conic_intersections(const Ray2& ray, const Conic& conic) {
  const kernels::ConicForm f = conic_form_of(conic);
  const double X0 = ray.origin.x * f.s + f.tx;
  const double Y0 = ray.origin.y * f.s + f.ty;
  const double Xd = ray.dir.x * f.s;
  const double Yd = ray.dir.y * f.s;
  const double A = f.kx * Xd * Xd + f.ky * Yd * Yd;
  const double B = 2.0 * (f.kx * X0 * Xd + f.ky * Y0 * Yd);
  const double C = f.kx * X0 * X0 + f.ky * Y0 * Y0 - 1.0;

  double roots[2];
  int nroots = 0;
  bool tangent = false;
  const double lin_scale = std::max({std::fabs(B), std::fabs(C), 1e-300});
  if (std::fabs(A) <= 1e-14 * lin_scale) {
    // Direction along an asymptote: the quadratic degenerates to linear.
    if (std::fabs(B) > 0.0) roots[nroots++] = -C / B;
  } else {
    const double disc = B * B - 4.0 * A * C;
    const double coeff_scale = std::max(B * B, std::fabs(4.0 * A * C));
    if (std::fabs(disc) <= 1e-12 * coeff_scale) {
      tangent = true;
      roots[nroots++] = -B / (2.0 * A);
    } else if (disc > 0.0) {
      const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
      if (q != 0.0) {
        roots[nroots++] = q / A;
        roots[nroots++] = C / q;
      } else {
        const double r = std::sqrt(-C / A);
        roots[nroots++] = r;
        roots[nroots++] = -r;
      }
    }
  }

  RayHits hits;
  hits.tangent = tangent;
  for (int i = 0; i < nroots; ++i) {
    double t = roots[i];
    // One Newton step on F(t) cancels the cancellation error of nearly
    // tangent solves.
    const double fp = 2.0 * A * t + B;
    if (std::fabs(fp) > 0.0) {
      const double fv = (A * t + B) * t + C;
      t -= fv / fp;
    }
    if (!(t > 0.0)) continue;
    if (conic.kind == ConicKind::HyperbolaRightBranch) {
      const double xb = (ray.origin.x + t * ray.dir.x) * f.s + f.tx;
      if (!(xb > 0.0)) continue;
    }
    hits.t[hits.count++] = t;
  }
  if (hits.count == 2 && hits.t[0] > hits.t[1]) std::swap(hits.t[0], hits.t[1]);
  return hits;
}

Vec2 ellipse_hyperbola_intersection(const ConfocalPair& pair) {
  const Vec2 h{pair.c, pair.b * pair.b / pair.a};
  const Conic e{ConicKind::Ellipse, pair.a, pair.b, {}, 1.0};
  const Conic hy{ConicKind::HyperbolaRightBranch, pair.alpha, pair.beta, {}, 1.0};
  if (std::fabs(conic_eval(e, h)) > 1e-12 || std::fabs(conic_eval(hy, h)) > 1e-12)
    throw std::logic_error("intersection point drifted off the curves");
  return h;
}

double conic_param(const Conic& conic, Vec2 p) {
  const double s = 1.0 / conic.dilation;
  const double xb = conic.dilation_center.x + (p.x - conic.dilation_center.x) * s;
  const double yb = conic.dilation_center.y + (p.y - conic.dilation_center.y) * s;
  if (conic.kind == ConicKind::Ellipse)
    return std::atan2(yb / conic.semi_v, xb / conic.semi_u);
  return std::asinh(yb / conic.semi_v);
}

Vec2 conic_point(const Conic& conic, double u) {
  Vec2 base;
  if (conic.kind == ConicKind::Ellipse)
    base = {conic.semi_u * std::cos(u), conic.semi_v * std::sin(u)};
  else
    base = {conic.semi_u * std::cosh(u), conic.semi_v * std::sinh(u)};
  return conic.dilation_center + conic.dilation * (base - conic.dilation_center);
}

}  // namespace mirage
