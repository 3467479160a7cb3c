// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/symmetry3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "mirage/conics.hpp"

namespace mirage {

namespace {

constexpr double kAxisParallelEps = 1e-12;

/// Maps between the meridian plane's 2D frame and 3D space. The 2D frame is
/// always the base body's own coordinate system, so planar results transfer
/// verbatim; only the embedding of its two axes differs per variant.
struct MeridianFrame {
  Variant variant{Variant::AboutMajorAxis};
  Vec3 e_axis{};
  Vec3 e_rad{};
  Vec3 axis_origin{};
  double axis_x{0.0};

  Vec3 lift_point(Vec2 p) const {
    if (variant == Variant::AboutMajorAxis) {
      return Vec3{p.x, 0.0, 0.0} + p.y * e_rad;
    }
    return axis_origin + p.y * e_axis + (p.x - axis_x) * e_rad;
  }
  Vec3 lift_dir(Vec2 d) const {
    if (variant == Variant::AboutMajorAxis) {
      return d.x * e_axis + d.y * e_rad;
    }
    return d.y * e_axis + d.x * e_rad;
  }
  Vec2 drop_point(Vec3 p) const {
    if (variant == Variant::AboutMajorAxis) {
      return Vec2{p.x, dot(p, e_rad)};
    }
    const Vec3 rel = p - axis_origin;
    return Vec2{axis_x + dot(rel, e_rad), dot(rel, e_axis)};
  }
  Vec2 drop_dir(Vec3 d) const {
    if (variant == Variant::AboutMajorAxis) {
      return Vec2{dot(d, e_axis), dot(d, e_rad)};
    }
    return Vec2{dot(d, e_rad), dot(d, e_axis)};
  }
};

struct FrameSplit {
  bool degenerate{false};
  MeridianFrame frame;
  Vec2 dir2{};
  Vec3 plane_normal{0.0, 0.0, 1.0};
};

FrameSplit split_direction(const RevolutionBody& rb, Vec3 d) {
  FrameSplit fs;
  fs.frame.variant = rb.variant;
  fs.frame.e_axis = rb.axis_dir;
  fs.frame.axis_origin = rb.axis_origin;
  fs.frame.axis_x = rb.axis_origin.x;
  const double along = dot(d, rb.axis_dir);
  const Vec3 radial = d - along * rb.axis_dir;
  const double r = norm(radial);
  if (r <= kAxisParallelEps) {
    fs.degenerate = true;
    return fs;
  }
  fs.frame.e_rad = radial / r;
  fs.plane_normal = normalized(cross(rb.axis_dir, fs.frame.e_rad));
  fs.dir2 = rb.variant == Variant::AboutMajorAxis ? Vec2{along, r}
                                                  : Vec2{r, along};
  return fs;
}

/// Planar trace where each bounce also tests the axis-mirrored ray, because
/// the meridian section of the perpendicular-axis solid contains a mirrored
/// copy of the planar body across the rotation axis.
Trajectory trace_mirrored_scene(const Body2D& base, double axis_x, Vec2 origin,
                                Vec2 dir0, int max_bounces) {
  const double t_min = 1e-9 * base.diameter;
  const auto scene_hit = [&](Vec2 pos, Vec2 dir) -> std::optional<Hit> {
    auto direct = nearest_hit_edges(Ray2{pos, dir}, base.edges, t_min);
    const Ray2 mray{Vec2{2.0 * axis_x - pos.x, pos.y}, Vec2{-dir.x, dir.y}};
    auto mirrored = nearest_hit_edges(mray, base.edges, t_min);
    if (mirrored) {
      mirrored->point = Vec2{2.0 * axis_x - mirrored->point.x,
                             mirrored->point.y};
      mirrored->normal = Vec2{-mirrored->normal.x, mirrored->normal.y};
    }
    if (direct && mirrored) return direct->t <= mirrored->t ? direct : mirrored;
    return direct ? direct : mirrored;
  };

  Trajectory traj;
  traj.origin = origin;
  traj.initial_direction = normalized(dir0);
  traj.final_direction = traj.initial_direction;
  Vec2 pos = origin;
  Vec2 dir = traj.initial_direction;
  for (int bounce = 0; bounce < max_bounces; ++bounce) {
    const auto hit = scene_hit(pos, dir);
    if (!hit) {
      traj.status = TraceStatus::Escaped;
      traj.final_direction = dir;
      return traj;
    }
    if (hit->degenerate || std::fabs(dot(dir, hit->normal)) <= 1e-12) {
      traj.status = TraceStatus::DegenerateHit;
      traj.final_direction = dir;
      return traj;
    }
    const Vec2 out = reflect(dir, hit->normal);
    traj.reflections.push_back(
        Reflection{hit->edge_id, hit->cls, hit->point, dir, out, hit->normal});
    pos = hit->point;
    dir = out;
  }
  traj.final_direction = dir;
  traj.status = scene_hit(pos, dir) ? TraceStatus::MaxBouncesExceeded
                                    : TraceStatus::Escaped;
  return traj;
}

Trajectory3D lift_trajectory(const Trajectory& t2, const MeridianFrame& frame,
                             Vec3 origin3, Vec3 dir3, Vec3 plane_normal) {
  Trajectory3D out;
  out.origin = origin3;
  out.initial_direction = dir3;
  out.plane_normal = plane_normal;
  out.status = t2.status;
  out.reflections.reserve(t2.reflections.size());
  double dev = 0.0;
  for (const Reflection& r : t2.reflections) {
    const Vec3 p = frame.lift_point(r.point);
    out.reflections.push_back(Reflection3D{r.edge_id, r.cls, p,
                                           frame.lift_dir(r.incoming),
                                           frame.lift_dir(r.outgoing)});
    dev = std::max(dev, std::fabs(dot(p - origin3, plane_normal)));
  }
  out.final_direction = frame.lift_dir(t2.final_direction);
  out.max_plane_deviation = dev;
  return out;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::AboutMajorAxis: return "about-major-axis";
    case Variant::AboutPerpendicularAxisThroughF1: return "about-perp-axis";
  }
  return "unknown";
}

RevolutionBody revolve(const Body2D& base, Variant variant) {
  RevolutionBody rb;
  rb.base = base;
  rb.variant = variant;
  const auto [f1, f2] = foci(base.pair);
  rb.axis_origin = Vec3{f1.x, 0.0, 0.0};
  rb.axis_dir = variant == Variant::AboutMajorAxis ? Vec3{1.0, 0.0, 0.0}
                                                   : Vec3{0.0, 1.0, 0.0};
  return rb;
}

Trajectory3D trace3d_from_focus(const RevolutionBody& rb, Vec3 direction,
                                int max_bounces) {
  const Vec3 d = normalized(direction);
  const FrameSplit fs = split_direction(rb, d);
  const Vec3 origin3 = rb.axis_origin;
  if (fs.degenerate) {
    Trajectory3D out;
    out.origin = origin3;
    out.initial_direction = d;
    out.final_direction = d;
    out.plane_normal = fs.plane_normal;
    out.status = TraceStatus::DegenerateHit;
    return out;
  }
  const Vec2 origin2{rb.base.pair.c * -1.0, 0.0};
  Trajectory t2;
  if (rb.variant == Variant::AboutMajorAxis) {
    t2 = trace(rb.base, origin2, fs.dir2, max_bounces);
  } else {
    t2 = trace_mirrored_scene(rb.base, origin2.x, origin2, fs.dir2, max_bounces);
  }
  return lift_trajectory(t2, fs.frame, origin3, d, fs.plane_normal);
}

namespace {

enum class SurfaceKind { Spheroid, HyperboloidSheet, Cone };

struct Surface {
  SurfaceKind kind{SurfaceKind::Spheroid};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  int edge_id{0};
  double su{1.0};
  double sv{1.0};
  double cone_t2{0.0};
  double x_lo{0.0};
  double x_hi{0.0};
  double u0{0.0};
  double u1{0.0};
  double dilation{1.0};
};

struct QuadRoots {
  double t[2];
  int count{0};
};

QuadRoots solve_quadratic(double a, double b, double c) {
  QuadRoots out;
  const double scale = std::max({std::fabs(b), std::fabs(c), 1e-300});
  if (std::fabs(a) <= 1e-14 * scale) {
    if (std::fabs(b) > 0.0) out.t[out.count++] = -c / b;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  if (q == 0.0) {
    out.t[out.count++] = 0.0;
    return out;
  }
  out.t[out.count++] = q / a;
  out.t[out.count++] = c / q;
  return out;
}

double surface_param(const Surface& s, Vec3 q) {
  const double rho = std::hypot(q.y, q.z);
  if (s.kind == SurfaceKind::Spheroid) {
    return std::atan2(rho / s.sv, q.x / s.su);
  }
  return std::asinh(rho / s.sv);
}

bool surface_admits(const Surface& s, Vec3 q) {
  if (s.kind == SurfaceKind::Cone) {
    return q.x >= s.x_lo - 1e-9 && q.x <= s.x_hi + 1e-9;
  }
  if (s.kind == SurfaceKind::HyperboloidSheet && q.x <= 0.0) return false;
  const double u = surface_param(s, q);
  return u >= s.u0 - 1e-9 && u <= s.u1 + 1e-9;
}

Vec3 surface_normal(const Surface& s, Vec3 q, double cone_apex_x) {
  if (s.kind == SurfaceKind::Spheroid) {
    return normalized(Vec3{q.x / (s.su * s.su), q.y / (s.sv * s.sv),
                           q.z / (s.sv * s.sv)});
  }
  if (s.kind == SurfaceKind::HyperboloidSheet) {
    return normalized(Vec3{q.x / (s.su * s.su), -q.y / (s.sv * s.sv),
                           -q.z / (s.sv * s.sv)});
  }
  return normalized(
      Vec3{s.cone_t2 * (q.x - cone_apex_x), -q.y, -q.z});
}

struct QuadricHit {
  double t{std::numeric_limits<double>::infinity()};
  Vec3 point{};
  Vec3 normal{};
  EdgeClass cls{EdgeClass::EllipseArcB1};
  int edge_id{0};
  bool valid{false};
};

QuadricHit nearest_quadric_hit(const std::vector<Surface>& surfaces,
                               Vec3 apex, Vec3 pos, Vec3 dir, double t_min) {
  QuadricHit best;
  for (const Surface& s : surfaces) {
    const double inv = 1.0 / s.dilation;
    const Vec3 q0 = apex + inv * (pos - apex);
    const Vec3 w = inv * dir;
    double qa = 0.0;
    double qb = 0.0;
    double qc = 0.0;
    if (s.kind == SurfaceKind::Cone) {
      const double sx = q0.x - apex.x;
      qa = s.cone_t2 * w.x * w.x - w.y * w.y - w.z * w.z;
      qb = 2.0 * (s.cone_t2 * sx * w.x - q0.y * w.y - q0.z * w.z);
      qc = s.cone_t2 * sx * sx - q0.y * q0.y - q0.z * q0.z;
    } else {
      const double ku = 1.0 / (s.su * s.su);
      const double kv = (s.kind == SurfaceKind::Spheroid ? 1.0 : -1.0) /
                        (s.sv * s.sv);
      qa = ku * w.x * w.x + kv * (w.y * w.y + w.z * w.z);
      qb = 2.0 * (ku * q0.x * w.x + kv * (q0.y * w.y + q0.z * w.z));
      qc = ku * q0.x * q0.x + kv * (q0.y * q0.y + q0.z * q0.z) - 1.0;
    }
    const QuadRoots roots = solve_quadratic(qa, qb, qc);
    for (int i = 0; i < roots.count; ++i) {
      const double t = roots.t[i];
      if (t <= t_min || t >= best.t) continue;
      const Vec3 q = q0 + t * w;
      if (!surface_admits(s, q)) continue;
      best.t = t;
      best.point = pos + t * dir;
      best.normal = surface_normal(s, q, apex.x);
      best.cls = s.cls;
      best.edge_id = s.edge_id;
      best.valid = true;
    }
  }
  return best;
}

std::vector<Surface> build_surfaces(const RevolutionBody& rb, double b2_scale) {
  const Body2D& base = rb.base;
  const double lambda = base.lambda;
  std::vector<Surface> out;
  const Edge* ell = nullptr;
  const Edge* hyp = nullptr;
  const Edge* rad = nullptr;
  for (const Edge& e : base.edges) {
    const Vec2 probe = e.is_arc ? e.arc.p0 : e.seg.p0;
    if (probe.y < 0.0) continue;
    if (e.cls == EdgeClass::EllipseArcB1) ell = &e;
    if (e.cls == EdgeClass::HyperbolaArcB1) hyp = &e;
    if (e.cls == EdgeClass::RadialSegmentB1) rad = &e;
  }
  if (!ell || !hyp || !rad) {
    throw std::logic_error("quadric_trace: body lacks upper inner edges");
  }
  const double sv_e = base.pair.b * std::sqrt(b2_scale);
  const double tan_phi = std::tan(base.phi_B);

  const auto add_pair = [&](const Surface& inner, EdgeClass outer_cls,
                            int outer_id) {
    out.push_back(inner);
    Surface dilated = inner;
    dilated.cls = outer_cls;
    dilated.edge_id = outer_id;
    dilated.dilation = lambda;
    out.push_back(dilated);
  };

  Surface se;
  se.kind = SurfaceKind::Spheroid;
  se.cls = EdgeClass::EllipseArcB1;
  se.edge_id = ell->id;
  se.su = base.pair.a;
  se.sv = sv_e;
  se.u0 = ell->arc.u0;
  se.u1 = ell->arc.u1;
  add_pair(se, EdgeClass::EllipseArcB2, ell->id + 6);

  Surface sh;
  sh.kind = SurfaceKind::HyperboloidSheet;
  sh.cls = EdgeClass::HyperbolaArcB1;
  sh.edge_id = hyp->id;
  sh.su = base.pair.alpha;
  sh.sv = base.pair.beta;
  sh.u0 = hyp->arc.u0;
  sh.u1 = hyp->arc.u1;
  add_pair(sh, EdgeClass::HyperbolaArcB2, hyp->id + 6);

  Surface sc;
  sc.kind = SurfaceKind::Cone;
  sc.cls = EdgeClass::RadialSegmentB1;
  sc.edge_id = rad->id;
  sc.cone_t2 = tan_phi * tan_phi;
  sc.x_lo = std::min(rad->seg.p0.x, rad->seg.p1.x);
  sc.x_hi = std::max(rad->seg.p0.x, rad->seg.p1.x);
  add_pair(sc, EdgeClass::RadialSegmentB2, rad->id + 6);
  return out;
}

}  // namespace

Trajectory3D quadric_trace(const RevolutionBody& rb, Vec3 direction,
                           double b2_scale, int max_bounces) {
  if (rb.variant != Variant::AboutMajorAxis) {
    throw std::invalid_argument(
        "quadric_trace: only the major-axis variant revolves to quadrics");
  }
  if (max_bounces < 1) {
    throw std::invalid_argument("quadric_trace: max_bounces must be at least 1");
  }
  const Vec3 d = normalized(direction);
  const Vec3 apex = rb.axis_origin;
  const std::vector<Surface> surfaces = build_surfaces(rb, b2_scale);
  const double t_min = 1e-9 * rb.base.diameter;

  Trajectory3D out;
  out.origin = apex;
  out.initial_direction = d;
  out.final_direction = d;
  const Vec3 radial{0.0, d.y, d.z};
  const double r = norm(radial);
  out.plane_normal =
      r > kAxisParallelEps ? normalized(cross(rb.axis_dir, radial / r))
                           : Vec3{0.0, 0.0, 1.0};
  if (r <= kAxisParallelEps) {
    out.status = TraceStatus::DegenerateHit;
    return out;
  }

  Vec3 pos = apex;
  Vec3 dir = d;
  for (int bounce = 0; bounce < max_bounces; ++bounce) {
    const QuadricHit hit = nearest_quadric_hit(surfaces, apex, pos, dir, t_min);
    if (!hit.valid) {
      out.status = TraceStatus::Escaped;
      out.final_direction = dir;
      break;
    }
    const double k = dot(dir, hit.normal);
    if (std::fabs(k) <= 1e-12) {
      out.status = TraceStatus::DegenerateHit;
      out.final_direction = dir;
      break;
    }
    const Vec3 next = normalized(dir - (2.0 * k) * hit.normal);
    out.reflections.push_back(
        Reflection3D{hit.edge_id, hit.cls, hit.point, dir, next});
    out.max_plane_deviation =
        std::max(out.max_plane_deviation,
                 std::fabs(dot(hit.point - apex, out.plane_normal)));
    pos = hit.point;
    dir = next;
    if (bounce == max_bounces - 1) {
      out.final_direction = dir;
      out.status = nearest_quadric_hit(surfaces, apex, pos, dir, t_min).valid
                       ? TraceStatus::MaxBouncesExceeded
                       : TraceStatus::Escaped;
    }
  }
  if (out.reflections.empty()) out.final_direction = d;
  return out;
}

Trajectory3D quadric_cross_check(const RevolutionBody& rb, Vec3 direction) {
  return quadric_trace(rb, direction, 1.0, 16);
}

double max_point_discrepancy(const Trajectory3D& u, const Trajectory3D& v) {
  if (u.reflections.size() != v.reflections.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (size_t i = 0; i < u.reflections.size(); ++i) {
    worst = std::max(worst, dist(u.reflections[i].point, v.reflections[i].point));
  }
  return worst;
}

RayVerdict verify_direction_3d(const RevolutionBody& rb, Vec3 direction,
                               double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument(
        "verify_direction_3d: tolerance must be positive");
  }
  const Vec3 d = normalized(direction);
  const FrameSplit fs = split_direction(rb, d);

  RayVerdict rv;
  rv.angle = fs.degenerate ? 0.0 : std::atan2(fs.dir2.y, fs.dir2.x);
  if (fs.degenerate) {
    rv.verdict = Verdict::Degenerate;
    rv.note = "direction parallel to the rotation axis";
    return rv;
  }

  const Trajectory3D t3 = trace3d_from_focus(rb, d, 16);
  rv.bounce_count = static_cast<int>(t3.reflections.size());
  rv.classes.reserve(t3.reflections.size());
  for (const Reflection3D& r : t3.reflections) rv.classes.push_back(r.cls);
  rv.planarity = t3.max_plane_deviation;

  if (t3.status == TraceStatus::DegenerateHit) {
    rv.verdict = Verdict::Degenerate;
    rv.note = "tangent or endpoint incidence";
    return rv;
  }
  if (t3.status == TraceStatus::MaxBouncesExceeded) {
    rv.verdict = Verdict::Fail;
    rv.note = "trajectory did not escape within the bounce cap";
    return rv;
  }
  if (t3.reflections.empty()) {
    rv.verdict = Verdict::Miss;
    return rv;
  }

  const Vec3 origin3 = rb.axis_origin;
  rv.collinearity_error = angle_between(t3.final_direction, d);
  const Vec3 exit3 = t3.reflections.back().point;
  rv.exit_line_distance = norm(cross(exit3 - origin3, t3.final_direction));

  Trajectory t2;
  t2.origin = Vec2{-rb.base.pair.c, 0.0};
  t2.initial_direction = fs.dir2;
  t2.final_direction = fs.frame.drop_dir(t3.final_direction);
  t2.status = t3.status;
  for (const Reflection3D& r : t3.reflections) {
    t2.reflections.push_back(Reflection{
        r.edge_id, r.cls, fs.frame.drop_point(r.point),
        fs.frame.drop_dir(r.incoming), fs.frame.drop_dir(r.outgoing), Vec2{}});
  }
  rv.identity = check_identity_chain(t2, rb.base);
  if (!rv.identity.structural_ok) {
    rv.verdict = Verdict::Fail;
    rv.note = rv.identity.structural_note;
    return rv;
  }

  const double len_tol = tolerance * rb.base.pair.a;
  const double proj_entry = dot(t3.reflections.front().point - origin3, d);
  const double proj_exit = dot(exit3 - origin3, d);
  const bool forward = proj_entry > 0.0 && proj_exit > proj_entry &&
                       dot(t3.final_direction, d) > 0.0;
  bool hull_ok = true;
  for (const Reflection& r : t2.reflections) {
    if (!point_in_convex_polygon(rb.base.hull, r.point,
                                 1e-9 * rb.base.pair.a)) {
      hull_ok = false;
      break;
    }
  }

  if (rv.planarity >= len_tol) {
    rv.verdict = Verdict::Fail;
    rv.note = "trajectory left the meridian plane";
  } else if (!forward) {
    rv.verdict = Verdict::Fail;
    rv.note = "exit is not forward along the entry ray";
  } else if (!hull_ok) {
    rv.verdict = Verdict::Fail;
    rv.note = "broken line leaves the convex hull";
  } else if (rv.collinearity_error >= tolerance) {
    rv.verdict = Verdict::Fail;
    rv.note = "exit direction not collinear with entry";
  } else if (rv.exit_line_distance >= len_tol) {
    rv.verdict = Verdict::Fail;
    rv.note = "exit line misses the emission focus";
  } else if (!rv.identity.pass(tolerance)) {
    rv.verdict = Verdict::Fail;
    rv.note = "identity chain residual above tolerance";
  } else {
    rv.verdict = Verdict::InvisiblePass;
  }
  return rv;
}

VerificationReport verify_fan_3d(const RevolutionBody& rb, int n,
                                 double tolerance, std::uint64_t seed,
                                 int threads) {
  if (n < 1) throw std::invalid_argument("verify_fan_3d: n must be at least 1");
  if (threads < 1) {
    throw std::invalid_argument("verify_fan_3d: threads must be at least 1");
  }

  VerificationReport rep;
  rep.a = rb.base.pair.a;
  rep.b = rb.base.pair.b;
  rep.phi_B = rb.base.phi_B;
  rep.lambda = rb.base.lambda;
  rep.ray_count = n;
  rep.tolerance = tolerance;
  rep.seed = seed;
  rep.threads = threads;
  rep.variant = variant_name(rb.variant);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * kPi);
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(n));
  const double lo = rb.base.phi_H;
  const double hi = rb.base.phi_B;
  long long guard = 0;
  const long long max_draws = 100000LL * n + 1000000LL;
  while (static_cast<int>(dirs.size()) < n) {
    if (++guard > max_draws) {
      throw std::runtime_error("verify_fan_3d: direction sampling stalled");
    }
    const double z = unit(rng);
    const double phi = azimuth(rng);
    const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 d{rxy * std::cos(phi), rxy * std::sin(phi), z};
    const double along = dot(d, rb.axis_dir);
    const double r = norm(d - along * rb.axis_dir);
    if (r <= kAxisParallelEps) continue;
    const double ang = rb.variant == Variant::AboutMajorAxis
                           ? std::atan2(r, along)
                           : std::atan2(along, r);
    if (std::fabs(ang) <= lo || std::fabs(ang) >= hi) continue;
    dirs.push_back(d);
  }

  std::vector<RayVerdict> verdicts(dirs.size());
  const auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      verdicts[i] = verify_direction_3d(rb, dirs[i], tolerance);
    }
  };
  const size_t total = dirs.size();
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), total);
  if (nthreads <= 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const size_t chunk = (total + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
      const size_t begin = t * chunk;
      const size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  for (const RayVerdict& rv : verdicts) fold_verdict(rep, rv);
  rep.overall_pass =
      rep.fail_count == 0 && rep.degenerate_count * 1000 < rep.ray_count;
  return rep;
}

}  // namespace mirage
