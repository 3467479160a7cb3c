// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/invisibility.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "mirage/conics.hpp"

namespace mirage {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InvisiblePass: return "invisible_pass";
    case Verdict::Miss: return "miss";
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Fail: return "fail";
  }
  return "unknown";
}

RayVerdict verify_ray(const Body2D& body, double angle, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("verify_ray: tolerance must be positive");
  }
  RayVerdict rv;
  rv.angle = angle;
  const auto [f1, f2] = foci(body.pair);
  const Vec2 dir{std::cos(angle), std::sin(angle)};
  const Trajectory traj = trace(body, f1, dir, 16);

  rv.bounce_count = static_cast<int>(traj.reflections.size());
  rv.classes.reserve(traj.reflections.size());
  for (const Reflection& r : traj.reflections) rv.classes.push_back(r.cls);

  if (traj.status == TraceStatus::DegenerateHit) {
    rv.verdict = Verdict::Degenerate;
    rv.note = "tangent or endpoint incidence";
    return rv;
  }
  if (traj.status == TraceStatus::MaxBouncesExceeded) {
    rv.verdict = Verdict::Fail;
    rv.note = "trajectory did not escape within the bounce cap";
    return rv;
  }
  if (traj.reflections.empty()) {
    rv.verdict = Verdict::Miss;
    return rv;
  }

  rv.collinearity_error = angle_between(traj.final_direction, dir);
  const Vec2 exit_point = traj.reflections.back().point;
  rv.exit_line_distance = std::fabs(cross(exit_point - f1, traj.final_direction));
  rv.identity = check_identity_chain(traj, body);

  if (!rv.identity.structural_ok) {
    rv.verdict = Verdict::Fail;
    rv.note = rv.identity.structural_note;
    return rv;
  }

  const double len_tol = tolerance * body.pair.a;
  const double proj_entry = dot(traj.reflections.front().point - f1, dir);
  const double proj_exit = dot(exit_point - f1, dir);
  const bool forward = proj_entry > 0.0 && proj_exit > proj_entry &&
                       dot(traj.final_direction, dir) > 0.0;

  bool hull_ok = true;
  for (const Reflection& r : traj.reflections) {
    if (!point_in_convex_polygon(body.hull, r.point, 1e-9 * body.pair.a)) {
      hull_ok = false;
      break;
    }
  }

  if (!forward) {
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

namespace {

std::vector<double> fan_angles(const Body2D& body, int n, std::uint64_t seed) {
  std::vector<double> angles;
  angles.reserve(static_cast<size_t>(n));
  const int half = n / 2;
  const double lo = body.phi_H;
  const double hi = body.phi_B;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.4, 0.4);
  if (half > 0) {
    const double w = (hi - lo) / half;
    for (int i = 0; i < half; ++i) {
      angles.push_back(lo + (i + 0.5 + jitter(rng)) * w);
    }
    for (int i = 0; i < half; ++i) {
      angles.push_back(-(lo + (i + 0.5 + jitter(rng)) * w));
    }
  }
  if (n % 2 == 1) angles.push_back(0.5 * body.phi_H);
  return angles;
}

}  // namespace

void fold_verdict(VerificationReport& rep, const RayVerdict& rv) {
  SectorStats& sec = rv.angle >= 0.0 ? rep.upper : rep.lower;
  sec.rays += 1;
  switch (rv.verdict) {
    case Verdict::InvisiblePass:
      rep.pass_count += 1;
      sec.pass += 1;
      break;
    case Verdict::Miss:
      rep.miss_count += 1;
      sec.miss += 1;
      break;
    case Verdict::Degenerate:
      rep.degenerate_count += 1;
      sec.degenerate += 1;
      rep.degenerate_angles.push_back(rv.angle);
      break;
    case Verdict::Fail:
      rep.fail_count += 1;
      sec.fail += 1;
      break;
  }
  if (rv.bounce_count > 0) {
    rep.max_collinearity_error =
        std::max(rep.max_collinearity_error, rv.collinearity_error);
    rep.max_exit_line_distance =
        std::max(rep.max_exit_line_distance, rv.exit_line_distance);
    sec.max_collinearity = std::max(sec.max_collinearity, rv.collinearity_error);
  }
  if (rv.identity.structural_ok) {
    rep.max_identity_residual =
        std::max(rep.max_identity_residual, rv.identity.max_residual());
  }
  rep.max_planarity = std::max(rep.max_planarity, rv.planarity);
}

VerificationReport verify_fan(const Body2D& body, int n, double tolerance,
                              std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("verify_fan: n must be at least 1");
  if (threads < 1) {
    throw std::invalid_argument("verify_fan: threads must be at least 1");
  }

  VerificationReport rep;
  rep.a = body.pair.a;
  rep.b = body.pair.b;
  rep.phi_B = body.phi_B;
  rep.lambda = body.lambda;
  rep.ray_count = n;
  rep.tolerance = tolerance;
  rep.seed = seed;
  rep.threads = threads;

  const std::vector<double> angles = fan_angles(body, n, seed);
  std::vector<RayVerdict> verdicts(angles.size());

  const auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      verdicts[i] = verify_ray(body, angles[i], tolerance);
    }
  };
  const size_t total = angles.size();
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
