// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mirage/conics.hpp"
#include "oracle_helpers.hpp"

using namespace mirage;

namespace {

Vec2 mirror(Vec2 d, Vec2 n) { return d - 2.0 * dot(d, n) * n; }

double line_point_distance(Vec2 on_line, Vec2 dir, Vec2 p) {
  return std::fabs(cross(p - on_line, normalized(dir)));
}

}  // namespace

TEST_CASE("confocal pair closed forms and defining relations") {
  const ConfocalPair p1 = make_confocal_pair(2.0, std::sqrt(3.0));
  CHECK(p1.c == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p1.alpha == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p1.beta == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));

  const ConfocalPair p2 = make_confocal_pair(std::sqrt(2.0), 1.0);
  CHECK(p2.c == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p2.alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p2.beta == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  std::mt19937_64 rng(101);
  oracle::BodySampler sampler(101);
  for (int i = 0; i < 200; ++i) {
    const ConfocalPair p = sampler.next_pair();
    CHECK(oracle::rel_err(p.c * p.c, p.a * p.a - p.b * p.b) < 1e-12);
    CHECK(oracle::rel_err(p.c * p.c, p.alpha * p.alpha + p.beta * p.beta) <
          1e-12);
    CHECK(oracle::rel_err(1.0 / (p.beta * p.beta) - 1.0 / (p.b * p.b),
                          1.0 / (p.c * p.c)) < 1e-12);
    CHECK(oracle::rel_err(p.alpha, p.c * p.c / p.a) < 1e-12);
    CHECK(oracle::rel_err(p.beta * p.beta,
                          p.b * p.b * p.c * p.c / (p.a * p.a)) < 1e-12);
  }
}

TEST_CASE("degenerate axis choices are rejected") {
  CHECK_THROWS_AS(make_confocal_pair(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_confocal_pair(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_confocal_pair(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_confocal_pair(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("foci sit at plus and minus c on the major axis") {
  for (const ConfocalPair& p :
       {make_confocal_pair(2.0, std::sqrt(3.0)),
        make_confocal_pair(std::sqrt(2.0), 1.0)}) {
    const auto [f1, f2] = foci(p);
    CHECK(f1.x == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(f1.y == 0.0);
    CHECK(f2.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f2.y == 0.0);
  }
  oracle::BodySampler sampler(5);
  for (int i = 0; i < 50; ++i) {
    const auto [f1, f2] = foci(sampler.next_pair());
    CHECK(norm(0.5 * (f1 + f2)) < 1e-15);
  }
}

TEST_CASE("normals at the axis vertices") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
  const Conic hyper{ConicKind::HyperbolaRightBranch, p.alpha, p.beta, {0, 0},
                    1.0};

  const Vec2 n1 = normal_at(ellipse, {2.0, 0.0});
  CHECK(n1.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(n1.y) < 1e-14);

  const Vec2 n2 = normal_at(ellipse, {0.0, std::sqrt(3.0)});
  CHECK(std::fabs(n2.x) < 1e-14);
  CHECK(n2.y == doctest::Approx(1.0).epsilon(1e-14));

  const Vec2 n3 = normal_at(hyper, {0.5, 0.0});
  CHECK(n3.x == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::fabs(n3.y) < 1e-14);

  CHECK_THROWS_AS(normal_at(ellipse, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(normal_at(hyper, {5.0, 0.1}), std::invalid_argument);
}

TEST_CASE("ray intersection worked examples") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
  const Conic hyper{ConicKind::HyperbolaRightBranch, p.alpha, p.beta, {0, 0},
                    1.0};

  const RayHits h1 =
      ray_conic_intersections(make_ray({0.0, 0.0}, {1.0, 0.0}), ellipse);
  REQUIRE(h1.count == 1);
  CHECK(h1.t[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK_FALSE(h1.tangent);

  const RayHits h2 =
      ray_conic_intersections(make_ray({-1.0, 0.0}, {1.0, 0.0}), hyper);
  REQUIRE(h2.count == 1);
  CHECK(h2.t[0] == doctest::Approx(1.5).epsilon(1e-13));

  const RayHits h3 =
      ray_conic_intersections(make_ray({0.0, 3.0}, {0.0, -1.0}), ellipse);
  REQUIRE(h3.count == 2);
  CHECK(h3.t[0] == doctest::Approx(oracle::kMinorRayT0).epsilon(1e-13));
  CHECK(h3.t[1] == doctest::Approx(oracle::kMinorRayT1).epsilon(1e-13));
  CHECK(h3.t[0] < h3.t[1]);
}

TEST_CASE("grazing ray reports one flagged root") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
  // Horizontal line at the co-vertex height touches the ellipse once.
  const RayHits h = ray_conic_intersections(
      make_ray({-3.0, std::sqrt(3.0)}, {1.0, 0.0}), ellipse);
  REQUIRE(h.count == 1);
  CHECK(h.tangent);
  CHECK(h.t[0] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("curve intersection point H") {
  const ConfocalPair p1 = oracle::canonical_pair();
  const Vec2 h1 = ellipse_hyperbola_intersection(p1);
  CHECK(h1.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h1.y == doctest::Approx(1.5).epsilon(1e-14));

  const ConfocalPair p2 = make_confocal_pair(std::sqrt(2.0), 1.0);
  const Vec2 h2 = ellipse_hyperbola_intersection(p2);
  CHECK(h2.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h2.y == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  oracle::BodySampler sampler(17);
  for (int i = 0; i < 100; ++i) {
    const ConfocalPair p = sampler.next_pair();
    const Vec2 h = ellipse_hyperbola_intersection(p);
    CHECK(oracle::rel_err(h.x, p.c) < 1e-12);
    const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
    const Conic hyper{ConicKind::HyperbolaRightBranch, p.alpha, p.beta, {0, 0},
                      1.0};
    CHECK(std::fabs(conic_eval(ellipse, h)) < 1e-12);
    CHECK(std::fabs(conic_eval(hyper, h)) < 1e-12);
  }
}

TEST_CASE("focal string properties on both curves") {
  oracle::BodySampler sampler(29);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> uu(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    const ConfocalPair p = sampler.next_pair();
    const auto [f1, f2] = foci(p);
    const double th = uang(rng);
    const Vec2 pe{p.a * std::cos(th), p.b * std::sin(th)};
    CHECK(oracle::rel_err(dist(pe, f1) + dist(pe, f2), 2.0 * p.a) < 1e-12);
    const double u = uu(rng);
    const Vec2 ph{p.alpha * std::cosh(u), p.beta * std::sinh(u)};
    CHECK(oracle::rel_err(dist(ph, f1) - dist(ph, f2), 2.0 * p.alpha) < 1e-12);
  }
}

TEST_CASE("focal reflection law on the ellipse") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
  const auto [f1, f2] = foci(p);
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const double th = uang(rng);
    const Vec2 pt{p.a * std::cos(th), p.b * std::sin(th)};
    if (dist(pt, f1) < 1e-6) continue;
    const Vec2 out = mirror(normalized(pt - f1), normal_at(ellipse, pt));
    CHECK(line_point_distance(pt, out, f2) < 1e-9 * p.a);
  }
}

TEST_CASE("focal reflection law on the hyperbola branch") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic hyper{ConicKind::HyperbolaRightBranch, p.alpha, p.beta, {0, 0},
                    1.0};
  const auto [f1, f2] = foci(p);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uu(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double u = uu(rng);
    const Vec2 pt{p.alpha * std::cosh(u), p.beta * std::sinh(u)};
    if (dist(pt, f2) < 1e-6) continue;
    const Vec2 out = mirror(normalized(pt - f2), normal_at(hyper, pt));
    CHECK(line_point_distance(pt, out, f1) < 1e-9 * p.a);
  }
}

TEST_CASE("closed-form intersections agree with the sign-scan oracle") {
  const ConfocalPair p = oracle::canonical_pair();
  const Conic ellipse{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0};
  const Conic hyper{ConicKind::HyperbolaRightBranch, p.alpha, p.beta, {0, 0},
                    1.0};
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ubox(-4.0, 4.0);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi);
  const double t_max = 12.0;
  const double edge_guard = 0.05;
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 origin{ubox(rng), ubox(rng)};
    const double th = uang(rng);
    const Ray2 ray = make_ray(origin, {std::cos(th), std::sin(th)});
    const Conic& conic = (i % 2 == 0) ? ellipse : hyper;

    const RayHits hits = ray_conic_intersections(ray, conic);
    if (hits.tangent) continue;
    std::vector<double> want;
    bool near_guard = false;
    for (int k = 0; k < hits.count; ++k) {
      const double t = hits.t[k];
      if (std::fabs(t - edge_guard) < edge_guard ||
          std::fabs(t - (t_max - edge_guard)) < edge_guard) {
        near_guard = true;
      }
      if (t > edge_guard && t < t_max - edge_guard) want.push_back(t);
    }
    if (near_guard) continue;
    if (hits.count == 2 && hits.t[1] - hits.t[0] < 1e-3) continue;

    std::vector<double> got;
    for (double t : oracle::sign_scan_roots(ray, conic, t_max)) {
      if (t <= edge_guard || t >= t_max - edge_guard) continue;
      if (&conic == &hyper && ray_point(ray, t).x < 0.0) continue;
      got.push_back(t);
    }
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::fabs(got[k] - want[k]) < 1e-6);
    }
    ++compared;
  }
  CHECK(compared > 850);
}

TEST_CASE("roots satisfy the implicit equation after polish") {
  oracle::BodySampler sampler(47);
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ubox(-3.0, 3.0);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * kPi);
  for (int i = 0; i < 500; ++i) {
    const ConfocalPair p = sampler.next_pair();
    const Conic conic =
        (i % 2 == 0)
            ? Conic{ConicKind::Ellipse, p.a, p.b, {0, 0}, 1.0}
            : Conic{ConicKind::HyperbolaRightBranch, p.alpha, p.beta,
                    {-p.c, 0.0}, 1.4};
    const double th = uang(rng);
    const Ray2 ray =
        make_ray({ubox(rng), ubox(rng)}, {std::cos(th), std::sin(th)});
    const RayHits hits = ray_conic_intersections(ray, conic);
    for (int k = 0; k < hits.count; ++k) {
      CHECK(std::fabs(conic_eval(conic, ray_point(ray, hits.t[k]))) < 1e-9);
    }
  }
}
