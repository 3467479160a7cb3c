// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mirage/body.hpp"
#include "mirage/invisibility.hpp"
#include "oracle_helpers.hpp"

using namespace mirage;

TEST_CASE("verdicts for the three reference angles") {
  const Body2D body = oracle::canonical_body();

  const RayVerdict pass = verify_ray(body, oracle::kTraceAngle);
  CHECK(pass.verdict == Verdict::InvisiblePass);
  CHECK(pass.bounce_count == 4);
  CHECK(pass.collinearity_error < 1e-9);
  CHECK(pass.exit_line_distance < 1e-9 * body.pair.a);
  REQUIRE(pass.classes.size() == 4);
  CHECK(pass.classes[0] == EdgeClass::EllipseArcB1);
  CHECK(pass.classes[1] == EdgeClass::HyperbolaArcB1);
  CHECK(pass.classes[2] == EdgeClass::EllipseArcB2);
  CHECK(pass.classes[3] == EdgeClass::HyperbolaArcB2);
  CHECK(pass.identity.structural_ok);

  const RayVerdict miss = verify_ray(body, 0.3);
  CHECK(miss.verdict == Verdict::Miss);
  CHECK(miss.bounce_count == 0);

  const RayVerdict corner = verify_ray(body, body.phi_B);
  CHECK(corner.verdict == Verdict::Degenerate);
}

TEST_CASE("ten-thousand-ray fan on the worked example") {
  const Body2D body = oracle::canonical_body();
  const VerificationReport rep = verify_fan(body, 10000);
  CHECK(rep.ray_count == 10000);
  CHECK(rep.fail_count == 0);
  CHECK(rep.degenerate_count * 1000 < rep.ray_count);
  CHECK(rep.pass_count + rep.miss_count + rep.degenerate_count +
            rep.fail_count ==
        rep.ray_count);
  CHECK(rep.upper.rays + rep.lower.rays == rep.ray_count);
  CHECK(rep.max_collinearity_error < 1e-9);
  CHECK(rep.max_exit_line_distance < 1e-9 * body.pair.a);
  CHECK(rep.max_identity_residual < 1e-9);
  CHECK(rep.overall_pass);
  CHECK(rep.pass_count > 9000);
}

TEST_CASE("single-ray fan degenerates to the miss probe") {
  const Body2D body = oracle::canonical_body();
  const VerificationReport rep = verify_fan(body, 1);
  CHECK(rep.ray_count == 1);
  CHECK(rep.miss_count == 1);
  CHECK(rep.overall_pass);
}

TEST_CASE("completeness of the sector picture") {
  const Body2D body = oracle::canonical_body();
  // Strictly inside the sector: four bounces in the fixed class order.
  for (int i = 1; i < 400; ++i) {
    const double mag =
        body.phi_H + (body.phi_B - body.phi_H) * i / 400.0;
    for (double sign : {-1.0, 1.0}) {
      const RayVerdict rv = verify_ray(body, sign * mag);
      if (rv.verdict == Verdict::Degenerate) continue;
      CHECK(rv.verdict == Verdict::InvisiblePass);
      REQUIRE(rv.bounce_count == 4);
      CHECK(rv.classes[0] == EdgeClass::EllipseArcB1);
      CHECK(rv.classes[1] == EdgeClass::HyperbolaArcB1);
      CHECK(rv.classes[2] == EdgeClass::EllipseArcB2);
      CHECK(rv.classes[3] == EdgeClass::HyperbolaArcB2);
    }
  }
  // Outside the closed sectors: no bounces at all.
  for (double angle : {0.0, 0.2, -0.5, body.phi_H - 1e-3, body.phi_B + 1e-3,
                       1.3, 2.0, kPi, -2.5}) {
    const RayVerdict rv = verify_ray(body, angle);
    CHECK(rv.verdict == Verdict::Miss);
    CHECK(rv.bounce_count == 0);
  }
}

TEST_CASE("verdicts are mirror symmetric in the angle") {
  const Body2D body = oracle::canonical_body();
  for (double angle : {0.66, 0.7, 0.74, 0.785, 0.3, 0.1}) {
    const RayVerdict up = verify_ray(body, angle);
    const RayVerdict down = verify_ray(body, -angle);
    CHECK(up.verdict == down.verdict);
    CHECK(up.bounce_count == down.bounce_count);
    CHECK(std::fabs(up.collinearity_error - down.collinearity_error) < 1e-14);
    CHECK(std::fabs(up.exit_line_distance - down.exit_line_distance) <
          1e-14 * body.pair.a);
  }
}

TEST_CASE("scale invariance of the relative error budget") {
  for (double s : {0.01, 1.0, 100.0}) {
    const Body2D body = build_invisible_body(
        make_confocal_pair(s * 2.0, s * std::sqrt(3.0)), oracle::kPhiB);
    const VerificationReport rep = verify_fan(body, 2000);
    CHECK(rep.fail_count == 0);
    CHECK(rep.overall_pass);
    CHECK(rep.max_collinearity_error < 1e-9);
    CHECK(rep.max_exit_line_distance < 1e-9 * body.pair.a);
  }
}

TEST_CASE("thread count does not change the report") {
  const Body2D body = oracle::canonical_body();
  const VerificationReport one = verify_fan(body, 3001, 1e-9, 777, 1);
  const VerificationReport four = verify_fan(body, 3001, 1e-9, 777, 4);
  CHECK(one.pass_count == four.pass_count);
  CHECK(one.miss_count == four.miss_count);
  CHECK(one.degenerate_count == four.degenerate_count);
  CHECK(one.fail_count == four.fail_count);
  CHECK(one.max_collinearity_error == four.max_collinearity_error);
  CHECK(one.max_exit_line_distance == four.max_exit_line_distance);
  CHECK(one.max_identity_residual == four.max_identity_residual);
  CHECK(one.degenerate_angles == four.degenerate_angles);
  CHECK(one.overall_pass == four.overall_pass);
}

TEST_CASE("seed changes the jitter but not the verdict profile") {
  const Body2D body = oracle::canonical_body();
  const VerificationReport r1 = verify_fan(body, 500, 1e-9, 1);
  const VerificationReport r2 = verify_fan(body, 500, 1e-9, 2);
  CHECK(r1.fail_count == 0);
  CHECK(r2.fail_count == 0);
  CHECK(r1.overall_pass);
  CHECK(r2.overall_pass);
}

TEST_CASE("detuned constructions are caught") {
  const ConfocalPair pair = oracle::canonical_pair();
  const Body2D good = build_invisible_body(pair, oracle::kPhiB);

  const Body2D wrong_lambda =
      assemble_body(pair, oracle::kPhiB, good.lambda * 0.99);
  const VerificationReport r1 = verify_fan(wrong_lambda, 2000);
  CHECK(r1.fail_count > 0);
  CHECK_FALSE(r1.overall_pass);

  const Body2D wrong_phi =
      assemble_body(pair, oracle::kPhiB * 1.01, good.lambda);
  const VerificationReport r2 = verify_fan(wrong_phi, 2000);
  CHECK(r2.fail_count > 0);
  CHECK_FALSE(r2.overall_pass);

  const Body2D wrong_beta =
      assemble_body(pair, oracle::kPhiB, good.lambda, 1.01);
  const VerificationReport r3 = verify_fan(wrong_beta, 2000);
  CHECK(r3.fail_count > 0);
  CHECK_FALSE(r3.overall_pass);
}

TEST_CASE("random bodies from the family all verify") {
  oracle::BodySampler sampler(107);
  for (int i = 0; i < 5; ++i) {
    const Body2D body = sampler.next_body();
    const VerificationReport rep = verify_fan(body, 1500);
    CHECK(rep.fail_count == 0);
    CHECK(rep.overall_pass);
    CHECK(rep.max_collinearity_error < 1e-9);
  }
}
