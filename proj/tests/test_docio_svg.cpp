// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "mirage/body.hpp"
#include "mirage/docio.hpp"
#include "mirage/invisibility.hpp"
#include "mirage/svg.hpp"
#include "mirage/tracer.hpp"
#include "oracle_helpers.hpp"

using namespace mirage;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::string::size_type pos = text.find(needle);
       pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("body document round-trips bitwise") {
  const Body2D body = oracle::canonical_body();
  const std::string doc = serialize_body(body);
  const Body2D loaded = deserialize_body(doc);
  CHECK(serialize_body(loaded) == doc);
  CHECK(loaded.lambda == body.lambda);
  CHECK(loaded.phi_B == body.phi_B);
  CHECK(loaded.edges.size() == 12);
  CHECK(loaded.A.x == body.A.x);
  CHECK(loaded.B.y == body.B.y);
}

TEST_CASE("round-trip preserves randomly drawn bodies") {
  oracle::BodySampler sampler(131);
  for (int i = 0; i < 10; ++i) {
    const Body2D body = sampler.next_body();
    const std::string doc = serialize_body(body);
    CHECK(serialize_body(deserialize_body(doc)) == doc);
  }
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(deserialize_body(""), ParseError);
  CHECK_THROWS_AS(deserialize_body("not json at all"), ParseError);
  CHECK_THROWS_AS(deserialize_body("{}"), ParseError);
  CHECK_THROWS_AS(deserialize_body(R"({"schema":"invisible-body/1"})"),
                  ParseError);

  const std::string doc = serialize_body(oracle::canonical_body());
  const std::string truncated = doc.substr(0, doc.size() / 2);
  CHECK_THROWS_AS(deserialize_body(truncated), ParseError);
}

TEST_CASE("semantic violations raise validation errors") {
  const std::string doc = serialize_body(oracle::canonical_body());

  // Unsupported schema version.
  CHECK_THROWS_AS(deserialize_body(replace_once(doc, "invisible-body/1",
                                                "invisible-body/9")),
                  ValidationError);

  // phi_B pushed below phi_H makes the stored construction impossible.
  CHECK_THROWS_AS(
      deserialize_body(replace_once(
          doc, "\"phi_B\": 0.80000000000000004", "\"phi_B\": 0.5")),
      ValidationError);

  // A tampered stored point disagrees with the re-derived construction.
  char a_x[64];
  std::snprintf(a_x, sizeof(a_x), "%.17g", oracle::canonical_body().A.x);
  CHECK_THROWS_AS(
      deserialize_body(replace_once(doc, a_x, "0.99")),
      ValidationError);
}

TEST_CASE("stale lambda is loadable but fails verification") {
  // A document whose stored lambda disagrees with |F1 B| / |F1 A| is still
  // self-consistent (edges match the stored lambda), loads cleanly, and the
  // verifier, not the loader, is what catches it.
  const ConfocalPair pair = oracle::canonical_pair();
  const Body2D good = build_invisible_body(pair, oracle::kPhiB);
  const Body2D detuned =
      assemble_body(pair, oracle::kPhiB, good.lambda * 0.99);
  const Body2D loaded = deserialize_body(serialize_body(detuned));
  CHECK(loaded.lambda == detuned.lambda);
  const VerificationReport rep = verify_fan(loaded, 2000);
  CHECK(rep.fail_count > 0);
  CHECK_FALSE(rep.overall_pass);
}

TEST_CASE("report serialization is deterministic and complete") {
  const Body2D body = oracle::canonical_body();
  const VerificationReport rep = verify_fan(body, 500);
  const std::string doc = serialize_report(rep);
  CHECK(doc == serialize_report(verify_fan(body, 500)));
  CHECK(doc.find("verification-report/1") != std::string::npos);
  CHECK(doc.find("overall_pass") != std::string::npos);
  CHECK(doc.find("12345") != std::string::npos);
}

TEST_CASE("trajectory serialization carries the bounce record") {
  const Body2D body = oracle::canonical_body();
  const auto [f1, f2] = foci(body.pair);
  const Trajectory traj = trace(
      body, f1, {std::cos(oracle::kTraceAngle), std::sin(oracle::kTraceAngle)});
  const std::string doc = serialize_trajectory(traj);
  CHECK(doc.find("trajectory/1") != std::string::npos);
  CHECK(doc.find("escaped") != std::string::npos);
  CHECK(count_occurrences(doc, "edge_id") == 4);
  CHECK(doc.find("EllipseArcB1") != std::string::npos);
  CHECK(doc.find("HyperbolaArcB2") != std::string::npos);
}

TEST_CASE("conic overview figure has the documented layer counts") {
  const Body2D body = oracle::canonical_body();
  const std::string svg = render_fig2(body);
  CHECK(count_occurrences(svg, "class=\"conic\"") == 2);
  CHECK(count_occurrences(svg, "class=\"focus\"") == 2);
  CHECK(count_occurrences(svg, "class=\"focus-line\"") == 1);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("mirror pair figure shades the inner body with a short trace") {
  const Body2D body = oracle::canonical_body();
  const std::string svg = render_fig3(body);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 6);
  CHECK(count_occurrences(svg, "class=\"body-fill\"") >= 1);
  CHECK(svg.find("class=\"trajectory-path\"") != std::string::npos);
}

TEST_CASE("full body figure shows all edges and labeled bounces") {
  const Body2D body = oracle::canonical_body();
  const std::string svg = render_fig4(body);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 12);
  CHECK(svg.find(">C</text>") != std::string::npos);
  CHECK(svg.find(">D</text>") != std::string::npos);
  CHECK(svg.find(">E</text>") != std::string::npos);
  CHECK(svg.find(">G</text>") != std::string::npos);
  CHECK(svg.find(">F1</text>") != std::string::npos);
}

TEST_CASE("figures are byte deterministic") {
  const Body2D body = oracle::canonical_body();
  CHECK(render_fig2(body) == render_fig2(body));
  CHECK(render_fig3(body) == render_fig3(body));
  CHECK(render_fig4(body) == render_fig4(body));
}

TEST_CASE("trace overlay renders a caller trajectory") {
  const Body2D body = oracle::canonical_body();
  const auto [f1, f2] = foci(body.pair);
  const Trajectory traj = trace(body, f1, {std::cos(0.7), std::sin(0.7)});
  const std::string svg = render_trace_overlay(body, traj);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 12);
  CHECK(svg.find("class=\"trajectory-path\"") != std::string::npos);
}

TEST_CASE("file helpers round-trip and report failures") {
  const std::string path = "docio_test_scratch.txt";
  write_text_file(path, "line one\nline two\n");
  CHECK(read_text_file(path) == "line one\nline two\n");
  CHECK_THROWS_AS(read_text_file("no_such_directory/no_such_file"),
                  std::runtime_error);
  std::remove(path.c_str());
}
