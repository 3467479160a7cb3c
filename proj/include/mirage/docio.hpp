// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "mirage/body.hpp"
#include "mirage/invisibility.hpp"
#include "mirage/symmetry3d.hpp"
#include "mirage/tracer.hpp"

namespace mirage {

/// The document is not syntactically well formed (bad JSON, missing or
/// mistyped fields). The message carries the parser's location when one is
/// available.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The document parsed but its contents violate body invariants or disagree
/// with what the stored parameters re-derive to.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Body document: JSON with the generating parameters, derived quantities,
/// named points, and the realized edge list. Floats carry 17 significant
/// digits so numeric fields survive a round trip bitwise.
std::string serialize_body(const Body2D& body);

/// Parses and validates a body document. Edges are re-derived from the
/// stored (a, b, phi_B, lambda) and cross-checked against the stored list to
/// 1e-9 relative, so stale or hand-edited files are rejected rather than
/// trusted. Returns the re-derived body.
Body2D deserialize_body(const std::string& text);

std::string serialize_report(const VerificationReport& rep);

std::string serialize_trajectory(const Trajectory& traj);

std::string serialize_trajectory3d(const Trajectory3D& traj, Variant variant);

/// Whole-file helpers used by the command-line tool and tests.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mirage
