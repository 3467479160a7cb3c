// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "mirage/body.hpp"
#include "mirage/tracer.hpp"

namespace mirage {

/// Canvas parameters for figure rendering. World coordinates are mapped with
/// a uniform scale and a y-up flip so the output matches the construction's
/// orientation on screen.
struct FigureSpec {
  int width{900};
  int height{600};
  double margin{40.0};
};

/// Both conics, the two foci, and a dashed vertical line from the second
/// focus to the corner where the conics meet. Contains exactly two elements
/// with class "conic", two with class "focus", one with class "focus-line".
std::string render_fig2(const Body2D& body, const FigureSpec& spec = {});

/// The inner mirror pair alone, shaded, with one sample trajectory that
/// enters from the emission focus, reflects twice, and leaves.
std::string render_fig3(const Body2D& body, const FigureSpec& spec = {});

/// The full body with all twelve edges, a four-bounce sample trajectory, and
/// bounce labels C, D, E, G.
std::string render_fig4(const Body2D& body, const FigureSpec& spec = {});

/// The full body with a caller-supplied trajectory overlaid.
std::string render_trace_overlay(const Body2D& body, const Trajectory& traj,
                                 const FigureSpec& spec = {});

}  // namespace mirage
