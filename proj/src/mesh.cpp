// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mirage {

namespace {

std::vector<const Edge*> pick_triangle(const Body2D& base, bool upper,
                                       bool outer) {
  const EdgeClass want[3] = {
      outer ? EdgeClass::EllipseArcB2 : EdgeClass::EllipseArcB1,
      outer ? EdgeClass::HyperbolaArcB2 : EdgeClass::HyperbolaArcB1,
      outer ? EdgeClass::RadialSegmentB2 : EdgeClass::RadialSegmentB1};
  std::vector<const Edge*> out;
  for (EdgeClass cls : want) {
    for (const Edge& e : base.edges) {
      if (e.cls != cls) continue;
      const Vec2 probe = e.is_arc ? e.arc.p0 : e.seg.p0;
      if (upper != (probe.y >= 0.0)) continue;
      out.push_back(&e);
      break;
    }
  }
  if (out.size() != 3) {
    throw std::logic_error("export_mesh_obj: triangle edges missing");
  }
  return out;
}

/// Chains the three edges into one closed loop of 3 * per_edge points,
/// reversing edge orientations as needed so consecutive endpoints meet.
std::vector<Vec2> triangle_loop(const Body2D& base,
                                const std::vector<const Edge*>& edges,
                                int per_edge) {
  const double join_tol = 1e-9 * base.pair.a;
  std::vector<const Edge*> remaining = edges;
  std::vector<std::vector<Vec2>> runs;

  auto endpoints = [](const Edge* e) {
    return e->is_arc ? std::pair<Vec2, Vec2>{e->arc.p0, e->arc.p1}
                     : std::pair<Vec2, Vec2>{e->seg.p0, e->seg.p1};
  };

  const Edge* first = remaining.front();
  remaining.erase(remaining.begin());
  runs.push_back(sample_boundary_edge(*first, per_edge + 1));
  while (!remaining.empty()) {
    const Vec2 tail = runs.back().back();
    bool attached = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      const auto [p0, p1] = endpoints(remaining[i]);
      if (dist(tail, p0) <= join_tol || dist(tail, p1) <= join_tol) {
        std::vector<Vec2> run = sample_boundary_edge(*remaining[i], per_edge + 1);
        if (dist(tail, p1) <= join_tol) std::reverse(run.begin(), run.end());
        runs.push_back(std::move(run));
        remaining.erase(remaining.begin() + static_cast<long>(i));
        attached = true;
        break;
      }
    }
    if (!attached) {
      throw std::logic_error("export_mesh_obj: triangle edges do not chain");
    }
  }
  if (dist(runs.back().back(), runs.front().front()) > join_tol) {
    throw std::logic_error("export_mesh_obj: triangle loop does not close");
  }

  std::vector<Vec2> loop;
  loop.reserve(static_cast<size_t>(3 * per_edge));
  for (const auto& run : runs) {
    loop.insert(loop.end(), run.begin(), run.end() - 1);
  }
  return loop;
}

Vec3 revolve_point(const RevolutionBody& rb, Vec2 p, double cosw, double sinw) {
  if (rb.variant == Variant::AboutMajorAxis) {
    return Vec3{p.x, p.y * cosw, p.y * sinw};
  }
  const double ax = rb.axis_origin.x;
  const double rho = p.x - ax;
  return Vec3{ax + rho * cosw, p.y, rho * sinw};
}

struct Shell {
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> faces;
};

Shell revolve_shell(const RevolutionBody& rb, const std::vector<Vec2>& loop,
                    int rings) {
  const int m = static_cast<int>(loop.size());
  Shell shell;
  shell.verts.reserve(static_cast<size_t>(m * rings));
  for (int j = 0; j < rings; ++j) {
    const double w = 2.0 * kPi * j / rings;
    const double cosw = std::cos(w);
    const double sinw = std::sin(w);
    for (int i = 0; i < m; ++i) {
      shell.verts.push_back(revolve_point(rb, loop[static_cast<size_t>(i)],
                                          cosw, sinw));
    }
  }
  shell.faces.reserve(static_cast<size_t>(2 * m * rings));
  const auto vid = [&](int i, int j) { return (j % rings) * m + (i % m); };
  for (int j = 0; j < rings; ++j) {
    for (int i = 0; i < m; ++i) {
      shell.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      shell.faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }

  double volume6 = 0.0;
  for (const auto& f : shell.faces) {
    const Vec3& v0 = shell.verts[static_cast<size_t>(f[0])];
    const Vec3& v1 = shell.verts[static_cast<size_t>(f[1])];
    const Vec3& v2 = shell.verts[static_cast<size_t>(f[2])];
    volume6 += dot(v0, cross(v1, v2));
  }
  if (volume6 < 0.0) {
    for (auto& f : shell.faces) std::swap(f[1], f[2]);
  }
  return shell;
}

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string export_mesh_obj(const RevolutionBody& rb, int azimuthal_steps,
                            int meridian_steps) {
  if (azimuthal_steps < 8 || meridian_steps < 8) {
    throw std::invalid_argument(
        "export_mesh_obj: both step counts must be at least 8");
  }

  std::vector<std::vector<const Edge*>> triangles;
  if (rb.variant == Variant::AboutMajorAxis) {
    triangles.push_back(pick_triangle(rb.base, true, false));
    triangles.push_back(pick_triangle(rb.base, true, true));
  } else {
    triangles.push_back(pick_triangle(rb.base, true, false));
    triangles.push_back(pick_triangle(rb.base, false, false));
    triangles.push_back(pick_triangle(rb.base, true, true));
    triangles.push_back(pick_triangle(rb.base, false, true));
  }

  std::string out;
  out += "# revolution shells: ";
  out += variant_name(rb.variant);
  out += "\n";
  int base_index = 1;
  for (size_t s = 0; s < triangles.size(); ++s) {
    const std::vector<Vec2> loop =
        triangle_loop(rb.base, triangles[s], meridian_steps);
    const Shell shell = revolve_shell(rb, loop, azimuthal_steps);
    out += "o shell_" + std::to_string(s) + "\n";
    for (const Vec3& v : shell.verts) {
      out += "v ";
      append_num(out, v.x);
      out += " ";
      append_num(out, v.y);
      out += " ";
      append_num(out, v.z);
      out += "\n";
    }
    for (const auto& f : shell.faces) {
      out += "f " + std::to_string(base_index + f[0]) + " " +
             std::to_string(base_index + f[1]) + " " +
             std::to_string(base_index + f[2]) + "\n";
    }
    base_index += static_cast<int>(shell.verts.size());
  }
  return out;
}

}  // namespace mirage
