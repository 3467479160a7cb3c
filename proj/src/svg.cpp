// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mirage/conics.hpp"

namespace mirage {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Canvas {
  double xmin{0.0};
  double ymin{0.0};
  double scale{1.0};
  double ox{0.0};
  double oy{0.0};
  int height{0};

  Vec2 map(Vec2 w) const {
    return Vec2{ox + (w.x - xmin) * scale,
                height - oy - (w.y - ymin) * scale};
  }
};

Canvas fit_canvas(const std::vector<Vec2>& content, const FigureSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const Vec2& p : content) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double dx = std::max(xmax - xmin, 1e-9);
  const double dy = std::max(ymax - ymin, 1e-9);
  const double usable_w = spec.width - 2.0 * spec.margin;
  const double usable_h = spec.height - 2.0 * spec.margin;
  Canvas c;
  c.xmin = xmin;
  c.ymin = ymin;
  c.scale = std::min(usable_w / dx, usable_h / dy);
  c.ox = spec.margin + 0.5 * (usable_w - dx * c.scale);
  c.oy = spec.margin + 0.5 * (usable_h - dy * c.scale);
  c.height = spec.height;
  return c;
}

std::string polyline_path(const Canvas& cv, const std::vector<Vec2>& pts,
                          bool close) {
  std::string d;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec2 s = cv.map(pts[i]);
    d += (i == 0 ? "M " : "L ");
    d += px(s.x) + " " + px(s.y) + " ";
  }
  if (close) d += "Z";
  return d;
}

std::vector<Vec2> ellipse_outline(const ConfocalPair& pair, int n) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = 2.0 * kPi * i / n;
    pts.push_back(Vec2{pair.a * std::cos(u), pair.b * std::sin(u)});
  }
  return pts;
}

std::vector<Vec2> hyperbola_outline(const ConfocalPair& pair, double vmax,
                                    int n) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v = -vmax + 2.0 * vmax * i / (n - 1);
    pts.push_back(Vec2{pair.alpha * std::cosh(v), pair.beta * std::sinh(v)});
  }
  return pts;
}

std::string svg_open(const FigureSpec& spec) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"0 0 " +
         std::to_string(spec.width) + " " + std::to_string(spec.height) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  return out;
}

std::vector<Vec2> edge_outline(const Edge& e, int n) {
  return sample_boundary_edge(e, n);
}

std::vector<const Edge*> triangle_edges(const Body2D& body, bool upper,
                                        bool outer) {
  std::vector<const Edge*> out;
  for (const Edge& e : body.edges) {
    const bool is_outer = e.cls == EdgeClass::EllipseArcB2 ||
                          e.cls == EdgeClass::HyperbolaArcB2 ||
                          e.cls == EdgeClass::RadialSegmentB2;
    if (is_outer != outer) continue;
    const Vec2 probe = e.is_arc ? e.arc.p0 : e.seg.p0;
    if (upper != (probe.y >= 0.0)) continue;
    out.push_back(&e);
  }
  return out;
}

/// Closed outline of one curvilinear triangle, chaining its three edges.
std::vector<Vec2> triangle_outline(const Body2D& body, bool upper, bool outer,
                                   int per_edge) {
  std::vector<const Edge*> edges = triangle_edges(body, upper, outer);
  const double join_tol = 1e-9 * body.pair.a;
  std::vector<Vec2> loop;
  std::vector<const Edge*> remaining = edges;
  const Edge* first = remaining.front();
  remaining.erase(remaining.begin());
  std::vector<Vec2> run = edge_outline(*first, per_edge);
  loop.insert(loop.end(), run.begin(), run.end() - 1);
  Vec2 tail = run.back();
  while (!remaining.empty()) {
    bool attached = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      const Edge* e = remaining[i];
      const Vec2 p0 = e->is_arc ? e->arc.p0 : e->seg.p0;
      const Vec2 p1 = e->is_arc ? e->arc.p1 : e->seg.p1;
      if (dist(tail, p0) <= join_tol || dist(tail, p1) <= join_tol) {
        run = edge_outline(*e, per_edge);
        if (dist(tail, p1) <= join_tol) std::reverse(run.begin(), run.end());
        loop.insert(loop.end(), run.begin(), run.end() - 1);
        tail = run.back();
        remaining.erase(remaining.begin() + static_cast<long>(i));
        attached = true;
        break;
      }
    }
    if (!attached) {
      throw std::logic_error("figure rendering: triangle edges do not chain");
    }
  }
  return loop;
}

std::vector<Vec2> trajectory_polyline(const Body2D& body,
                                      const Trajectory& traj) {
  std::vector<Vec2> pts;
  pts.push_back(traj.origin);
  for (const Reflection& r : traj.reflections) pts.push_back(r.point);
  const Vec2 last = pts.back();
  pts.push_back(last + (0.6 * body.diameter) * traj.final_direction);
  return pts;
}

double sample_angle(const Body2D& body) {
  return -(body.phi_H + 0.45 * (body.phi_B - body.phi_H));
}

std::string render_body_figure(const Body2D& body, const Trajectory& traj,
                               bool inner_only, bool with_labels,
                               const FigureSpec& spec) {
  const auto [f1, f2] = foci(body.pair);
  std::vector<Vec2> content;
  for (const Edge& e : body.edges) {
    const bool is_outer = e.cls == EdgeClass::EllipseArcB2 ||
                          e.cls == EdgeClass::HyperbolaArcB2 ||
                          e.cls == EdgeClass::RadialSegmentB2;
    if (inner_only && is_outer) continue;
    const std::vector<Vec2> pts = edge_outline(e, 16);
    content.insert(content.end(), pts.begin(), pts.end());
  }
  content.push_back(f1);
  content.push_back(f2);
  for (const Vec2& p : trajectory_polyline(body, traj)) content.push_back(p);
  const Canvas cv = fit_canvas(content, spec);

  std::string out = svg_open(spec);

  out += "<g class=\"body\" stroke=\"#1f3a5f\" stroke-width=\"1.5\" "
         "fill=\"#9db8d9\" fill-opacity=\"0.45\">\n";
  const bool outer_flags[2] = {false, true};
  for (bool outer : outer_flags) {
    if (inner_only && outer) continue;
    for (bool upper : {true, false}) {
      const std::vector<Vec2> loop = triangle_outline(body, upper, outer, 48);
      out += "<path class=\"body-fill\" d=\"" + polyline_path(cv, loop, true) +
             "\"/>\n";
    }
  }
  out += "</g>\n";

  out += "<g class=\"edges\" fill=\"none\" stroke=\"#10243f\" "
         "stroke-width=\"1\">\n";
  for (const Edge& e : body.edges) {
    const bool is_outer = e.cls == EdgeClass::EllipseArcB2 ||
                          e.cls == EdgeClass::HyperbolaArcB2 ||
                          e.cls == EdgeClass::RadialSegmentB2;
    if (inner_only && is_outer) continue;
    out += "<path class=\"edge\" d=\"" +
           polyline_path(cv, edge_outline(e, 48), false) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"trajectory\" stroke=\"#b3302e\" stroke-width=\"1.5\" "
         "fill=\"none\">\n";
  out += "<path class=\"trajectory-path\" d=\"" +
         polyline_path(cv, trajectory_polyline(body, traj), false) + "\"/>\n";
  out += "</g>\n";

  out += "<g class=\"foci\" fill=\"#222222\">\n";
  const Vec2 s1 = cv.map(f1);
  const Vec2 s2 = cv.map(f2);
  out += "<circle class=\"focus\" cx=\"" + px(s1.x) + "\" cy=\"" + px(s1.y) +
         "\" r=\"4\"/>\n";
  out += "<circle class=\"focus\" cx=\"" + px(s2.x) + "\" cy=\"" + px(s2.y) +
         "\" r=\"4\"/>\n";
  out += "</g>\n";

  out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"16\" "
         "fill=\"#111111\">\n";
  if (with_labels) {
    static constexpr const char* kNames[4] = {"C", "D", "E", "G"};
    const size_t nlab =
        std::min<size_t>(traj.reflections.size(), 4);
    for (size_t i = 0; i < nlab; ++i) {
      const Vec2 s = cv.map(traj.reflections[i].point);
      out += "<text class=\"label\" x=\"" + px(s.x + 8.0) + "\" y=\"" +
             px(s.y - 8.0) + "\">" + kNames[i] + "</text>\n";
    }
  }
  const Vec2 sf1 = cv.map(f1);
  out += "<text class=\"label\" x=\"" + px(sf1.x - 24.0) + "\" y=\"" +
         px(sf1.y + 18.0) + "\">F1</text>\n";
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_fig2(const Body2D& body, const FigureSpec& spec) {
  const ConfocalPair& pair = body.pair;
  const auto [f1, f2] = foci(pair);
  const double vmax = 1.25 * std::asinh(body.B.y / pair.beta);
  const std::vector<Vec2> ell = ellipse_outline(pair, 256);
  const std::vector<Vec2> hyp = hyperbola_outline(pair, vmax, 256);

  std::vector<Vec2> content = ell;
  content.insert(content.end(), hyp.begin(), hyp.end());
  content.push_back(f1);
  content.push_back(f2);
  content.push_back(body.H);
  const Canvas cv = fit_canvas(content, spec);

  std::string out = svg_open(spec);
  out += "<g class=\"conics\" fill=\"none\" stroke=\"#1f3a5f\" "
         "stroke-width=\"1.5\">\n";
  out += "<path class=\"conic\" d=\"" + polyline_path(cv, ell, true) +
         "\"/>\n";
  out += "<path class=\"conic\" d=\"" + polyline_path(cv, hyp, false) +
         "\"/>\n";
  out += "</g>\n";

  out += "<g class=\"foci\" fill=\"#222222\" stroke=\"#222222\">\n";
  const Vec2 s1 = cv.map(f1);
  const Vec2 s2 = cv.map(f2);
  out += "<circle class=\"focus\" cx=\"" + px(s1.x) + "\" cy=\"" + px(s1.y) +
         "\" r=\"4\"/>\n";
  out += "<circle class=\"focus\" cx=\"" + px(s2.x) + "\" cy=\"" + px(s2.y) +
         "\" r=\"4\"/>\n";
  const Vec2 sh = cv.map(body.H);
  out += "<line class=\"focus-line\" stroke-dasharray=\"6 4\" x1=\"" +
         px(s2.x) + "\" y1=\"" + px(s2.y) + "\" x2=\"" + px(sh.x) +
         "\" y2=\"" + px(sh.y) + "\"/>\n";
  out += "</g>\n";

  out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"16\" "
         "fill=\"#111111\">\n";
  out += "<text class=\"label\" x=\"" + px(s1.x - 24.0) + "\" y=\"" +
         px(s1.y + 18.0) + "\">F1</text>\n";
  out += "<text class=\"label\" x=\"" + px(s2.x + 8.0) + "\" y=\"" +
         px(s2.y + 18.0) + "\">F2</text>\n";
  out += "<text class=\"label\" x=\"" + px(sh.x + 8.0) + "\" y=\"" +
         px(sh.y - 8.0) + "\">H</text>\n";
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

std::string render_fig3(const Body2D& body, const FigureSpec& spec) {
  std::vector<Edge> inner;
  for (const Edge& e : body.edges) {
    if (e.cls == EdgeClass::EllipseArcB1 || e.cls == EdgeClass::HyperbolaArcB1 ||
        e.cls == EdgeClass::RadialSegmentB1) {
      inner.push_back(e);
    }
  }
  const auto [f1, f2] = foci(body.pair);
  const double angle = sample_angle(body);
  const Trajectory traj =
      trace_edges(inner, body.diameter, f1,
                  Vec2{std::cos(angle), std::sin(angle)}, 16);
  return render_body_figure(body, traj, true, false, spec);
}

std::string render_fig4(const Body2D& body, const FigureSpec& spec) {
  const auto [f1, f2] = foci(body.pair);
  const double angle = sample_angle(body);
  const Trajectory traj =
      trace(body, f1, Vec2{std::cos(angle), std::sin(angle)}, 16);
  return render_body_figure(body, traj, false, true, spec);
}

std::string render_trace_overlay(const Body2D& body, const Trajectory& traj,
                                 const FigureSpec& spec) {
  return render_body_figure(body, traj, false, true, spec);
}

}  // namespace mirage
