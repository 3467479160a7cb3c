// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include "mirage/docio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mirage/conics.hpp"

namespace mirage {

namespace {

using nlohmann::json;

constexpr const char* kBodySchema = "invisible-body/1";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string vec2(Vec2 v) { return "[" + num(v.x) + ", " + num(v.y) + "]"; }

std::string vec3(Vec3 v) {
  return "[" + num(v.x) + ", " + num(v.y) + ", " + num(v.z) + "]";
}

const char* conic_kind_name(ConicKind k) {
  return k == ConicKind::Ellipse ? "ellipse" : "hyperbola_right_branch";
}

const json& req(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field: ") + key);
  }
  return obj.at(key);
}

double req_num(const json& obj, const char* key) {
  const json& v = req(obj, key);
  if (!v.is_number()) {
    throw ParseError(std::string("field is not a number: ") + key);
  }
  return v.get<double>();
}

std::string req_str(const json& obj, const char* key) {
  const json& v = req(obj, key);
  if (!v.is_string()) {
    throw ParseError(std::string("field is not a string: ") + key);
  }
  return v.get<std::string>();
}

Vec2 req_vec2(const json& obj, const char* key) {
  const json& v = req(obj, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw ParseError(std::string("field is not a 2-vector: ") + key);
  }
  return Vec2{v[0].get<double>(), v[1].get<double>()};
}

void check_close(double stored, double expected, double tol,
                 const std::string& what) {
  if (!(std::fabs(stored - expected) <= tol)) {
    throw ValidationError(what + " disagrees with the re-derived value "
                          "(stale document)");
  }
}

void check_close_vec(Vec2 stored, Vec2 expected, double tol,
                     const std::string& what) {
  if (!(dist(stored, expected) <= tol)) {
    throw ValidationError(what + " disagrees with the re-derived value "
                          "(stale document)");
  }
}

}  // namespace

std::string serialize_body(const Body2D& body) {
  std::string out;
  out += "{\n";
  out += "  \"schema\": \"" + std::string(kBodySchema) + "\",\n";
  out += "  \"pair\": {\"a\": " + num(body.pair.a) + ", \"b\": " +
         num(body.pair.b) + ", \"alpha\": " + num(body.pair.alpha) +
         ", \"beta\": " + num(body.pair.beta) + ", \"c\": " +
         num(body.pair.c) + "},\n";
  out += "  \"phi_H\": " + num(body.phi_H) + ",\n";
  out += "  \"phi_B\": " + num(body.phi_B) + ",\n";
  out += "  \"lambda\": " + num(body.lambda) + ",\n";
  out += "  \"points\": {\"A\": " + vec2(body.A) + ", \"B\": " + vec2(body.B) +
         ", \"H\": " + vec2(body.H) + "},\n";
  out += "  \"touch_points\": [" + vec2(body.touch_points[0]) + ", " +
         vec2(body.touch_points[1]) + "],\n";
  out += "  \"edges\": [\n";
  for (size_t i = 0; i < body.edges.size(); ++i) {
    const Edge& e = body.edges[i];
    out += "    {\"id\": " + std::to_string(e.id) + ", \"class\": \"" +
           edge_class_name(e.cls) + "\", ";
    if (e.is_arc) {
      out += "\"shape\": \"arc\", \"conic\": {\"kind\": \"";
      out += conic_kind_name(e.arc.conic.kind);
      out += "\", \"semi_u\": " + num(e.arc.conic.semi_u) + ", \"semi_v\": " +
             num(e.arc.conic.semi_v) + ", \"dilation_center\": " +
             vec2(e.arc.conic.dilation_center) + ", \"dilation\": " +
             num(e.arc.conic.dilation) + "}, ";
      out += "\"u0\": " + num(e.arc.u0) + ", \"u1\": " + num(e.arc.u1) +
             ", \"p0\": " + vec2(e.arc.p0) + ", \"p1\": " + vec2(e.arc.p1);
    } else {
      out += "\"shape\": \"segment\", \"p0\": " + vec2(e.seg.p0) +
             ", \"p1\": " + vec2(e.seg.p1);
    }
    out += i + 1 < body.edges.size() ? "},\n" : "}\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

Body2D deserialize_body(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }

  try {
    if (req_str(j, "schema") != kBodySchema) {
      throw ValidationError("unsupported schema");
    }
    const json& jp = req(j, "pair");
    const double a = req_num(jp, "a");
    const double b = req_num(jp, "b");
    ConfocalPair pair;
    try {
      pair = make_confocal_pair(a, b);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    check_close(req_num(jp, "alpha"), pair.alpha, 1e-12 * pair.a,
                "pair.alpha");
    check_close(req_num(jp, "beta"), pair.beta, 1e-12 * pair.a, "pair.beta");
    check_close(req_num(jp, "c"), pair.c, 1e-12 * pair.a, "pair.c");

    const double phi_h = req_num(j, "phi_H");
    check_close(phi_h, intersection_angle(pair), 1e-12, "phi_H");
    const double phi_b = req_num(j, "phi_B");
    const double lambda = req_num(j, "lambda");

    Body2D rebuilt;
    try {
      rebuilt = assemble_body(pair, phi_b, lambda);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }

    const double tol = 1e-9 * pair.a;
    const json& jpts = req(j, "points");
    check_close_vec(req_vec2(jpts, "A"), rebuilt.A, tol, "point A");
    check_close_vec(req_vec2(jpts, "B"), rebuilt.B, tol, "point B");
    check_close_vec(req_vec2(jpts, "H"), rebuilt.H, tol, "point H");

    const json& jtouch = req(j, "touch_points");
    if (!jtouch.is_array() || jtouch.size() != 2) {
      throw ParseError("touch_points must hold two points");
    }
    for (size_t i = 0; i < 2; ++i) {
      if (!jtouch[i].is_array() || jtouch[i].size() != 2) {
        throw ParseError("touch_points must hold two points");
      }
      check_close_vec(Vec2{jtouch[i][0].get<double>(),
                           jtouch[i][1].get<double>()},
                      rebuilt.touch_points[i], tol, "touch point");
    }

    const json& jedges = req(j, "edges");
    if (!jedges.is_array()) throw ParseError("edges must be a list");
    if (jedges.size() != rebuilt.edges.size()) {
      throw ValidationError("edge list size disagrees with the re-derived "
                            "body (stale document)");
    }
    for (size_t i = 0; i < jedges.size(); ++i) {
      const json& je = jedges[i];
      const Edge& re = rebuilt.edges[i];
      const std::string where = "edge " + std::to_string(i);
      if (static_cast<int>(req_num(je, "id")) != re.id) {
        throw ValidationError(where + ": id disagrees with the re-derived "
                              "body (stale document)");
      }
      if (req_str(je, "class") != edge_class_name(re.cls)) {
        throw ValidationError(where + ": class disagrees with the re-derived "
                              "body (stale document)");
      }
      const std::string shape = req_str(je, "shape");
      if (shape != (re.is_arc ? "arc" : "segment")) {
        throw ValidationError(where + ": shape disagrees with the re-derived "
                              "body (stale document)");
      }
      if (re.is_arc) {
        const json& jc = req(je, "conic");
        if (req_str(jc, "kind") !=
            conic_kind_name(re.arc.conic.kind)) {
          throw ValidationError(where + ": conic kind disagrees with the "
                                "re-derived body (stale document)");
        }
        check_close(req_num(jc, "semi_u"), re.arc.conic.semi_u, tol,
                    where + ": conic semi_u");
        check_close(req_num(jc, "semi_v"), re.arc.conic.semi_v, tol,
                    where + ": conic semi_v");
        check_close_vec(req_vec2(jc, "dilation_center"),
                        re.arc.conic.dilation_center, tol,
                        where + ": dilation center");
        check_close(req_num(jc, "dilation"), re.arc.conic.dilation,
                    1e-9 * re.arc.conic.dilation, where + ": dilation");
        check_close(req_num(je, "u0"), re.arc.u0, 1e-9, where + ": u0");
        check_close(req_num(je, "u1"), re.arc.u1, 1e-9, where + ": u1");
        check_close_vec(req_vec2(je, "p0"), re.arc.p0, tol, where + ": p0");
        check_close_vec(req_vec2(je, "p1"), re.arc.p1, tol, where + ": p1");
      } else {
        check_close_vec(req_vec2(je, "p0"), re.seg.p0, tol, where + ": p0");
        check_close_vec(req_vec2(je, "p1"), re.seg.p1, tol, where + ": p1");
      }
    }
    return rebuilt;
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_report(const VerificationReport& rep) {
  const auto sector = [](const SectorStats& s) {
    return "{\"rays\": " + std::to_string(s.rays) + ", \"pass\": " +
           std::to_string(s.pass) + ", \"miss\": " + std::to_string(s.miss) +
           ", \"degenerate\": " + std::to_string(s.degenerate) +
           ", \"fail\": " + std::to_string(s.fail) +
           ", \"max_collinearity\": " + num(s.max_collinearity) + "}";
  };
  std::string out;
  out += "{\n";
  out += "  \"schema\": \"verification-report/1\",\n";
  out += "  \"body\": {\"a\": " + num(rep.a) + ", \"b\": " + num(rep.b) +
         ", \"phi_b\": " + num(rep.phi_B) + ", \"lambda\": " +
         num(rep.lambda) + "},\n";
  out += "  \"variant\": \"" + rep.variant + "\",\n";
  out += "  \"ray_count\": " + std::to_string(rep.ray_count) + ",\n";
  out += "  \"tolerance\": " + num(rep.tolerance) + ",\n";
  out += "  \"seed\": " + std::to_string(rep.seed) + ",\n";
  out += "  \"threads\": " + std::to_string(rep.threads) + ",\n";
  out += "  \"verdicts\": {\"invisible_pass\": " +
         std::to_string(rep.pass_count) + ", \"miss\": " +
         std::to_string(rep.miss_count) + ", \"degenerate\": " +
         std::to_string(rep.degenerate_count) + ", \"fail\": " +
         std::to_string(rep.fail_count) + "},\n";
  out += "  \"sectors\": {\"upper\": " + sector(rep.upper) +
         ", \"lower\": " + sector(rep.lower) + "},\n";
  out += "  \"max_collinearity_error\": " + num(rep.max_collinearity_error) +
         ",\n";
  out += "  \"max_exit_line_distance\": " + num(rep.max_exit_line_distance) +
         ",\n";
  out += "  \"max_identity_residual\": " + num(rep.max_identity_residual) +
         ",\n";
  out += "  \"max_planarity\": " + num(rep.max_planarity) + ",\n";
  out += "  \"degenerate_angles\": [";
  for (size_t i = 0; i < rep.degenerate_angles.size(); ++i) {
    if (i) out += ", ";
    out += num(rep.degenerate_angles[i]);
  }
  out += "],\n";
  out += std::string("  \"overall_pass\": ") +
         (rep.overall_pass ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string serialize_trajectory(const Trajectory& traj) {
  std::string out;
  out += "{\n";
  out += "  \"schema\": \"trajectory/1\",\n";
  out += "  \"origin\": " + vec2(traj.origin) + ",\n";
  out += "  \"initial_direction\": " + vec2(traj.initial_direction) + ",\n";
  out += "  \"status\": \"" + std::string(trace_status_name(traj.status)) +
         "\",\n";
  out += "  \"reflections\": [\n";
  for (size_t i = 0; i < traj.reflections.size(); ++i) {
    const Reflection& r = traj.reflections[i];
    out += "    {\"edge_id\": " + std::to_string(r.edge_id) +
           ", \"class\": \"" + edge_class_name(r.cls) + "\", \"point\": " +
           vec2(r.point) + ", \"incoming\": " + vec2(r.incoming) +
           ", \"outgoing\": " + vec2(r.outgoing) + ", \"normal\": " +
           vec2(r.normal);
    out += i + 1 < traj.reflections.size() ? "},\n" : "}\n";
  }
  out += "  ],\n";
  out += "  \"final_direction\": " + vec2(traj.final_direction) + "\n";
  out += "}\n";
  return out;
}

std::string serialize_trajectory3d(const Trajectory3D& traj, Variant variant) {
  std::string out;
  out += "{\n";
  out += "  \"schema\": \"trajectory3d/1\",\n";
  out += "  \"variant\": \"" + std::string(variant_name(variant)) + "\",\n";
  out += "  \"origin\": " + vec3(traj.origin) + ",\n";
  out += "  \"initial_direction\": " + vec3(traj.initial_direction) + ",\n";
  out += "  \"plane_normal\": " + vec3(traj.plane_normal) + ",\n";
  out += "  \"max_plane_deviation\": " + num(traj.max_plane_deviation) + ",\n";
  out += "  \"status\": \"" + std::string(trace_status_name(traj.status)) +
         "\",\n";
  out += "  \"reflections\": [\n";
  for (size_t i = 0; i < traj.reflections.size(); ++i) {
    const Reflection3D& r = traj.reflections[i];
    out += "    {\"edge_id\": " + std::to_string(r.edge_id) +
           ", \"class\": \"" + edge_class_name(r.cls) + "\", \"point\": " +
           vec3(r.point) + ", \"incoming\": " + vec3(r.incoming) +
           ", \"outgoing\": " + vec3(r.outgoing);
    out += i + 1 < traj.reflections.size() ? "},\n" : "}\n";
  }
  out += "  ],\n";
  out += "  \"final_direction\": " + vec3(traj.final_direction) + "\n";
  out += "}\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace mirage
