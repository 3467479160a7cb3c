// Copyright (c) the mirage authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirage/body.hpp"
#include "mirage/conics.hpp"
#include "mirage/docio.hpp"
#include "mirage/invisibility.hpp"
#include "mirage/mesh.hpp"
#include "mirage/svg.hpp"
#include "mirage/symmetry3d.hpp"
#include "mirage/theory.hpp"
#include "mirage/tracer.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalidInput = 2;

constexpr double kDefaultA = 2.0;
constexpr double kDefaultB = 1.7320508075688772;
constexpr double kDefaultPhiB = 0.8;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

mirage::Body2D load_body_file(const std::string& path) {
  return mirage::deserialize_body(mirage::read_text_file(path));
}

mirage::Body2D default_body() {
  return mirage::build_invisible_body(
      mirage::make_confocal_pair(kDefaultA, kDefaultB), kDefaultPhiB);
}

mirage::Body2D body_from_option(const std::string& body_path) {
  return body_path.empty() ? default_body() : load_body_file(body_path);
}

std::optional<mirage::Variant> parse_variant(const std::string& name) {
  if (name == "major-axis") return mirage::Variant::AboutMajorAxis;
  if (name == "perp-axis") {
    return mirage::Variant::AboutPerpendicularAxisThroughF1;
  }
  return std::nullopt;
}

bool parse_dir3(const std::string& text, mirage::Vec3& out) {
  std::istringstream ss(text);
  char c1 = 0;
  char c2 = 0;
  if (!(ss >> out.x >> c1 >> out.y >> c2 >> out.z)) return false;
  if (c1 != ',' || c2 != ',') return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

struct ConstructArgs {
  double a{kDefaultA};
  double b{kDefaultB};
  double phi_b{kDefaultPhiB};
  bool degrees{false};
  std::string out_path;
};

int run_construct(const ConstructArgs& args) {
  const double phi_b = args.degrees ? args.phi_b * mirage::kPi / 180.0
                                    : args.phi_b;
  mirage::Body2D body;
  try {
    const mirage::ConfocalPair pair = mirage::make_confocal_pair(args.a, args.b);
    body = mirage::build_invisible_body(pair, phi_b);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  std::cout << "a = " << fmt(body.pair.a) << "\n";
  std::cout << "b = " << fmt(body.pair.b) << "\n";
  std::cout << "c = " << fmt(body.pair.c) << "\n";
  std::cout << "alpha = " << fmt(body.pair.alpha) << "\n";
  std::cout << "beta = " << fmt(body.pair.beta) << "\n";
  std::cout << "phi_H = " << fmt(body.phi_H) << "\n";
  std::cout << "phi_B = " << fmt(body.phi_B) << "\n";
  std::cout << "lambda = " << fmt(body.lambda) << "\n";
  if (!args.out_path.empty()) {
    mirage::write_text_file(args.out_path, mirage::serialize_body(body));
    std::cout << "wrote " << args.out_path << "\n";
  }
  return kExitPass;
}

struct TraceArgs {
  std::string body_path;
  double angle{0.0};
  bool have_angle{false};
  std::string dir3_text;
  std::string variant_name{"major-axis"};
  bool degrees{false};
  std::string svg_path;
  std::string json_path;
};

int run_trace(const TraceArgs& args) {
  const mirage::Body2D body = body_from_option(args.body_path);
  if (!args.dir3_text.empty()) {
    mirage::Vec3 dir;
    if (!parse_dir3(args.dir3_text, dir)) {
      std::cerr << "error: --dir3 expects X,Y,Z\n";
      return kExitInvalidInput;
    }
    const auto variant = parse_variant(args.variant_name);
    if (!variant) {
      std::cerr << "error: unknown variant '" << args.variant_name << "'\n";
      return kExitInvalidInput;
    }
    const mirage::RevolutionBody rb = mirage::revolve(body, *variant);
    mirage::Trajectory3D traj;
    try {
      traj = mirage::trace3d_from_focus(rb, dir);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInvalidInput;
    }
    std::cout << "status = " << mirage::trace_status_name(traj.status) << "\n";
    std::cout << "bounces = " << traj.reflections.size() << "\n";
    std::cout << "max_plane_deviation = " << fmt(traj.max_plane_deviation)
              << "\n";
    const std::string doc = mirage::serialize_trajectory3d(traj, *variant);
    if (!args.json_path.empty()) {
      mirage::write_text_file(args.json_path, doc);
    } else {
      std::cout << doc;
    }
    return kExitPass;
  }

  const double angle = args.degrees ? args.angle * mirage::kPi / 180.0
                                    : args.angle;
  const auto [f1, f2] = mirage::foci(body.pair);
  const mirage::Trajectory traj = mirage::trace(
      body, f1, mirage::Vec2{std::cos(angle), std::sin(angle)}, 16);
  std::cout << "status = " << mirage::trace_status_name(traj.status) << "\n";
  std::cout << "bounces = " << traj.reflections.size() << "\n";
  if (traj.reflections.empty() &&
      traj.status == mirage::TraceStatus::Escaped) {
    std::cout << "verdict = miss\n";
  }
  if (!args.json_path.empty()) {
    mirage::write_text_file(args.json_path, mirage::serialize_trajectory(traj));
  }
  if (!args.svg_path.empty()) {
    mirage::write_text_file(args.svg_path,
                            mirage::render_trace_overlay(body, traj));
  }
  if (args.svg_path.empty() && args.json_path.empty()) {
    std::cout << mirage::serialize_trajectory(traj);
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string body_path;
  int rays{10000};
  double tolerance{1e-9};
  std::uint64_t seed{12345};
  int threads{1};
  int dim{2};
  std::string variant_name{"major-axis"};
  std::string report_path;
};

int run_verify(const VerifyArgs& args) {
  if (args.rays < 1) {
    std::cerr << "error: --rays must be at least 1\n";
    return kExitInvalidInput;
  }
  if (!(args.tolerance > 0.0)) {
    std::cerr << "error: --tolerance must be positive\n";
    return kExitInvalidInput;
  }
  if (args.dim != 2 && args.dim != 3) {
    std::cerr << "error: --dim must be 2 or 3\n";
    return kExitInvalidInput;
  }
  const mirage::Body2D body = body_from_option(args.body_path);
  mirage::VerificationReport rep;
  if (args.dim == 2) {
    rep = mirage::verify_fan(body, args.rays, args.tolerance, args.seed,
                             args.threads);
  } else {
    const auto variant = parse_variant(args.variant_name);
    if (!variant) {
      std::cerr << "error: unknown variant '" << args.variant_name << "'\n";
      return kExitInvalidInput;
    }
    rep = mirage::verify_fan_3d(mirage::revolve(body, *variant), args.rays,
                                args.tolerance, args.seed, args.threads);
  }
  const std::string doc = mirage::serialize_report(rep);
  if (!args.report_path.empty()) mirage::write_text_file(args.report_path, doc);
  std::cout << doc;
  std::cout << (rep.overall_pass ? "verification passed" : "verification failed")
            << ": pass=" << rep.pass_count << " miss=" << rep.miss_count
            << " degenerate=" << rep.degenerate_count
            << " fail=" << rep.fail_count
            << " max_collinearity=" << fmt(rep.max_collinearity_error) << "\n";
  return rep.overall_pass ? kExitPass : kExitVerifyFail;
}

struct FigureArgs {
  std::string body_path;
  std::string style{"fig4"};
  std::string out_path;
};

int run_figure(const FigureArgs& args) {
  const mirage::Body2D body = body_from_option(args.body_path);
  std::string svg;
  if (args.style == "fig2") {
    svg = mirage::render_fig2(body);
  } else if (args.style == "fig3") {
    svg = mirage::render_fig3(body);
  } else if (args.style == "fig4") {
    svg = mirage::render_fig4(body);
  } else {
    std::cerr << "error: unknown style '" << args.style
              << "' (expected fig2, fig3, or fig4)\n";
    return kExitInvalidInput;
  }
  if (!args.out_path.empty()) {
    mirage::write_text_file(args.out_path, svg);
    std::cout << "wrote " << args.out_path << "\n";
  } else {
    std::cout << svg;
  }
  return kExitPass;
}

struct MeshArgs {
  std::string body_path;
  std::string variant_name{"major-axis"};
  std::string steps_text{"64x32"};
  std::string out_path;
};

bool parse_steps(const std::string& text, int& azimuthal, int& meridian) {
  const size_t xpos = text.find('x');
  if (xpos == std::string::npos) return false;
  try {
    size_t used = 0;
    azimuthal = std::stoi(text.substr(0, xpos), &used);
    if (used != xpos) return false;
    meridian = std::stoi(text.substr(xpos + 1), &used);
    if (used != text.size() - xpos - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int run_mesh(const MeshArgs& args) {
  const auto variant = parse_variant(args.variant_name);
  if (!variant) {
    std::cerr << "error: unknown variant '" << args.variant_name << "'\n";
    return kExitInvalidInput;
  }
  int azimuthal = 0;
  int meridian = 0;
  if (!parse_steps(args.steps_text, azimuthal, meridian)) {
    std::cerr << "error: --steps expects AxM, for example 64x32\n";
    return kExitInvalidInput;
  }
  const mirage::Body2D body = body_from_option(args.body_path);
  const mirage::RevolutionBody rb = mirage::revolve(body, *variant);
  std::string obj;
  try {
    obj = mirage::export_mesh_obj(rb, azimuthal, meridian);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (!args.out_path.empty()) {
    mirage::write_text_file(args.out_path, obj);
    std::cout << "wrote " << args.out_path << "\n";
  } else {
    std::cout << obj;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror bodies invisible from one point: construction, ray "
               "tracing, verification, figures, meshes"};
  app.require_subcommand(1);

  ConstructArgs cons;
  CLI::App* sc_construct =
      app.add_subcommand("construct", "Build a body and write its document");
  sc_construct->add_option("--a", cons.a, "Ellipse semi-major axis");
  sc_construct->add_option("--b", cons.b, "Ellipse semi-minor axis");
  sc_construct->add_option("--phi-b", cons.phi_b,
                           "Angular half-width of the mirror sector");
  sc_construct->add_flag("--degrees", cons.degrees,
                         "Interpret angles in degrees");
  sc_construct->add_option("--out", cons.out_path, "Body document path");

  TraceArgs tr;
  CLI::App* sc_trace = app.add_subcommand("trace", "Trace one ray from the "
                                                   "emission focus");
  sc_trace->add_option("--body", tr.body_path, "Body document path");
  CLI::Option* angle_opt =
      sc_trace->add_option("--angle", tr.angle, "Planar ray angle (radians)");
  sc_trace->add_option("--dir3", tr.dir3_text, "3D direction X,Y,Z");
  sc_trace->add_option("--variant", tr.variant_name,
                       "major-axis or perp-axis (with --dir3)");
  sc_trace->add_flag("--degrees", tr.degrees, "Interpret angles in degrees");
  sc_trace->add_option("--svg", tr.svg_path, "Write an SVG overlay here");
  sc_trace->add_option("--json", tr.json_path, "Write the trajectory record "
                                               "here");

  VerifyArgs ver;
  CLI::App* sc_verify =
      app.add_subcommand("verify", "Run an invisibility verification fan");
  sc_verify->add_option("--body", ver.body_path, "Body document path");
  sc_verify->add_option("--rays", ver.rays, "Number of rays in the fan");
  sc_verify->add_option("--tolerance", ver.tolerance,
                        "Relative tolerance for all verdict checks");
  sc_verify->add_option("--seed", ver.seed, "Seed for fan jitter");
  sc_verify->add_option("--threads", ver.threads, "Worker thread count");
  sc_verify->add_option("--dim", ver.dim, "2 for planar, 3 for revolved");
  sc_verify->add_option("--variant", ver.variant_name,
                        "major-axis or perp-axis (with --dim 3)");
  sc_verify->add_option("--report", ver.report_path, "Report document path");

  FigureArgs fig;
  CLI::App* sc_figure = app.add_subcommand("figure", "Render an SVG figure");
  sc_figure->add_option("--body", fig.body_path, "Body document path");
  sc_figure->add_option("--style", fig.style, "fig2, fig3, or fig4");
  sc_figure->add_option("--out", fig.out_path, "SVG output path");

  MeshArgs mesh;
  CLI::App* sc_mesh =
      app.add_subcommand("mesh", "Export the revolved body as an OBJ mesh");
  sc_mesh->add_option("--body", mesh.body_path, "Body document path");
  sc_mesh->add_option("--variant", mesh.variant_name,
                      "major-axis or perp-axis");
  sc_mesh->add_option("--steps", mesh.steps_text,
                      "Azimuthal x meridian sampling, for example 64x32");
  sc_mesh->add_option("--out", mesh.out_path, "Mesh output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (sc_construct->parsed()) return run_construct(cons);
    if (sc_trace->parsed()) {
      tr.have_angle = angle_opt->count() > 0;
      return run_trace(tr);
    }
    if (sc_verify->parsed()) return run_verify(ver);
    if (sc_figure->parsed()) return run_figure(fig);
    if (sc_mesh->parsed()) return run_mesh(mesh);
  } catch (const mirage::ParseError& e) {
    std::cerr << "error: body document is malformed: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const mirage::ValidationError& e) {
    std::cerr << "error: body document is invalid: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
