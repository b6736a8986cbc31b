// Command-line front end: sample generators, the Cauchy-data builder, mesh and
// surface verifiers, OBJ/CSV exporters, and a time-scale derivative table.
// Exit codes: 0 success, 2 input error, 3 construction failure, 4 invariant
// failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsps/discrete_surface.hpp"
#include "tsps/errors.hpp"
#include "tsps/forms.hpp"
#include "tsps/grid.hpp"
#include "tsps/io.hpp"
#include "tsps/samples.hpp"
#include "tsps/time_scale.hpp"
#include "tsps/ts_surface.hpp"

namespace {

using tsps::io::format17;

std::pair<std::string, std::string> kv(const std::string& key, double v) {
  return {key, format17(v)};
}
std::pair<std::string, std::string> kv(const std::string& key, long long v) {
  return {key, std::to_string(v)};
}

tsps::GridDomain real_domain(double u0, double u1, double v0, double v1, double h) {
  return tsps::GridDomain::realize(tsps::TimeScale::reals(u0, u1), tsps::TimeScale::reals(v0, v1), u0,
                             u1, v0, v1, h);
}

void print_mesh_report(const tsps::InvariantReport& rep) {
  std::cout << "quads " << rep.quad_count << ", degenerate " << rep.degenerate_quads << "\n"
            << "worst edge residual       " << format17(rep.worst_edge_residual) << "\n"
            << "worst coplanarity         " << format17(rep.worst_coplanarity) << "\n"
            << "worst star-plane distance " << format17(rep.worst_star_plane_dist) << "\n"
            << "theta mean " << format17(rep.theta_mean) << ", max dev "
            << format17(rep.theta_max_dev) << "\n"
            << "K mean " << format17(rep.k_mean) << ", max dev " << format17(rep.k_max_dev)
            << "\n"
            << "K + sin^2(theta)/a^2      " << format17(rep.k_relation_residual) << "\n"
            << "a - sin(theta)            " << format17(rep.a_minus_sin_theta) << "\n";
}

// Audit only: printed for information, never feeds the exit code.
void print_conjecture_audit(const tsps::TimeScaleSurface& s) {
  try {
    const tsps::ConjectureReport c = tsps::conjecture_constancy_report(s);
    std::cout << "curvature constancy audit: count " << c.count << ", mean "
              << format17(c.mean) << ", stddev " << format17(c.stddev) << ", max |dev| "
              << format17(c.max_abs_dev) << "\n";
  } catch (const tsps::Error& e) {
    std::cout << "curvature constancy audit unavailable: " << e.what() << "\n";
  }
}

// Scans forward edges and quad stars so a failed verify points at the spot.
void print_worst_locations(const tsps::SurfaceMesh& mesh) {
  double worst_edge = -1, worst_cop = -1;
  std::size_t em = 0, en = 0, cm = 0, cn = 0;
  for (std::size_t m = 0; m < mesh.rows; ++m) {
    for (std::size_t n = 0; n < mesh.cols; ++n) {
      if (m + 1 < mesh.rows) {
        const double r = std::abs(dist(mesh.at(m + 1, n), mesh.at(m, n)) / mesh.a - 1);
        if (r > worst_edge) worst_edge = r, em = m, en = n;
      }
      if (n + 1 < mesh.cols) {
        const double r = std::abs(dist(mesh.at(m, n + 1), mesh.at(m, n)) / mesh.a - 1);
        if (r > worst_edge) worst_edge = r, em = m, en = n;
      }
      if (m + 2 < mesh.rows && n + 2 < mesh.cols) {
        const auto cr = tsps::coplanarity_residual(mesh, m, n);
        const double r = std::max(cr.first, cr.second);
        if (r > worst_cop) worst_cop = r, cm = m, cn = n;
      }
    }
  }
  if (worst_edge >= 0) {
    std::cout << "worst edge residual at (" << em << "," << en << "): " << format17(worst_edge)
              << "\n";
  }
  if (worst_cop >= 0) {
    std::cout << "worst coplanarity at (" << cm << "," << cn << "): " << format17(worst_cop)
              << "\n";
  }
}

std::filesystem::path default_report_path(std::filesystem::path in) {
  in.replace_extension(".report.csv");
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudospherical surfaces on time scales"};
  app.require_subcommand(1);
  app.fallthrough();

  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp,
               "omit the metadata timestamp so reruns are byte-identical");

  // ---- sample ----
  CLI::App* sample = app.add_subcommand("sample", "generate built-in sample data");
  sample->require_subcommand(1);
  sample->fallthrough();

  struct {
    double gamma = 1.5707963267948966, a = 0.1, twist = 0.01;
    int n1 = 30, n2 = 30;
    std::string out;
  } am;
  CLI::App* amsler = sample->add_subcommand("amsler", "unit-edge straight-strip Cauchy data");
  amsler->add_option("--gamma", am.gamma, "angle between the two strips");
  amsler->add_option("--a", am.a, "edge length");
  amsler->add_option("--n1", am.n1, "strip 1 vertex count");
  amsler->add_option("--n2", am.n2, "strip 2 vertex count");
  amsler->add_option("--twist", am.twist, "seed tangent-plane twist per step");
  amsler->add_option("-o,--output", am.out, "output cauchy JSON")->required();

  struct {
    std::uint64_t seed = 1;
    double a = 1.0, amplitude = 0.1;
    int n = 10;
    std::string out;
  } pert;
  CLI::App* perturbed =
      sample->add_subcommand("perturbed", "seeded random unit-edge strips (test data)");
  perturbed->add_option("--seed", pert.seed, "RNG seed");
  perturbed->add_option("--a", pert.a, "edge length");
  perturbed->add_option("--n", pert.n, "vertices per strip");
  perturbed->add_option("--amplitude", pert.amplitude, "edge-to-edge rotation bound");
  perturbed->add_option("-o,--output", pert.out, "output cauchy JSON")->required();

  struct {
    double umin = 0, umax = 0, vmin = 0, vmax = 0, h = 0.01;
    std::string out;
  } sol;
  CLI::App* soliton =
      sample->add_subcommand("soliton-forms", "one-soliton Chebyshev form field");
  soliton->set_help_flag("--help", "print help");
  soliton->add_option("--umin", sol.umin, "window lower bound, first axis")->required();
  soliton->add_option("--umax", sol.umax, "window upper bound, first axis")->required();
  CLI::Option* vmin_opt = soliton->add_option("--vmin", sol.vmin, "defaults to --umin");
  soliton->add_option("--vmax", sol.vmax, "defaults to --umax")->needs(vmin_opt);
  soliton->add_option("--h", sol.h, "sampling step");
  soliton->add_option("-o,--output", sol.out, "output forms JSON")->required();

  struct {
    double radius = 1, u0 = 0, u1 = 3.141592653589793, v0 = 0.3, v1 = 2.841592653589793,
           h = 0.05;
    std::string out;
  } sph;
  CLI::App* sphere = sample->add_subcommand("sphere", "round sphere sampled as a surface");
  sphere->set_help_flag("--help", "print help");
  sphere->add_option("--radius", sph.radius)->required();
  sphere->add_option("--u0", sph.u0);
  sphere->add_option("--u1", sph.u1);
  sphere->add_option("--v0", sph.v0, "keep away from the poles");
  sphere->add_option("--v1", sph.v1);
  sphere->add_option("--h", sph.h, "sampling step");
  sphere->add_option("-o,--output", sph.out, "output surface JSON")->required();

  struct {
    double radius = 1, u0 = 0, u1 = 6.283185307179586, v0 = 0, v1 = 1, h = 0.05;
    std::string out;
  } cyl;
  CLI::App* cylinder = sample->add_subcommand("cylinder", "circular cylinder surface");
  cylinder->set_help_flag("--help", "print help");
  cylinder->add_option("--radius", cyl.radius)->required();
  cylinder->add_option("--u0", cyl.u0);
  cylinder->add_option("--u1", cyl.u1);
  cylinder->add_option("--v0", cyl.v0);
  cylinder->add_option("--v1", cyl.v1);
  cylinder->add_option("--h", cyl.h, "sampling step");
  cylinder->add_option("-o,--output", cyl.out, "output surface JSON")->required();

  struct {
    double u0 = 0.5, u1 = 2.5, v0 = 0, v1 = 6.283185307179586, h = 0.05;
    std::string out;
  } trac;
  CLI::App* tractroid = sample->add_subcommand("tractroid", "tractrix of revolution surface");
  tractroid->set_help_flag("--help", "print help");
  tractroid->add_option("--u0", trac.u0, "keep |tanh u| > 1e-3");
  tractroid->add_option("--u1", trac.u1);
  tractroid->add_option("--v0", trac.v0);
  tractroid->add_option("--v1", trac.v1);
  tractroid->add_option("--h", trac.h, "sampling step");
  tractroid->add_option("-o,--output", trac.out, "output surface JSON")->required();

  // ---- build ----
  struct {
    std::string in, out;
    double tol = 1e-8;
  } bld;
  CLI::App* build = app.add_subcommand("build", "propagate a mesh from Cauchy data");
  build->add_option("input", bld.in, "cauchy JSON")->required();
  build->add_option("--tol", bld.tol, "residual gate, a-normalized");
  build->add_option("-o,--output", bld.out, "output mesh JSON")->required();

  // ---- verify ----
  struct {
    std::string in, report;
    double tol = 1e-8;
  } ver;
  CLI::App* verify = app.add_subcommand("verify", "check invariants, write a CSV report");
  verify->add_option("input", ver.in, "mesh or surface JSON")->required();
  verify->add_option("--tol", ver.tol, "hard-invariant gate");
  verify->add_option("-r,--report", ver.report, "report CSV path (default <input>.report.csv)");

  // ---- export ----
  struct {
    std::string in, obj, csv;
  } exp;
  CLI::App* exporter = app.add_subcommand("export", "write OBJ geometry or CSV reports");
  exporter->add_option("input", exp.in, "mesh, forms or surface JSON")->required();
  exporter->add_option("--obj", exp.obj, "OBJ path (meshes only)");
  exporter->add_option("--csv", exp.csv, "CSV report path");

  // ---- ts ----
  struct {
    std::string func, scale, out;
    double lo = 0, hi = 0, step = 0.01, tol = 1e-8;
  } ts;
  CLI::App* tscmd = app.add_subcommand("ts", "tabulate delta/nabla derivatives on a time scale");
  tscmd->add_option("function", ts.func, "one of poly2, poly3, sin, exp")
      ->required()
      ->check(CLI::IsMember({"poly2", "poly3", "sin", "exp"}));
  tscmd->add_option("--scale", ts.scale, "time scale JSON")->required();
  tscmd->add_option("--lo", ts.lo, "window lower bound")->required();
  tscmd->add_option("--hi", ts.hi, "window upper bound")->required();
  tscmd->add_option("--step", ts.step, "sampling step inside continuum pieces");
  tscmd->add_option("--tol", ts.tol, "derivative convergence tolerance");
  tscmd->add_option("-o,--output", ts.out, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tsps::io::Metadata meta;
    meta.with_timestamp = !no_timestamp;

    if (amsler->parsed()) {
      meta.generator = "tsps sample amsler";
      meta.config = {kv("gamma", am.gamma), kv("a", am.a), kv("n1", (long long)am.n1),
                     kv("n2", (long long)am.n2), kv("twist", am.twist)};
      tsps::io::write_cauchy(am.out, tsps::amsler_cauchy_data(am.gamma, am.a, am.n1, am.n2,
                                                              am.twist),
                             meta);
      std::cout << "wrote " << am.out << "\n";
    } else if (perturbed->parsed()) {
      meta.generator = "tsps sample perturbed";
      meta.seed = pert.seed;
      meta.config = {kv("a", pert.a), kv("n", (long long)pert.n),
                     kv("amplitude", pert.amplitude)};
      tsps::io::write_cauchy(pert.out,
                             tsps::perturbed_cauchy_data(pert.seed, pert.a, pert.n,
                                                         pert.amplitude),
                             meta);
      std::cout << "wrote " << pert.out << "\n";
    } else if (soliton->parsed()) {
      if (vmin_opt->count() == 0) {
        sol.vmin = sol.umin;
        sol.vmax = sol.umax;
      }
      meta.generator = "tsps sample soliton-forms";
      meta.config = {kv("umin", sol.umin), kv("umax", sol.umax), kv("vmin", sol.vmin),
                     kv("vmax", sol.vmax), kv("h", sol.h)};
      const tsps::GridDomain dom = real_domain(sol.umin, sol.umax, sol.vmin, sol.vmax, sol.h);
      tsps::io::write_forms(sol.out,
                            tsps::chebyshev_forms_from_omega(tsps::sample_one_soliton(dom)),
                            meta);
      std::cout << "wrote " << sol.out << "\n";
    } else if (sphere->parsed()) {
      meta.generator = "tsps sample sphere";
      meta.config = {kv("radius", sph.radius), kv("u0", sph.u0), kv("u1", sph.u1),
                     kv("v0", sph.v0), kv("v1", sph.v1), kv("h", sph.h)};
      const tsps::GridDomain dom = real_domain(sph.u0, sph.u1, sph.v0, sph.v1, sph.h);
      tsps::io::write_surface(
          sph.out, tsps::TimeScaleSurface::from_grid(tsps::sphere_immersion(sph.radius, dom)),
          meta);
      std::cout << "wrote " << sph.out << "\n";
    } else if (cylinder->parsed()) {
      meta.generator = "tsps sample cylinder";
      meta.config = {kv("radius", cyl.radius), kv("u0", cyl.u0), kv("u1", cyl.u1),
                     kv("v0", cyl.v0), kv("v1", cyl.v1), kv("h", cyl.h)};
      const tsps::GridDomain dom = real_domain(cyl.u0, cyl.u1, cyl.v0, cyl.v1, cyl.h);
      tsps::io::write_surface(
          cyl.out,
          tsps::TimeScaleSurface::from_grid(tsps::cylinder_immersion(cyl.radius, dom)), meta);
      std::cout << "wrote " << cyl.out << "\n";
    } else if (tractroid->parsed()) {
      meta.generator = "tsps sample tractroid";
      meta.config = {kv("u0", trac.u0), kv("u1", trac.u1), kv("v0", trac.v0),
                     kv("v1", trac.v1), kv("h", trac.h)};
      const tsps::GridDomain dom = real_domain(trac.u0, trac.u1, trac.v0, trac.v1, trac.h);
      tsps::io::write_surface(trac.out,
                              tsps::TimeScaleSurface::from_grid(tsps::tractroid_immersion(dom)),
                              meta);
      std::cout << "wrote " << trac.out << "\n";
    } else if (build->parsed()) {
      const tsps::CauchyData data = tsps::io::read_cauchy(bld.in);
      const tsps::SurfaceMesh mesh = tsps::build_from_cauchy(data, bld.tol);
      meta.generator = "tsps build";
      meta.config = {{"input", bld.in}, kv("tol", bld.tol)};
      tsps::io::write_mesh(bld.out, mesh, meta);
      std::cout << "wrote " << bld.out << " (" << mesh.rows << "x" << mesh.cols << ")\n";
      const tsps::InvariantReport rep = tsps::verify_chebyshev_net(mesh, bld.tol);
      print_mesh_report(rep);
      if (!rep.pass) {
        std::cerr << "invariant check failed at tol " << format17(bld.tol) << "\n";
        return 4;
      }
    } else if (verify->parsed()) {
      const std::filesystem::path report =
          ver.report.empty() ? default_report_path(ver.in) : std::filesystem::path(ver.report);
      const std::string kind = tsps::io::detect_kind(ver.in);
      if (kind == "mesh") {
        const tsps::SurfaceMesh mesh = tsps::io::read_mesh(ver.in);
        const tsps::InvariantReport rep = tsps::verify_chebyshev_net(mesh, ver.tol);
        tsps::io::write_mesh_csv(report, mesh);
        std::cout << "report " << report.string() << "\n";
        print_mesh_report(rep);
        try {
          print_conjecture_audit(tsps::TimeScaleSurface::from_mesh(mesh));
        } catch (const tsps::Error& e) {
          std::cout << "curvature constancy audit unavailable: " << e.what() << "\n";
        }
        if (!rep.pass) {
          print_worst_locations(mesh);
          std::cerr << "invariant check failed at tol " << format17(ver.tol) << "\n";
          return 4;
        }
      } else if (kind == "surface") {
        const tsps::TimeScaleSurface s = tsps::io::read_surface(ver.in);
        const tsps::TsReport rep = tsps::verify_ts_chebyshev(s, ver.tol);
        tsps::io::write_ts_csv(report, s);
        std::cout << "report " << report.string() << "\n"
                  << "worst |D1 r| deviation " << format17(rep.worst_unit_res_1) << "\n"
                  << "worst |D2 r| deviation " << format17(rep.worst_unit_res_2) << "\n"
                  << "worst D1 n tangency    " << format17(rep.worst_tangency_res_1) << "\n"
                  << "worst D2 n tangency    " << format17(rep.worst_tangency_res_2) << "\n"
                  << "mixed-quotient residual " << format17(rep.worst_mixed_residual)
                  << " (informational)\n";
        print_conjecture_audit(s);
        if (!rep.pass) {
          std::cerr << "invariant check failed at tol " << format17(ver.tol) << "\n";
          return 4;
        }
      } else {
        std::cerr << "error: cannot verify a \"" << kind << "\" file\n";
        return 2;
      }
    } else if (exporter->parsed()) {
      if (exp.obj.empty() && exp.csv.empty()) {
        std::cerr << "error: export needs --obj and/or --csv\n";
        return 2;
      }
      const std::string kind = tsps::io::detect_kind(exp.in);
      if (kind == "mesh") {
        const tsps::SurfaceMesh mesh = tsps::io::read_mesh(exp.in);
        if (!exp.obj.empty()) {
          tsps::io::write_obj(exp.obj, mesh);
          std::cout << "wrote " << exp.obj << "\n";
        }
        if (!exp.csv.empty()) {
          tsps::io::write_mesh_csv(exp.csv, mesh);
          std::cout << "wrote " << exp.csv << "\n";
        }
      } else if (kind == "forms" || kind == "surface") {
        if (!exp.obj.empty()) {
          std::cerr << "error: OBJ export needs a mesh file\n";
          return 2;
        }
        if (kind == "forms") {
          tsps::io::write_forms_csv(exp.csv, tsps::io::read_forms(exp.in));
        } else {
          tsps::io::write_ts_csv(exp.csv, tsps::io::read_surface(exp.in));
        }
        std::cout << "wrote " << exp.csv << "\n";
      } else {
        std::cerr << "error: cannot export a \"" << kind << "\" file\n";
        return 2;
      }
    } else if (tscmd->parsed()) {
      const tsps::TimeScale scale = tsps::io::read_time_scale(ts.scale);
      std::function<double(double)> f;
      if (ts.func == "poly2") {
        f = [](double t) { return t * t; };
      } else if (ts.func == "poly3") {
        f = [](double t) { return t * t * t; };
      } else if (ts.func == "sin") {
        f = [](double t) { return std::sin(t); };
      } else {
        f = [](double t) { return std::exp(t); };
      }
      std::ofstream out(ts.out);
      if (!out) throw tsps::Error(tsps::ErrorCode::IoFailure, "cannot write " + ts.out);
      out << "t,class,delta,nabla\n";
      for (double t : tsps::realize_axis(scale, ts.lo, ts.hi, ts.step)) {
        out << format17(t) << ',' << tsps::classify(scale, t).label() << ',';
        try {
          out << format17(tsps::delta_derivative(scale, f, t, ts.tol));
        } catch (const tsps::Error&) {
        }
        out << ',';
        try {
          out << format17(tsps::nabla_derivative(scale, f, t, ts.tol));
        } catch (const tsps::Error&) {
        }
        out << '\n';
      }
      if (!out) throw tsps::Error(tsps::ErrorCode::IoFailure, "write failed for " + ts.out);
      std::cout << "wrote " << ts.out << "\n";
    }
    return 0;
  } catch (const tsps::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.index()) std::cerr << " [quad " << e.index()->first << "," << e.index()->second << "]";
    std::cerr << "\n";
    switch (e.code()) {
      case tsps::ErrorCode::ConsistencyViolation:
      case tsps::ErrorCode::ParallelPlanes:
      case tsps::ErrorCode::TangentDegenerate:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
