#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tsps/io.hpp"
#include "tsps/samples.hpp"
#include "tsps/ts_surface.hpp"

namespace fs = std::filesystem;

namespace {

const char* kBin = TSPS_CLI_PATH;

fs::path work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "tsps_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(kBin) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("sample, build, verify, export pipeline") {
  const fs::path dir = work_dir();
  const fs::path cauchy = dir / "amsler.json";
  const fs::path mesh = dir / "amsler_mesh.json";

  CHECK(run("sample amsler --gamma 1.5707963267948966 --a 0.1 --n1 12 --n2 12 --twist 0.01"
            " --no-timestamp -o " +
            q(cauchy)) == 0);
  REQUIRE(fs::exists(cauchy));
  CHECK(tsps::io::detect_kind(cauchy) == "cauchy");

  CHECK(run("build " + q(cauchy) + " -o " + q(mesh)) == 0);
  REQUIRE(fs::exists(mesh));
  CHECK(tsps::io::detect_kind(mesh) == "mesh");

  CHECK(run("verify " + q(mesh)) == 0);
  CHECK(fs::exists(dir / "amsler_mesh.report.csv"));

  const fs::path obj = dir / "amsler.obj";
  const fs::path csv = dir / "amsler.csv";
  CHECK(run("export " + q(mesh) + " --obj " + q(obj) + " --csv " + q(csv)) == 0);
  CHECK(fs::exists(obj));
  CHECK(fs::exists(csv));
  CHECK(slurp(obj).find("f 1 13 14 2") != std::string::npos);

  // export with no output selected is an input error
  CHECK(run("export " + q(mesh)) == 2);
}

TEST_CASE("exit codes distinguish failure classes") {
  const fs::path dir = work_dir();

  // bad strip angle
  CHECK(run("sample amsler --gamma 3.2 -o " + q(dir / "bad.json")) == 2);

  // unparseable input file
  std::ofstream(dir / "garbage.json") << "{ not json ]";
  CHECK(run("build " + q(dir / "garbage.json") + " -o " + q(dir / "out.json")) == 2);

  // wrong kind: building from a mesh file
  const fs::path cauchy = dir / "c.json";
  const fs::path mesh = dir / "m.json";
  REQUIRE(run("sample amsler --a 0.1 --n1 8 --n2 8 -o " + q(cauchy)) == 0);
  REQUIRE(run("build " + q(cauchy) + " -o " + q(mesh)) == 0);
  CHECK(run("build " + q(mesh) + " -o " + q(dir / "mm.json")) == 2);

  // geometrically inconsistent strips fail construction
  const fs::path wild = dir / "wild.json";
  REQUIRE(run("sample perturbed --seed 5 --a 0.1 --n 10 --amplitude 0.3 -o " + q(wild)) == 0);
  CHECK(run("build " + q(wild) + " -o " + q(dir / "wild_mesh.json")) == 3);

  // verification of a sound mesh at an impossible tolerance is an invariant
  // failure, not an input error
  CHECK(run("verify " + q(mesh) + " --tol 1e-18") == 4);

  // verifying a cauchy file is an input error
  CHECK(run("verify " + q(cauchy)) == 2);

  // unknown time-scale function
  CHECK(run("ts nope --scale integers --lo 0 --hi 3 -o " + q(dir / "ts.csv")) == 2);

  // unwritable output path
  CHECK(run("sample amsler -o /nonexistent_dir_tsps/x.json") == 2);

  // missing required subcommand
  CHECK(run("") == 2);
}

TEST_CASE("derivative table over the integers") {
  const fs::path dir = work_dir();
  const fs::path scale = dir / "integers.json";
  std::ofstream(scale) << "{\"pieces\": [[0.0, 0.0]], \"period\": {\"length\": 1.0}}\n";
  const fs::path csv = dir / "poly2.csv";
  CHECK(run("ts poly2 --scale " + q(scale) + " --lo 0 --hi 5 -o " + q(csv)) == 0);

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,class,delta,nabla");

  // delta of t^2 on the integers is 2t + 1, nabla is 2t - 1
  bool saw_three = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string t_str, cls, delta_str, nabla_str;
    std::getline(row, t_str, ',');
    std::getline(row, cls, ',');
    std::getline(row, delta_str, ',');
    std::getline(row, nabla_str, ',');
    if (t_str.empty()) continue;
    const double t = std::strtod(t_str.c_str(), nullptr);
    if (t == 3.0) {
      saw_three = true;
      CHECK(cls == "isolated");
      CHECK(std::strtod(delta_str.c_str(), nullptr) == 7.0);
      CHECK(std::strtod(nabla_str.c_str(), nullptr) == 5.0);
    }
  }
  CHECK(saw_three);
}

TEST_CASE("derivative table over a custom scale file") {
  const fs::path dir = work_dir();
  const fs::path scale = dir / "scale.json";
  std::ofstream(scale) << "{\"pieces\": [[0.0, 1.0], [2.0, 2.0]], \"period\": null}\n";
  const fs::path csv = dir / "mixed.csv";
  CHECK(run("ts poly2 --scale " + q(scale) + " --lo 0 --hi 2 --step 0.25 -o " + q(csv)) == 0);

  const std::string text = slurp(csv);
  CHECK(text.find("dense") != std::string::npos);
  // at the right-scattered point 1 the quotient is exact: ((2)^2-1)/(2-1) = 3
  CHECK(text.find("1,right-scattered/left-dense,3,") != std::string::npos);
}

TEST_CASE("reruns without timestamps are byte-identical") {
  const fs::path dir = work_dir();
  const fs::path a = dir / "rerun_a.json";
  const fs::path b = dir / "rerun_b.json";
  const std::string args = "sample amsler --gamma 1.2 --a 0.25 --n1 6 --n2 7 --no-timestamp -o ";
  CHECK(run(args + q(a)) == 0);
  CHECK(run(args + q(b)) == 0);
  const std::string ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.find("timestamp") == std::string::npos);

  // default runs do carry a timestamp
  const fs::path c = dir / "rerun_c.json";
  CHECK(run("sample amsler --gamma 1.2 --a 0.25 --n1 6 --n2 7 -o " + q(c)) == 0);
  CHECK(slurp(c).find("timestamp") != std::string::npos);
}

TEST_CASE("soliton forms and surface samples run end to end") {
  const fs::path dir = work_dir();
  const fs::path forms = dir / "soliton.json";
  CHECK(run("sample soliton-forms --umin -2.1 --umax -0.1 --h 0.05 -o " + q(forms)) == 0);
  CHECK(tsps::io::detect_kind(forms) == "forms");
  const fs::path fcsv = dir / "soliton.csv";
  CHECK(run("export " + q(forms) + " --csv " + q(fcsv)) == 0);
  CHECK(fs::exists(fcsv));
  // obj export only makes sense for meshes
  CHECK(run("export " + q(forms) + " --obj " + q(dir / "soliton.obj")) == 2);

  // the cylinder chart is unit-speed but its circles are not asymptotic
  // lines, so net verification correctly rejects it
  const fs::path cyl = dir / "cylinder.json";
  CHECK(run("sample cylinder --radius 1 -o " + q(cyl)) == 0);
  CHECK(tsps::io::detect_kind(cyl) == "surface");
  CHECK(run("verify " + q(cyl) + " --tol 0.05") == 4);

  // a sphere chart is not a unit net at all
  const fs::path sphere = dir / "sphere.json";
  CHECK(run("sample sphere --radius 2 --u0 0.6 --u1 1.4 --v0 0.7 --v1 1.5 --h 0.05 -o " +
            q(sphere)) == 0);
  CHECK(run("verify " + q(sphere) + " --tol 0.05") == 4);
}

TEST_CASE("verify accepts a genuine asymptotic unit net surface") {
  using namespace tsps;
  const fs::path dir = work_dir();
  const GridDomain dom = GridDomain::realize(TimeScale::reals(0.25, 1.25),
                                             TimeScale::reals(0.25, 1.25), 0.25, 1.25, 0.25,
                                             1.25, 0.01);
  const VecGrid g = VecGrid::sample(dom, [](double u, double v) {
    const double xi = u + v, eta = u - v;
    const double se = 1.0 / std::cosh(xi);
    return Vec3{se * std::cos(eta), se * std::sin(eta), xi - std::tanh(xi)};
  });
  const fs::path surf = dir / "pseudosphere.json";
  io::Metadata meta;
  meta.generator = "test";
  meta.with_timestamp = false;
  io::write_surface(surf, TimeScaleSurface::from_grid(g), meta);
  CHECK(run("verify " + q(surf) + " --tol 0.05") == 0);
}
