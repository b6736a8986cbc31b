#include "tsps/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tsps::io {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadFormat, msg); }

ordered_json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void check_header(const ordered_json& j, const std::string& kind) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind) {
    bad("expected a \"" + kind + "\" file");
  }
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != kFormatVersion) {
    bad("unknown format_version");
  }
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json metadata_json(const Metadata& meta) {
  ordered_json m = ordered_json::object();
  m["generator"] = meta.generator;
  if (meta.seed) m["seed"] = *meta.seed;
  if (meta.with_timestamp) m["timestamp"] = utc_now();
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : meta.config) cfg[k] = v;
  m["config"] = std::move(cfg);
  return m;
}

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

Vec3 vec_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a 3-vector");
  return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ordered_json plane_json(const Plane& p) {
  return ordered_json::array({p.point.x, p.point.y, p.point.z, p.unit_normal.x, p.unit_normal.y,
                              p.unit_normal.z});
}

Plane plane_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 6) bad("expected a 6-entry plane record");
  return Plane{{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()},
               {j[3].get<double>(), j[4].get<double>(), j[5].get<double>()}};
}

ordered_json time_scale_json(const TimeScale& ts) {
  ordered_json j = ordered_json::object();
  ordered_json pieces = ordered_json::array();
  for (const auto& p : ts.pieces) pieces.push_back(ordered_json::array({p[0], p[1]}));
  j["pieces"] = std::move(pieces);
  if (ts.period) {
    j["period"] = ordered_json::object({{"length", *ts.period}});
  } else {
    j["period"] = nullptr;
  }
  return j;
}

TimeScale time_scale_from(const ordered_json& j) {
  if (!j.is_object() || !j.contains("pieces")) bad("time scale needs a pieces array");
  std::vector<std::array<double, 2>> pieces;
  for (const auto& p : j["pieces"]) {
    if (!p.is_array() || p.size() != 2) bad("time scale piece must be [a, b]");
    pieces.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  std::optional<double> period;
  if (j.contains("period") && !j["period"].is_null()) {
    if (!j["period"].is_object() || !j["period"].contains("length")) {
      bad("period must be null or {\"length\": L}");
    }
    period = j["period"]["length"].get<double>();
  }
  try {
    return TimeScale::with_pieces(std::move(pieces), period);
  } catch (const Error& e) {
    bad(std::string("invalid time scale: ") + e.what());
  }
}

ordered_json domain_json(const GridDomain& d) {
  ordered_json j = ordered_json::object();
  j["scale1"] = time_scale_json(d.scale1);
  j["scale2"] = time_scale_json(d.scale2);
  j["window1"] = ordered_json::array({d.window1[0], d.window1[1]});
  j["window2"] = ordered_json::array({d.window2[0], d.window2[1]});
  j["step"] = d.sampling_step;
  return j;
}

GridDomain domain_from(const ordered_json& j) {
  if (!j.is_object()) bad("domain must be an object");
  for (const char* key : {"scale1", "scale2", "window1", "window2", "step"}) {
    if (!j.contains(key)) bad(std::string("domain is missing ") + key);
  }
  try {
    return GridDomain::realize(time_scale_from(j["scale1"]), time_scale_from(j["scale2"]),
                               j["window1"][0].get<double>(), j["window1"][1].get<double>(),
                               j["window2"][0].get<double>(), j["window2"][1].get<double>(),
                               j["step"].get<double>());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadFormat) throw;
    bad(std::string("domain does not realize: ") + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
  write_text(path, j.dump(2) + "\n");
}

}  // namespace

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string detect_kind(const std::filesystem::path& path) {
  const ordered_json j = parse_file(path);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    bad(path.string() + " has no kind field");
  }
  return j["kind"].get<std::string>();
}

void write_cauchy(const std::filesystem::path& path, const CauchyData& data,
                  const Metadata& meta) {
  ordered_json j = ordered_json::object();
  j["kind"] = "cauchy";
  j["format_version"] = kFormatVersion;
  j["metadata"] = metadata_json(meta);
  j["a"] = data.a;
  ordered_json s1 = ordered_json::array(), s2 = ordered_json::array();
  for (const Vec3& p : data.strip1) s1.push_back(vec_json(p));
  for (const Vec3& p : data.strip2) s2.push_back(vec_json(p));
  j["strip1"] = std::move(s1);
  j["strip2"] = std::move(s2);
  if (data.planes1) {
    ordered_json p1 = ordered_json::array(), p2 = ordered_json::array();
    for (const Plane& p : *data.planes1) p1.push_back(plane_json(p));
    for (const Plane& p : *data.planes2) p2.push_back(plane_json(p));
    j["planes1"] = std::move(p1);
    j["planes2"] = std::move(p2);
  }
  write_json(path, j);
}

CauchyData read_cauchy(const std::filesystem::path& path) {
  const ordered_json j = parse_file(path);
  check_header(j, "cauchy");
  for (const char* key : {"a", "strip1", "strip2"}) {
    if (!j.contains(key)) bad(std::string("cauchy file is missing ") + key);
  }
  CauchyData data;
  data.a = j["a"].get<double>();
  for (const auto& p : j["strip1"]) data.strip1.push_back(vec_from(p));
  for (const auto& p : j["strip2"]) data.strip2.push_back(vec_from(p));
  if (j.contains("planes1") != j.contains("planes2")) {
    bad("seed planes must come in pairs");
  }
  if (j.contains("planes1")) {
    std::vector<Plane> p1, p2;
    for (const auto& p : j["planes1"]) p1.push_back(plane_from(p));
    for (const auto& p : j["planes2"]) p2.push_back(plane_from(p));
    data.planes1 = std::move(p1);
    data.planes2 = std::move(p2);
  }
  return data;
}

void write_mesh(const std::filesystem::path& path, const SurfaceMesh& mesh, const Metadata& meta) {
  for (char v : mesh.valid_mask) {
    if (!v) bad("partially built meshes cannot be serialized");
  }
  ordered_json j = ordered_json::object();
  j["kind"] = "mesh";
  j["format_version"] = kFormatVersion;
  j["metadata"] = metadata_json(meta);
  j["a"] = mesh.a;
  j["rows"] = mesh.rows;
  j["cols"] = mesh.cols;
  ordered_json verts = ordered_json::array(), planes = ordered_json::array();
  for (const Vec3& p : mesh.vertices) verts.push_back(vec_json(p));
  for (const Plane& p : mesh.planes) planes.push_back(plane_json(p));
  j["vertices"] = std::move(verts);
  j["planes"] = std::move(planes);
  write_json(path, j);
}

SurfaceMesh read_mesh(const std::filesystem::path& path) {
  const ordered_json j = parse_file(path);
  check_header(j, "mesh");
  for (const char* key : {"a", "rows", "cols", "vertices", "planes"}) {
    if (!j.contains(key)) bad(std::string("mesh file is missing ") + key);
  }
  SurfaceMesh mesh;
  mesh.a = j["a"].get<double>();
  mesh.rows = j["rows"].get<std::size_t>();
  mesh.cols = j["cols"].get<std::size_t>();
  const std::size_t total = mesh.rows * mesh.cols;
  if (j["vertices"].size() != total || j["planes"].size() != total) {
    bad("vertex or plane count does not match rows*cols");
  }
  for (const auto& p : j["vertices"]) mesh.vertices.push_back(vec_from(p));
  for (const auto& p : j["planes"]) mesh.planes.push_back(plane_from(p));
  mesh.valid_mask.assign(total, 1);
  return mesh;
}

void write_forms(const std::filesystem::path& path, const FormsField& field,
                 const Metadata& meta) {
  ordered_json j = ordered_json::object();
  j["kind"] = "forms";
  j["format_version"] = kFormatVersion;
  j["metadata"] = metadata_json(meta);
  j["domain"] = domain_json(field.domain);
  j["margin"] = field.margin;
  ordered_json rows = ordered_json::array();
  for (const FundamentalForms& f : field.forms) {
    rows.push_back(ordered_json::array({f.E, f.F, f.G, f.L, f.M, f.N}));
  }
  j["forms"] = std::move(rows);
  write_json(path, j);
}

FormsField read_forms(const std::filesystem::path& path) {
  const ordered_json j = parse_file(path);
  check_header(j, "forms");
  for (const char* key : {"domain", "margin", "forms"}) {
    if (!j.contains(key)) bad(std::string("forms file is missing ") + key);
  }
  FormsField field;
  field.domain = domain_from(j["domain"]);
  field.margin = j["margin"].get<std::size_t>();
  if (j["forms"].size() != field.domain.rows() * field.domain.cols()) {
    bad("forms count does not match the domain");
  }
  for (const auto& row : j["forms"]) {
    if (!row.is_array() || row.size() != 6) bad("each forms entry must be [E,F,G,L,M,N]");
    FundamentalForms f;
    f.E = row[0].get<double>();
    f.F = row[1].get<double>();
    f.G = row[2].get<double>();
    f.L = row[3].get<double>();
    f.M = row[4].get<double>();
    f.N = row[5].get<double>();
    f.W = f.E * f.G - f.F * f.F;
    field.forms.push_back(f);
  }
  return field;
}

void write_surface(const std::filesystem::path& path, const TimeScaleSurface& surface,
                   const Metadata& meta) {
  ordered_json j = ordered_json::object();
  j["kind"] = "surface";
  j["format_version"] = kFormatVersion;
  j["metadata"] = metadata_json(meta);
  j["domain"] = domain_json(surface.r.domain);
  ordered_json values = ordered_json::array();
  for (const Vec3& p : surface.r.values) values.push_back(vec_json(p));
  j["values"] = std::move(values);
  write_json(path, j);
}

TimeScaleSurface read_surface(const std::filesystem::path& path) {
  const ordered_json j = parse_file(path);
  check_header(j, "surface");
  for (const char* key : {"domain", "values"}) {
    if (!j.contains(key)) bad(std::string("surface file is missing ") + key);
  }
  VecGrid g;
  g.domain = domain_from(j["domain"]);
  if (j["values"].size() != g.domain.rows() * g.domain.cols()) {
    bad("value count does not match the realized domain");
  }
  for (const auto& p : j["values"]) g.values.push_back(vec_from(p));
  return TimeScaleSurface::from_grid(std::move(g));
}

TimeScale read_time_scale(const std::filesystem::path& path) {
  return time_scale_from(parse_file(path));
}

void write_time_scale(const std::filesystem::path& path, const TimeScale& ts) {
  write_json(path, time_scale_json(ts));
}

void write_obj(const std::filesystem::path& path, const SurfaceMesh& mesh) {
  std::ostringstream out;
  for (const Vec3& p : mesh.vertices) {
    out << "v " << format17(p.x) << ' ' << format17(p.y) << ' ' << format17(p.z) << '\n';
  }
  for (std::size_t m = 0; m + 1 < mesh.rows; ++m) {
    for (std::size_t n = 0; n + 1 < mesh.cols; ++n) {
      const std::size_t base = m * mesh.cols + n + 1;
      out << "f " << base << ' ' << (base + mesh.cols) << ' ' << (base + mesh.cols + 1) << ' '
          << (base + 1) << '\n';
    }
  }
  write_text(path, out.str());
}

void write_mesh_csv(const std::filesystem::path& path, const SurfaceMesh& mesh) {
  if (mesh.rows < 3 || mesh.cols < 3) {
    throw Error(ErrorCode::TooSmall, "report needs at least a 3x3 mesh");
  }
  std::ostringstream out;
  out << "m,n,phi,psi,theta,K,edge_residual,coplanarity_residual\n";
  const double a = mesh.a;
  for (std::size_t m = 0; m + 2 < mesh.rows; ++m) {
    for (std::size_t n = 0; n + 2 < mesh.cols; ++n) {
      const QuadGeometry q = quad_geometry(mesh, m, n);
      const double k = discrete_gaussian_curvature(mesh, m, n);
      const auto cr = coplanarity_residual(mesh, m, n);
      const double edge = std::max(
          {std::abs(dist(mesh.at(m + 1, n), mesh.at(m, n)) / a - 1),
           std::abs(dist(mesh.at(m, n + 1), mesh.at(m, n)) / a - 1),
           std::abs(dist(mesh.at(m + 1, n + 1), mesh.at(m + 1, n)) / a - 1),
           std::abs(dist(mesh.at(m + 1, n + 1), mesh.at(m, n + 1)) / a - 1)});
      out << m << ',' << n << ',' << format17(q.phi) << ',' << format17(q.psi) << ','
          << format17(q.theta) << ',' << format17(k) << ',' << format17(edge) << ','
          << format17(std::max(cr.first, cr.second)) << '\n';
    }
  }
  write_text(path, out.str());
}

void write_forms_csv(const std::filesystem::path& path, const FormsField& field) {
  std::ostringstream out;
  out << "index_u,index_v,K_extrinsic,K_intrinsic,codazzi_1,codazzi_2\n";
  for (std::size_t i = 0; i < field.domain.rows(); ++i) {
    for (std::size_t j = 0; j < field.domain.cols(); ++j) {
      if (!field.has_ring(i, j, 2)) continue;
      const double ke = curvatures(field.at(i, j)).first;
      const double ki = gauss_curvature_intrinsic(field, i, j);
      const auto cz = codazzi_residuals(field, i, j);
      out << i << ',' << j << ',' << format17(ke) << ',' << format17(ki) << ','
          << format17(cz.first) << ',' << format17(cz.second) << '\n';
    }
  }
  write_text(path, out.str());
}

void write_ts_csv(const std::filesystem::path& path, const TimeScaleSurface& surface) {
  std::ostringstream out;
  out << "u,v,point_class_1,point_class_2,K_time,unit_res_1,unit_res_2,tangency_res_1,"
         "tangency_res_2\n";
  const GridDomain& d = surface.r.domain;
  for (std::size_t i = 0; i + 2 < d.rows(); ++i) {
    for (std::size_t j = 0; j + 2 < d.cols(); ++j) {
      const std::size_t k = surface.idx(i, j);
      if (!surface.d1n_ok[k] || !surface.d2n_ok[k]) continue;
      double kt;
      try {
        kt = ts_gaussian_curvature(surface, i, j);
      } catch (const Error&) {
        continue;
      }
      out << format17(d.t1[i]) << ',' << format17(d.t2[j]) << ','
          << classify(d.scale1, d.t1[i]).label() << ',' << classify(d.scale2, d.t2[j]).label()
          << ',' << format17(kt) << ',' << format17(std::abs(norm(surface.d1r[k]) - 1)) << ','
          << format17(std::abs(norm(surface.d2r[k]) - 1)) << ','
          << format17(std::abs(dot(surface.d1n[k], surface.d1r[k]))) << ','
          << format17(std::abs(dot(surface.d2n[k], surface.d2r[k]))) << '\n';
    }
  }
  write_text(path, out.str());
}

}  // namespace tsps::io
