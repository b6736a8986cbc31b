#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsps/discrete_surface.hpp"
#include "tsps/forms.hpp"
#include "tsps/grid.hpp"
#include "tsps/time_scale.hpp"
#include "tsps/ts_surface.hpp"

namespace tsps::io {

inline constexpr int kFormatVersion = 1;

// Provenance block written into every JSON file. The timestamp is the only
// non-deterministic field and can be suppressed for byte-identical reruns.
struct Metadata {
  std::string generator;
  std::optional<std::uint64_t> seed;
  bool with_timestamp = true;
  std::vector<std::pair<std::string, std::string>> config;
};

// Readers throw BadFormat on malformed or version-mismatched content and
// IoFailure when the file cannot be opened; writers throw IoFailure.

std::string detect_kind(const std::filesystem::path& path);

void write_cauchy(const std::filesystem::path& path, const CauchyData& data,
                  const Metadata& meta);
CauchyData read_cauchy(const std::filesystem::path& path);

void write_mesh(const std::filesystem::path& path, const SurfaceMesh& mesh, const Metadata& meta);
SurfaceMesh read_mesh(const std::filesystem::path& path);

void write_forms(const std::filesystem::path& path, const FormsField& field,
                 const Metadata& meta);
FormsField read_forms(const std::filesystem::path& path);

void write_surface(const std::filesystem::path& path, const TimeScaleSurface& surface,
                   const Metadata& meta);
TimeScaleSurface read_surface(const std::filesystem::path& path);

// Bare {"pieces": [[a,b],...], "period": null | {"length": L}} object files.
TimeScale read_time_scale(const std::filesystem::path& path);
void write_time_scale(const std::filesystem::path& path, const TimeScale& ts);

// Wavefront export: rows*cols `v` lines, (rows-1)(cols-1) quad `f` lines,
// 1-based, row-major.
void write_obj(const std::filesystem::path& path, const SurfaceMesh& mesh);

// Per-quad report rows over m in [0, rows-3], n in [0, cols-3], where every
// column is defined. Columns:
// m,n,phi,psi,theta,K,edge_residual,coplanarity_residual
void write_mesh_csv(const std::filesystem::path& path, const SurfaceMesh& mesh);

// Columns: index_u,index_v,K_extrinsic,K_intrinsic,codazzi_1,codazzi_2
void write_forms_csv(const std::filesystem::path& path, const FormsField& field);

// Columns: u,v,point_class_1,point_class_2,K_time,unit_res_1,unit_res_2,
// tangency_res_1,tangency_res_2
void write_ts_csv(const std::filesystem::path& path, const TimeScaleSurface& surface);

// 17 significant digits, enough to round-trip a double exactly.
std::string format17(double v);

}  // namespace tsps::io
