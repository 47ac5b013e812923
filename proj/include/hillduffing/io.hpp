#pragma once

// Locale-independent text formats: CSV grids and trajectories, JSON
// metadata sidecars, and the lo:hi:count range syntax.

#include <iosfwd>
#include <string>
#include <string_view>

#include "hillduffing/beam.hpp"
#include "hillduffing/tongues.hpp"

namespace hd::io {

inline constexpr std::string_view kLibraryVersion = "1.0.0";

/// Shortest-roundtrip-independent fixed format: 17 significant digits,
/// '.' separator, "nan" for NaN.
std::string format_double(double v);

/// Parses "lo:hi:count" (inclusive endpoints, count >= 2).
tongues::Axis parse_axis(std::string_view text);
std::string format_axis(const tongues::Axis& axis);

/// Header "x,y,trace,class"; one row per cell, x outermost.
void write_grid_csv(std::ostream& os, const tongues::StabilityGrid& grid);

/// Header "x,y" plus one S/I column per selected criterion.
void write_criteria_csv(std::ostream& os, const tongues::CriteriaGrid& grid);

/// Header "t,w,w_dot,z,z_dot,energy".
void write_trajectory_csv(std::ostream& os, const beam::ModePair& pair,
                          const beam::SimulationResult& result);

/// Writes `contents` to `path` through a temporary file and a rename, so a
/// failed run never leaves a partial file. Throws std::runtime_error.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace hd::io
