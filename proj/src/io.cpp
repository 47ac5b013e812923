#include "hillduffing/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "hillduffing/error.hpp"

namespace hd::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

namespace {

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw DomainError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

tongues::Axis parse_axis(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw DomainError("range must look like lo:hi:count, got '" + std::string(text) + "'");
  }
  tongues::Axis a;
  a.lo = parse_number(text.substr(0, first), "range start");
  a.hi = parse_number(text.substr(first + 1, second - first - 1), "range end");
  const auto count_text = text.substr(second + 1);
  std::size_t count = 0;
  const auto res = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (res.ec != std::errc() || res.ptr != count_text.data() + count_text.size() || count < 2) {
    throw DomainError("range count must be an integer >= 2, got '" + std::string(count_text) + "'");
  }
  if (!(a.lo <= a.hi)) throw DomainError("range must satisfy lo <= hi");
  a.count = count;
  return a;
}

std::string format_axis(const tongues::Axis& axis) {
  return format_double(axis.lo) + ":" + format_double(axis.hi) + ":" + std::to_string(axis.count);
}

void write_grid_csv(std::ostream& os, const tongues::StabilityGrid& grid) {
  os << "x,y,trace,class\n";
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy) {
      const std::size_t i = grid.index(ix, iy);
      const double tr = grid.trace[i];
      os << format_double(grid.x_axis[ix]) << ',' << format_double(grid.y_axis[iy]) << ','
         << format_double(tr) << ','
         << (std::isnan(tr) ? std::string_view("nan") : hill::to_string(grid.classification[i]))
         << '\n';
    }
  }
}

void write_criteria_csv(std::ostream& os, const tongues::CriteriaGrid& grid) {
  os << "x,y";
  if (grid.selection.li_zhang) os << ",li_zhang";
  if (grid.selection.zhukovskii) os << ",zhukovskii";
  if (grid.selection.burdina) os << ",burdina";
  os << '\n';
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy) {
      const std::size_t i = grid.index(ix, iy);
      os << format_double(grid.x_axis[ix]) << ',' << format_double(grid.y_axis[iy]);
      if (grid.selection.li_zhang) os << ',' << criteria::to_string(grid.li_zhang[i]);
      if (grid.selection.zhukovskii) os << ',' << criteria::to_string(grid.zhukovskii[i]);
      if (grid.selection.burdina) os << ',' << criteria::to_string(grid.burdina[i]);
      os << '\n';
    }
  }
}

void write_trajectory_csv(std::ostream& os, const beam::ModePair& pair,
                          const beam::SimulationResult& result) {
  os << "t,w,w_dot,z,z_dot,energy\n";
  for (const auto& s : result.trajectory) {
    os << format_double(s.t) << ',' << format_double(s.w) << ',' << format_double(s.w_dot)
       << ',' << format_double(s.z) << ',' << format_double(s.z_dot) << ','
       << format_double(beam::energy(pair, s)) << '\n';
  }
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into '" + path + "'");
  }
}

}  // namespace hd::io
