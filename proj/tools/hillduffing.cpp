// hillduffing: grid scans, criteria maps, tongue brackets, beam runs and
// self-checks for xi'' + (gamma + y^2) xi = 0 with y a Duffing cn-solution.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hillduffing/beam.hpp"
#include "hillduffing/duffing.hpp"
#include "hillduffing/error.hpp"
#include "hillduffing/io.hpp"
#include "hillduffing/tongues.hpp"
#include "hillduffing/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned workers = 1;
  double integrator_tol = 1e-10;
  std::string out;
};

unsigned resolve_workers(unsigned flag) {
  if (const char* env = std::getenv("HILLDUFFING_WORKERS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) {
      throw hd::DomainError("HILLDUFFING_WORKERS must be an integer >= 1");
    }
    return static_cast<unsigned>(v);
  }
  if (flag < 1) throw hd::DomainError("--workers must be >= 1");
  return flag;
}

void emit(const std::string& path, const std::string& body) {
  try {
    hd::io::write_file_atomically(path, body);
  } catch (const std::exception& e) {
    throw IoFailure(e.what());
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

json meta_header(std::string_view command) {
  json j;
  j["command"] = command;
  j["version"] = hd::io::kLibraryVersion;
  return j;
}

// scan -----------------------------------------------------------------

struct ScanArgs {
  std::string plane = "gamma";
  std::string x = "0:3:60";
  std::string y;
  double level = 2.0;
  double band = 1e-4;
  bool figure_level = false;
};

int run_scan(const ScanArgs& a, const Common& c) {
  hd::tongues::ScanConfig cfg;
  cfg.plane = hd::tongues::parse_plane(a.plane);
  cfg.x = hd::io::parse_axis(a.x);
  const std::string y = !a.y.empty() ? a.y
                        : cfg.plane == hd::tongues::Plane::Gamma ? "-2:6:160"
                                                                 : "0.05:7:140";
  cfg.y = hd::io::parse_axis(y);
  cfg.integrator_tol = c.integrator_tol;
  cfg.classifier.level = a.figure_level ? 1.98 : a.level;
  cfg.classifier.band = a.band;
  cfg.workers = resolve_workers(c.workers);
  if (!(cfg.integrator_tol >= 1e-12 && cfg.integrator_tol <= 1e-6)) {
    throw hd::DomainError("--tol must lie in [1e-12, 1e-6]");
  }

  const auto t0 = Clock::now();
  const auto grid = hd::tongues::scan(cfg);
  const double wall = seconds_since(t0);

  std::ostringstream csv;
  hd::io::write_grid_csv(csv, grid);

  json meta = meta_header("scan");
  meta["plane"] = a.plane;
  meta["x"] = hd::io::format_axis(cfg.x);
  meta["y"] = hd::io::format_axis(cfg.y);
  meta["integrator_tol"] = cfg.integrator_tol;
  meta["threshold"] = cfg.classifier.level;
  meta["band"] = cfg.classifier.band;
  meta["figure_level"] = a.figure_level;
  meta["workers"] = cfg.workers;
  meta["cells"] = grid.trace.size();
  meta["failed_cells"] = grid.failed_cells;
  meta["wall_time_s"] = wall;

  emit(c.out + ".csv", csv.str());
  emit(c.out + ".meta.json", meta.dump(2) + "\n");
  std::printf("%zu cells (%zu failed) -> %s.csv in %.2fs\n", grid.trace.size(),
              grid.failed_cells, c.out.c_str(), wall);
  return kOk;
}

// criteria-map ---------------------------------------------------------

struct CriteriaArgs {
  std::string plane = "gamma";
  std::string x = "0:3:60";
  std::string y;
  std::string only;
};

int run_criteria(const CriteriaArgs& a, const Common& c) {
  const auto plane = hd::tongues::parse_plane(a.plane);
  const auto x = hd::io::parse_axis(a.x);
  const auto y = hd::io::parse_axis(!a.y.empty() ? a.y
                                    : plane == hd::tongues::Plane::Gamma ? "-2:6:160"
                                                                         : "0.05:7:140");
  hd::tongues::CriteriaSelection sel;
  if (!a.only.empty()) {
    sel = {false, false, false};
    std::stringstream ss(a.only);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item == "li_zhang") sel.li_zhang = true;
      else if (item == "zhukovskii") sel.zhukovskii = true;
      else if (item == "burdina") sel.burdina = true;
      else throw hd::DomainError("unknown criterion '" + item + "'");
    }
  }
  const unsigned workers = resolve_workers(c.workers);

  const auto t0 = Clock::now();
  const auto grid = hd::tongues::criteria_scan(plane, x, y, sel, workers);
  const double wall = seconds_since(t0);

  std::ostringstream csv;
  hd::io::write_criteria_csv(csv, grid);

  json meta = meta_header("criteria-map");
  meta["plane"] = a.plane;
  meta["x"] = hd::io::format_axis(x);
  meta["y"] = hd::io::format_axis(y);
  meta["criteria"] = {{"li_zhang", sel.li_zhang},
                      {"zhukovskii", sel.zhukovskii},
                      {"burdina", sel.burdina}};
  meta["workers"] = workers;
  meta["wall_time_s"] = wall;

  emit(c.out + ".csv", csv.str());
  emit(c.out + ".meta.json", meta.dump(2) + "\n");
  std::printf("%zu cells -> %s.csv in %.2fs\n", x.count * y.count, c.out.c_str(), wall);
  return kOk;
}

// tongue-bracket -------------------------------------------------------

struct BracketArgs {
  std::string plane = "gamma";
  int ell = 1;
  double delta = 1.0;
  double threshold = 2.0 - 1e-4;
  std::vector<double> window;
  std::string format = "csv";
};

int run_bracket(const BracketArgs& a, const Common& c) {
  hd::tongues::BracketOptions opts;
  opts.threshold = a.threshold;
  opts.integrator_tol = c.integrator_tol;
  if (!a.window.empty()) {
    if (a.window.size() != 2) throw hd::DomainError("--window takes two values");
    opts.window = std::pair{a.window[0], a.window[1]};
  }
  const auto plane = hd::tongues::parse_plane(a.plane);
  const auto s = hd::tongues::trace_level_bracket(plane, a.ell, a.delta, opts);

  std::string body;
  if (a.format == "json") {
    json j = meta_header("tongue-bracket");
    j["plane"] = a.plane;
    j["ell"] = s.ell;
    j["delta"] = s.delta;
    j["threshold"] = opts.threshold;
    j["lower"] = s.lower;
    j["upper"] = s.upper;
    body = j.dump(2) + "\n";
  } else {
    body = "ell,delta,lower,upper\n" + std::to_string(s.ell) + "," +
           hd::io::format_double(s.delta) + "," + hd::io::format_double(s.lower) + "," +
           hd::io::format_double(s.upper) + "\n";
  }
  if (c.out.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    emit(c.out + (a.format == "json" ? ".json" : ".csv"), body);
  }
  return kOk;
}

// beam -----------------------------------------------------------------

struct BeamArgs {
  int m = 1;
  int n = 2;
  double delta = 1.0;
  std::optional<double> horizon;
  double z_ratio = 1e-3;
  double growth = 20.0;
  std::size_t samples = 4096;
};

int run_beam(const BeamArgs& a, const Common& c) {
  const hd::beam::ModePair pair(a.m, a.n);
  hd::beam::SimulationConfig cfg;
  cfg.delta = a.delta;
  cfg.horizon = a.horizon;
  cfg.z_ratio = a.z_ratio;
  cfg.growth_factor = a.growth;
  cfg.samples = a.samples;
  cfg.tol = std::min(c.integrator_tol, 1e-11);

  const auto t0 = Clock::now();
  const auto r = hd::beam::simulate(pair, cfg);
  const double wall = seconds_since(t0);

  std::printf("verdict %s", std::string(hd::beam::to_string(r.verdict)).c_str());
  if (r.onset_time) std::printf(" onset %.6g", *r.onset_time);
  std::printf(" max_growth %.6g energy_drift %.3g horizon %.6g\n", r.max_z_growth,
              r.max_energy_drift, r.horizon);

  if (!c.out.empty()) {
    std::ostringstream csv;
    hd::io::write_trajectory_csv(csv, pair, r);
    json meta = meta_header("beam");
    meta["m"] = a.m;
    meta["n"] = a.n;
    meta["delta"] = a.delta;
    meta["z_ratio"] = a.z_ratio;
    meta["growth_factor"] = a.growth;
    meta["horizon"] = r.horizon;
    meta["tol"] = cfg.tol;
    meta["verdict"] = hd::beam::to_string(r.verdict);
    meta["onset_time"] = r.onset_time ? json(*r.onset_time) : json(nullptr);
    meta["max_z_growth"] = r.max_z_growth;
    meta["max_energy_drift"] = r.max_energy_drift;
    meta["wall_time_s"] = wall;
    emit(c.out + ".csv", csv.str());
    emit(c.out + ".meta.json", meta.dump(2) + "\n");
  }
  return kOk;
}

// verify ---------------------------------------------------------------

int run_verify(const std::string& suite) {
  const auto checks = hd::verify::run(hd::verify::parse_suite(suite));
  std::size_t failed = 0;
  for (const auto& ch : checks) {
    std::printf("%s  %-48s measured %.15g expected %.15g tol %.1e\n",
                ch.pass ? "PASS" : "FAIL", ch.name.c_str(), ch.measured, ch.expected,
                ch.tolerance);
    failed += ch.pass ? 0 : 1;
  }
  std::printf("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
  return failed == 0 ? kOk : kVerifyFailed;
}

// duffing-eval ---------------------------------------------------------

struct DuffingArgs {
  double delta = 1.0;
  double omega = 1.0;
  std::string t = "0:10:11";
};

int run_duffing(const DuffingArgs& a, const Common& c) {
  const hd::duffing::DuffingParams p(a.delta, a.omega);
  const auto ts = hd::io::parse_axis(a.t);
  std::string body = "t,y,y_dot\n";
  for (double t : ts.values()) {
    body += hd::io::format_double(t) + "," +
            hd::io::format_double(hd::duffing::solution(p, t)) + "," +
            hd::io::format_double(hd::duffing::velocity(p, t)) + "\n";
  }
  std::fprintf(stderr, "period %.17g modulus %.17g\n", hd::duffing::period(p),
               p.modulus().value());
  if (c.out.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    emit(c.out + ".csv", body);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of Hill equations driven by Duffing oscillations"};
  app.set_version_flag("--version", std::string(hd::io::kLibraryVersion));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--workers", common.workers, "worker threads (HILLDUFFING_WORKERS wins)")
        ->capture_default_str();
    sub->add_option("--tol", common.integrator_tol, "integrator tolerance")
        ->capture_default_str();
    auto* o = sub->add_option("-o,--out", common.out, "output name without extension");
    if (needs_out) o->required();
  };

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "monodromy-trace stability grid");
  s->add_option("--plane", scan.plane, "gamma or omega")->capture_default_str();
  s->add_option("--x", scan.x, "delta axis lo:hi:count")->capture_default_str();
  s->add_option("--y", scan.y, "gamma/omega axis lo:hi:count");
  s->add_option("--threshold", scan.level, "classification level")->capture_default_str();
  s->add_option("--band", scan.band, "boundary band around the level")->capture_default_str();
  s->add_flag("--paper-figures", scan.figure_level, "classify against |trace| = 1.98");
  add_common(s, true);

  CriteriaArgs crit;
  auto* cm = app.add_subcommand("criteria-map", "sufficient-criteria verdict grid");
  cm->add_option("--plane", crit.plane, "gamma or omega")->capture_default_str();
  cm->add_option("--x", crit.x, "delta axis lo:hi:count")->capture_default_str();
  cm->add_option("--y", crit.y, "gamma/omega axis lo:hi:count");
  cm->add_option("--criteria", crit.only, "comma list of li_zhang,zhukovskii,burdina");
  add_common(cm, true);

  BracketArgs br;
  auto* tb = app.add_subcommand("tongue-bracket", "edges of one resonance tongue");
  tb->add_option("--plane", br.plane, "gamma or omega")->capture_default_str();
  tb->add_option("--ell", br.ell, "tongue index >= 1")->capture_default_str();
  tb->add_option("--delta", br.delta)->capture_default_str();
  tb->add_option("--threshold", br.threshold)->capture_default_str();
  tb->add_option("--window", br.window, "search window lo hi")->expected(2);
  tb->add_option("--format", br.format)->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  add_common(tb, false);

  BeamArgs bm;
  auto* be = app.add_subcommand("beam", "two-mode beam simulation");
  be->add_option("--m", bm.m)->capture_default_str();
  be->add_option("--n", bm.n)->capture_default_str();
  be->add_option("--delta", bm.delta)->capture_default_str();
  be->add_option("--horizon", bm.horizon, "default 50 T_omega");
  be->add_option("--z-ratio", bm.z_ratio)->capture_default_str();
  be->add_option("--growth", bm.growth, "transfer threshold on |z|/z(0)")
      ->capture_default_str();
  be->add_option("--samples", bm.samples)->capture_default_str();
  add_common(be, false);

  std::string suite = "all";
  auto* ve = app.add_subcommand("verify", "built-in numerical checks");
  ve->add_option("name", suite, "elliptic|exact-lines|criteria|tongues|beam|all")
      ->capture_default_str();
  ve->add_option("--suite", suite, "same as the positional name");

  DuffingArgs du;
  auto* de = app.add_subcommand("duffing-eval", "closed-form Duffing solution on a t grid");
  de->add_option("--delta", du.delta)->capture_default_str();
  de->add_option("--omega", du.omega)->capture_default_str();
  de->add_option("--t", du.t, "time axis lo:hi:count")->capture_default_str();
  add_common(de, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return run_scan(scan, common);
    if (*cm) return run_criteria(crit, common);
    if (*tb) return run_bracket(br, common);
    if (*be) return run_beam(bm, common);
    if (*ve) return run_verify(suite);
    if (*de) return run_duffing(du, common);
  } catch (const IoFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const hd::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kVerifyFailed;
  }
  return kUsage;
}
