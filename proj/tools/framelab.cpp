// Copyright 2026 The framelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// framelab: command-line front end for scenarios and the individual modules.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framelab/config.hpp"
#include "framelab/density.hpp"
#include "framelab/error.hpp"
#include "framelab/finframe.hpp"
#include "framelab/gram.hpp"
#include "framelab/io.hpp"
#include "framelab/localization.hpp"
#include "framelab/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace framelab;

namespace {

constexpr int kUsageError = 2;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::kConfig, "'" + text + "' is not a comma-separated list of numbers");
    }
    out.push_back(x);
  }
  if (out.empty()) throw Error(ErrorCode::kConfig, "empty list");
  return out;
}

Point parse_point(const std::string& text) {
  const auto c = parse_list(text);
  if (c.size() > static_cast<std::size_t>(kMaxDim)) throw Error(ErrorCode::kConfig, "point has too many coordinates");
  return Point(std::span<const double>(c));
}

json point_json(const Point& p) {
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

void emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_text(out, text);
  }
}

int cmd_run(const std::string& config, const std::string& out_dir, const std::optional<std::uint64_t>& seed) {
  auto cfg = config::load_scenario(config);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (seed) cfg.seed = *seed;
  return verify::run(cfg, &std::cout);
}

int cmd_density(const std::string& mu_arg, const std::string& nu_arg, double r_max, const std::string& out) {
  const auto mu = config::parse_measure_arg(mu_arg);
  const auto nu = config::parse_measure_arg(nu_arg);
  const auto sched = density::default_schedule(mu, nu, r_max);
  const auto est = density::density(mu, nu, sched);
  json doc;
  doc["schema"] = "framelab/1";
  doc["mu"] = mu_arg;
  doc["nu"] = nu_arg;
  json rows = json::array();
  for (const auto& r : est.per_radius) {
    rows.push_back({{"r", r.r}, {"sup_ratio", r.sup_ratio}, {"inf_ratio", r.inf_ratio}});
  }
  doc["per_radius"] = rows;
  doc["upper"] = est.upper;
  doc["lower"] = est.lower;
  doc["converged"] = est.converged;
  doc["slope"] = est.slope;
  doc["schedule"] = {{"box_lo", point_json(sched.box_lo)},
                     {"box_hi", point_json(sched.box_hi)},
                     {"center_spacing", sched.center_spacing},
                     {"centers", sched.centers().size()}};
  emit(doc, out);
  return 0;
}

int cmd_localize(const std::string& pair_path, const std::string& radii, const std::string& out) {
  const auto pc = config::load_pair(pair_path);
  const auto rows = localization::localization_table(pc.pair, pc.centers, parse_list(radii));
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    std::string center;
    for (double c : r.center.coords()) center += (center.empty() ? "" : " ") + io::format_double(c);
    table.push_back({center, io::format_double(r.r), io::format_double(r.defect), io::format_double(r.t1),
                     io::format_double(r.t2), io::format_double(r.normalizer), io::format_double(r.eps_eff),
                     io::format_double(r.trunc_bound)});
  }
  const std::vector<std::string> header = {"center", "r", "defect", "t1", "t2", "normalizer", "eps_eff", "trunc_bound"};
  if (out.empty() || out == "-") {
    std::cout << "center,r,defect,t1,t2,normalizer,eps_eff,trunc_bound\n";
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
  } else {
    io::write_csv(out, header, table);
  }
  return 0;
}

int cmd_gram(const std::string& kernel_json, const std::string& set_arg, const std::string& windows,
             const std::string& out) {
  const auto k = config::parse_kernel(kernel_json);
  const auto gamma = config::parse_measure_arg(set_arg);
  verify::GramStudyConfig cfg;
  if (!windows.empty()) cfg.windows = parse_list(windows);
  const auto study = verify::gram_truncation_study(k, gamma, cfg);
  json doc;
  doc["schema"] = "framelab/1";
  doc["kernel"] = k.name();
  doc["set"] = set_arg;
  json ws = json::array();
  for (const auto& w : study.windows) {
    ws.push_back({{"radius", w.radius},
                  {"points", w.points},
                  {"skipped", w.skipped},
                  {"min_eig", w.min_eig},
                  {"max_eig", w.max_eig},
                  {"min_nonzero", w.min_nonzero},
                  {"frame_lower", w.frame_lower},
                  {"frame_upper", w.frame_upper},
                  {"probe_rank", w.probe_rank},
                  {"samples", w.samples}});
  }
  doc["windows"] = ws;
  doc["frame_evidence"] = study.frame_evidence;
  doc["riesz_evidence"] = study.riesz_evidence;
  doc["frame_change"] = study.frame_change;
  doc["riesz_change"] = study.riesz_change;
  emit(doc, out);
  return 0;
}

int cmd_identity(const std::string& f_path, const std::string& g_path, const std::string& center, double radius,
                 const std::string& out) {
  const auto f = io::read_frame_csv(f_path);
  const auto g = io::read_frame_csv(g_path);
  if (f.dim() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "frames live in different dimensions");
  const auto omega = finframe::IndexSubset::from_ball(f, g, Ball(parse_point(center), radius));
  const auto t = finframe::comparison_identity(f, g, omega);
  const auto fb = finframe::frame_bounds(f);
  const auto gb = finframe::frame_bounds(g);
  auto c = [](cplx z) { return json::array({z.real(), z.imag()}); };
  json doc;
  doc["schema"] = "framelab/1";
  doc["dim"] = f.dim();
  doc["f"] = {{"size", f.size()}, {"lower", fb.lower}, {"upper", fb.upper}};
  doc["g"] = {{"size", g.size()}, {"lower", gb.lower}, {"upper", gb.upper}};
  doc["lhs"] = c(t.lhs);
  doc["diag_g"] = c(t.diag_g);
  doc["cross_g_in"] = c(t.cross_g_in);
  doc["cross_g_out"] = c(t.cross_g_out);
  doc["rhs"] = c(t.rhs);
  doc["residual"] = t.residual;
  emit(doc, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framelab: density, localization and frame-comparison experiments"};
  app.require_subcommand(1);

  std::string config, out_dir, out, mu, nu, pair, radii = "4,8,16,32", kernel, set, windows;
  std::string f_path, g_path, center = "0";
  std::optional<std::uint64_t> seed;
  double r_max = 128.0;
  double radius = 1.0;

  auto* run = app.add_subcommand("run", "Run a scenario and write the JSON report and CSV tables");
  run->add_option("--config", config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--out-dir", out_dir, "Output directory (default: the config's out_dir or .)");
  run->add_option("--seed", seed, "Override the scenario seed");

  auto* dens = app.add_subcommand("density", "Upper and lower density of mu with respect to nu");
  dens->add_option("--mu", mu, "lebesgue:D[:C] | lattice:SCALE:D | csv:PATH | FILE.json")->required();
  dens->add_option("--nu", nu, "Reference measure, same forms")->required();
  dens->add_option("--rmax", r_max, "Largest radius")->check(CLI::PositiveNumber);
  dens->add_option("--out", out, "Output JSON (default: stdout)");

  auto* loc = app.add_subcommand("localize", "Localization defects of a frame pair");
  loc->add_option("--pair", pair, "Pair JSON")->required()->check(CLI::ExistingFile);
  loc->add_option("--radii", radii, "Comma-separated radii");
  loc->add_option("--out", out, "Output CSV (default: stdout)");

  auto* gram = app.add_subcommand("gram", "Gram truncation study of a kernel family");
  gram->add_option("--kernel", kernel, "Kernel JSON, e.g. '{\"kernel\":\"fock\"}'")->required();
  gram->add_option("--set", set, "Index set: lattice:SCALE:D | csv:PATH | FILE.json")->required();
  gram->add_option("--windows", windows, "Comma-separated window radii");
  gram->add_option("--out", out, "Output JSON (default: stdout)");

  auto* ident = app.add_subcommand("identity", "Comparison identity for two finite frames");
  ident->add_option("--f", f_path, "Frame F as CSV (re,im pairs then weight)")->required()->check(CLI::ExistingFile);
  ident->add_option("--g", g_path, "Frame G as CSV")->required()->check(CLI::ExistingFile);
  ident->add_option("--center", center, "Ball center over the index points (comma-separated)");
  ident->add_option("--radius", radius, "Ball radius selecting the index subset")->check(CLI::NonNegativeNumber);
  ident->add_option("--out", out, "Output JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) return cmd_run(config, out_dir, seed);
    if (*dens) return cmd_density(mu, nu, r_max, out);
    if (*loc) return cmd_localize(pair, radii, out);
    if (*gram) return cmd_gram(kernel, set, windows, out);
    if (*ident) return cmd_identity(f_path, g_path, center, radius, out);
  } catch (const Error& e) {
    std::cerr << "framelab: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kConfig || e.code() == ErrorCode::kIo;
    return usage ? kUsageError : 1;
  } catch (const std::exception& e) {
    std::cerr << "framelab: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
