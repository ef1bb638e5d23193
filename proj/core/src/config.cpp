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

#include "framelab/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "framelab/error.hpp"
#include "framelab/io.hpp"
#include "json.hpp"

namespace framelab::config {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::kConfig, "config error at " + (path.empty() ? "/" : path) + ": " + msg);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

json parse_text(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, what + " is not valid JSON: " + e.what());
  }
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void allow_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  require_object(j, path);
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      fail(child(path, k), "unknown key");
    }
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

double positive(const json& j, const std::string& path) {
  const double x = number(j, path);
  if (!(x > 0.0)) fail(path, "expected a positive number");
  return x;
}

std::int64_t integer(const json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path, "expected an integer");
  const auto x = j.get<std::int64_t>();
  if (x < lo || x > hi) {
    fail(path, "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

Point point(const json& j, const std::string& path, int dim = 0) {
  if (!j.is_array() || j.empty() || j.size() > static_cast<std::size_t>(kMaxDim)) {
    fail(path, "expected an array of 1 to 4 numbers");
  }
  std::vector<double> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(number(j[i], child(path, i)));
  if (dim != 0 && static_cast<int>(c.size()) != dim) {
    fail(path, "expected a point of dimension " + std::to_string(dim));
  }
  return Point(std::span<const double>(c));
}

std::vector<Point> points(const json& j, const std::string& path, int dim = 0) {
  if (!j.is_array()) fail(path, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(point(j[i], child(path, i), dim));
    if (dim == 0) dim = out.back().dim();
  }
  return out;
}

std::vector<double> radii(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of radii");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(positive(j[i], child(path, i)));
    if (i > 0 && !(out[i] > out[i - 1])) fail(child(path, i), "radii must be strictly increasing");
  }
  return out;
}

int dimension(const json& obj, const std::string& path) {
  if (!obj.contains("dim")) fail(child(path, "dim"), "missing");
  return static_cast<int>(integer(obj.at("dim"), child(path, "dim"), 1, kMaxDim));
}

template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    fail(path, e.what());
  }
}

PointSet point_set(std::vector<Point> pts, const json& obj, const std::string& path) {
  std::optional<double> sep;
  if (obj.contains("separation")) sep = positive(obj.at("separation"), child(path, "separation"));
  if (pts.empty()) fail(path, "point set is empty");
  const int d = pts.front().dim();
  return guarded(path, [&] { return PointSet(d, std::move(pts), sep); });
}

// All coordinates even removed: 2s (Z^d + {0, 1/2}^d minus the zero coset).
Lattice thinned(double scale, int d) {
  std::vector<Point> motif;
  for (int mask = 1; mask < (1 << d); ++mask) {
    Point p = Point::zeros(d);
    for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? 0.5 : 0.0;
    motif.push_back(p);
  }
  return Lattice(2.0 * scale, d, std::move(motif));
}

MeasureSpec measure(const json& j, const std::string& path, const std::filesystem::path& base) {
  require_object(j, path);
  static constexpr const char* kKinds[] = {"lebesgue", "lattice", "thinned_lattice", "points", "csv", "atomic"};
  std::string kind;
  for (const char* k : kKinds) {
    if (!j.contains(k)) continue;
    if (!kind.empty()) fail(path, "more than one measure kind given");
    kind = k;
  }
  if (kind.empty()) {
    fail(path, "expected one of lebesgue, lattice, thinned_lattice, points, csv, atomic");
  }
  for (const auto& [k, v] : j.items()) {
    if (k != kind && k != "label" && k != "separation") fail(child(path, k), "unknown key");
  }
  const std::string p = child(path, kind);
  const json& body = j.at(kind);
  if (kind == "lebesgue") {
    allow_keys(body, p, {"dim", "constant"});
    const int d = dimension(body, p);
    const double c = body.contains("constant") ? positive(body.at("constant"), child(p, "constant")) : 1.0;
    return MeasureSpec::lebesgue(d, c);
  }
  if (kind == "lattice") {
    allow_keys(body, p, {"scale", "dim", "motif"});
    const int d = dimension(body, p);
    if (!body.contains("scale")) fail(child(p, "scale"), "missing");
    const double s = positive(body.at("scale"), child(p, "scale"));
    if (!body.contains("motif")) return MeasureSpec::lattice(s, d);
    auto motif = points(body.at("motif"), child(p, "motif"), d);
    return guarded(p, [&] { return MeasureSpec::counting(Lattice(s, d, std::move(motif))); });
  }
  if (kind == "thinned_lattice") {
    allow_keys(body, p, {"scale", "dim"});
    const int d = dimension(body, p);
    const double s = body.contains("scale") ? positive(body.at("scale"), child(p, "scale")) : 1.0;
    return MeasureSpec::counting(thinned(s, d));
  }
  if (kind == "points") {
    return MeasureSpec::counting(point_set(points(body, p), j, path));
  }
  if (kind == "csv") {
    std::filesystem::path file = string(body, p);
    if (file.is_relative()) file = base / file;
    auto pts = guarded(p, [&] { return io::read_points_csv(file); });
    return MeasureSpec::counting(point_set(std::move(pts), j, path));
  }
  allow_keys(body, p, {"points", "weights"});
  if (!body.contains("points") || !body.contains("weights")) fail(p, "atomic needs points and weights");
  auto pts = points(body.at("points"), child(p, "points"));
  const json& w = body.at("weights");
  if (!w.is_array() || w.size() != pts.size()) fail(child(p, "weights"), "expected one weight per point");
  std::vector<double> ws;
  for (std::size_t i = 0; i < w.size(); ++i) ws.push_back(positive(w[i], child(child(p, "weights"), i)));
  return guarded(p, [&] { return MeasureSpec::atomic(std::move(pts), std::move(ws)); });
}

kernels::KernelSpec kernel(const json& doc, const std::string& path) {
  const std::string name = string(doc.at("kernel"), child(path, "kernel"));
  const json params = doc.contains("params") ? doc.at("params") : json::object();
  const std::string pp = child(path, "params");
  if (name == "paley-wiener") {
    allow_keys(params, pp, {"band"});
    kernels::PaleyWiener k;
    if (params.contains("band")) k.band = positive(params.at("band"), child(pp, "band"));
    return k;
  }
  if (name == "fock") {
    allow_keys(params, pp, {});
    return kernels::Fock{};
  }
  if (name == "gabor-gaussian") {
    allow_keys(params, pp, {"n"});
    kernels::GaborGaussian k;
    if (params.contains("n")) k.n = static_cast<int>(integer(params.at("n"), child(pp, "n"), 1, 2));
    return k;
  }
  fail(child(path, "kernel"), "unknown kernel '" + name + "' (expected paley-wiener, fock, gabor-gaussian)");
}

QuadConfig quad(const json& j, const std::string& path, QuadConfig q) {
  allow_keys(j, path, {"h", "r_truncate"});
  if (j.contains("h")) q.h = positive(j.at("h"), child(path, "h"));
  if (j.contains("r_truncate")) q.margin = positive(j.at("r_truncate"), child(path, "r_truncate"));
  return q;
}

std::string default_label(const MeasureSpec& m, const json& j, std::size_t i) {
  if (j.contains("label")) return string(j.at("label"), "/sets/" + std::to_string(i) + "/label");
  if (j.contains("thinned_lattice")) return "thinned";
  if (const auto* lat = m.as_lattice(); lat && lat->motif().size() == 1) {
    return "alpha=" + io::format_double(lat->scale());
  }
  return "set" + std::to_string(i);
}

std::vector<verify::SetSpec> default_sets(const std::string& scenario, const kernels::KernelSpec& k) {
  std::vector<verify::SetSpec> sets;
  if (scenario == "fock" || scenario == "gabor") {
    for (double a : {0.5, 0.8, 1.2, 2.0}) {
      sets.push_back({"alpha=" + io::format_double(a), MeasureSpec::lattice(a, 2)});
    }
    if (scenario == "gabor") sets.push_back({"thinned", MeasureSpec::counting(thinned(1.0, 2))});
  } else if (scenario == "paley-wiener") {
    const double step = std::numbers::pi / std::get<kernels::PaleyWiener>(k.variant()).band;
    sets.push_back({"integers", MeasureSpec::lattice(step, 1)});
  } else if (scenario == "dual-embedding") {
    const double step = std::numbers::pi / std::get<kernels::PaleyWiener>(k.variant()).band;
    sets.push_back({"half-integers", MeasureSpec::counting(Lattice(step, 1, {Point{0.5}}))});
  }
  return sets;
}

const char* expected_kernel(const std::string& scenario) {
  if (scenario == "fock") return "fock";
  if (scenario == "gabor") return "gabor-gaussian";
  return "paley-wiener";
}

}  // namespace

verify::ScenarioConfig parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  json doc = parse_text(text, "scenario config");
  allow_keys(doc, "", {"scenario", "name", "seed", "kernel", "params", "sets", "density", "localization",
                       "quad", "gram", "hap", "finite", "isometry", "out_dir"});
  verify::ScenarioConfig cfg;
  if (!doc.contains("scenario")) fail("/scenario", "missing");
  cfg.scenario = string(doc.at("scenario"), "/scenario");
  static constexpr const char* kScenarios[] = {"finite-oracle", "paley-wiener", "fock", "gabor", "dual-embedding"};
  if (std::none_of(std::begin(kScenarios), std::end(kScenarios), [&](const char* s) { return cfg.scenario == s; })) {
    fail("/scenario", "unknown scenario '" + cfg.scenario + "'");
  }
  cfg.name = doc.contains("name") ? string(doc.at("name"), "/name") : cfg.scenario;
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
      fail("/seed", "expected a nonnegative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("out_dir")) {
    std::filesystem::path out = string(doc.at("out_dir"), "/out_dir");
    cfg.out_dir = out.is_relative() ? base_dir / out : out;
  }

  if (cfg.scenario != "finite-oracle") {
    const std::string want = expected_kernel(cfg.scenario);
    if (doc.contains("kernel")) {
      cfg.kernel = kernel(doc, "");
      if (cfg.kernel->name() != want) fail("/kernel", "scenario '" + cfg.scenario + "' needs kernel " + want);
    } else {
      if (doc.contains("params")) fail("/params", "params given without kernel");
      json d = {{"kernel", want}};
      cfg.kernel = kernel(d, "");
    }
  }

  if (doc.contains("sets")) {
    if (cfg.scenario == "finite-oracle") fail("/sets", "finite-oracle takes no sets");
    const json& sets = doc.at("sets");
    if (!sets.is_array() || sets.empty()) fail("/sets", "expected a nonempty array");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string p = child("/sets", i);
      MeasureSpec m = measure(sets[i], p, base_dir);
      if (m.dim() != cfg.kernel->ambient_dim()) fail(p, "set dimension does not match the kernel");
      cfg.sets.push_back({default_label(m, sets[i], i), std::move(m)});
    }
  } else if (cfg.kernel) {
    cfg.sets = default_sets(cfg.scenario, *cfg.kernel);
  }

  if (doc.contains("density")) {
    const json& d = doc.at("density");
    allow_keys(d, "/density", {"r_max", "radii", "tol"});
    if (d.contains("r_max")) cfg.r_max = positive(d.at("r_max"), "/density/r_max");
    if (d.contains("radii")) cfg.density_radii = radii(d.at("radii"), "/density/radii");
    if (d.contains("tol")) cfg.density_tol = positive(d.at("tol"), "/density/tol");
  }
  if (doc.contains("localization")) {
    const json& l = doc.at("localization");
    allow_keys(l, "/localization", {"radii", "centers"});
    if (l.contains("radii")) cfg.loc_radii = radii(l.at("radii"), "/localization/radii");
    if (l.contains("centers")) {
      const int d = cfg.kernel ? cfg.kernel->ambient_dim() : 0;
      cfg.loc_centers = points(l.at("centers"), "/localization/centers", d);
    }
  }
  if (doc.contains("quad")) {
    const QuadConfig base = cfg.kernel ? verify::default_quad(*cfg.kernel) : QuadConfig{};
    cfg.quad = quad(doc.at("quad"), "/quad", base);
  }
  if (doc.contains("gram")) {
    const json& g = doc.at("gram");
    allow_keys(g, "/gram", {"windows", "center", "probe_spacing", "sample_margin", "probe_cutoff",
                            "stabilization_tol", "floor"});
    if (g.contains("windows")) cfg.gram.windows = radii(g.at("windows"), "/gram/windows");
    if (g.contains("center")) {
      cfg.gram.center = point(g.at("center"), "/gram/center", cfg.kernel ? cfg.kernel->ambient_dim() : 0);
    }
    if (g.contains("probe_spacing")) cfg.gram.probe_spacing = positive(g.at("probe_spacing"), "/gram/probe_spacing");
    if (g.contains("sample_margin")) cfg.gram.sample_margin = positive(g.at("sample_margin"), "/gram/sample_margin");
    if (g.contains("probe_cutoff")) cfg.gram.probe_cutoff = positive(g.at("probe_cutoff"), "/gram/probe_cutoff");
    if (g.contains("stabilization_tol")) {
      cfg.gram.stabilization_tol = positive(g.at("stabilization_tol"), "/gram/stabilization_tol");
    }
    if (g.contains("floor")) cfg.gram.floor = positive(g.at("floor"), "/gram/floor");
  }
  if (doc.contains("hap")) {
    const json& h = doc.at("hap");
    allow_keys(h, "/hap", {"radius"});
    if (h.contains("radius")) cfg.hap_radius = positive(h.at("radius"), "/hap/radius");
  }
  if (doc.contains("finite")) {
    const json& f = doc.at("finite");
    allow_keys(f, "/finite", {"instances", "max_dim", "max_size", "tol"});
    if (f.contains("instances")) cfg.instances = static_cast<std::size_t>(integer(f.at("instances"), "/finite/instances", 1, 1'000'000));
    if (f.contains("max_dim")) cfg.max_dim = static_cast<std::size_t>(integer(f.at("max_dim"), "/finite/max_dim", 1, 64));
    if (f.contains("max_size")) cfg.max_size = static_cast<std::size_t>(integer(f.at("max_size"), "/finite/max_size", 1, 256));
    if (f.contains("tol")) cfg.identity_tol = positive(f.at("tol"), "/finite/tol");
  }
  if (doc.contains("isometry")) {
    const json& s = doc.at("isometry");
    allow_keys(s, "/isometry", {"terms", "samples"});
    if (s.contains("terms")) cfg.isometry_terms = static_cast<std::size_t>(integer(s.at("terms"), "/isometry/terms", 1, 64));
    if (s.contains("samples")) cfg.isometry_samples = integer(s.at("samples"), "/isometry/samples", 16, 100'000'000);
  }

  doc.erase("out_dir");
  cfg.inputs_json = doc.dump();
  return cfg;
}

verify::ScenarioConfig load_scenario(const std::filesystem::path& path) {
  return parse_scenario(io::read_text(path), path.parent_path());
}

MeasureSpec parse_measure(std::string_view text, const std::filesystem::path& base_dir) {
  return measure(parse_text(text, "measure"), "", base_dir);
}

MeasureSpec parse_measure_arg(std::string_view arg) {
  const std::string s(arg);
  auto fields = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      const auto colon = s.find(':', start);
      out.push_back(s.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    return out;
  };
  auto num = [&](const std::string& f) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(f, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != f.size() || !std::isfinite(x)) {
      throw Error(ErrorCode::kConfig, "measure '" + s + "': '" + f + "' is not a number");
    }
    return x;
  };
  auto dim = [&](const std::string& f) {
    const double d = num(f);
    if (d != std::floor(d) || d < 1 || d > kMaxDim) {
      throw Error(ErrorCode::kConfig, "measure '" + s + "': dimension must be 1..4");
    }
    return static_cast<int>(d);
  };
  if (s.rfind("csv:", 0) == 0) {
    auto pts = io::read_points_csv(s.substr(4));
    if (pts.empty()) throw Error(ErrorCode::kConfig, "measure '" + s + "': no points");
    const int d = pts.front().dim();
    return MeasureSpec::counting(PointSet(d, std::move(pts)));
  }
  const auto f = fields();
  if (f[0] == "lebesgue" && (f.size() == 2 || f.size() == 3)) {
    const double c = f.size() == 3 ? num(f[2]) : 1.0;
    if (!(c > 0.0)) throw Error(ErrorCode::kConfig, "measure '" + s + "': density must be positive");
    return MeasureSpec::lebesgue(dim(f[1]), c);
  }
  if (f[0] == "lattice" && f.size() == 3) {
    const double scale = num(f[1]);
    if (!(scale > 0.0)) throw Error(ErrorCode::kConfig, "measure '" + s + "': scale must be positive");
    return MeasureSpec::lattice(scale, dim(f[2]));
  }
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    const std::filesystem::path p = s;
    return parse_measure(io::read_text(p), p.parent_path());
  }
  throw Error(ErrorCode::kConfig, "measure '" + s +
                                      "': expected lebesgue:D[:C], lattice:SCALE:D, csv:PATH or FILE.json");
}

kernels::KernelSpec parse_kernel(std::string_view text) {
  json doc = parse_text(text, "kernel");
  allow_keys(doc, "", {"kernel", "params"});
  if (!doc.contains("kernel")) fail("/kernel", "missing");
  return kernel(doc, "");
}

PairConfig load_pair(const std::filesystem::path& path) {
  json doc = parse_text(io::read_text(path), path.string());
  allow_keys(doc, "", {"kernel", "params", "mu", "nu", "quad", "centers", "self_dual"});
  if (!doc.contains("kernel")) fail("/kernel", "missing");
  const auto k = kernel(doc, "");
  const auto base = path.parent_path();
  auto side = [&](const char* key) {
    const std::string p = std::string("/") + key;
    if (!doc.contains(key) || (doc.at(key).is_string() && doc.at(key).get<std::string>() == "normalized")) {
      return k.normalized_measure();
    }
    MeasureSpec m = measure(doc.at(key), p, base);
    if (m.dim() != k.ambient_dim()) fail(p, "measure dimension does not match the kernel");
    return m;
  };
  QuadConfig q = verify::default_quad(k);
  if (doc.contains("quad")) q = quad(doc.at("quad"), "/quad", q);
  const bool self_dual = doc.contains("self_dual") ? boolean(doc.at("self_dual"), "/self_dual") : true;
  PairConfig out{{{k, side("mu")}, {k, side("nu")}, self_dual, q}, {}};
  if (doc.contains("centers")) {
    out.centers = points(doc.at("centers"), "/centers", k.ambient_dim());
  } else {
    out.centers = {Point::zeros(k.ambient_dim())};
  }
  return out;
}

}  // namespace framelab::config
