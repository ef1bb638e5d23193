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

#include "framelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "framelab/error.hpp"
#include "framelab/finframe.hpp"
#include "framelab/io.hpp"
#include "framelab/rng.hpp"
#include "framelab/space.hpp"
#include "json.hpp"

namespace framelab::verify {

namespace {

using json = nlohmann::ordered_json;
using localization::FramePairSpec;

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) { return io::format_double(x); }

std::string describe(const MeasureSpec& m) {
  std::ostringstream os;
  if (const auto* leb = m.as_lebesgue()) {
    os << "lebesgue(dim=" << leb->dim;
    if (leb->weight) {
      os << ",weighted";
    } else {
      os << ",constant=" << fmt(leb->constant);
    }
    os << ')';
  } else if (const auto* lat = m.as_lattice()) {
    os << "lattice(scale=" << fmt(lat->scale()) << ",dim=" << lat->dim()
       << ",cosets=" << lat->motif().size() << ')';
  } else if (const auto* c = m.as_counting()) {
    os << "points(n=" << std::get<PointSet>(c->support).size() << ",dim=" << m.dim() << ')';
  } else {
    os << "atomic(n=" << m.as_atomic()->points.size() << ",dim=" << m.dim() << ')';
  }
  return os.str();
}

json point_json(const Point& p) {
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

std::string point_field(const Point& p) {
  std::string s;
  for (double c : p.coords()) {
    if (!s.empty()) s += ' ';
    s += fmt(c);
  }
  return s;
}

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (auto& ch : out) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                    ch == '-' || ch == '_' || ch == '.';
    if (!ok) ch = '_';
  }
  return out;
}

void add_verdict(ScenarioReport& rep, std::string id, Verdict v, std::string detail,
                 std::vector<std::string> evidence) {
  rep.verdicts.push_back({std::move(id), v, std::move(detail), std::move(evidence)});
}

std::vector<Point> centers_or_origin(const ScenarioConfig& cfg, int d) {
  if (!cfg.loc_centers.empty()) return cfg.loc_centers;
  return {Point::zeros(d)};
}

density::DensitySchedule schedule_for(const ScenarioConfig& cfg, const MeasureSpec& mu,
                                      const MeasureSpec& nu) {
  auto s = density::default_schedule(mu, nu, cfg.r_max);
  if (!cfg.density_radii.empty()) s.radii = cfg.density_radii;
  return s;
}

// eps_eff strictly decreasing in r for every center.
bool eps_decreasing(const std::vector<localization::LocalizationRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].center == rows[i - 1].center && rows[i].r > rows[i - 1].r &&
        !(rows[i].eps_eff < rows[i - 1].eps_eff)) {
      return false;
    }
  }
  return true;
}

Verdict table_verdict(const std::vector<TheoremRow>& rows) {
  const bool all = std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.holds; });
  return all ? Verdict::kPass : Verdict::kHypothesesUnmet;
}

std::string set_path(std::size_t i, const char* table) {
  return "sets[" + std::to_string(i) + "]." + table;
}

// Density verdict for a sampling / interpolation family at finite scale.
void density_theorem_verdict(ScenarioReport& rep, std::size_t idx, const SetReport& sr,
                             double tol) {
  const auto& est = *sr.density;
  const auto& g = *sr.gram;
  std::ostringstream os;
  os << "D- = " << fmt(est.lower) << ", D+ = " << fmt(est.upper)
     << ", frame evidence = " << (g.frame_evidence ? "yes" : "no")
     << ", Riesz evidence = " << (g.riesz_evidence ? "yes" : "no");
  Verdict v = Verdict::kVacuousConsistent;
  if (std::abs(est.lower - 1.0) <= tol || std::abs(est.upper - 1.0) <= tol) {
    v = Verdict::kCriticalNoClaim;
  } else if ((g.frame_evidence && est.lower < 1.0 - tol) ||
             (g.riesz_evidence && est.upper > 1.0 + tol)) {
    v = Verdict::kContradiction;
  } else if (g.frame_evidence || g.riesz_evidence) {
    v = Verdict::kPass;
  }
  add_verdict(rep, sr.label + "/frame-density-bound", v, os.str(),
              {set_path(idx, "density"), set_path(idx, "gram")});
}

void localization_verdicts(ScenarioReport& rep, std::size_t idx, const SetReport& sr) {
  const bool dec = eps_decreasing(sr.localization);
  add_verdict(rep, sr.label + "/localization",
              dec ? Verdict::kPass : Verdict::kHypothesesUnmet,
              dec ? "epsilon_effective strictly decreasing in r"
                  : "epsilon_effective not decreasing in r",
              {set_path(idx, "localization")});
  double worst = 0.0;
  for (const auto& r : sr.theorem) worst = std::max(worst, r.c_required - r.c);
  add_verdict(rep, sr.label + "/main-inequality", table_verdict(sr.theorem),
              "largest shortfall C_required - C = " + fmt(worst),
              {set_path(idx, "theorem_table"), set_path(idx, "localization")});
}

// ---------------------------------------------------------------- finite

CMatrix from_rows(std::size_t n, const std::vector<std::vector<double>>& cols) {
  CMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void finite_oracle(const ScenarioConfig& cfg, ScenarioReport& rep) {
  using namespace finframe;
  Rng rng(cfg.seed);
  double max_res = 0.0, max_proj = 0.0, max_dual = 0.0, max_idem = 0.0, max_slack = 0.0;
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(cfg.max_dim)));
    const auto mf = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(cfg.max_size)));
    const auto mg = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(cfg.max_size)));
    const FiniteFrame f = random_frame(rng, n, mf);
    const FiniteFrame g = random_frame(rng, n, mg);
    const double cx = rng.uniform(), cy = rng.uniform();
    const Ball omega_ball(Point{cx, cy}, rng.uniform(0.2, 0.8));
    const auto omega = IndexSubset::from_ball(f, g, omega_ball);

    InstanceRow row;
    row.index = i;
    row.dim = n;
    row.f_size = mf;
    row.g_size = mg;
    row.omega_f = static_cast<std::size_t>(std::count(omega.in_f.begin(), omega.in_f.end(), true));
    row.omega_g = static_cast<std::size_t>(std::count(omega.in_g.begin(), omega.in_g.end(), true));
    row.residual = comparison_residual(f, g, omega);

    std::vector<cplx> x(n);
    for (auto& z : x) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const auto direct = span_projector(f) * std::span<const cplx>(x);
    const auto p1 = project(f, x);
    const auto p2 = project_dual_form(f, x);
    row.projection_error = max_abs_diff(p1, direct);
    row.dual_form_error = max_abs_diff(p2, direct);
    row.idempotence = max_abs_diff(project(f, p1), p1);

    const auto diag = diagonal_terms(f, g);
    const cplx dsum = omega_double_sum(f, g, omega.in_f);
    double mass = 0.0;
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (omega.in_f[y]) mass += f.weight(y);
    }
    auto slack = [&](const std::vector<cplx>& side) {
      double a = side.front().real(), b = side.front().real();
      for (const auto& z : side) {
        a = std::min(a, z.real());
        b = std::max(b, z.real());
      }
      return std::max({0.0, a * mass - dsum.real(), dsum.real() - b * mass});
    };
    row.sandwich_slack = slack(diag.f_side);
    row.sandwich_slack_swapped = slack(diag.f_side_swapped);

    max_res = std::max(max_res, row.residual);
    max_proj = std::max(max_proj, row.projection_error);
    max_dual = std::max(max_dual, row.dual_form_error);
    max_idem = std::max(max_idem, row.idempotence);
    max_slack = std::max({max_slack, row.sandwich_slack, row.sandwich_slack_swapped});
    rep.instances.push_back(row);
  }

  const double h = std::sqrt(3.0) / 2.0;
  const auto onb = frame_bounds(FiniteFrame::unit_weights(CMatrix::identity(2)));
  const auto merc = frame_bounds(
      FiniteFrame::unit_weights(from_rows(2, {{0.0, 1.0}, {-h, -0.5}, {h, -0.5}})));
  const auto e112 =
      frame_bounds(FiniteFrame::unit_weights(from_rows(2, {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}})));

  rep.metrics = {{"max_residual", max_res},
                 {"max_projection_error", max_proj},
                 {"max_dual_form_error", max_dual},
                 {"max_idempotence", max_idem},
                 {"max_sandwich_slack", max_slack},
                 {"onb_lower", onb.lower},
                 {"onb_upper", onb.upper},
                 {"mercedes_lower", merc.lower},
                 {"mercedes_upper", merc.upper},
                 {"e1e1e2_lower", e112.lower},
                 {"e1e1e2_upper", e112.upper}};

  const std::string n_inst = std::to_string(cfg.instances);
  add_verdict(rep, "comparison-identity", max_res < cfg.identity_tol ? Verdict::kPass : Verdict::kFail,
              "max residual " + fmt(max_res) + " over " + n_inst + " instances (tol " +
                  fmt(cfg.identity_tol) + ")",
              {"instances", "metrics.max_residual"});
  const bool proj_ok = max_proj < cfg.identity_tol && max_dual < cfg.identity_tol && max_idem < 1e-12;
  add_verdict(rep, "projection-formulas", proj_ok ? Verdict::kPass : Verdict::kFail,
              "max deviation " + fmt(std::max(max_proj, max_dual)) + ", idempotence " + fmt(max_idem),
              {"instances", "metrics.max_projection_error", "metrics.max_idempotence"});
  const bool bounds_ok = onb.lower == 1.0 && onb.upper == 1.0 &&
                         std::abs(merc.lower - 1.5) < 1e-12 && std::abs(merc.upper - 1.5) < 1e-12 &&
                         std::abs(e112.lower - 1.0) < 1e-12 && std::abs(e112.upper - 2.0) < 1e-12;
  add_verdict(rep, "frame-bound-oracles", bounds_ok ? Verdict::kPass : Verdict::kFail,
              "orthonormal basis, Mercedes frame, {e1, e1, e2}",
              {"metrics.onb_lower", "metrics.mercedes_lower", "metrics.e1e1e2_lower"});
  add_verdict(rep, "diagonal-sandwich", max_slack <= 1e-9 ? Verdict::kPass : Verdict::kFail,
              "largest excursion outside [a mu(Omega), b mu(Omega)]: " + fmt(max_slack),
              {"instances", "metrics.max_sandwich_slack"});
}

// ---------------------------------------------------------------- lattices

void lattice_scenario(const ScenarioConfig& cfg, ScenarioReport& rep, const kernels::KernelSpec& k) {
  const QuadConfig quad = cfg.quad.value_or(default_quad(k));
  const MeasureSpec lambda = k.normalized_measure();
  const auto centers = centers_or_origin(cfg, k.ambient_dim());
  for (std::size_t idx = 0; idx < cfg.sets.size(); ++idx) {
    const auto& set = cfg.sets[idx];
    if (!set.measure.is_discrete()) {
      throw Error(ErrorCode::kConfig, "config error at /sets/" + std::to_string(idx) +
                                          ": sampling set must be discrete");
    }
    if (const auto* c = set.measure.as_counting(); c && !set.measure.as_lattice()) {
      const auto& ps = std::get<PointSet>(c->support);
      if (ps.size() >= 2 && !(space::separation(ps) > 0.0)) {
        const auto [i, j] = space::closest_pair(ps.points());
        throw Error(ErrorCode::kNotSeparated, "set is not separated: points " +
                                                  ps.points()[i].to_string() + " and " +
                                                  ps.points()[j].to_string());
      }
    }
    SetReport sr;
    sr.label = set.label;
    sr.measure = describe(set.measure);
    sr.density = density::density(set.measure, lambda, schedule_for(cfg, set.measure, lambda));

    const FramePairSpec pair{{k, lambda}, {k, set.measure}, true, quad};
    sr.localization = localization::localization_table(pair, centers, cfg.loc_radii);
    sr.theorem = theorem_main_table(pair, sr.localization);
    sr.gram = gram_truncation_study(k, set.measure, cfg.gram);
    const double cell = set.measure.period().value_or(1.0);
    sr.hap = localization::hap_check(k, set.measure, cfg.hap_radius,
                                     localization::default_probes(k, cell), quad);
    rep.sets.push_back(std::move(sr));
    density_theorem_verdict(rep, idx, rep.sets.back(), cfg.density_tol);
    localization_verdicts(rep, idx, rep.sets.back());
  }
}

// ------------------------------------------------------ Parseval pairs (1-D)

// Both families are Parseval frames for the same space, so the comparison
// identity collapses to mu(B) - nu(B) = t2 - t1 on every ball.
void parseval_pair_section(const ScenarioConfig& cfg, ScenarioReport& rep,
                           const kernels::KernelSpec& k, const SetSpec& set, std::size_t idx,
                           bool with_gram) {
  const QuadConfig quad = cfg.quad.value_or(default_quad(k));
  const MeasureSpec mu = k.normalized_measure();
  const FramePairSpec pair{{k, mu}, {k, set.measure}, true, quad};

  SetReport sr;
  sr.label = set.label;
  sr.measure = describe(set.measure);
  rep.parseval_density = corollary_parseval_check(pair, cfg.r_max, cfg.density_tol);
  sr.density = rep.parseval_density->nu_wrt_mu;
  sr.localization = localization::localization_table(pair, centers_or_origin(cfg, 1), cfg.loc_radii);
  sr.theorem = theorem_main_table(pair, sr.localization);
  if (with_gram) sr.gram = gram_truncation_study(k, set.measure, cfg.gram);

  double worst = 0.0;
  bool within = true;
  for (std::size_t i = 0; i < sr.theorem.size(); ++i) {
    const auto& t = sr.theorem[i];
    const auto& l = sr.localization[i];
    const double mismatch = std::abs((t.mu_b - t.nu_b) - (l.t2 - l.t1));
    within = within && mismatch <= l.trunc_bound + 1e-9;
    worst = std::max(worst, mismatch);
  }
  rep.metrics.emplace_back("max_identity_mismatch", worst);
  rep.sets.push_back(std::move(sr));

  const auto& c = *rep.parseval_density;
  std::ostringstream os;
  os << "D_nu(mu) in [" << fmt(c.mu_wrt_nu.lower) << ", " << fmt(c.mu_wrt_nu.upper) << "], D_mu(nu) in ["
     << fmt(c.nu_wrt_mu.lower) << ", " << fmt(c.nu_wrt_mu.upper) << "], max deviation "
     << fmt(c.max_deviation) << " (tol " << fmt(cfg.density_tol) << ")";
  add_verdict(rep, set.label + "/parseval-pair-densities", c.verdict, os.str(),
              {"parseval_density", set_path(idx, "density")});
  add_verdict(rep, set.label + "/comparison-identity", within ? Verdict::kPass : Verdict::kFail,
              "mu(B) - nu(B) = t2 - t1 within the truncation bound on every ball; largest "
              "mismatch " + fmt(worst),
              {set_path(idx, "theorem_table"), set_path(idx, "localization")});
  add_verdict(rep, set.label + "/main-inequality", table_verdict(rep.sets.back().theorem),
              "rows of A <= B + C (1 + nu/mu)", {set_path(idx, "theorem_table")});
}

double band_of(const kernels::KernelSpec& k) {
  const auto* pw = std::get_if<kernels::PaleyWiener>(&k.variant());
  if (pw == nullptr) throw Error(ErrorCode::kConfig, "config error at /kernel: expected paley-wiener");
  return pw->band;
}

void paley_wiener(const ScenarioConfig& cfg, ScenarioReport& rep, const kernels::KernelSpec& k) {
  const double step = kPi / band_of(k);
  for (std::size_t idx = 0; idx < cfg.sets.size(); ++idx) {
    parseval_pair_section(cfg, rep, k, cfg.sets[idx], idx, true);
  }
  std::vector<Point> pts;
  for (int n = -20; n <= 20; ++n) pts.push_back(Point{step * n});
  const CMatrix g = kernel_gram(k, pts);
  double off = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      off = std::max(off, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }
  rep.metrics.emplace_back("shannon_max_deviation", off);
  add_verdict(rep, "shannon-orthonormality", off < 1e-8 ? Verdict::kPass : Verdict::kFail,
              "Gram of normalized kernels at 41 equispaced nodes deviates from I by " + fmt(off),
              {"metrics.shannon_max_deviation"});
}

void dual_embedding(const ScenarioConfig& cfg, ScenarioReport& rep, const kernels::KernelSpec& k) {
  const double band = band_of(k);
  for (std::size_t idx = 0; idx < cfg.sets.size(); ++idx) {
    parseval_pair_section(cfg, rep, k, cfg.sets[idx], idx, false);
  }
  // Isometry of the sampling embedding on a random finite kernel combination.
  Rng rng(cfg.seed);
  std::vector<Point> xs;
  std::vector<cplx> cs;
  double s_abs = 0.0, x_max = 0.0;
  for (std::size_t j = 0; j < cfg.isometry_terms; ++j) {
    xs.push_back(Point{rng.uniform(-4.0, 4.0)});
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    cs.emplace_back(re, im);
    s_abs += std::abs(cs.back());
    x_max = std::max(x_max, std::abs(xs.back()[0]));
  }
  CompensatedSum<cplx> norm;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      norm += cs[i] * std::conj(cs[j]) * kernels::kernel_eval(k, xs[j], xs[i]);
    }
  }
  const double f_norm = norm.value().real();
  for (std::size_t idx = 0; idx < cfg.sets.size(); ++idx) {
    const auto& m = cfg.sets[idx].measure;
    const auto* lat = m.as_lattice();
    if (lat == nullptr) continue;
    const double reach = lat->scale() * static_cast<double>(cfg.isometry_samples);
    CompensatedSum<double> samples;
    m.for_each_atom_in_ball(Point{0.0}, reach, [&](const Point& g, double w) {
      CompensatedSum<cplx> v;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        v += cs[j] * kernels::kernel_eval(k, g, xs[j]);
      }
      samples += w * std::norm(v.value()) / kernels::kernel_diagonal(k, g);
    });
    // |<f, k_g>|^2 <= S^2 / (pi^2 (|g| - X)^2) / K(g, g) beyond the window.
    const double gap = reach - x_max;
    const double tail = 2.0 * s_abs * s_abs / (kPi * kPi) * (kPi / band) *
                        static_cast<double>(lat->motif().size()) *
                        (1.0 / (gap * gap) + 1.0 / (lat->scale() * gap));
    const double err = std::abs(samples.value() - f_norm);
    const std::string key = sanitize(cfg.sets[idx].label);
    rep.metrics.emplace_back(key + ".isometry_norm", f_norm);
    rep.metrics.emplace_back(key + ".isometry_samples", samples.value());
    rep.metrics.emplace_back(key + ".isometry_tail_bound", tail);
    add_verdict(rep, cfg.sets[idx].label + "/isometric-embedding",
                err <= tail + 1e-9 * f_norm ? Verdict::kPass : Verdict::kFail,
                "|sum |<f,k_g>|^2 - ||f||^2| = " + fmt(err) + " against tail bound " + fmt(tail),
                {"metrics." + key + ".isometry_samples"});
  }
}

// ---------------------------------------------------------------- JSON

json density_json(const density::DensityEstimate& e) {
  json rows = json::array();
  for (const auto& r : e.per_radius) {
    rows.push_back({{"r", r.r}, {"sup_ratio", r.sup_ratio}, {"inf_ratio", r.inf_ratio}});
  }
  return {{"upper", e.upper},
          {"lower", e.lower},
          {"converged", e.converged},
          {"slope", e.slope},
          {"schedule",
           {{"radii", e.schedule.radii},
            {"box_lo", point_json(e.schedule.box_lo)},
            {"box_hi", point_json(e.schedule.box_hi)},
            {"center_spacing", e.schedule.center_spacing},
            {"convergence_tol", e.schedule.convergence_tol}}},
          {"per_radius", rows}};
}

json gram_json(const GramStudy& g) {
  json w = json::array();
  for (const auto& x : g.windows) {
    w.push_back({{"radius", x.radius},
                 {"points", x.points},
                 {"skipped", x.skipped},
                 {"min_eig", x.min_eig},
                 {"max_eig", x.max_eig},
                 {"min_nonzero", x.min_nonzero},
                 {"frame_lower", x.frame_lower},
                 {"frame_upper", x.frame_upper},
                 {"probe_rank", x.probe_rank},
                 {"samples", x.samples}});
  }
  return {{"frame_evidence", g.frame_evidence},
          {"riesz_evidence", g.riesz_evidence},
          {"frame_change", g.frame_change},
          {"riesz_change", g.riesz_change},
          {"config",
           {{"windows", g.config.windows},
            {"center", point_json(g.config.center)},
            {"probe_spacing", g.config.probe_spacing},
            {"sample_margin", g.config.sample_margin},
            {"probe_cutoff", g.config.probe_cutoff},
            {"stabilization_tol", g.config.stabilization_tol},
            {"floor", g.config.floor}}},
          {"windows", w}};
}

json set_json(const SetReport& s) {
  json j = {{"label", s.label}, {"measure", s.measure}};
  if (s.density) j["density"] = density_json(*s.density);
  json loc = json::array();
  for (const auto& r : s.localization) {
    loc.push_back({{"center", point_json(r.center)},
                   {"r", r.r},
                   {"defect", r.defect},
                   {"t1", r.t1},
                   {"t2", r.t2},
                   {"normalizer", r.normalizer},
                   {"eps_eff", r.eps_eff},
                   {"trunc_bound", r.trunc_bound}});
  }
  j["localization"] = loc;
  json th = json::array();
  for (const auto& r : s.theorem) {
    th.push_back({{"center", point_json(r.center)},
                  {"r", r.r},
                  {"mu_B", r.mu_b},
                  {"nu_B", r.nu_b},
                  {"A", r.a},
                  {"B", r.b},
                  {"C", r.c},
                  {"C_required", r.c_required},
                  {"holds", r.holds}});
  }
  j["theorem_table"] = th;
  if (s.gram) j["gram"] = gram_json(*s.gram);
  if (s.hap) {
    j["hap"] = {{"value", s.hap->value},
                {"min_over_probes", s.hap->min_over_probes},
                {"argmax", point_json(s.hap->argmax)},
                {"truncation_bound", s.hap->truncation_bound}};
  }
  return j;
}

// ---------------------------------------------------------------- CSV

std::vector<std::vector<std::string>> localization_rows(const std::vector<localization::LocalizationRow>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    out.push_back({point_field(r.center), fmt(r.r), fmt(r.defect), fmt(r.t1), fmt(r.t2),
                   fmt(r.normalizer), fmt(r.eps_eff), fmt(r.trunc_bound)});
  }
  return out;
}

void write_tables(const ScenarioConfig& cfg, const ScenarioReport& rep) {
  const auto stem = cfg.out_dir / sanitize(rep.name);
  for (const auto& s : rep.sets) {
    const std::string base = stem.string() + "." + sanitize(s.label);
    if (s.density) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : s.density->per_radius) {
        rows.push_back({fmt(r.r), fmt(r.sup_ratio), fmt(r.inf_ratio)});
      }
      io::write_csv(base + ".density.csv", {"r", "sup_ratio", "inf_ratio"}, rows);
    }
    if (!s.localization.empty()) {
      io::write_csv(base + ".localization.csv",
                    {"center", "r", "defect", "t1", "t2", "normalizer", "eps_eff", "trunc_bound"},
                    localization_rows(s.localization));
    }
    if (!s.theorem.empty()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : s.theorem) {
        rows.push_back({point_field(r.center), fmt(r.r), fmt(r.mu_b), fmt(r.nu_b), fmt(r.a), fmt(r.b),
                        fmt(r.c), fmt(r.c_required), r.holds ? "true" : "false"});
      }
      io::write_csv(base + ".theorem.csv",
                    {"center", "r", "mu_B", "nu_B", "A", "B", "C", "C_required", "holds"}, rows);
    }
    if (s.gram) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& w : s.gram->windows) {
        rows.push_back({fmt(w.radius), std::to_string(w.points), w.skipped ? "true" : "false",
                        fmt(w.min_eig), fmt(w.max_eig), fmt(w.min_nonzero), fmt(w.frame_lower),
                        fmt(w.frame_upper), std::to_string(w.probe_rank), std::to_string(w.samples)});
      }
      io::write_csv(base + ".gram.csv",
                    {"radius", "points", "skipped", "min_eig", "max_eig", "min_nonzero",
                     "frame_lower", "frame_upper", "probe_rank", "samples"},
                    rows);
    }
  }
  if (!rep.instances.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rep.instances) {
      rows.push_back({std::to_string(r.index), std::to_string(r.dim), std::to_string(r.f_size),
                      std::to_string(r.g_size), std::to_string(r.omega_f), std::to_string(r.omega_g),
                      fmt(r.residual), fmt(r.projection_error), fmt(r.dual_form_error),
                      fmt(r.idempotence), fmt(r.sandwich_slack), fmt(r.sandwich_slack_swapped)});
    }
    io::write_csv(stem.string() + ".instances.csv",
                  {"index", "dim", "f_size", "g_size", "omega_f", "omega_g", "residual",
                   "projection_error", "dual_form_error", "idempotence", "sandwich_slack",
                   "sandwich_slack_swapped"},
                  rows);
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kVacuousConsistent:
      return "vacuous-consistent";
    case Verdict::kHypothesesUnmet:
      return "hypotheses-unmet";
    case Verdict::kCriticalNoClaim:
      return "critical-no-claim";
    case Verdict::kContradiction:
      return "CONTRADICTION";
    case Verdict::kFail:
      return "fail";
  }
  return "fail";
}

int ScenarioReport::exit_code() const noexcept {
  for (const auto& v : verdicts) {
    if (v.verdict == Verdict::kContradiction || v.verdict == Verdict::kFail) return 1;
  }
  return 0;
}

QuadConfig default_quad(const kernels::KernelSpec& k) {
  QuadConfig q;
  if (const auto* pw = std::get_if<kernels::PaleyWiener>(&k.variant())) {
    // sinc^2(b t) <= 4 max(1, 1 / b^2) (1 + t)^-2 for t >= 0 when b >= 1.
    q.margin = 64.0;
    q.tail = TailModel::power(2.0, 4.0 * std::max(1.0, 1.0 / (pw->band * pw->band)));
  }
  return q;
}

std::vector<TheoremRow> theorem_main_table(const FramePairSpec& pair,
                                           const std::vector<localization::LocalizationRow>& loc,
                                           double tol) {
  if (!pair.self_dual) throw Error(ErrorCode::kGeneralDualsUnsupported, "general duals unsupported");
  std::vector<TheoremRow> rows;
  rows.reserve(loc.size());
  for (const auto& l : loc) {
    const Ball b(l.center, l.r);
    TheoremRow t;
    t.center = l.center;
    t.r = l.r;
    t.mu_b = space::ball_mass(pair.f.index, b, pair.quad).value;
    t.nu_b = space::ball_mass(pair.g.index, b, pair.quad).value;
    if (!(t.mu_b > 0.0)) throw Error(ErrorCode::kEmptyBall, "empty ball");
    // Normalized kernels have unit norm, so the diagonal average is exactly 1.
    t.a = 1.0;
    t.b = t.nu_b / t.mu_b;
    t.c = l.eps_eff;
    t.defect = l.defect;
    t.c_required = std::max(0.0, t.a - t.b) / (1.0 + t.b);
    t.holds = t.a <= t.b + t.c * (1.0 + t.b) + tol;
    rows.push_back(t);
  }
  return rows;
}

std::vector<TheoremRow> theorem_main_table(const FramePairSpec& pair,
                                           const std::vector<Point>& centers,
                                           const std::vector<double>& radii, double tol) {
  return theorem_main_table(pair, localization::localization_table(pair, centers, radii), tol);
}

ParsevalDensityCheck corollary_parseval_check(const FramePairSpec& pair, double r_max, double tol) {
  pair.validate();
  const auto& mu = pair.f.index;
  const auto& nu = pair.g.index;
  ParsevalDensityCheck c;
  c.mu_wrt_nu = density::density(mu, nu, density::default_schedule(mu, nu, r_max));
  c.nu_wrt_mu = density::density(nu, mu, density::default_schedule(nu, mu, r_max));
  for (double x : {c.mu_wrt_nu.lower, c.mu_wrt_nu.upper, c.nu_wrt_mu.lower, c.nu_wrt_mu.upper}) {
    c.max_deviation = std::max(c.max_deviation, std::abs(x - 1.0));
  }
  c.verdict = c.max_deviation <= tol ? Verdict::kPass : Verdict::kFail;
  return c;
}

ScenarioReport run_scenario(const ScenarioConfig& cfg) {
  ScenarioReport rep;
  rep.scenario = cfg.scenario;
  rep.name = cfg.name.empty() ? cfg.scenario : cfg.name;
  rep.seed = cfg.seed;
  rep.inputs_json = cfg.inputs_json;

  if (cfg.scenario == "finite-oracle") {
    finite_oracle(cfg, rep);
    return rep;
  }
  if (!cfg.kernel) throw Error(ErrorCode::kConfig, "config error at /kernel: missing kernel");
  if (cfg.scenario == "fock" || cfg.scenario == "gabor") {
    lattice_scenario(cfg, rep, *cfg.kernel);
  } else if (cfg.scenario == "paley-wiener") {
    paley_wiener(cfg, rep, *cfg.kernel);
  } else if (cfg.scenario == "dual-embedding") {
    dual_embedding(cfg, rep, *cfg.kernel);
  } else {
    throw Error(ErrorCode::kConfig, "config error at /scenario: unknown scenario '" + cfg.scenario + "'");
  }
  return rep;
}

std::string to_json(const ScenarioReport& rep) {
  json j;
  j["schema"] = "framelab/1";
  j["scenario"] = rep.scenario;
  j["name"] = rep.name;
  j["seed"] = rep.seed;
  j["inputs"] = json::parse(rep.inputs_json);
  json metrics = json::object();
  for (const auto& [k, v] : rep.metrics) metrics[k] = v;
  j["metrics"] = metrics;
  json sets = json::array();
  for (const auto& s : rep.sets) sets.push_back(set_json(s));
  j["sets"] = sets;
  if (!rep.instances.empty()) {
    json inst = json::array();
    for (const auto& r : rep.instances) {
      inst.push_back({{"index", r.index},
                      {"dim", r.dim},
                      {"f_size", r.f_size},
                      {"g_size", r.g_size},
                      {"omega_f", r.omega_f},
                      {"omega_g", r.omega_g},
                      {"residual", r.residual},
                      {"projection_error", r.projection_error},
                      {"dual_form_error", r.dual_form_error},
                      {"idempotence", r.idempotence},
                      {"sandwich_slack", r.sandwich_slack},
                      {"sandwich_slack_swapped", r.sandwich_slack_swapped}});
    }
    j["instances"] = inst;
  }
  if (rep.parseval_density) {
    j["parseval_density"] = {{"mu_wrt_nu", density_json(rep.parseval_density->mu_wrt_nu)},
                      {"nu_wrt_mu", density_json(rep.parseval_density->nu_wrt_mu)},
                      {"max_deviation", rep.parseval_density->max_deviation},
                      {"verdict", to_string(rep.parseval_density->verdict)}};
  }
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) {
    verdicts.push_back({{"id", v.id},
                        {"verdict", to_string(v.verdict)},
                        {"detail", v.detail},
                        {"evidence", v.evidence}});
  }
  j["verdicts"] = verdicts;
  j["exit_code"] = rep.exit_code();
  return j.dump(2) + "\n";
}

int run(const ScenarioConfig& cfg, std::ostream* log) {
  const ScenarioReport rep = run_scenario(cfg);
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + cfg.out_dir.string() + ": " + ec.message());
  io::write_text(cfg.out_dir / (sanitize(rep.name) + ".json"), to_json(rep));
  write_tables(cfg, rep);
  if (log != nullptr) {
    for (const auto& v : rep.verdicts) *log << to_string(v.verdict) << "  " << v.id << "  " << v.detail << '\n';
  }
  return rep.exit_code();
}

}  // namespace framelab::verify
