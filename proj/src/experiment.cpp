#include "gasket/experiment.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "json.hpp"

#include "gasket/io.hpp"
#include "gasket/parallel.hpp"
#include "gasket/version.hpp"

namespace gasket {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string t_tag(double T) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", T);
  return buf;
}

json base_meta(const ExperimentConfig& cfg, const std::string& kind) {
  json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  j["kind"] = kind;
  j["theta1_pi"] = cfg.theta1_pi;
  j["theta2_pi"] = cfg.theta2_pi;
  j["theta1_rad"] = cfg.theta1_pi * std::numbers::pi;
  j["theta2_rad"] = cfg.theta2_pi * std::numbers::pi;
  j["include_bounding"] = cfg.include_bounding;
  j["deterministic"] = cfg.deterministic;
  return j;
}

void write_meta(const fs::path& csv_path, const json& j) {
  fs::path p = csv_path;
  p.replace_extension(".meta.json");
  write_text_atomic(p, j.dump(2) + "\n");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// pairwise sup-norm table over series that share a grid
void write_summary(const fs::path& file, const ExperimentConfig& cfg,
                   const std::vector<std::pair<std::string, const StatSeries*>>& entries) {
  std::string csv = "a,b,sup_norm\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const double sup = sup_distance(*entries[i].second, *entries[j].second);
      csv += entries[i].first + "," + entries[j].first + "," + format_g12(sup) + "\n";
    }
  write_text_atomic(file, csv);
  json meta = base_meta(cfg, "pair_correlation_summary");
  meta["series"] = json::array();
  for (const auto& [label, series] : entries) meta["series"].push_back(label);
  write_meta(file, meta);
}

}  // namespace

double parse_pi_multiple(const std::string& text) {
  auto number = [&](const std::string& s) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
      throw config_error("cannot parse angle '" + text + "' (multiples of pi, e.g. 0.6 or 1.8/3)");
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return number(text);
  const double num = number(text.substr(0, slash));
  const double den = number(text.substr(slash + 1));
  if (den == 0.0)
    throw config_error("angle fraction '" + text + "' has zero denominator");
  return num / den;
}

GasketSpec ExperimentConfig::spec() const {
  return GasketSpec::from_pi_multiples(theta1_pi, theta2_pi);
}

std::vector<Region> ExperimentConfig::effective_regions() const {
  if (regions.empty()) return {Region::plane()};
  return regions;
}

std::vector<double> ExperimentConfig::effective_ts(std::vector<double> fallback) const {
  if (t_list.empty()) return fallback;
  return t_list;
}

void ExperimentConfig::validate() const {
  if (!std::isfinite(theta1_pi) || !std::isfinite(theta2_pi))
    throw config_error("config: angles must be finite");
  if (!(s_step > 0.0) || !std::isfinite(s_step))
    throw config_error("config: s_step must be positive");
  if (!(s_max >= s_step) || !std::isfinite(s_max))
    throw config_error("config: s_max must be at least s_step");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw config_error("config: delta must be positive");
  const double ratio = delta / s_step;
  if (std::llround(ratio) < 1 ||
      std::abs(ratio - static_cast<double>(std::llround(ratio))) > 1e-9)
    throw config_error("config: s_step must divide the derivative step delta");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    if (!(t_list[i] > 0.0) || !std::isfinite(t_list[i]))
      throw config_error("config: curvature bounds must be positive");
    if (i > 0 && !(t_list[i] > t_list[i - 1]))
      throw config_error("config: curvature bounds must be strictly increasing");
  }
  for (const Region& r : regions) r.validate();
}

StatSeries roundtrip_series(StatSeries series) {
  for (double& v : series.values) v = parse_double(format_g12(v));
  return series;
}

std::vector<fs::path> cmd_generate(const ExperimentConfig& cfg) {
  cfg.validate();
  const GasketSpec spec = cfg.spec();
  std::vector<fs::path> written;
  for (const double T : cfg.effective_ts({100.0})) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    const fs::path file = cfg.out_dir / ("circles_T" + t_tag(T) + ".csv");
    write_text_atomic(file, circles_to_csv(set));
    json meta = base_meta(cfg, "circle_set");
    meta["T"] = T;
    meta["count"] = set.count();
    meta["validated_quadruples"] = set.validation.checked;
    meta["max_curvature_residual_rel"] = set.validation.max_curvature_rel;
    meta["max_center_residual_rel"] = set.validation.max_center_rel;
    meta["max_tangency_residual"] = set.validation.max_tangency;
    write_meta(file, meta);
    written.push_back(file);
  }
  return written;
}

std::vector<LabeledSeries> cmd_paircorr(const ExperimentConfig& cfg) {
  cfg.validate();
  const GasketSpec spec = cfg.spec();
  const std::vector<double> ts = cfg.effective_ts({1000.0});
  const std::vector<Region> regions = cfg.effective_regions();
  const std::vector<double> grid = make_s_grid(cfg.s_max, cfg.s_step);

  std::vector<LabeledSeries> out;
  for (const double T : ts) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    for (const Region& region : regions) {
      const std::vector<Complex> pts = restrict_centers(set, region);
      if (pts.size() < 2)
        throw numeric_error("pair correlation needs at least 2 centers in region '" +
                            region.label() + "' at T=" + t_tag(T));
      StatSeries f = roundtrip_series(pair_correlation(pts, T, grid, region));
      const StatSeries fprime = empirical_derivative(f, cfg.delta);

      const std::string label = "F_T" + t_tag(T) + "_" + region.label();
      const fs::path f_file = cfg.out_dir / (label + ".csv");
      validate_series(f);
      write_text_atomic(f_file, series_to_csv(f));
      json meta = base_meta(cfg, "pair_correlation");
      meta["T"] = T;
      meta["region"] = region.describe();
      meta["region_label"] = region.label();
      meta["n_points"] = pts.size();
      meta["s_max"] = cfg.s_max;
      meta["s_step"] = cfg.s_step;
      write_meta(f_file, meta);

      const fs::path fp_file =
          cfg.out_dir / ("Fprime_T" + t_tag(T) + "_" + region.label() + ".csv");
      validate_series(fprime);
      write_text_atomic(fp_file, series_to_csv(fprime));
      json dmeta = base_meta(cfg, "pair_correlation_derivative");
      dmeta["T"] = T;
      dmeta["region"] = region.describe();
      dmeta["region_label"] = region.label();
      dmeta["n_points"] = pts.size();
      dmeta["s_max"] = cfg.s_max;
      dmeta["s_step"] = cfg.s_step;
      dmeta["derivative_delta"] = cfg.delta;
      dmeta["source"] = f_file.filename().string();
      write_meta(fp_file, dmeta);

      out.push_back({label, std::move(f), f_file});
    }
  }

  if (out.size() > 1) {
    std::string tag = "T" + t_tag(ts.front());
    if (ts.size() > 1) tag += "-" + t_tag(ts.back());
    std::vector<std::string> region_labels;
    for (const Region& r : regions) region_labels.push_back(r.label());
    const fs::path file =
        cfg.out_dir / ("Fsummary_" + tag + "_" + join(region_labels, "-") + ".csv");
    std::vector<std::pair<std::string, const StatSeries*>> entries;
    for (const LabeledSeries& ls : out) entries.emplace_back(ls.label, &ls.series);
    write_summary(file, cfg, entries);
  }
  return out;
}

std::vector<fs::path> cmd_nearest(const ExperimentConfig& cfg) {
  cfg.validate();
  const GasketSpec spec = cfg.spec();
  const std::vector<double> grid = make_s_grid(cfg.s_max, cfg.s_step);
  std::vector<fs::path> written;
  for (const double T : cfg.effective_ts({1000.0})) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    for (const Region& region : cfg.effective_regions()) {
      const std::vector<Complex> pts = restrict_centers(set, region);
      if (pts.size() < 2)
        throw numeric_error("nearest spacing needs at least 2 centers in region '" +
                            region.label() + "' at T=" + t_tag(T));
      StatSeries h = roundtrip_series(
          nearest_spacing(pts, T, grid, region, cfg.threads));
      const bool restricted = region.kind != Region::Kind::whole_plane;
      const std::string name =
          restricted ? "H_T" + t_tag(T) + "_" + region.label() : "H_T" + t_tag(T);
      const fs::path file = cfg.out_dir / (name + ".csv");
      validate_series(h);
      write_text_atomic(file, series_to_csv(h));
      json meta = base_meta(cfg, "nearest_spacing");
      meta["T"] = T;
      meta["region"] = region.describe();
      meta["region_label"] = region.label();
      meta["n_points"] = pts.size();
      meta["s_max"] = cfg.s_max;
      meta["s_step"] = cfg.s_step;
      meta["restricted_extension"] = restricted;
      write_meta(file, meta);
      written.push_back(file);
    }
  }
  return written;
}

std::vector<EnergyValue> cmd_energy(const ExperimentConfig& cfg) {
  cfg.validate();
  const GasketSpec spec = cfg.spec();
  std::vector<double> default_ts;
  for (double T = 100.0; T <= 1000.0; T += 100.0) default_ts.push_back(T);
  const std::vector<double> ts = cfg.effective_ts(default_ts);

  std::vector<EnergyValue> rows;
  for (const double T : ts) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    const std::vector<Complex> pts = circle_centers(set);
    if (pts.size() < 2)
      throw numeric_error("energy needs at least 2 circles at T=" + t_tag(T));
    const EnergyValue ev = energy(pts, T, cfg.threads);
    if (!(ev.value > 0.0) || !std::isfinite(ev.value))
      throw numeric_error("energy must be positive and finite at T=" + t_tag(T));
    rows.push_back(ev);
  }

  std::string csv = "T,G\n";
  std::vector<double> rounded;
  for (const EnergyValue& ev : rows) {
    csv += format_g12(ev.T) + "," + format_g12(ev.value) + "\n";
    rounded.push_back(parse_double(format_g12(ev.value)));
  }
  const fs::path file = cfg.out_dir / "energy.csv";
  write_text_atomic(file, csv);
  json meta = base_meta(cfg, "energy");
  meta["hausdorff_delta"] = kHausdorffDelta;
  meta["t_list"] = json::array();
  for (const double T : ts) meta["t_list"].push_back(T);
  write_meta(file, meta);

  if (rows.size() > 1) {
    std::string conv = "T,rel_change\n";
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double rel = std::abs(rounded[i] - rounded[i - 1]) / rounded[i - 1];
      conv += format_g12(rows[i].T) + "," + format_g12(rel) + "\n";
    }
    const fs::path cfile = cfg.out_dir / "energy_convergence.csv";
    write_text_atomic(cfile, conv);
    json cmeta = base_meta(cfg, "energy_convergence");
    cmeta["source"] = file.filename().string();
    write_meta(cfile, cmeta);
  }
  return rows;
}

std::vector<CountRatio> cmd_count(const ExperimentConfig& cfg) {
  cfg.validate();
  const GasketSpec spec = cfg.spec();
  const std::vector<double> ts = cfg.effective_ts({100.0, 200.0, 400.0, 800.0, 1600.0});

  std::vector<CountRatio> rows;
  for (const double T : ts) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    rows.push_back(count_ratio(set));
  }

  std::string csv = "T,count,ratio,rel_change\n";
  std::vector<double> rounded;
  for (const CountRatio& r : rows) rounded.push_back(parse_double(format_g12(r.ratio)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    csv += format_g12(rows[i].T) + "," + std::to_string(rows[i].count) + "," +
           format_g12(rows[i].ratio) + ",";
    if (i > 0)
      csv += format_g12(std::abs(rounded[i] - rounded[i - 1]) / rounded[i - 1]);
    csv += "\n";
  }
  const fs::path file = cfg.out_dir / "count.csv";
  write_text_atomic(file, csv);
  json meta = base_meta(cfg, "count");
  meta["hausdorff_delta"] = kHausdorffDelta;
  meta["t_list"] = json::array();
  for (const double T : ts) meta["t_list"].push_back(T);
  write_meta(file, meta);
  return rows;
}

std::vector<std::pair<double, double>> cmd_visible(const ExperimentConfig& cfg, double s) {
  cfg.validate();
  if (!(s >= 0.0) || !std::isfinite(s))
    throw config_error("config: visibility threshold s must be non-negative");
  const GasketSpec spec = cfg.spec();
  std::vector<std::pair<double, double>> rows;
  std::string csv = "T,visible\n";
  for (const double T : cfg.effective_ts({500.0, 1000.0})) {
    const CircleSet set =
        enumerate_circles(spec, T, {cfg.include_bounding, Validation::sampled});
    const double v = expected_visible(set, s);
    rows.emplace_back(T, v);
    csv += format_g12(T) + "," + format_g12(v) + "\n";
  }
  const fs::path file = cfg.out_dir / ("visible_s" + t_tag(s) + ".csv");
  write_text_atomic(file, csv);
  json meta = base_meta(cfg, "expected_visible");
  meta["s"] = s;
  write_meta(file, meta);
  return rows;
}

void cmd_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Angles {
    double a, b;
  };
  const Angles reference{1.8 / 3.0, 3.7 / 3.0};
  const std::vector<Angles> family = {
      reference, {1.1 / 3.0, 3.5 / 3.0}, {2.5 / 3.0, 4.2 / 3.0}, {2.9 / 3.0, 3.2 / 3.0}};

  auto gasket_dir = [&](const Angles& g) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "P_%.6f_%.6f", g.a, g.b);
    return cfg.out_dir / buf;
  };

  // reference gasket across scales
  ExperimentConfig sub = cfg;
  sub.theta1_pi = reference.a;
  sub.theta2_pi = reference.b;
  sub.out_dir = gasket_dir(reference);
  sub.regions = {Region::plane()};
  sub.t_list = {125.0, 250.0, 500.0, 1000.0};
  cmd_paircorr(sub);
  cmd_nearest(sub);

  // region comparison at the largest scale
  sub.t_list = {1000.0};
  sub.regions = {Region::plane(), Region::halfplane(), Region::quadrant()};
  cmd_paircorr(sub);

  sub.regions = {Region::plane()};
  sub.t_list.clear();
  cmd_energy(sub);   // default 100..1000
  cmd_count(sub);    // default 100..1600
  sub.t_list = {500.0, 1000.0};
  cmd_visible(sub, 10.0);

  // gasket family comparison at T = 1000
  std::vector<std::pair<std::string, StatSeries>> family_series;
  for (const Angles& g : family) {
    ExperimentConfig fsub = cfg;
    fsub.theta1_pi = g.a;
    fsub.theta2_pi = g.b;
    fsub.out_dir = gasket_dir(g);
    fsub.t_list = {1000.0};
    fsub.regions = {Region::plane()};
    std::vector<LabeledSeries> series = cmd_paircorr(fsub);
    family_series.emplace_back(gasket_dir(g).filename().string(),
                               std::move(series.front().series));
  }
  std::vector<std::pair<std::string, const StatSeries*>> entries;
  for (const auto& [label, series] : family_series) entries.emplace_back(label, &series);
  write_summary(cfg.out_dir / "Fsummary_gaskets_T1000.csv", cfg, entries);
}

}  // namespace gasket
