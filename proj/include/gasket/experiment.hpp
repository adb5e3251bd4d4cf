#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "gasket/enumerate.hpp"
#include "gasket/statistics.hpp"

namespace gasket {

// angles on the command line are multiples of pi, either a plain decimal
// ("0.6") or a fraction ("1.8/3"); returns the multiple, not radians
double parse_pi_multiple(const std::string& text);

struct ExperimentConfig {
  double theta1_pi = 1.8 / 3.0;
  double theta2_pi = 3.7 / 3.0;
  std::vector<double> t_list;   // empty: per-command default
  std::vector<Region> regions;  // empty: whole plane
  double s_max = 20.0;
  double s_step = 0.05;
  double delta = 0.1;
  bool include_bounding = true;
  bool deterministic = false;  // recorded in metadata; outputs are always deterministic
  int threads = 0;             // <= 0: hardware concurrency
  std::filesystem::path out_dir = ".";

  GasketSpec spec() const;
  std::vector<Region> effective_regions() const;
  std::vector<double> effective_ts(std::vector<double> fallback) const;
  void validate() const;  // throws config_error
};

struct LabeledSeries {
  std::string label;
  StatSeries series;  // values as written to disk (round-tripped)
  std::filesystem::path file;
};

// values through %.12g text and back, so in-memory series match their files
StatSeries roundtrip_series(StatSeries series);

// circle CSVs per T (default T = 100)
std::vector<std::filesystem::path> cmd_generate(const ExperimentConfig& cfg);

// F and F' CSVs per (T, region) plus a pairwise sup-norm summary when more
// than one series is produced; returns the F series as written
std::vector<LabeledSeries> cmd_paircorr(const ExperimentConfig& cfg);

// H CSVs per (T, region); regions other than the whole plane are flagged as
// restricted extensions in the metadata
std::vector<std::filesystem::path> cmd_nearest(const ExperimentConfig& cfg);

// energy table over t_list (default 100..1000 step 100) plus successive
// relative changes
std::vector<EnergyValue> cmd_energy(const ExperimentConfig& cfg);

// count and count/T^delta table over t_list (default 100,200,400,800,1600)
std::vector<CountRatio> cmd_count(const ExperimentConfig& cfg);

// expected visible neighbors 2*F_T(s) per T (default T = 500, 1000)
std::vector<std::pair<double, double>> cmd_visible(const ExperimentConfig& cfg,
                                                   double s = 10.0);

// full reproduction battery: the reference gasket across scales and
// regions, plus the gasket-family comparison at T = 1000
void cmd_sweep(const ExperimentConfig& cfg);

}  // namespace gasket
