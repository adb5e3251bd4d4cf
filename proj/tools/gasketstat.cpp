#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gasket/errors.hpp"
#include "gasket/experiment.hpp"
#include "gasket/io.hpp"
#include "gasket/version.hpp"

namespace {

void print_error(const char* what) { std::fprintf(stderr, "gasketstat: %s\n", what); }

}  // namespace

int main(int argc, char** argv) {
  using namespace gasket;

  CLI::App app{"Apollonian gasket enumeration and normalized spatial statistics"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "read options from an INI file (flags override it)");
  app.require_subcommand(1);

  std::string theta1 = "1.8/3";
  std::string theta2 = "3.7/3";
  std::vector<double> t_list;
  double tmax = 0.0;
  std::vector<std::string> region_args;
  double s_max = 20.0, s_step = 0.05, delta = 0.1;
  bool include_bounding = true;
  bool deterministic = false;
  int threads = 0;
  std::string out_dir = ".";
  double visible_s = 10.0;

  app.add_option("--theta1", theta1,
                 "first tangency angle as a multiple of pi (e.g. 0.6 or 1.8/3)")
      ->capture_default_str();
  app.add_option("--theta2", theta2,
                 "second tangency angle as a multiple of pi")
      ->capture_default_str();
  auto* opt_tmax = app.add_option("--tmax", tmax, "single curvature bound T");
  auto* opt_tlist =
      app.add_option("--t-list", t_list, "comma-separated curvature bounds")
          ->delimiter(',');
  opt_tmax->excludes(opt_tlist);
  opt_tlist->excludes(opt_tmax);
  app.add_option("--region", region_args,
                 "statistics window: plane, halfplane, quadrant, disk:cx,cy,r or "
                 "rect:x0,y0,x1,y1 (repeatable)");
  app.add_option("--smax", s_max, "largest normalized distance s")->capture_default_str();
  app.add_option("--sstep", s_step, "s-grid step")->capture_default_str();
  app.add_option("--delta", delta, "difference step for the empirical derivative")
      ->capture_default_str();
  app.add_option("--include-bounding", include_bounding,
                 "include the bounding circle (true/false)")
      ->capture_default_str();
  app.add_flag("--deterministic", deterministic,
               "record deterministic mode in metadata (outputs are always deterministic)");
  app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency")
      ->capture_default_str();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--s", visible_s, "normalized distance for the visible command")
      ->capture_default_str();

  CLI::App* c_generate =
      app.add_subcommand("generate", "enumerate circles below T and write circle CSVs");
  CLI::App* c_paircorr =
      app.add_subcommand("paircorr", "pair correlation F and empirical derivative F'");
  CLI::App* c_nearest =
      app.add_subcommand("nearest", "nearest-neighbor spacing distribution H");
  CLI::App* c_energy = app.add_subcommand("energy", "normalized electrostatic energy G(T)");
  CLI::App* c_count = app.add_subcommand("count", "circle counts and count/T^delta ratios");
  CLI::App* c_visible =
      app.add_subcommand("visible", "expected visible neighbors 2*F_T(s)");
  CLI::App* c_sweep =
      app.add_subcommand("sweep", "full reproduction battery across scales, regions and gaskets");
  for (CLI::App* sub : {c_generate, c_paircorr, c_nearest, c_energy, c_count,
                        c_visible, c_sweep})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ExperimentConfig cfg;
    cfg.theta1_pi = parse_pi_multiple(theta1);
    cfg.theta2_pi = parse_pi_multiple(theta2);
    if (opt_tmax->count() > 0)
      cfg.t_list = {tmax};
    else
      cfg.t_list = t_list;
    for (const std::string& r : region_args) cfg.regions.push_back(Region::parse(r));
    cfg.s_max = s_max;
    cfg.s_step = s_step;
    cfg.delta = delta;
    cfg.include_bounding = include_bounding;
    cfg.deterministic = deterministic;
    cfg.threads = threads;
    cfg.out_dir = out_dir;
    cfg.validate();

    if (app.got_subcommand(c_generate)) {
      const auto files = cmd_generate(cfg);
      std::printf("wrote %zu circle file(s) under %s\n", files.size(), out_dir.c_str());
    } else if (app.got_subcommand(c_paircorr)) {
      const auto series = cmd_paircorr(cfg);
      std::printf("wrote %zu pair correlation series under %s\n", series.size(),
                  out_dir.c_str());
    } else if (app.got_subcommand(c_nearest)) {
      const auto files = cmd_nearest(cfg);
      std::printf("wrote %zu spacing series under %s\n", files.size(), out_dir.c_str());
    } else if (app.got_subcommand(c_energy)) {
      const auto rows = cmd_energy(cfg);
      for (const EnergyValue& ev : rows)
        std::printf("T=%s  G=%s\n", format_g12(ev.T).c_str(),
                    format_g12(ev.value).c_str());
    } else if (app.got_subcommand(c_count)) {
      const auto rows = cmd_count(cfg);
      for (const CountRatio& r : rows)
        std::printf("T=%s  count=%llu  count/T^delta=%s\n", format_g12(r.T).c_str(),
                    static_cast<unsigned long long>(r.count),
                    format_g12(r.ratio).c_str());
    } else if (app.got_subcommand(c_visible)) {
      const auto rows = cmd_visible(cfg, visible_s);
      for (const auto& [T, v] : rows)
        std::printf("T=%s  expected visible neighbors at s=%s: %s\n",
                    format_g12(T).c_str(), format_g12(visible_s).c_str(),
                    format_g12(v).c_str());
    } else if (app.got_subcommand(c_sweep)) {
      cmd_sweep(cfg);
      std::printf("sweep complete under %s\n", out_dir.c_str());
    }
    return 0;
  } catch (const config_error& e) {
    print_error(e.what());
    return 2;
  } catch (const numeric_error& e) {  // includes degeneracy
    print_error(e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    print_error(e.what());
    return 2;
  } catch (const io_error& e) {
    print_error(e.what());
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    print_error(e.what());
    return 4;
  } catch (const std::exception& e) {
    print_error(e.what());
    return 1;
  }
}
