#include "matchstick/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "matchstick/census.hpp"
#include "matchstick/enumerate.hpp"

namespace matchstick {

namespace {

int default_workers() {
  if (const char* env = std::getenv("MATCHSTICK_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void write_all_artifacts(const std::vector<CensusLevel>& levels,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  emit_catalog(levels, dir / "catalog.json");
  emit_table1(levels, dir / "table1.csv");
  emit_table2(levels, dir / "table2.csv");
  emit_plot_data(levels, dir / "plots.csv");
  emit_svgs(levels, dir / "svg");
  emit_embeddings(levels, dir / "embeddings");
  emit_unresolved(levels, dir / "unresolved.txt");
  emit_discrepancies(levels, dir / "discrepancies.txt");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"census of connected graphs drawable with non-crossing unit segments"};
  app.require_subcommand(1);
  app.fallthrough();

  int workers = default_workers();
  app.add_option("--workers", workers, "worker threads (default: MATCHSTICK_WORKERS or hardware)");

  SolveConfig cfg;

  auto* cmd_enum = app.add_subcommand("enumerate", "list connected graph classes with n edges");
  int enum_n = 1;
  cmd_enum->add_option("--n", enum_n, "edge count")->required()->check(CLI::Range(1, 10));

  auto* cmd_census = app.add_subcommand("census", "run the census and write all artifacts");
  int n_max = 9;
  std::string census_out;
  cmd_census->add_option("--n-max", n_max, "largest edge count")->check(CLI::Range(1, 9));
  cmd_census->add_option("--out", census_out, "output directory")->required();
  cmd_census->add_option("--seed", cfg.rng_seed, "base RNG seed");
  cmd_census->add_option("--restarts", cfg.restarts, "solver restarts per graph");
  cmd_census->add_option("--max-iterations", cfg.max_iterations, "iteration cap per restart");
  cmd_census->add_option("--length-tol", cfg.length_tol, "max |edge length - 1|");
  cmd_census->add_option("--cross-tol", cfg.cross_tol, "min edge-edge clearance");
  cmd_census->add_option("--angle-tol", cfg.angle_tol, "min incident-edge angle (rad)");
  cmd_census->add_option("--vertex-sep", cfg.vertex_sep, "min vertex clearance");

  auto* cmd_render = app.add_subcommand("render", "redraw the figures from a catalog");
  std::string render_catalog, render_out;
  cmd_render->add_option("--catalog", render_catalog, "catalog.json path")->required();
  cmd_render->add_option("--out", render_out, "output directory")->required();

  auto* cmd_verify = app.add_subcommand("verify", "re-validate a catalog");
  std::string verify_catalog_path;
  cmd_verify->add_option("--catalog", verify_catalog_path, "catalog.json path")->required();

  auto* cmd_plots = app.add_subcommand("plots", "write plot data from a catalog");
  std::string plots_catalog, plots_out;
  cmd_plots->add_option("--catalog", plots_catalog, "catalog.json path")->required();
  cmd_plots->add_option("--out", plots_out, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << ex.what() << "\n";
    return 2;
  }

  try {
    if (cmd_enum->parsed()) {
      for (const auto& g : enumerate_connected(enum_n, workers)) out << g.to_text() << "\n";
      return 0;
    }
    if (cmd_census->parsed()) {
      auto levels = census(n_max, cfg, workers);
      write_all_artifacts(levels, census_out);
      std::int64_t undecided = 0;
      for (const auto& level : levels) {
        out << "n=" << level.n << " q=" << level.q << " p=" << level.p << "\n";
        undecided += static_cast<std::int64_t>(level.unresolved.size());
      }
      if (undecided) out << "undecided graphs: " << undecided << " (see unresolved.txt)\n";
      return 0;
    }
    if (cmd_render->parsed()) {
      emit_svgs(load_catalog(render_catalog), render_out);
      return 0;
    }
    if (cmd_verify->parsed()) return verify_catalog(verify_catalog_path, out, cfg);
    if (cmd_plots->parsed()) {
      std::filesystem::create_directories(plots_out);
      emit_plot_data(load_catalog(plots_catalog), std::filesystem::path(plots_out) / "plots.csv");
      return 0;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace matchstick
