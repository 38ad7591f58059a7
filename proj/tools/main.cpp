#include <cstdlib>
#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace invfield::cli;

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("invfield");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("LOG_LEVEL")) {
    const auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string(env) != "off")
      spdlog::warn("unknown LOG_LEVEL '{}', keeping warn", env);
    else
      spdlog::set_level(level);
  }
}

void add_space_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--space", cfg.space, "s2, s3 or su2")->capture_default_str();
  sub->add_option("--ell", cfg.ell, "SU(2) degree of the module")->capture_default_str();
  sub->add_option("--basis", cfg.basis, "torus, random or translated")->capture_default_str();
  sub->add_option("--basis-seed", cfg.basis_seed, "seed for random and translated bases")->capture_default_str();
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  sub->add_option("--out", cfg.out, "output path (stdout if omitted)");
  sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"invfield: invariant random fields on spheres and SU(2)"};
  app.require_subcommand(1);

  RunConfig cfg;
  MixingOptions mix;
  SimulateOptions sim;
  TestOptions test;
  DemoOptions demo;

  auto* check = app.add_subcommand("check-mixing", "decide the mixing condition for a basis");
  add_space_options(check, cfg);
  add_run_options(check, cfg);
  check->add_option("--samples", cfg.samples, "Haar samples for the witness search")->capture_default_str();
  check->add_option("--tol", cfg.tol, "margin tolerance")->capture_default_str();
  check->add_option("--g", cfg.g, "evaluate this element instead of searching: \"alpha,beta,gamma\" (ZYZ)");
  check->add_flag("--orbit", mix.orbit, "also run the orbit-span orthogonality check");
  check->add_option("--orbit-samples", mix.orbit_samples)->capture_default_str();
  check->add_option("--rank-tol", mix.rank_tol)->capture_default_str();
  check->add_flag("--exact", mix.exact, "exact polynomial certificate (s3, torus basis)");
  check->add_option("--m1", mix.m1)->capture_default_str();
  check->add_option("--m2", mix.m2, "default min(2, ceil(ell/2))");

  auto* simulate = app.add_subcommand("simulate", "draw coefficient samples as CSV");
  add_space_options(simulate, cfg);
  add_run_options(simulate, cfg);
  simulate->add_option("--n", cfg.samples, "number of samples")->capture_default_str();
  simulate->add_option("--dist", sim.dist, "gaussian, uniform-disc, two-point or bijoux")->capture_default_str();
  simulate->add_option("--c", sim.c, "gaussian variance")->capture_default_str();
  simulate->add_option("--r", sim.r, "uniform-disc radius")->capture_default_str();
  simulate->add_option("--rho", sim.rho, "two-point modulus")->capture_default_str();
  simulate->add_option("--alpha", sim.alpha, "bijoux vector, entries re or re:im");

  auto* tst = app.add_subcommand("test", "run a statistical test on a sample CSV");
  add_space_options(tst, cfg);
  add_run_options(tst, cfg);
  tst->add_option("--kind", test.kind, "invariance, structure, gaussianity or phase")->capture_default_str();
  tst->add_option("--in", test.in, "input CSV (sample_id,k,re,im)")->required();
  tst->add_option("--n-g", test.n_g, "random group elements for the invariance test")->capture_default_str();
  tst->add_flag("--witness", test.witness, "use a mixing witness as the group element");
  tst->add_option("--samples", cfg.samples, "Haar samples for the witness search")->capture_default_str();
  tst->add_option("--tol", cfg.tol, "witness margin tolerance")->capture_default_str();
  tst->add_option("--g", cfg.g, "group element \"alpha,beta,gamma\" (ZYZ)");
  tst->add_option("--k", test.label, "coefficient label for gaussianity and phase")->capture_default_str();
  tst->add_option("--part", test.part, "re or im for gaussianity")->capture_default_str();
  tst->add_option("--phi", test.phi, "rotation angle for the phase test")->capture_default_str();
  tst->add_option("--z-max", test.z_max, "structure test threshold")->capture_default_str();
  tst->add_option("--alpha", test.alpha, "level deciding the exit code")->capture_default_str();

  auto* demo_cmd = app.add_subcommand("demo-nonorthogonal", "covariance of bijoux coefficients");
  add_run_options(demo_cmd, cfg);
  demo_cmd->add_option("--alpha", demo.alpha, "entries re or re:im")->required();
  demo_cmd->add_option("--n", cfg.samples, "number of samples");
  demo_cmd->add_option("--z-flag", demo.z_flag, "z-score marking an entry significant")->capture_default_str();
  demo_cmd->add_option("--table", demo.table, "write the plot-ready CSV table here");
  demo_cmd->add_option("--format", cfg.format, "json or csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (check->parsed()) {
      cfg.command = "check-mixing";
      return cmd_check_mixing(cfg, mix);
    }
    if (simulate->parsed()) {
      cfg.command = "simulate";
      return cmd_simulate(cfg, sim);
    }
    if (tst->parsed()) {
      cfg.command = "test";
      return cmd_test(cfg, test);
    }
    cfg.command = "demo-nonorthogonal";
    if (demo_cmd->count("--n") == 0) cfg.samples = 10000;
    return cmd_demo_nonorthogonal(cfg, demo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
