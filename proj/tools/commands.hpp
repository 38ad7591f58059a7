#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invfield::cli {

inline constexpr std::uint64_t kDefaultSeed = 20160705;
inline constexpr std::uint64_t kDefaultBasisSeed = 1;

enum ExitCode { kOk = 0, kError = 1, kNegative = 2, kInconclusive = 3 };

struct RunConfig {
  std::string command;
  std::string space = "s2";
  int ell = 4;
  std::string basis = "torus";
  std::uint64_t basis_seed = kDefaultBasisSeed;
  std::uint64_t seed = kDefaultSeed;
  long samples = 1000;
  double tol = 1e-6;
  int threads = 1;
  std::string out;
  std::string format = "json";
  std::string g;  // Euler angles "alpha,beta,gamma" (six values for s3)
};

struct MixingOptions {
  bool orbit = false;
  long orbit_samples = 100000;
  bool exact = false;
  double rank_tol = 1e-8;
  int m1 = 1;
  int m2 = 0;  // 0: min(2, ceil(ell / 2))
};

struct SimulateOptions {
  std::string dist = "gaussian";
  double c = 1.0;
  double r = 1.0;
  double rho = 1.0;
  std::string alpha;  // bijoux: comma-separated entries, each "re" or "re:im"
};

struct TestOptions {
  std::string kind = "invariance";
  std::string in;
  int n_g = 10;
  bool witness = false;
  int label = 1;
  std::string part = "re";
  double phi = 1.0;
  double z_max = 4.0;
  double alpha = 0.01;
};

struct DemoOptions {
  std::string alpha;
  double z_flag = 4.0;
  std::string table;
};

int cmd_check_mixing(const RunConfig& cfg, const MixingOptions& opt);
int cmd_simulate(const RunConfig& cfg, const SimulateOptions& opt);
int cmd_test(const RunConfig& cfg, const TestOptions& opt);
int cmd_demo_nonorthogonal(const RunConfig& cfg, const DemoOptions& opt);

}  // namespace invfield::cli
