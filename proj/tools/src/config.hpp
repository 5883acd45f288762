#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fracburgers::cli {

struct SimulateSettings {
  double alpha = 1.5;
  double local_diffusion = 0.0;
  /// delta | tanh | zero
  std::string datum = "delta";
  double u_minus = -1.0;
  double u_plus = 1.0;
  double half_length = 64.0;
  std::size_t points = 2048;
  double dt = 0.01;
  double t_end = 16.0;
  std::vector<double> samples = {1.0, 2.0, 4.0, 8.0};
  /// burgers | quartic
  std::string flux = "burgers";
  bool dealias = true;
};

struct KernelSettings {
  double alpha = 1.5;
  double extent = 100.0;
  double core = 10.0;
  double fine = 0.02;
  double growth = 0.01;
  double max_panel_phase = 4.0;
};

struct VerifySettings {
  double alpha = 1.5;
  /// random | constant
  std::string corpus = "random";
  std::size_t corpus_size = 100;
  std::uint64_t seed = 1;
  double half_length = 32.0;
  std::size_t points = 1024;
  double tolerance = 1e-8;
  std::vector<double> hyper_exponents = {1.5, 2.0, 3.0, 4.0};
  std::vector<double> interpolation_exponents;
  std::vector<std::pair<double, double>> gn_pairs;
  bool solver_checks = true;
  double solver_half_length = 128.0;
  std::size_t solver_points = 2048;
  double solver_dt = 0.02;
  double solver_t_end = 20.0;

  VerifySettings();
};

struct RateSettings {
  std::vector<double> alphas = {1.5, 1.9};
  std::vector<double> ps;
  double u_minus = -1.0;
  double u_plus = 1.0;
  double half_length = 800.0;
  std::size_t points = 8192;
  double dt = 0.05;
  double t_start = 5.0;
  double t_end = 200.0;
  std::size_t samples = 16;
  double slack = 0.05;

  RateSettings();
};

struct RunConfig {
  SimulateSettings simulate;
  KernelSettings kernel;
  VerifySettings verify;
  RateSettings rate;
};

/// Defaults overridden by the INI file, if any. Unknown sections or keys
/// are rejected.
RunConfig load_config(const std::optional<std::filesystem::path>& path);

/// Resolved settings of one command as INI text.
std::string to_ini(const RunConfig& config, const std::string& command);

/// Range and consistency checks; throws ValidationError.
void validate(const RunConfig& config, const std::string& command);

/// "inf" for infinity, shortest round-trip decimal otherwise.
std::string format_value(double value);

}  // namespace fracburgers::cli
