#pragma once

#include <string>
#include <vector>

namespace fracburgers::cli {

/// Standalone matplotlib scripts that read the CSV files next to them.
std::string simulate_plot_script(double u_minus, double u_plus, bool with_wave);
std::string kernel_plot_script(double alpha);
std::string rate_plot_script(const std::vector<std::string>& run_dirs);

}  // namespace fracburgers::cli
