#pragma once

#include <filesystem>
#include <string>

#include "config.hpp"

namespace fracburgers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitViolation = 3;

struct Context {
  RunConfig config;
  std::filesystem::path out_dir = "out";
  std::size_t threads = 1;
};

int cmd_simulate(const Context& ctx);
int cmd_kernel(const Context& ctx);
int cmd_verify(const Context& ctx);
int cmd_rate(const Context& ctx);

}  // namespace fracburgers::cli
