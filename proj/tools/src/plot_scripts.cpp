#include "plot_scripts.hpp"

#include <fmt/format.h>

namespace fracburgers::cli {

std::string simulate_plot_script(double u_minus, double u_plus, bool with_wave) {
  return fmt::format(R"py(#!/usr/bin/env python3
# u(x, t) snapshots from trajectory.csv against the rarefaction wave.
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path) as f:
        rows = [line for line in f if not line.startswith("#")]
    return np.loadtxt(rows[1:], delimiter=",", ndmin=2)

U_MINUS, U_PLUS, WITH_WAVE = {}, {}, {}
data = load("trajectory.csv")
fig, ax = plt.subplots(figsize=(8, 5))
for t in np.unique(data[:, 0]):
    rows = data[data[:, 0] == t]
    line, = ax.plot(rows[:, 1], rows[:, 2], label=f"t = {{t:g}}")
    if WITH_WAVE and t > 0:
        x = rows[:, 1]
        ax.plot(x, np.clip(x / t, U_MINUS, U_PLUS), "--", color=line.get_color(), lw=0.8)
ax.set_xlabel("x")
ax.set_ylabel("u")
ax.legend()
fig.savefig("simulate.png", dpi=150)
)py",
                     u_minus, u_plus, with_wave ? "True" : "False");
}

std::string kernel_plot_script(double alpha) {
  return fmt::format(R"py(#!/usr/bin/env python3
# Profile P_alpha from kernel_profile.csv on log-log axes with the |y|^-(alpha+1) slope.
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path) as f:
        rows = [line for line in f if not line.startswith("#")]
    return np.loadtxt(rows[1:], delimiter=",", ndmin=2)

ALPHA = {}
data = load("kernel_profile.csv")
y, p = data[:, 0], data[:, 1]
mask = (y > 0) & (p > 0)
fig, ax = plt.subplots(figsize=(7, 5))
ax.loglog(y[mask], p[mask], label="P_alpha")
ref = p[mask][-1] * (y[mask] / y[mask][-1]) ** (-(ALPHA + 1))
ax.loglog(y[mask], ref, "--", label="|y|^-(alpha+1)")
ax.set_xlabel("y")
ax.legend()
fig.savefig("kernel.png", dpi=150)
)py",
                     alpha);
}

std::string rate_plot_script(const std::vector<std::string>& run_dirs) {
  std::string dirs;
  for (const auto& d : run_dirs) dirs += fmt::format("    \"{}\",\n", d);
  return fmt::format(R"py(#!/usr/bin/env python3
# ||u - w^R||_p against the calibrated bound C t^e log(2+t) for every run.
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    with open(path) as f:
        rows = [line for line in f if not line.startswith("#")]
    return np.loadtxt(rows[1:], delimiter=",", ndmin=2)

RUNS = [
{}]
fig, ax = plt.subplots(figsize=(7, 5))
for run in RUNS:
    data = load(f"{{run}}/table.csv")
    line, = ax.loglog(data[:, 0], data[:, 1], "o-", ms=3, label=run)
    ax.loglog(data[:, 0], data[:, 2], "--", color=line.get_color(), lw=0.8)
ax.set_xlabel("t")
ax.set_ylabel("||u - w^R||_p")
ax.legend()
fig.savefig("rate.png", dpi=150)
)py",
                     dirs);
}

}  // namespace fracburgers::cli
