#include "fracburgers/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "fracburgers/errors.hpp"
#include "fracburgers/levy_symbol.hpp"
#include "fracburgers/spectral.hpp"

namespace fracburgers {
namespace {

double inverse(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void require_nonzero(double value, const char* what) {
  if (!(value > 0.0)) throw ValidationError(fmt::format("{} vanishes", what));
}

// Lambda^alpha with alpha = 2 handled as -d^2/dx^2 through the symbol xi^2.
LevySymbol power_symbol(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw ValidationError(fmt::format("alpha = {} outside (0, 2]", alpha));
  }
  return LevySymbol::fractional(alpha);
}

double signum(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double check_nash(const Field& f, double alpha) {
  const double l2 = lp_norm(f, 2.0);
  require_nonzero(l2, "check_nash: ||f||_2");
  const double energy = symbol_quadratic_form(f, power_symbol(alpha));
  require_nonzero(energy, "check_nash: ||Lambda^{alpha/2} f||_2");
  const double l1 = lp_norm(f, 1.0);
  // Work with logarithms; the powers over- or underflow for wide fields.
  const double log_ratio = 2.0 * (1.0 + alpha) * std::log(l2) - std::log(energy) -
                           2.0 * alpha * std::log(l1);
  return std::exp(log_ratio);
}

double check_interpolation(const Field& f, double alpha, double p) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw ValidationError("check_interpolation: alpha must lie in (1, 2]");
  }
  const double fx = lp_norm(derivative(f, 1), p);
  const double fxx = lp_norm(derivative(f, 2), p);
  require_nonzero(fx, "check_interpolation: ||f_x||_p");
  require_nonzero(fxx, "check_interpolation: ||f_xx||_p");
  const double lhs = lp_norm(apply_symbol(f, power_symbol(alpha)), p);
  return lhs / (std::pow(fx, 2.0 - alpha) * std::pow(fxx, alpha - 1.0));
}

double gagliardo_nirenberg_exponent(double p0, double p) {
  if (!(p0 > 1.0 && p > p0)) {
    throw ValidationError(
        fmt::format("check_gagliardo_nirenberg: need 1 < p0 < p, got p0 = {}, p = {}", p0, p));
  }
  return (1.0 / p0 - inverse(p)) / (1.0 + 1.0 / p0);
}

double check_gagliardo_nirenberg(const Field& f, double p0, double p) {
  const double a = gagliardo_nirenberg_exponent(p0, p);
  const double num = lp_norm(f, p);
  require_nonzero(num, "check_gagliardo_nirenberg: ||f||_p");
  const double fx = lp_norm(derivative(f, 1), kInfinity);
  require_nonzero(fx, "check_gagliardo_nirenberg: ||f_x||_inf");
  const double fp0 = lp_norm(f, p0);
  return num / (std::pow(fx, a) * std::pow(fp0, 1.0 - a));
}

PositivityForms evaluate_positivity_forms(const Field& f, double alpha, double p) {
  if (!(p > 1.0)) throw ValidationError("check_positivity_forms: p must be > 1");
  const LevySymbol symbol = power_symbol(alpha);
  const Field lf = apply_symbol(f, symbol);
  const Grid& g = f.grid();
  const double dx = g.dx();

  PositivityForms out;
  std::vector<double> weight(g.size()), power(g.size());
  double hyper = 0.0, sign = 0.0, plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = f[i];
    weight[i] = signum(v) * std::pow(std::abs(v), p - 1.0);
    power[i] = std::pow(std::abs(v), 0.5 * p);
    hyper += lf[i] * weight[i];
    sign += lf[i] * signum(v);
    plus += lf[i] * std::max(v, 0.0);
    minus += lf[i] * std::min(v, 0.0);
  }
  out.hyper_lhs = hyper * dx;
  out.hyper_rhs = 4.0 * (p - 1.0) / (p * p) *
                  symbol_quadratic_form(Field(g, std::move(power)), symbol);
  out.hyper_scale = lp_norm(lf, 2.0) * lp_norm(weight, dx, 2.0);
  out.sign = sign * dx;
  out.sign_scale = lp_norm(lf, 1.0);
  out.positive_part = plus * dx;
  out.negative_part = minus * dx;
  out.part_scale = lp_norm(lf, 2.0) * lp_norm(f, 2.0);
  return out;
}

std::vector<InequalityReport> check_positivity_forms(const Field& f, double alpha, double p,
                                                     double tolerance) {
  const PositivityForms forms = evaluate_positivity_forms(f, alpha, p);
  auto make = [&](std::string name, double value, double scale) {
    InequalityReport r;
    r.name = std::move(name);
    r.count = 1;
    r.worst_ratio = scale > 0.0 ? value / scale : 0.0;
    r.violations = (value < -tolerance * scale) ? 1 : 0;
    return r;
  };
  return {
      make(fmt::format("hyper(p={})", p), forms.hyper_lhs - forms.hyper_rhs, forms.hyper_scale),
      make("sgn", forms.sign, forms.sign_scale),
      make("plus", forms.positive_part, forms.part_scale),
      make("minus", forms.negative_part, forms.part_scale),
  };
}

double CorpusMember::operator()(double x) const {
  double s = 0.0;
  for (const auto& pk : packets) {
    const double r = (x - pk.center) / pk.width;
    s += pk.amplitude * std::exp(-0.5 * r * r) * std::cos(pk.wavenumber * x + pk.phase);
  }
  return s;
}

std::vector<CorpusMember> random_corpus(std::size_t count, std::uint64_t seed, double spread) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };
  std::vector<CorpusMember> corpus;
  corpus.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    CorpusMember m;
    m.nonnegative = (n % 4 == 0);
    const int packets = 1 + static_cast<int>(unit(rng) * 4.0);
    for (int j = 0; j < packets; ++j) {
      CorpusMember::Packet pk{};
      pk.center = uniform(-spread, spread);
      pk.width = uniform(1.0, 3.0);
      if (m.nonnegative) {
        pk.amplitude = uniform(0.2, 1.0);
        pk.wavenumber = 0.0;
        pk.phase = 0.0;
      } else {
        pk.amplitude = uniform(-1.0, 1.0);
        pk.wavenumber = uniform(0.0, 3.0);
        pk.phase = uniform(0.0, 6.283185307179586);
      }
      m.packets.push_back(pk);
    }
    corpus.push_back(std::move(m));
  }
  return corpus;
}

Field realize(const CorpusMember& member, const Grid& grid) {
  const Field raw = Field::from_function(grid, [&](double x) { return member(x); });
  auto coeffs = raw.spectrum();
  const std::size_t keep = grid.size() / 8;
  for (std::size_t k = keep + 1; k < coeffs.size(); ++k) coeffs[k] = 0.0;
  const Field limited = Field::from_spectrum(grid, std::move(coeffs));
  const double peak = lp_norm(limited, kInfinity);
  if (peak == 0.0) return limited;
  return (1.0 / peak) * limited;
}

std::vector<InequalityReport> run_inequality_suite(const std::vector<Field>& corpus,
                                                   const SuiteOptions& options) {
  std::vector<InequalityReport> reports;
  auto ratio_report = [&](std::string name, auto&& evaluate) {
    InequalityReport r;
    r.name = std::move(name);
    r.worst_ratio = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      try {
        const double v = evaluate(corpus[i]);
        ++r.count;
        if (!std::isfinite(v)) {
          ++r.violations;
        } else if (v > r.worst_ratio) {
          r.worst_ratio = v;
          r.worst_index = i;
        }
      } catch (const ValidationError&) {
        ++r.rejected;
      }
    }
    r.implied_constant = r.worst_ratio;
    reports.push_back(std::move(r));
  };

  const double a = options.alpha;
  ratio_report(fmt::format("nash(alpha={})", a),
               [&](const Field& f) { return check_nash(f, a); });
  for (double p : options.interpolation_exponents) {
    ratio_report(fmt::format("interpolation(alpha={},p={})", a, p),
                 [&](const Field& f) { return check_interpolation(f, a, p); });
  }
  for (auto [p0, p] : options.gn_pairs) {
    ratio_report(fmt::format("gagliardo_nirenberg(p0={},p={})", p0, p),
                 [&](const Field& f) { return check_gagliardo_nirenberg(f, p0, p); });
  }

  for (std::size_t h = 0; h < options.hyper_exponents.size(); ++h) {
    const double p = options.hyper_exponents[h];
    std::vector<InequalityReport> merged;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Field& f = corpus[i];
      bool degenerate = lp_norm(f, kInfinity) == 0.0;
      std::vector<InequalityReport> single;
      if (!degenerate) {
        single = check_positivity_forms(f, a, p, options.tolerance);
        // A field annihilated by Lambda^alpha (constants) fails the
        // precondition Lambda^alpha f in L^1 \ {0}.
        degenerate = lp_norm(apply_symbol(f, LevySymbol::fractional(a)), kInfinity) <=
                     1e-14 * lp_norm(f, kInfinity);
      }
      if (merged.empty()) {
        const std::vector<std::string> names = {fmt::format("hyper(alpha={},p={})", a, p),
                                                "sgn", "plus", "minus"};
        for (const auto& n : names) {
          InequalityReport r;
          r.name = n;
          r.worst_ratio = kInfinity;
          merged.push_back(r);
        }
      }
      for (std::size_t k = 0; k < merged.size(); ++k) {
        if (degenerate) {
          ++merged[k].rejected;
          continue;
        }
        ++merged[k].count;
        merged[k].violations += single[k].violations;
        if (single[k].worst_ratio < merged[k].worst_ratio) {
          merged[k].worst_ratio = single[k].worst_ratio;
          merged[k].worst_index = i;
        }
      }
    }
    // The sign-type forms do not depend on p; keep them once.
    if (h == 0) {
      merged[1].name = fmt::format("sgn(alpha={})", a);
      merged[2].name = fmt::format("plus(alpha={})", a);
      merged[3].name = fmt::format("minus(alpha={})", a);
      for (auto& r : merged) reports.push_back(std::move(r));
    } else {
      reports.push_back(std::move(merged[0]));
    }
  }
  return reports;
}

}  // namespace fracburgers
