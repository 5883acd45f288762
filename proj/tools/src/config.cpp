#include "config.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "fracburgers/errors.hpp"

namespace fracburgers::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf") return kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size() || std::isnan(v) || std::isinf(v)) {
    throw ValidationError(fmt::format("config key '{}': '{}' is not a number", key, text));
  }
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (v < 0 || v != std::floor(v) || v > 1e15) {
    throw ValidationError(fmt::format("config key '{}': '{}' is not a count", key, text));
  }
  return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "on" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "off" || t == "no") return false;
  throw ValidationError(fmt::format("config key '{}': '{}' is not a boolean", key, text));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(key, item));
  return out;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& key,
                                                   const std::string& text) {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) {
      throw ValidationError(fmt::format("config key '{}': expected p0:p pairs, got '{}'", key, item));
    }
    out.emplace_back(parse_double(key, parts[0]), parse_double(key, parts[1]));
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_value(values[i]);
  }
  return out;
}

std::string join(const std::vector<std::pair<double, double>>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += format_value(pairs[i].first) + ":" + format_value(pairs[i].second);
  }
  return out;
}

// Key table for one section: name -> (setter, printer).
struct Entry {
  std::function<void(const std::string&)> set;
  std::function<std::string()> get;
};
using Section = std::vector<std::pair<std::string, Entry>>;

Entry number(const std::string& key, double& target) {
  return {[&target, key](const std::string& v) { target = parse_double(key, v); },
          [&target] { return format_value(target); }};
}
Entry count(const std::string& key, std::size_t& target) {
  return {[&target, key](const std::string& v) { target = parse_count(key, v); },
          [&target] { return std::to_string(target); }};
}
Entry seed(const std::string& key, std::uint64_t& target) {
  return {[&target, key](const std::string& v) { target = parse_count(key, v); },
          [&target] { return std::to_string(target); }};
}
Entry text(std::string& target) {
  return {[&target](const std::string& v) { target = trim(v); }, [&target] { return target; }};
}
Entry flag(const std::string& key, bool& target) {
  return {[&target, key](const std::string& v) { target = parse_bool(key, v); },
          [&target] { return std::string(target ? "true" : "false"); }};
}
Entry list(const std::string& key, std::vector<double>& target) {
  return {[&target, key](const std::string& v) { target = parse_list(key, v); },
          [&target] { return join(target); }};
}
Entry pairs(const std::string& key, std::vector<std::pair<double, double>>& target) {
  return {[&target, key](const std::string& v) { target = parse_pairs(key, v); },
          [&target] { return join(target); }};
}

Section simulate_section(SimulateSettings& s) {
  return {{"alpha", number("alpha", s.alpha)},
          {"local_diffusion", number("local_diffusion", s.local_diffusion)},
          {"datum", text(s.datum)},
          {"u_minus", number("u_minus", s.u_minus)},
          {"u_plus", number("u_plus", s.u_plus)},
          {"half_length", number("half_length", s.half_length)},
          {"points", count("points", s.points)},
          {"dt", number("dt", s.dt)},
          {"t_end", number("t_end", s.t_end)},
          {"samples", list("samples", s.samples)},
          {"flux", text(s.flux)},
          {"dealias", flag("dealias", s.dealias)}};
}

Section kernel_section(KernelSettings& s) {
  return {{"alpha", number("alpha", s.alpha)},
          {"extent", number("extent", s.extent)},
          {"core", number("core", s.core)},
          {"fine", number("fine", s.fine)},
          {"growth", number("growth", s.growth)},
          {"max_panel_phase", number("max_panel_phase", s.max_panel_phase)}};
}

Section verify_section(VerifySettings& s) {
  return {{"alpha", number("alpha", s.alpha)},
          {"corpus", text(s.corpus)},
          {"corpus_size", count("corpus_size", s.corpus_size)},
          {"seed", seed("seed", s.seed)},
          {"half_length", number("half_length", s.half_length)},
          {"points", count("points", s.points)},
          {"tolerance", number("tolerance", s.tolerance)},
          {"hyper_exponents", list("hyper_exponents", s.hyper_exponents)},
          {"interpolation_exponents", list("interpolation_exponents", s.interpolation_exponents)},
          {"gn_pairs", pairs("gn_pairs", s.gn_pairs)},
          {"solver_checks", flag("solver_checks", s.solver_checks)},
          {"solver_half_length", number("solver_half_length", s.solver_half_length)},
          {"solver_points", count("solver_points", s.solver_points)},
          {"solver_dt", number("solver_dt", s.solver_dt)},
          {"solver_t_end", number("solver_t_end", s.solver_t_end)}};
}

Section rate_section(RateSettings& s) {
  return {{"alphas", list("alphas", s.alphas)},
          {"ps", list("ps", s.ps)},
          {"u_minus", number("u_minus", s.u_minus)},
          {"u_plus", number("u_plus", s.u_plus)},
          {"half_length", number("half_length", s.half_length)},
          {"points", count("points", s.points)},
          {"dt", number("dt", s.dt)},
          {"t_start", number("t_start", s.t_start)},
          {"t_end", number("t_end", s.t_end)},
          {"samples", count("samples", s.samples)},
          {"slack", number("slack", s.slack)}};
}

Section section_for(RunConfig& c, const std::string& name) {
  if (name == "simulate") return simulate_section(c.simulate);
  if (name == "kernel") return kernel_section(c.kernel);
  if (name == "verify") return verify_section(c.verify);
  if (name == "rate") return rate_section(c.rate);
  throw ValidationError(fmt::format("unknown config section [{}]", name));
}

void require_alpha(const std::string& where, double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw ValidationError(fmt::format(
        "[{}] alpha = {} outside the admissible range (1, 2)", where, format_value(alpha)));
  }
}

void require_positive(const std::string& where, const char* key, double v) {
  if (!(v > 0.0)) {
    throw ValidationError(fmt::format("[{}] {} must be > 0, got {}", where, key, format_value(v)));
  }
}

void require_grid(const std::string& where, double half_length, std::size_t points) {
  require_positive(where, "half_length", half_length);
  if (points < 8 || (points & (points - 1)) != 0) {
    throw ValidationError(
        fmt::format("[{}] points must be a power of two >= 8, got {}", where, points));
  }
}

}  // namespace

VerifySettings::VerifySettings()
    : interpolation_exponents{1.0, 2.0, kInf}, gn_pairs{{3.0, kInf}, {2.0, 4.0}} {}

RateSettings::RateSettings() : ps{kInf} {}

std::string format_value(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

RunConfig load_config(const std::optional<std::filesystem::path>& path) {
  RunConfig config;
  if (!path) return config;
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path->string(), tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ValidationError(fmt::format("cannot read config: {}", e.what()));
  }
  for (const auto& [name, body] : tree) {
    if (body.empty()) {
      throw ValidationError(fmt::format("config key '{}' outside any section", name));
    }
    Section section = section_for(config, name);
    for (const auto& [key, value] : body) {
      auto it = std::find_if(section.begin(), section.end(),
                             [&](const auto& e) { return e.first == key; });
      if (it == section.end()) {
        throw ValidationError(fmt::format("unknown config key '{}' in [{}]", key, name));
      }
      it->second.set(value.data());
    }
  }
  return config;
}

std::string to_ini(const RunConfig& config, const std::string& command) {
  RunConfig copy = config;
  std::string out = fmt::format("[{}]\n", command);
  for (const auto& [key, entry] : section_for(copy, command)) {
    out += fmt::format("{} = {}\n", key, entry.get());
  }
  return out;
}

void validate(const RunConfig& config, const std::string& command) {
  if (command == "simulate") {
    const auto& s = config.simulate;
    require_alpha(command, s.alpha);
    require_grid(command, s.half_length, s.points);
    require_positive(command, "dt", s.dt);
    require_positive(command, "t_end", s.t_end);
    if (s.local_diffusion < 0.0) throw ValidationError("[simulate] local_diffusion must be >= 0");
    if (s.datum != "delta" && s.datum != "tanh" && s.datum != "zero") {
      throw ValidationError(
          fmt::format("[simulate] datum '{}' is not one of delta, tanh, zero", s.datum));
    }
    if (s.datum == "zero") {
      if (s.u_plus != s.u_minus) {
        throw ValidationError("[simulate] the zero datum needs u_plus = u_minus");
      }
    } else if (!(s.u_minus < s.u_plus)) {
      throw ValidationError(fmt::format("[simulate] need u_minus < u_plus, got {} and {}",
                                        format_value(s.u_minus), format_value(s.u_plus)));
    }
    if (s.flux != "burgers" && s.flux != "quartic") {
      throw ValidationError(fmt::format("[simulate] flux '{}' is not burgers or quartic", s.flux));
    }
    for (double t : s.samples) {
      if (!(t > 0.0 && t <= s.t_end)) {
        throw ValidationError(
            fmt::format("[simulate] sample time {} outside (0, t_end]", format_value(t)));
      }
    }
  } else if (command == "kernel") {
    const auto& k = config.kernel;
    if (!(k.alpha > 0.0 && k.alpha <= 2.0)) {
      throw ValidationError(
          fmt::format("[kernel] alpha = {} outside (0, 2]", format_value(k.alpha)));
    }
    if (!(k.extent >= 50.0)) throw ValidationError("[kernel] extent must be >= 50");
    require_positive(command, "core", k.core);
    require_positive(command, "fine", k.fine);
    require_positive(command, "growth", k.growth);
    require_positive(command, "max_panel_phase", k.max_panel_phase);
  } else if (command == "verify") {
    const auto& v = config.verify;
    require_alpha(command, v.alpha);
    require_grid(command, v.half_length, v.points);
    if (v.corpus != "random" && v.corpus != "constant") {
      throw ValidationError(
          fmt::format("[verify] corpus '{}' is not random or constant", v.corpus));
    }
    if (v.corpus_size == 0) throw ValidationError("[verify] corpus_size must be >= 1");
    if (!(v.tolerance >= 0.0)) throw ValidationError("[verify] tolerance must be >= 0");
    for (double p : v.hyper_exponents) {
      if (!(p > 1.0) || std::isinf(p)) {
        throw ValidationError(
            fmt::format("[verify] hyper exponent {} must be finite and > 1", format_value(p)));
      }
    }
    for (double p : v.interpolation_exponents) {
      if (!(p >= 1.0)) {
        throw ValidationError(
            fmt::format("[verify] interpolation exponent {} must be >= 1", format_value(p)));
      }
    }
    for (auto [p0, p] : v.gn_pairs) {
      if (!(p0 > 1.0 && p > p0)) {
        throw ValidationError(fmt::format("[verify] gn pair {}:{} needs 1 < p0 < p",
                                          format_value(p0), format_value(p)));
      }
    }
    if (v.solver_checks) {
      require_grid(command, v.solver_half_length, v.solver_points);
      require_positive(command, "solver_dt", v.solver_dt);
      require_positive(command, "solver_t_end", v.solver_t_end);
    }
  } else if (command == "rate") {
    const auto& r = config.rate;
    if (r.alphas.empty() || r.ps.empty()) throw ValidationError("[rate] alphas and ps must be non-empty");
    for (double a : r.alphas) {
      require_alpha(command, a);
      for (double p : r.ps) {
        const double critical = (3.0 - a) / (a - 1.0);
        if (!(p > critical)) {
          throw ValidationError(fmt::format(
              "[rate] p = {} violates p > (3-alpha)/(alpha-1) = {} for alpha = {}",
              format_value(p), format_value(critical), format_value(a)));
        }
      }
    }
    if (!(r.u_minus < r.u_plus)) {
      throw ValidationError(fmt::format("[rate] need u_minus < u_plus, got {} and {}",
                                        format_value(r.u_minus), format_value(r.u_plus)));
    }
    require_grid(command, r.half_length, r.points);
    require_positive(command, "dt", r.dt);
    require_positive(command, "t_start", r.t_start);
    if (!(r.t_end > r.t_start)) throw ValidationError("[rate] t_end must exceed t_start");
    if (r.samples < 6) throw ValidationError("[rate] samples must be >= 6");
  } else {
    throw ValidationError(fmt::format("unknown command '{}'", command));
  }
}

}  // namespace fracburgers::cli
