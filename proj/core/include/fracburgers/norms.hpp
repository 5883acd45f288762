#pragma once

#include <limits>
#include <span>

#include "fracburgers/field.hpp"

namespace fracburgers {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// L^p norm on the box: trapezoid (periodic) quadrature for p < inf, max |f|
/// for p = inf. Rejects p < 1.
double lp_norm(const Field& f, double p);
double lp_norm(std::span<const double> values, double dx, double p);

/// Trapezoid integral of f over the whole box.
double integral(const Field& f);

/// Trapezoid integral of f restricted to nodes with |x| <= radius.
double integral_within(const Field& f, double radius);

/// Cumulative trapezoid integral from the left box edge, starting at `start`.
std::vector<double> cumulative_trapezoid(std::span<const double> values, double dx,
                                         double start);

}  // namespace fracburgers
