#pragma once

#include <functional>
#include <optional>
#include <span>

#include "fracburgers/field.hpp"
#include "fracburgers/levy_symbol.hpp"

namespace fracburgers {

/// Field with spectral coefficients a(xi_k) * fhat_k.
Field apply_symbol(const Field& f, const LevySymbol& symbol);

/// sum_k a(xi_k) |fhat_k|^2 over the full (two-sided) spectrum, scaled so it
/// equals the trapezoid value of  integral (Lambda^{a/2} f)^2 dx.
double symbol_quadratic_form(const Field& f, const LevySymbol& symbol);

/// Spectral derivative of order 1 or 2. The Nyquist mode is dropped for the
/// odd order.
Field derivative(const Field& f, int order);

/// Zeroes r2c slots with |k| > N/3 (2/3 rule), in place.
void dealias_two_thirds(std::span<Complex> spectrum);

/// Singular-integral form of Lambda^alpha on the periodic box,
///
///   -c_alpha * integral [f(x+z) - f(x) - f'(x) z] / |z|^{1+alpha} dz,
///
/// evaluated as a lattice sum over z = j*dx running over every periodic image
/// of the box, with a Taylor closure of the singular core |z| < dx.
Field apply_fractional_laplacian_integral(const Field& f, double alpha,
                                          double c_alpha);

/// Far-field limits of a bounded, non-decaying function.
struct FarField {
  double left;
  double right;
};

/// Same representation applied to a function known everywhere on the line
/// (not periodized), sampled at the nodes of `grid`. When `far_field` is
/// given the part of the integral beyond |z| = 2L is closed with the limits;
/// otherwise it is truncated.
Field apply_fractional_laplacian_integral(
    const Grid& grid, const std::function<double(double)>& f, double alpha,
    double c_alpha, std::optional<FarField> far_field = std::nullopt);

/// Constant C(alpha) of the singular-integral representation, obtained by a
/// least-squares fit of the integral operator against apply_symbol on a
/// Gaussian. Cached per alpha.
double calibrate_c_alpha(double alpha);

/// Uncached calibration on an explicit grid (used for refinement checks).
double calibrate_c_alpha(double alpha, const Grid& grid);

}  // namespace fracburgers
