#include "fracburgers/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracburgers/errors.hpp"

namespace fracburgers::special {

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) {
    throw ValidationError("hurwitz_zeta: requires s > 1 and a > 0");
  }
  // Euler-Maclaurin with the head summed directly.
  constexpr int kHead = 12;
  constexpr std::array<double, 6> kBernoulli = {
      1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
  double sum = 0.0;
  for (int k = 0; k < kHead; ++k) sum += std::pow(k + a, -s);
  const double b = kHead + a;
  sum += std::pow(b, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(b, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double factorial = 2.0;  // (2j)!
  double power = std::pow(b, -s - 1.0);
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    sum += kBernoulli[j - 1] / factorial * rising * power;
    const double jj = static_cast<double>(j);
    rising *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj);
    factorial *= (2.0 * jj + 1.0) * (2.0 * jj + 2.0);
    power /= b * b;
  }
  return sum;
}

double erfcx(double z) {
  if (z < 0.0) throw ValidationError("erfcx: defined here for z >= 0 only");
  if (z < 4.0) return std::exp(z * z) * std::erfc(z);
  // Continued fraction  erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
  double tail = z;
  for (int k = 80; k >= 1; --k) tail = z + 0.5 * k / tail;
  return 1.0 / (std::sqrt(std::numbers::pi) * tail);
}

double log_erfc(double z) {
  if (z < 4.0) return std::log(std::erfc(z));
  return std::log(erfcx(z)) - z * z;
}

}  // namespace fracburgers::special
