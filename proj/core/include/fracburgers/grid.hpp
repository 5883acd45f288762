#pragma once

#include <cstddef>
#include <vector>

namespace fracburgers {

/// Uniform periodic grid on [-L, L) with N = 2^k nodes.
///
/// Node i sits at x_i = -L + i*dx. Discrete wavenumbers are xi_k = pi*k/L;
/// the real-to-complex layout used throughout stores k = 0..N/2, the last
/// entry being the Nyquist mode.
class Grid {
 public:
  Grid(double half_length, std::size_t n_points);

  double half_length() const { return half_length_; }
  double length() const { return 2.0 * half_length_; }
  std::size_t size() const { return n_; }
  std::size_t spectral_size() const { return n_ / 2 + 1; }
  double dx() const { return 2.0 * half_length_ / static_cast<double>(n_); }

  double x(std::size_t i) const {
    return -half_length_ + static_cast<double>(i) * dx();
  }
  /// Wavenumber of r2c slot k (k <= N/2).
  double wavenumber(std::size_t k) const;

  std::vector<double> nodes() const;

  /// Grid with the same half-length and twice as many nodes.
  Grid refined() const { return Grid(half_length_, 2 * n_); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double half_length_;
  std::size_t n_;
};

}  // namespace fracburgers
