#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fracburgers {

using Complex = std::complex<double>;

/// Real-to-complex FFT of a fixed length backed by FFTW.
///
/// forward() is the unnormalized sum  F_k = sum_j f_j e^{-2 pi i jk/N};
/// inverse() divides by N so that inverse(forward(f)) == f. Each instance
/// owns its scratch buffers and must not be shared between threads.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;

  std::size_t size() const { return n_; }

  void forward(std::span<const double> in, std::span<Complex> out);
  void inverse(std::span<const Complex> in, std::span<double> out);

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

/// Per-thread cached transform of length n.
RealFft& thread_local_fft(std::size_t n);

std::vector<Complex> rfft(std::span<const double> values);
std::vector<double> irfft(std::span<const Complex> spectrum, std::size_t n);

}  // namespace fracburgers
