#include "fracburgers/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "fracburgers/errors.hpp"

namespace fracburgers {
namespace {

// FFTW's planner is not re-entrant; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct RealFft::Impl {
  double* real = nullptr;
  fftw_complex* coeffs = nullptr;
  fftw_plan forward_plan = nullptr;
  fftw_plan inverse_plan = nullptr;

  explicit Impl(std::size_t n) {
    const int ni = static_cast<int>(n);
    real = fftw_alloc_real(n);
    coeffs = fftw_alloc_complex(n / 2 + 1);
    if (real == nullptr || coeffs == nullptr) {
      throw NumericalError("RealFft: allocation failed");
    }
    std::lock_guard lock(planner_mutex());
    forward_plan = fftw_plan_dft_r2c_1d(ni, real, coeffs, FFTW_ESTIMATE);
    inverse_plan = fftw_plan_dft_c2r_1d(ni, coeffs, real, FFTW_ESTIMATE);
    if (forward_plan == nullptr || inverse_plan == nullptr) {
      throw NumericalError("RealFft: FFTW planning failed");
    }
  }

  ~Impl() {
    {
      std::lock_guard lock(planner_mutex());
      if (forward_plan != nullptr) fftw_destroy_plan(forward_plan);
      if (inverse_plan != nullptr) fftw_destroy_plan(inverse_plan);
    }
    fftw_free(real);
    fftw_free(coeffs);
  }
};

RealFft::RealFft(std::size_t n) : n_(n), impl_(std::make_unique<Impl>(n)) {
  if (n < 2) throw ValidationError("RealFft: length must be >= 2");
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

void RealFft::forward(std::span<const double> in, std::span<Complex> out) {
  if (in.size() != n_ || out.size() != n_ / 2 + 1) {
    throw ValidationError("RealFft::forward: buffer size mismatch");
  }
  std::copy(in.begin(), in.end(), impl_->real);
  fftw_execute(impl_->forward_plan);
  const auto* src = reinterpret_cast<const Complex*>(impl_->coeffs);
  std::copy(src, src + out.size(), out.begin());
}

void RealFft::inverse(std::span<const Complex> in, std::span<double> out) {
  if (in.size() != n_ / 2 + 1 || out.size() != n_) {
    throw ValidationError("RealFft::inverse: buffer size mismatch");
  }
  // c2r overwrites its input, hence the copy into the owned buffer.
  auto* dst = reinterpret_cast<Complex*>(impl_->coeffs);
  std::copy(in.begin(), in.end(), dst);
  fftw_execute(impl_->inverse_plan);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = impl_->real[i] * scale;
}

RealFft& thread_local_fft(std::size_t n) {
  thread_local std::map<std::size_t, RealFft> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, RealFft(n)).first;
  return it->second;
}

std::vector<Complex> rfft(std::span<const double> values) {
  std::vector<Complex> out(values.size() / 2 + 1);
  thread_local_fft(values.size()).forward(values, out);
  return out;
}

std::vector<double> irfft(std::span<const Complex> spectrum, std::size_t n) {
  std::vector<double> out(n);
  thread_local_fft(n).inverse(spectrum, out);
  return out;
}

}  // namespace fracburgers
