#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace barylab {

/// splitmix64 mix step; used to derive independent per-cell seeds from a
/// master seed so that sweep output is identical for any worker count.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t cell) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (cell + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. mt19937_64 has a sequence pinned by the
/// standard, and the uniform/normal transforms below are spelled out here,
/// so identical seeds give identical doubles on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (caches the second deviate).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  Eigen::MatrixXd gaussian(int rows, int cols) {
    Eigen::MatrixXd g(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) g(i, j) = normal();
    return g;
  }

  Eigen::VectorXd gaussian_vector(int size) {
    Eigen::VectorXd g(size);
    for (int i = 0; i < size; ++i) g(i) = normal();
    return g;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace barylab
