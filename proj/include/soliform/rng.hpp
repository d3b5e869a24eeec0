#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace soliform {

/// Seeded random source. The engine is the fully specified std::mt19937_64;
/// the bit-to-double conversions are spelled out here because the standard
/// library distributions are implementation-defined and would break
/// cross-platform reproducibility of reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // [0,1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    // Box-Muller, spare discarded to keep the stream position simple.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Eigen::VectorXd normal_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  Eigen::VectorXd uniform_in(const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi) {
    Eigen::VectorXd v(lo.size());
    for (Eigen::Index i = 0; i < lo.size(); ++i) v[i] = uniform(lo[i], hi[i]);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace soliform
