#pragma once

#include "ncl/operator_core.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace ncl {

/// Seedable, portable random source: mt19937_64 with explicit
/// bit-to-double mapping and hand-rolled Box-Muller, so streams are
/// identical across platforms and standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  Matrix complex_matrix(int n);
  Matrix hermitian_matrix(int n);
  Matrix unitary_matrix(int n);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ncl
