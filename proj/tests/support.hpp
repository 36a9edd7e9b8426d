#pragma once

#include <sym3inv/tensor_core.hpp>

#include <chrono>

namespace test {

inline sym3::ExactScalar q(long num, long den = 1) { return sym3::ratio<sym3::ExactScalar>(num, den); }

// A111 = 3/5, A122 = 6/5, A133 = -4/5, A223 = 1/2, A333 = -1/2.
inline sym3::Sym3Tensor<sym3::ExactScalar> l6_witness() {
  return {{q(3, 5), 0, 0, q(6, 5), 0, q(-4, 5), 0, q(1, 2), 0, q(-1, 2)}};
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace test
