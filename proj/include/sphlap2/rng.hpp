#pragma once

#include <cstdint>
#include <random>

namespace sphlap2 {

/// Standard normal variates from a seeded std::mt19937_64.
///
/// The engine's output sequence is fixed by the C++ standard; uniforms are
/// built from the top 53 bits and transformed with Box-Muller, so a seed
/// determines the stream independently of the standard library vendor.
class NormalGenerator {
 public:
  explicit NormalGenerator(std::uint64_t seed) : engine_(seed) {}

  double operator()();

 private:
  /// Uniform on (0, 1].
  double uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sphlap2
