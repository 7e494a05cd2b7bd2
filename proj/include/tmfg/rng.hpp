#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tmfg::rng {

// Stream identifier recorded in output metadata. Bump the suffix if any
// transform below changes, since that changes every generated matrix.
inline constexpr std::string_view kAlgorithmId = "mt19937_64+sm64/v1";

// splitmix64 step (Steele, Lea, Flood 2014). Used to derive independent
// substream seeds from (master seed, stream index) so per-sample generators
// never share state.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for substream `stream` of master seed `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

// mt19937_64 with explicit variate transforms. The engine is bit-exact per
// the C++ standard; the transforms are spelled out here so no
// implementation-defined library distribution enters the stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  // Uniform on [0,1) with 53 random bits.
  double uniform01();

  // Standard normal, Box-Muller. Generates pairs; the spare is cached.
  double normal();

  // Gamma(shape, 1), shape > 0. Marsaglia-Tsang squeeze for shape >= 1,
  // boosted by U^(1/shape) below.
  double gamma(double shape);

  // Beta(a, b) via the gamma ratio.
  double beta(double a, double b);

  // Pareto with tail exponent `alpha`, support x >= 1 (survival x^-alpha).
  double pareto(double alpha);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tmfg::rng
