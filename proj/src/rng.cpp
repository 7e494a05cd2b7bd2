#include "tmfg/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tmfg::rng {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  // Two dependent steps: the first whitens the master seed, the second mixes
  // in the stream index, so streams 0,1,2,... of one seed and stream 0 of
  // seeds 0,1,2,... do not collide.
  return splitmix64(splitmix64(seed) + stream);
}

double Sampler::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is nudged off zero so log stays finite.
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

double Sampler::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a).
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Sampler::beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("beta: shape parameters must be > 0");
  const double x = gamma(a);
  const double y = gamma(b);
  return x / (x + y);
}

double Sampler::pareto(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("pareto: exponent must be > 0");
  double u = uniform01();
  if (u <= 0.0) u = 0x1.0p-53;
  return std::pow(u, -1.0 / alpha);
}

}  // namespace tmfg::rng
