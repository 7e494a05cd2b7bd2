#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tmfg/weight_oracle.hpp"

namespace tmfg {

enum class Family {
  Uniform,         // iid U[0,1) weights
  Beta,            // iid Beta(alpha, beta) weights
  Pareto,          // iid Pareto(exponent), support >= 1
  Factor,          // correlations of a simulated factor model, transformed
  FileMatrix,      // dense weight matrix from CSV
  FileTimeseries,  // observations-by-variables CSV, correlations transformed
};

// Everything needed to reproduce one weight matrix. (family, parameters,
// p, seed) fixes the sample bit-for-bit; `transform` matters only where
// correlations arise (factor, file-timeseries).
struct MatrixSpec {
  Family family = Family::Uniform;
  int p = 0;
  std::uint64_t seed = 0;
  Transform transform = Transform::Squared;
  double alpha = 0.0;     // beta
  double beta = 0.0;      // beta
  double exponent = 0.0;  // pareto
  int factors = 20;       // factor: k
  int observations = 1000;  // factor: simulated series length q
  std::string path;       // file families
};

// Parses the synthetic-family notation used on the command line:
//   uniform | beta(a,b) | pareto(e) | factor(k) | factor(k,q)
// Only the family and its shape parameters are filled in. Throws
// std::invalid_argument with the offending text otherwise.
MatrixSpec parse_matrix_spec(std::string_view text);

// Canonical text form; round-trips through parse_matrix_spec for the
// synthetic families. Shape parameters print in %g form.
std::string family_name(const MatrixSpec& spec);

// Row-major q x p sample of X = L F + eps with standard-normal loadings
// L (p x k), factors F (k x q), and unit-variance noise. Exposed separately
// so the pre-transform correlation structure is testable.
std::vector<double> simulate_factor_series(int p, int k, int q,
                                           std::uint64_t seed);

// Builds the oracle a spec describes. Synthetic and factor families come
// back dense; file-timeseries stays lazy. Throws std::invalid_argument on
// bad parameters and std::runtime_error on file problems.
std::unique_ptr<WeightOracle> generate(const MatrixSpec& spec);

}  // namespace tmfg
