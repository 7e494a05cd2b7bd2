#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmfg/synth.hpp"

namespace tmfg::cli {

// Entry point behind tools/main.cpp. Exit codes: 0 success, 1 validation
// failure, 2 input or usage error.
int run_cli(int argc, const char* const* argv);

struct BenchPoint {
  std::string method;
  int p = 0;
  double median_seconds = 0.0;
};

// One matrix per size (derived from `family` with a per-size substream of
// `seed`), `reps` timed builds per (method, size), median kept. Only the
// build itself is timed; generation and I/O are excluded. Points come back
// size-major, then method.
std::vector<BenchPoint> bench_methods(const std::vector<std::string>& methods,
                                      const std::vector<int>& sizes, int reps,
                                      MatrixSpec family, std::uint64_t seed);

// Least-squares slope of log(median_seconds) on log(p); pass one method's
// points.
double fitted_loglog_slope(std::span<const BenchPoint> points);

// Least-squares (a, b) of t = a*p^e1 + b*p^e2 over one method's points.
std::array<double, 2> fit_two_term(std::span<const BenchPoint> points, int e1,
                                   int e2);

struct CompareRow {
  std::string distribution;
  std::string method;
  int p = 0;
  std::vector<double> ratios;  // per sample: method total / pmfg total
  double mean_ratio = 0.0;
};

// For every (family, size): `samples` independent matrices; each requested
// method's retained weight is divided by the PMFG retained weight on the same
// matrix. Rows come back family-major, then size, then method, with the
// sample order inside each row fixed by the seed derivation.
std::vector<CompareRow> compare_methods(const std::vector<MatrixSpec>& families,
                                        const std::vector<std::string>& methods,
                                        const std::vector<int>& sizes, int samples,
                                        std::uint64_t seed);

}  // namespace tmfg::cli
