#pragma once

#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmfg/types.hpp"

namespace tmfg {

// Map from a correlation to a nonnegative similarity weight.
enum class Transform { Squared, Absolute, Raw };

Transform transform_from_name(std::string_view name);
std::string_view transform_name(Transform t);

// Raw rejects negative values (weights must stay nonnegative).
double apply_transform(double value, Transform t);

// Symmetric nonnegative pairwise weights over vertices [0, p). Lookups must be
// safe for concurrent readers; a build itself is single-threaded.
class WeightOracle {
 public:
  virtual ~WeightOracle() = default;
  virtual int dimension() const = 0;
  virtual double weight(VertexId i, VertexId j) const = 0;
  double weight(const Edge& e) const { return weight(e.a, e.b); }
};

// In-memory matrix oracle. Construction validates: off-diagonal entries finite,
// >= 0, and symmetric within 1e-9 (upper triangle wins). Diagonal is ignored.
class DenseWeightOracle final : public WeightOracle {
 public:
  DenseWeightOracle(int p, std::span<const double> row_major);

  using WeightOracle::weight;
  int dimension() const override { return p_; }
  double weight(VertexId i, VertexId j) const override {
    return w_[static_cast<std::size_t>(i) * p_ + j];
  }

 private:
  int p_;
  std::vector<double> w_;  // symmetrized, zero diagonal
};

// Pearson correlation of columns i and j of a row-major q x p series
// (two-pass: means first, then centered products). Throws when q < 2 or a
// column has zero variance.
double correlation(std::span<const double> series, int q, int p, int i, int j);

// Lazy transformed-correlation oracle over an in-memory time series. Each pair
// is computed on first use and cached; the cache is mutex-guarded so several
// builds may share one instance. Memory is O(q*p + computed pairs) instead of
// the dense O(p^2).
class TimeSeriesOracle final : public WeightOracle {
 public:
  // series: row-major, q observations (rows) by p variables (columns).
  TimeSeriesOracle(std::vector<double> series, int q, int p, Transform t);

  using WeightOracle::weight;
  int dimension() const override { return p_; }
  double weight(VertexId i, VertexId j) const override;
  Transform transform() const { return t_; }
  int observations() const { return q_; }

  // Dense copy computed pair-by-pair through the same code path, so builds on
  // either representation of the same data give identical results.
  DenseWeightOracle materialize() const;

 private:
  std::vector<double> series_;
  int q_;
  int p_;
  Transform t_;
  mutable std::mutex mu_;
  mutable std::map<Edge, double> cache_;
};

}  // namespace tmfg
