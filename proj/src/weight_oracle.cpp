#include "tmfg/weight_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tmfg {

Transform transform_from_name(std::string_view name) {
  if (name == "squared") return Transform::Squared;
  if (name == "absolute") return Transform::Absolute;
  if (name == "raw") return Transform::Raw;
  throw std::invalid_argument("unknown transform: " + std::string(name));
}

std::string_view transform_name(Transform t) {
  switch (t) {
    case Transform::Squared: return "squared";
    case Transform::Absolute: return "absolute";
    case Transform::Raw: return "raw";
  }
  throw std::logic_error("bad transform tag");
}

double apply_transform(double value, Transform t) {
  switch (t) {
    case Transform::Squared: return value * value;
    case Transform::Absolute: return std::fabs(value);
    case Transform::Raw:
      if (value < 0.0)
        throw std::domain_error("raw transform requires nonnegative values, got " +
                                std::to_string(value));
      return value;
  }
  throw std::logic_error("bad transform tag");
}

DenseWeightOracle::DenseWeightOracle(int p, std::span<const double> row_major) : p_(p) {
  if (p < 1) throw std::invalid_argument("matrix dimension must be positive");
  if (row_major.size() != static_cast<std::size_t>(p) * p)
    throw std::invalid_argument("matrix data size does not match dimension");
  w_.assign(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      double ij = row_major[static_cast<std::size_t>(i) * p + j];
      double ji = row_major[static_cast<std::size_t>(j) * p + i];
      if (!std::isfinite(ij) || !std::isfinite(ji))
        throw std::invalid_argument("non-finite weight at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      if (std::fabs(ij - ji) > 1e-9)
        throw std::invalid_argument("matrix not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): " + std::to_string(ij) + " vs " +
                                    std::to_string(ji));
      if (ij < 0.0)
        throw std::invalid_argument("negative weight at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      w_[static_cast<std::size_t>(i) * p + j] = ij;
      w_[static_cast<std::size_t>(j) * p + i] = ij;
    }
  }
}

double correlation(std::span<const double> series, int q, int p, int i, int j) {
  if (q < 2) throw std::invalid_argument("correlation needs at least 2 observations");
  if (i < 0 || j < 0 || i >= p || j >= p)
    throw std::invalid_argument("correlation: column index out of range");
  if (series.size() != static_cast<std::size_t>(q) * p)
    throw std::invalid_argument("correlation: series size does not match q*p");

  double mi = 0.0, mj = 0.0;
  for (int r = 0; r < q; ++r) {
    mi += series[static_cast<std::size_t>(r) * p + i];
    mj += series[static_cast<std::size_t>(r) * p + j];
  }
  mi /= q;
  mj /= q;

  double sij = 0.0, sii = 0.0, sjj = 0.0;
  for (int r = 0; r < q; ++r) {
    double di = series[static_cast<std::size_t>(r) * p + i] - mi;
    double dj = series[static_cast<std::size_t>(r) * p + j] - mj;
    sij += di * dj;
    sii += di * di;
    sjj += dj * dj;
  }
  if (sii <= 0.0 || sjj <= 0.0)
    throw std::domain_error("correlation undefined: column " +
                            std::to_string(sii <= 0.0 ? i : j) + " has zero variance");
  double r = sij / std::sqrt(sii * sjj);
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  return r;
}

TimeSeriesOracle::TimeSeriesOracle(std::vector<double> series, int q, int p, Transform t)
    : series_(std::move(series)), q_(q), p_(p), t_(t) {
  if (p < 1) throw std::invalid_argument("time series needs at least one column");
  if (q < 2) throw std::invalid_argument("time series needs at least 2 observations");
  if (series_.size() != static_cast<std::size_t>(q) * p)
    throw std::invalid_argument("time series size does not match q*p");
}

double TimeSeriesOracle::weight(VertexId i, VertexId j) const {
  if (i == j) return 0.0;
  Edge e(i, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
  }
  double w = apply_transform(correlation(series_, q_, p_, e.a, e.b), t_);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(e, w).first->second;
}

DenseWeightOracle TimeSeriesOracle::materialize() const {
  std::vector<double> m(static_cast<std::size_t>(p_) * p_, 0.0);
  for (int i = 0; i < p_; ++i)
    for (int j = i + 1; j < p_; ++j) {
      double w = weight(i, j);
      m[static_cast<std::size_t>(i) * p_ + j] = w;
      m[static_cast<std::size_t>(j) * p_ + i] = w;
    }
  return DenseWeightOracle(p_, m);
}

}  // namespace tmfg
