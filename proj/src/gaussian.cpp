#include "tmfg/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tmfg {

namespace {
constexpr double kLog2PiE = 2.837877066409345483560659472811;  // log(2*pi*e)
constexpr double kMinorFloor = 1e-12;
}  // namespace

namespace detail {

double det_upto4(const double* m, int k) {
  switch (k) {
    case 1:
      return m[0];
    case 2:
      return m[0] * m[3] - m[1] * m[2];
    case 3:
      return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
             m[2] * (m[3] * m[7] - m[4] * m[6]);
    case 4: {
      double det = 0.0;
      double minor[9];
      for (int col = 0; col < 4; ++col) {
        int mc = 0;
        for (int r = 1; r < 4; ++r)
          for (int c = 0; c < 4; ++c) {
            if (c == col) continue;
            minor[mc++] = m[r * 4 + c];
          }
        double term = m[col] * det_upto4(minor, 3);
        det += (col % 2 == 0) ? term : -term;
      }
      return det;
    }
    default:
      throw std::invalid_argument("det_upto4 handles 1 to 4 variables");
  }
}

}  // namespace detail

GaussianModel::GaussianModel(int p, std::span<const double> covariance) : p_(p) {
  if (p < 1) throw std::invalid_argument("covariance dimension must be positive");
  if (covariance.size() != static_cast<std::size_t>(p) * p)
    throw std::invalid_argument("covariance size does not match dimension");
  c_.assign(covariance.begin(), covariance.end());
  for (int i = 0; i < p; ++i) {
    double d = c_[static_cast<std::size_t>(i) * p + i];
    if (!std::isfinite(d) || d <= 0.0)
      throw std::invalid_argument("covariance diagonal must be finite and positive (index " +
                                  std::to_string(i) + ")");
    for (int j = i + 1; j < p; ++j) {
      double ij = c_[static_cast<std::size_t>(i) * p + j];
      double ji = c_[static_cast<std::size_t>(j) * p + i];
      if (!std::isfinite(ij) || !std::isfinite(ji))
        throw std::invalid_argument("covariance has a non-finite entry");
      if (std::fabs(ij - ji) > 1e-9)
        throw std::invalid_argument("covariance not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      c_[static_cast<std::size_t>(j) * p + i] = ij;
    }
  }
}

double GaussianModel::marginal_entropy(std::span<const VertexId> vars) const {
  int k = static_cast<int>(vars.size());
  if (k < 1 || k > 4)
    throw std::invalid_argument("marginal_entropy handles 1 to 4 variables");
  std::array<VertexId, 4> idx{};
  for (int i = 0; i < k; ++i) {
    if (vars[i] < 0 || vars[i] >= p_)
      throw std::invalid_argument("marginal_entropy: variable index out of range");
    idx[i] = vars[i];
  }
  std::sort(idx.begin(), idx.begin() + k);
  for (int i = 1; i < k; ++i)
    if (idx[i] == idx[i - 1])
      throw std::invalid_argument("marginal_entropy: duplicate variable index");

  double sub[16];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i * k + j] = cov(idx[i], idx[j]);

  // Sylvester guard: all leading principal minors strictly positive.
  for (int lead = 1; lead <= k; ++lead) {
    double minor[16];
    for (int i = 0; i < lead; ++i)
      for (int j = 0; j < lead; ++j) minor[i * lead + j] = sub[i * k + j];
    if (detail::det_upto4(minor, lead) <= kMinorFloor)
      throw std::domain_error("marginal covariance is not positive definite");
  }
  return 0.5 * (k * kLog2PiE + std::log(detail::det_upto4(sub, k)));
}

double GaussianModel::entropy() const {
  // In-place lower Cholesky; log-determinant from the diagonal.
  std::vector<double> a = c_;
  double logdet = 0.0;
  for (int j = 0; j < p_; ++j) {
    double d = a[static_cast<std::size_t>(j) * p_ + j];
    for (int k = 0; k < j; ++k) {
      double l = a[static_cast<std::size_t>(j) * p_ + k];
      d -= l * l;
    }
    if (d <= 0.0 || !std::isfinite(d))
      throw std::domain_error("covariance is not positive definite");
    double root = std::sqrt(d);
    a[static_cast<std::size_t>(j) * p_ + j] = root;
    logdet += 2.0 * std::log(root);
    for (int i = j + 1; i < p_; ++i) {
      double s = a[static_cast<std::size_t>(i) * p_ + j];
      for (int k = 0; k < j; ++k)
        s -= a[static_cast<std::size_t>(i) * p_ + k] * a[static_cast<std::size_t>(j) * p_ + k];
      a[static_cast<std::size_t>(i) * p_ + j] = s / root;
    }
  }
  return 0.5 * (p_ * kLog2PiE + logdet);
}

}  // namespace tmfg
