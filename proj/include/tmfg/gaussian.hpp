#pragma once

#include <span>
#include <vector>

#include "tmfg/types.hpp"

namespace tmfg {

// Zero-mean multivariate Gaussian identified by its covariance matrix.
// Marginals of up to four variables (the clique and separator sizes this
// library produces) get their determinants by direct cofactor expansion with
// a positive-definiteness guard: every leading principal minor of the
// submatrix must exceed 1e-12, otherwise std::domain_error.
class GaussianModel {
 public:
  // Row-major p x p covariance, symmetric within 1e-9, positive diagonal.
  GaussianModel(int p, std::span<const double> covariance);

  int dimension() const { return p_; }
  double cov(int i, int j) const { return c_[static_cast<std::size_t>(i) * p_ + j]; }

  // Differential entropy of the marginal on vars (1 to 4 distinct indices;
  // evaluation order is canonical: indices sorted ascending).
  double marginal_entropy(std::span<const VertexId> vars) const;

  // Differential entropy of the full p-dimensional Gaussian (Cholesky
  // log-determinant; std::domain_error when not positive definite).
  double entropy() const;

 private:
  int p_;
  std::vector<double> c_;
};

namespace detail {
// Determinant by cofactor expansion, k <= 4, row-major k x k.
double det_upto4(const double* m, int k);
}  // namespace detail

}  // namespace tmfg
