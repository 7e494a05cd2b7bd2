#pragma once

#include "tmfg/clique_tree.hpp"
#include "tmfg/gaussian.hpp"
#include "tmfg/types.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

// Sum of the three weights joining v to the face vertices. v must not lie on t.
double score_sum(const WeightOracle& w, VertexId v, const Face& t);

// Information gain of attaching v to face t: the negated entropy increase
// -0.5 * log(2*pi*e * det(cov on t+v) / det(cov on t)). Larger is better; an
// independent unit-variance v scores -0.5*log(2*pi*e).
double score_entropy_gaussian(const GaussianModel& m, VertexId v, const Face& t);

// Entropy of the clique-tree factorization: clique marginal entropies minus
// separator marginal entropies.
double model_entropy(const GaussianModel& m, const CliqueTree& ct);

// KL divergence from the full Gaussian to its clique-tree factorization:
// -entropy(full) + model_entropy. Nonnegative; zero exactly when the
// covariance inverse is supported on the tree's graph.
double kl_divergence_gaussian(const GaussianModel& m, const CliqueTree& ct);

// Vertex-selection score for the builder: either the plain weight sum or the
// Gaussian entropy gain. Holds non-owning references; keep the oracle/model
// alive for the build's duration.
class ScoreFunction {
 public:
  enum class Kind { SumWeights, GaussianEntropyGain };

  static ScoreFunction sum_weights(const WeightOracle& w) {
    ScoreFunction s;
    s.kind_ = Kind::SumWeights;
    s.w_ = &w;
    return s;
  }
  static ScoreFunction gaussian_entropy(const GaussianModel& m) {
    ScoreFunction s;
    s.kind_ = Kind::GaussianEntropyGain;
    s.m_ = &m;
    return s;
  }

  Kind kind() const { return kind_; }
  double operator()(VertexId v, const Face& t) const {
    return kind_ == Kind::SumWeights ? score_sum(*w_, v, t) : score_entropy_gaussian(*m_, v, t);
  }

 private:
  ScoreFunction() = default;
  Kind kind_ = Kind::SumWeights;
  const WeightOracle* w_ = nullptr;
  const GaussianModel* m_ = nullptr;
};

}  // namespace tmfg
