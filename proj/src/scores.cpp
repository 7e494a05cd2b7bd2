#include "tmfg/scores.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tmfg {

namespace {
constexpr double kLog2PiE = 2.837877066409345483560659472811;
}

double score_sum(const WeightOracle& w, VertexId v, const Face& t) {
  if (t.contains(v))
    throw std::invalid_argument("score_sum: vertex " + std::to_string(v) +
                                " lies on the target face");
  if (v < 0 || v >= w.dimension())
    throw std::invalid_argument("score_sum: vertex index out of range");
  return w.weight(v, t.v[0]) + w.weight(v, t.v[1]) + w.weight(v, t.v[2]);
}

double score_entropy_gaussian(const GaussianModel& m, VertexId v, const Face& t) {
  if (t.contains(v))
    throw std::invalid_argument("score_entropy_gaussian: vertex lies on the target face");
  std::array<VertexId, 4> u{t.v[0], t.v[1], t.v[2], v};
  std::sort(u.begin(), u.end());
  double sub4[16], sub3[9];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (u[i] < 0 || u[i] >= m.dimension())
        throw std::invalid_argument("score_entropy_gaussian: index out of range");
      sub4[i * 4 + j] = m.cov(u[i], u[j]);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sub3[i * 3 + j] = m.cov(t.v[i], t.v[j]);

  // Positive-definiteness guards mirror marginal_entropy.
  for (int lead = 1; lead <= 4; ++lead) {
    double minor[16];
    for (int i = 0; i < lead; ++i)
      for (int j = 0; j < lead; ++j) minor[i * lead + j] = sub4[i * 4 + j];
    if (detail::det_upto4(minor, lead) <= 1e-12)
      throw std::domain_error("score_entropy_gaussian: covariance not positive definite");
  }
  double det4 = detail::det_upto4(sub4, 4);
  double det3 = detail::det_upto4(sub3, 3);
  if (det3 <= 1e-12)
    throw std::domain_error("score_entropy_gaussian: face covariance not positive definite");
  return -0.5 * (kLog2PiE + std::log(det4) - std::log(det3));
}

double model_entropy(const GaussianModel& m, const CliqueTree& ct) {
  if (ct.cliques.empty()) throw std::invalid_argument("model_entropy: empty clique tree");
  double h = 0.0;
  for (const auto& c : ct.cliques) h += m.marginal_entropy(std::span(c.data(), 4));
  for (const auto& s : ct.separators) h -= m.marginal_entropy(std::span(s.data(), 3));
  return h;
}

double kl_divergence_gaussian(const GaussianModel& m, const CliqueTree& ct) {
  return -m.entropy() + model_entropy(m, ct);
}

}  // namespace tmfg
