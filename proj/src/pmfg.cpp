#include "tmfg/pmfg.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tmfg/exact_sum.hpp"
#include "tmfg/planarity.hpp"

namespace tmfg {

bool is_planar(const PlanarGraph& g, const Edge& candidate) {
  for (const Edge& e : g.edges)
    if (e == candidate)
      throw std::invalid_argument("is_planar: candidate edge already present");
  PlanarityTester t(g.p);
  for (const Edge& e : g.edges)
    if (!t.try_add(e.a, e.b))
      throw std::invalid_argument("is_planar: base graph is not planar");
  return t.can_add(candidate.a, candidate.b);
}

FilterResult build_pmfg(const WeightOracle& w) {
  const int p = w.dimension();
  if (p < 3) throw std::invalid_argument("build_pmfg: need at least 3 vertices");

  auto t0 = std::chrono::steady_clock::now();

  struct Cand {
    double weight;
    Edge e;
  };
  std::vector<Cand> cands;
  cands.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (VertexId i = 0; i < p; ++i)
    for (VertexId j = i + 1; j < p; ++j) cands.push_back({w.weight(i, j), Edge(i, j)});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.e < b.e;
  });

  const int target = 3 * p - 6;
  PlanarityTester tester(p);
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(target));
  for (const Cand& c : cands) {
    if (tester.try_add(c.e.a, c.e.b)) {
      kept.push_back(c.e);
      if (static_cast<int>(kept.size()) == target) break;
    }
  }

  FilterResult r;
  r.method = "pmfg";
  r.p = p;
  std::sort(kept.begin(), kept.end());
  r.edges = std::move(kept);
  r.edge_weights.reserve(r.edges.size());
  ExactSum total;
  for (const Edge& e : r.edges) {
    double x = w.weight(e);
    r.edge_weights.push_back(x);
    total.add(x);
  }
  r.total_weight = total.round();
  r.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace tmfg
