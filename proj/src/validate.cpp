#include "tmfg/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "tmfg/exact_sum.hpp"
#include "tmfg/moves.hpp"
#include "tmfg/planarity.hpp"
#include "tmfg/triangulation.hpp"

namespace tmfg {

namespace {

std::map<VertexId, std::set<VertexId>> adjacency(std::span<const Edge> edges) {
  std::map<VertexId, std::set<VertexId>> adj;
  for (const Edge& e : edges) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  return adj;
}

std::string face_text(std::span<const VertexId> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

}  // namespace

ValidationReport check_chordal(std::span<const Edge> edges) {
  ValidationReport rep;
  auto adj = adjacency(edges);
  if (adj.empty()) {
    rep.add("chordal", true);
    return rep;
  }

  // Connectivity over the vertices that appear.
  {
    std::set<VertexId> seen{adj.begin()->first};
    std::vector<VertexId> stack{adj.begin()->first};
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId x : adj.at(u))
        if (seen.insert(x).second) stack.push_back(x);
    }
    if (seen.size() != adj.size())
      throw std::invalid_argument("check_chordal: graph is disconnected");
  }

  // Maximum cardinality search; ties to the lowest index.
  std::map<VertexId, int> label;
  for (const auto& [v, _] : adj) label[v] = 0;
  std::vector<VertexId> order;  // visit order
  std::set<VertexId> visited;
  while (visited.size() < adj.size()) {
    VertexId best = kNoVertex;
    int bw = -1;
    for (const auto& [v, wgt] : label)
      if (!visited.count(v) && wgt > bw) {
        best = v;
        bw = wgt;
      }
    visited.insert(best);
    order.push_back(best);
    for (VertexId x : adj.at(best))
      if (!visited.count(x)) ++label[x];
  }

  // Reversed visit order must be a perfect elimination ordering: each
  // vertex's neighbors later in it are pairwise adjacent.
  std::map<VertexId, int> pos;
  std::vector<VertexId> peo(order.rbegin(), order.rend());
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < peo.size(); ++i) {
    VertexId v = peo[i];
    std::vector<VertexId> later;
    for (VertexId x : adj.at(v))
      if (pos[x] > static_cast<int>(i)) later.push_back(x);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!adj.at(later[a]).count(later[b])) {
          rep.add("chordal", false,
                  "vertices " + std::to_string(later[a]) + " and " +
                      std::to_string(later[b]) + " follow " + std::to_string(v) +
                      " in the elimination order but are not adjacent");
          return rep;
        }
  }
  rep.add("chordal", true);
  return rep;
}

ValidationReport check_clique_tree(const CliqueTree& ct, std::span<const Edge> edges) {
  ValidationReport rep;
  auto adj = adjacency(edges);
  const int n = static_cast<int>(adj.size());
  const int nc = ct.size();

  rep.add("clique-count", nc == n - 3,
          std::to_string(nc) + " cliques for " + std::to_string(n) +
              " vertices, expected " + std::to_string(n - 3));
  rep.add("separator-count",
          static_cast<int>(ct.separators.size()) == n - 4 &&
              static_cast<int>(ct.separators.size()) == nc - 1,
          std::to_string(ct.separators.size()) + " separators, expected " +
              std::to_string(n - 4));
  bool parents_ok = static_cast<int>(ct.parent.size()) == nc && nc > 0 &&
                    ct.parent[0] == -1;
  for (int i = 1; i < nc && parents_ok; ++i)
    if (ct.parent[i] < 0 || ct.parent[i] >= i) parents_ok = false;
  rep.add("parents-well-formed", parents_ok, "parent indices must precede their clique");

  bool complete = true;
  std::string detail;
  for (const auto& c : ct.cliques) {
    for (int i = 0; i < 4 && complete; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!adj.count(c[i]) || !adj.at(c[i]).count(c[j])) {
          complete = false;
          detail = "clique " + face_text(c) + " is not complete in the graph";
          break;
        }
    if (!complete) break;
  }
  rep.add("cliques-complete", complete, detail);

  bool seps_ok = parents_ok && static_cast<int>(ct.separators.size()) == nc - 1;
  detail.clear();
  for (int i = 1; i < nc && seps_ok; ++i) {
    const auto& sep = ct.separators[i - 1];
    const auto& c = ct.cliques[i];
    const auto& pc = ct.cliques[ct.parent[i]];
    std::vector<VertexId> inter;
    for (VertexId u : c)
      if (std::find(pc.begin(), pc.end(), u) != pc.end()) inter.push_back(u);
    std::vector<VertexId> s(sep.begin(), sep.end());
    std::sort(s.begin(), s.end());
    std::sort(inter.begin(), inter.end());
    if (inter.size() != 3 || !std::equal(s.begin(), s.end(), inter.begin())) {
      seps_ok = false;
      detail = "separator " + face_text(sep) + " is not the intersection of clique " +
               std::to_string(i) + " with its parent";
    }
  }
  rep.add("separators-are-intersections", seps_ok, detail);

  std::set<Edge> covered;
  for (const auto& c : ct.cliques)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) covered.insert(Edge(c[i], c[j]));
  std::set<Edge> actual(edges.begin(), edges.end());
  bool cover_ok = covered == actual;
  detail.clear();
  if (!cover_ok) {
    for (const Edge& e : covered)
      if (!actual.count(e)) {
        detail = "clique edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                 ") is not in the graph";
        break;
      }
    if (detail.empty())
      for (const Edge& e : actual)
        if (!covered.count(e)) {
          detail = "graph edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                   ") is not inside any clique";
          break;
        }
  }
  rep.add("edge-cover", cover_ok, detail);

  // Running intersection: the cliques holding any vertex span a connected
  // subtree of the parent forest.
  bool rip_ok = parents_ok;
  detail.clear();
  if (rip_ok) {
    std::map<VertexId, std::vector<int>> holds;
    for (int i = 0; i < nc; ++i)
      for (VertexId u : ct.cliques[i]) holds[u].push_back(i);
    for (const auto& [u, ids] : holds) {
      std::set<int> members(ids.begin(), ids.end());
      int roots = 0;
      for (int i : ids)
        if (i == 0 || !members.count(ct.parent[i])) ++roots;
      if (roots != 1) {
        rip_ok = false;
        detail = "cliques holding vertex " + std::to_string(u) +
                 " form " + std::to_string(roots) + " subtrees";
        break;
      }
    }
  }
  rep.add("running-intersection", rip_ok, detail);
  return rep;
}

FilterResult naive_tmfg_oracle(const WeightOracle& w, const BuildConfig& cfg) {
  const int p = w.dimension();
  if (p > 200)
    throw std::invalid_argument("naive_tmfg_oracle: guarded to 200 vertices, got " +
                                std::to_string(p));
  if (cfg.variant != Variant::Base)
    throw std::invalid_argument("naive_tmfg_oracle: only the base variant is supported");

  ScoreFunction score = cfg.score ? *cfg.score : ScoreFunction::sum_weights(w);
  auto seed = select_seed_clique(w, cfg.seed_strategy, cfg.exhaustive_seed_limit);
  std::sort(seed.begin(), seed.end());

  Triangulation g(p, seed);
  std::set<VertexId> remaining;
  for (VertexId v = 0; v < p; ++v) remaining.insert(v);
  for (VertexId v : seed) remaining.erase(v);

  ExactSum total;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) total.add(w.weight(seed[i], seed[j]));

  CliqueTree ct;
  ct.cliques.push_back(seed);
  ct.parent.push_back(-1);
  std::map<Face, int> origin;
  for (const Face& f : g.faces()) origin[f] = 0;

  BuildStats stats;
  std::vector<MoveRecord> moves;

  while (!remaining.empty()) {
    // Full rescan of every (vertex, face) pair.
    bool found = false;
    Face bt(0, 1, 2);
    VertexId bv = kNoVertex;
    double bg = -std::numeric_limits<double>::infinity();
    for (const Face& t : g.faces())
      for (VertexId v : remaining) {
        ++stats.score_evaluations;
        double s = score(v, t);
        if (!found || s > bg || (s == bg && v < bv)) {
          found = true;
          bg = s;
          bv = v;
          bt = t;
        }
      }

    MoveRecord rec = apply_t2(g, bt, bv, w, &total);
    ++stats.moves_applied[MoveKind::T2];
    if (cfg.record_moves) moves.push_back(rec);
    remaining.erase(bv);

    std::array<VertexId, 4> clique{bt.v[0], bt.v[1], bt.v[2], bv};
    std::sort(clique.begin(), clique.end());
    ct.cliques.push_back(clique);
    ct.separators.push_back(bt.v);
    ct.parent.push_back(origin.at(bt));
    int idx = ct.size() - 1;
    origin.erase(bt);
    origin[Face(bt.v[0], bt.v[1], bv)] = idx;
    origin[Face(bt.v[0], bt.v[2], bv)] = idx;
    origin[Face(bt.v[1], bt.v[2], bv)] = idx;
  }

  FilterResult r;
  r.method = "tmfg";
  r.p = p;
  r.edges = g.edges();
  r.edge_weights.reserve(r.edges.size());
  for (const Edge& e : r.edges) r.edge_weights.push_back(w.weight(e));
  r.total_weight = total.round();
  r.clique_tree = std::move(ct);
  r.stats = stats;
  r.moves = std::move(moves);
  r.tri = std::move(g);
  return r;
}

double exhaustive_wmpg(const WeightOracle& w) {
  const int p = w.dimension();
  if (p > 7)
    throw std::invalid_argument("exhaustive_wmpg: guarded to 7 vertices, got " +
                                std::to_string(p));
  if (p < 4) throw std::invalid_argument("exhaustive_wmpg: need at least 4 vertices");

  struct Cand {
    double weight;
    Edge e;
  };
  std::vector<Cand> cands;
  for (VertexId i = 0; i < p; ++i)
    for (VertexId j = i + 1; j < p; ++j) cands.push_back({w.weight(i, j), Edge(i, j)});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.e < b.e;
  });
  const int m = static_cast<int>(cands.size());
  const int k = 3 * p - 6;

  // suffix_best[i][r]: largest plain sum of r weights from position i on.
  std::vector<std::vector<double>> suffix_best(m + 1, std::vector<double>(k + 1, 0.0));
  for (int i = m - 1; i >= 0; --i)
    for (int r = 1; r <= k; ++r)
      suffix_best[i][r] =
          r <= m - i ? cands[i].weight + suffix_best[i + 1][r - 1] : 0.0;

  double best = -std::numeric_limits<double>::infinity();
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  double running = 0.0;

  auto planar_now = [&](std::span<const Edge> es) { return is_planar(p, es); };

  // Depth-first over weight-sorted candidates with an optimistic bound.
  auto recurse = [&](auto&& self, int idx) -> void {
    int need = k - static_cast<int>(chosen.size());
    if (need == 0) {
      if (!planar_now(chosen)) return;
      ExactSum s;
      for (const Edge& e : chosen) s.add(w.weight(e));
      best = std::max(best, s.round());
      return;
    }
    if (idx >= m || m - idx < need) return;
    double bound = running + suffix_best[idx][need];
    if (bound < best - 1e-9 * (1.0 + std::abs(best))) return;

    chosen.push_back(cands[idx].e);
    running += cands[idx].weight;
    self(self, idx + 1);
    running -= cands[idx].weight;
    chosen.pop_back();

    self(self, idx + 1);
  };
  recurse(recurse, 0);

  if (best == -std::numeric_limits<double>::infinity())
    throw std::logic_error("exhaustive_wmpg: no planar subset found");
  return best;
}

namespace {

// Subdivision search state: branch vertices are fixed, interior vertices are
// consumed at most once across all paths.
struct SubdivisionSearch {
  const std::vector<std::set<VertexId>>& adj;
  std::vector<bool> used;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  bool paths_from(std::size_t idx) {
    if (idx == pairs.size()) return true;
    auto [s, t] = pairs[idx];
    return extend(s, t, idx);
  }

  // Grow a path from u toward t through unused non-branch vertices.
  bool extend(VertexId u, VertexId t, std::size_t idx) {
    if (adj[u].count(t)) {
      if (paths_from(idx + 1)) return true;
    }
    for (VertexId x : adj[u]) {
      if (used[x]) continue;
      used[x] = true;
      if (extend(x, t, idx)) return true;
      used[x] = false;
    }
    return false;
  }
};

bool has_subdivision(const std::vector<std::set<VertexId>>& adj, int p,
                     std::span<const VertexId> branches,
                     std::span<const std::pair<int, int>> pattern) {
  SubdivisionSearch s{adj, std::vector<bool>(p, false), {}};
  for (VertexId b : branches) s.used[b] = true;
  for (auto [i, j] : pattern) s.pairs.emplace_back(branches[i], branches[j]);
  return s.paths_from(0);
}

}  // namespace

bool planar_by_kuratowski(int p, std::span<const Edge> edges) {
  if (p > 12)
    throw std::invalid_argument("planar_by_kuratowski: guarded to 12 vertices, got " +
                                std::to_string(p));
  if (p < 5) return true;

  std::vector<std::set<VertexId>> adj(p);
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b >= p)
      throw std::invalid_argument("planar_by_kuratowski: edge endpoint outside [0, p)");
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }

  // K5: every pair of the five branch vertices joined.
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  std::vector<VertexId> b(5);
  for (b[0] = 0; b[0] < p; ++b[0])
    for (b[1] = b[0] + 1; b[1] < p; ++b[1])
      for (b[2] = b[1] + 1; b[2] < p; ++b[2])
        for (b[3] = b[2] + 1; b[3] < p; ++b[3])
          for (b[4] = b[3] + 1; b[4] < p; ++b[4])
            if (has_subdivision(adj, p, b, k5)) return false;

  if (p < 6) return true;

  // K3,3: each side-one vertex joined to each side-two vertex. Enumerate the
  // six branch vertices, then the 10 unordered splits into two triples.
  std::vector<VertexId> c(6);
  for (c[0] = 0; c[0] < p; ++c[0])
    for (c[1] = c[0] + 1; c[1] < p; ++c[1])
      for (c[2] = c[1] + 1; c[2] < p; ++c[2])
        for (c[3] = c[2] + 1; c[3] < p; ++c[3])
          for (c[4] = c[3] + 1; c[4] < p; ++c[4])
            for (c[5] = c[4] + 1; c[5] < p; ++c[5]) {
              // Splits with c[0] pinned to side one: side one = {0, x, y}.
              for (int x = 1; x < 6; ++x)
                for (int y = x + 1; y < 6; ++y) {
                  std::vector<int> s1{0, x, y}, s2;
                  for (int i = 1; i < 6; ++i)
                    if (i != x && i != y) s2.push_back(i);
                  std::vector<std::pair<int, int>> k33;
                  for (int i : s1)
                    for (int j : s2) k33.emplace_back(i, j);
                  if (has_subdivision(adj, p, c, k33)) return false;
                }
            }
  return true;
}

}  // namespace tmfg
