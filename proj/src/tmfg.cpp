#include "tmfg/tmfg.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tmfg/exact_sum.hpp"
#include "tmfg/moves.hpp"

namespace tmfg {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Base: return "tmfg";
    case Variant::T1: return "tmfg-t1";
    case Variant::S: return "tmfg-s";
    case Variant::A: return "tmfg-a";
  }
  throw std::logic_error("variant_name: bad enum value");
}

Variant variant_from_name(std::string_view name) {
  if (name == "tmfg") return Variant::Base;
  if (name == "tmfg-t1") return Variant::T1;
  if (name == "tmfg-s") return Variant::S;
  if (name == "tmfg-a") return Variant::A;
  throw std::invalid_argument("unknown tmfg variant: " + std::string(name));
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::array<VertexId, 4> sorted4(std::array<VertexId, 4> c) {
  std::sort(c.begin(), c.end());
  return c;
}

double six_edge_weight(const WeightOracle& w, VertexId i, VertexId j, VertexId k, VertexId l) {
  return w.weight(i, j) + w.weight(i, k) + w.weight(i, l) + w.weight(j, k) + w.weight(j, l) +
         w.weight(k, l);
}

}  // namespace

std::array<VertexId, 4> select_seed_clique(const WeightOracle& w, SeedStrategy strategy,
                                           int exhaustive_limit) {
  const int p = w.dimension();
  if (p < 4) throw std::invalid_argument("select_seed_clique: need at least 4 vertices");

  if (strategy == SeedStrategy::Exhaustive) {
    if (p > exhaustive_limit)
      throw std::invalid_argument("select_seed_clique: exhaustive search is capped at " +
                                  std::to_string(exhaustive_limit) + " vertices, got " +
                                  std::to_string(p));
    std::array<VertexId, 4> best{0, 1, 2, 3};
    double best_w = kNegInf;
    for (VertexId i = 0; i < p; ++i)
      for (VertexId j = i + 1; j < p; ++j)
        for (VertexId k = j + 1; k < p; ++k)
          for (VertexId l = k + 1; l < p; ++l) {
            double s = six_edge_weight(w, i, j, k, l);
            if (s > best_w) {
              best_w = s;
              best = {i, j, k, l};
            }
          }
    return best;
  }

  // Heaviest edge first, ties to the lexicographically smallest pair.
  Edge e(0, 1);
  double best_w = kNegInf;
  for (VertexId i = 0; i < p; ++i)
    for (VertexId j = i + 1; j < p; ++j) {
      double s = w.weight(i, j);
      if (s > best_w) {
        best_w = s;
        e = Edge(i, j);
      }
    }
  std::vector<VertexId> seed{e.a, e.b};
  for (int round = 0; round < 2; ++round) {
    VertexId best = kNoVertex;
    double bw = kNegInf;
    for (VertexId v = 0; v < p; ++v) {
      if (std::find(seed.begin(), seed.end(), v) != seed.end()) continue;
      double s = 0.0;
      for (VertexId u : seed) s += w.weight(v, u);
      if (best == kNoVertex || s > bw) {
        best = v;
        bw = s;
      }
    }
    seed.push_back(best);
  }
  std::array<VertexId, 4> out{seed[0], seed[1], seed[2], seed[3]};
  return sorted4(out);
}

RefreshStats refresh_cache(GainCache& cache, VertexId inserted, const Face& removed_face,
                           const std::array<Face, 3>& new_faces, const ScoreFn& score) {
  cache.remove_face(removed_face);
  RefreshStats s;
  s.faces_rescanned = cache.retire(inserted, score);
  for (const Face& f : new_faces) cache.add_face(f, score);
  return s;
}

namespace {

// One build: owns the triangulation, the per-face gain cache, the per-edge
// plaquette cache (a variant), the clique tree, and the exact running total.
class BuildEngine {
 public:
  BuildEngine(const WeightOracle& w, const BuildConfig& cfg)
      : w_(w),
        cfg_(cfg),
        score_(cfg.score ? *cfg.score : ScoreFunction::sum_weights(w)),
        seed_(select_seed_clique(w, cfg.seed_strategy, cfg.exhaustive_seed_limit)),
        g_(w.dimension(), seed_),
        cache_(remaining_after_seed(w.dimension(), seed_)) {
    if (score_.kind() == ScoreFunction::Kind::GaussianEntropyGain &&
        cfg_.variant != Variant::Base)
      throw std::invalid_argument(
          "build_tmfg: the entropy score is only defined for the base variant");
    if (cfg_.t1_sweep_cap < 0)
      throw std::invalid_argument("build_tmfg: t1_sweep_cap must be nonnegative");
    counting_ = [this](VertexId v, const Face& t) {
      ++stats_.score_evaluations;
      return score_(v, t);
    };

    ct_.cliques.push_back(sorted4(seed_));
    ct_.parent.push_back(-1);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) total_.add(w_.weight(seed_[i], seed_[j]));
    for (const Face& f : g_.faces()) {
      face_origin_[f] = 0;
      cache_.add_face(f, counting_);
    }
  }

  FilterResult run() {
    auto t0 = std::chrono::steady_clock::now();
    while (!cache_.remaining().empty()) step();
    stats_.elapsed_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();

    FilterResult r;
    r.method = std::string(variant_name(cfg_.variant));
    r.p = w_.dimension();
    r.edges = g_.edges();
    r.edge_weights.reserve(r.edges.size());
    for (const Edge& e : r.edges) r.edge_weights.push_back(w_.weight(e));
    r.total_weight = total_.round();
    if (ct_valid_) r.clique_tree = std::move(ct_);
    r.stats = stats_;
    r.moves = std::move(moves_);
    r.tri = std::move(g_);
    return r;
  }

 private:
  static std::set<VertexId> remaining_after_seed(int p, const std::array<VertexId, 4>& seed) {
    std::set<VertexId> rem;
    for (VertexId v = 0; v < p; ++v) rem.insert(v);
    for (VertexId v : seed) rem.erase(v);
    return rem;
  }

  void step() {
    BestMove t2 = cache_.best();
    if (t2.vertex == kNoVertex)
      throw std::logic_error("tmfg build: no insertable vertex found");
    if (cfg_.variant == Variant::A) {
      Edge ae(0, 1);
      VertexId av = kNoVertex;
      double ag = kNegInf;
      for (const auto& [e, fg] : a_cache_) {
        if (fg.best_vertex == kNoVertex) continue;
        if (av == kNoVertex || fg.max_gain > ag ||
            (fg.max_gain == ag && fg.best_vertex < av)) {
          ae = e;
          av = fg.best_vertex;
          ag = fg.max_gain;
        }
      }
      if (av != kNoVertex && ag > t2.gain) {
        do_a(ae, av);
        return;
      }
    }
    do_t2(t2);
  }

  void do_t2(const BestMove& b) {
    MoveRecord rec = apply_t2(g_, b.face, b.vertex, w_, &total_);
    ++stats_.moves_applied[MoveKind::T2];
    if (cfg_.record_moves) moves_.push_back(rec);

    std::array<Face, 3> nf{Face(b.face.v[0], b.face.v[1], b.vertex),
                           Face(b.face.v[0], b.face.v[2], b.vertex),
                           Face(b.face.v[1], b.face.v[2], b.vertex)};
    refresh_cache(cache_, b.vertex, b.face, nf, counting_);

    int origin = 0;
    if (ct_valid_) {
      ct_.cliques.push_back(sorted4({b.face.v[0], b.face.v[1], b.face.v[2], b.vertex}));
      ct_.separators.push_back(b.face.v);
      ct_.parent.push_back(face_origin_.at(b.face));
      origin = ct_.size() - 1;
    }
    face_origin_.erase(b.face);
    for (const Face& f : nf) face_origin_[f] = origin;

    if (cfg_.variant == Variant::A) {
      retire_a(b.vertex);
      refresh_a({b.face.v[0], b.face.v[1], b.face.v[2], b.vertex});
    }
    if (cfg_.variant == Variant::S)
      try_s(sorted4({b.face.v[0], b.face.v[1], b.face.v[2], b.vertex}));
    if (cfg_.variant == Variant::T1 || cfg_.variant == Variant::A)
      t1_sweep({nf.begin(), nf.end()});
  }

  void do_a(const Edge& e, VertexId v) {
    auto fs = g_.faces_of_edge(e);
    VertexId x = fs[0].opposite(e);
    VertexId y = fs[1].opposite(e);
    MoveRecord rec = apply_a(g_, e, v, w_, &total_);
    ++stats_.moves_applied[MoveKind::A];
    if (cfg_.record_moves) moves_.push_back(rec);
    ct_valid_ = false;

    cache_.remove_face(fs[0]);
    cache_.remove_face(fs[1]);
    cache_.retire(v, counting_);
    std::array<Face, 4> nf{Face(v, e.a, x), Face(v, x, e.b), Face(v, e.b, y),
                           Face(v, y, e.a)};
    for (const Face& f : nf) cache_.add_face(f, counting_);
    face_origin_.erase(fs[0]);
    face_origin_.erase(fs[1]);
    for (const Face& f : nf) face_origin_[f] = 0;

    a_cache_.erase(e);
    retire_a(v);
    refresh_a({e.a, e.b, x, y, v});
    t1_sweep({nf.begin(), nf.end()});
  }

  // Plaquette-insertion score for edge e and its flanking opposite pair.
  FaceGain scan_a(const Edge& e) {
    auto fs = g_.faces_of_edge(e);
    VertexId x = fs[0].opposite(e);
    VertexId y = fs[1].opposite(e);
    double base = w_.weight(e);
    FaceGain fg{kNegInf, kNoVertex};
    for (VertexId v : cache_.remaining()) {
      ++stats_.score_evaluations;
      double s = w_.weight(v, e.a) + w_.weight(v, e.b) + w_.weight(v, x) + w_.weight(v, y) -
                 base;
      if (fg.best_vertex == kNoVertex || s > fg.max_gain) fg = {s, v};
    }
    return fg;
  }

  void retire_a(VertexId v) {
    for (auto& [e, fg] : a_cache_)
      if (fg.best_vertex == v) fg = scan_a(e);
  }

  // Re-derive eligibility and entries for every edge touching a dirty vertex.
  void refresh_a(const std::set<VertexId>& dirty) {
    for (VertexId u : dirty) {
      if (!g_.is_inserted(u)) continue;
      for (VertexId z : g_.neighbors(u)) {
        Edge e(u, z);
        if (g_.degree(e.a) >= 4 && g_.degree(e.b) >= 4)
          a_cache_[e] = scan_a(e);
        else
          a_cache_.erase(e);
      }
    }
  }

  void t1_sweep(std::vector<Face> frontier) {
    for (int round = 0; round < cfg_.t1_sweep_cap; ++round) {
      std::set<Face> region;
      for (const Face& f : frontier) {
        if (!g_.is_face(f)) continue;
        region.insert(f);
        for (const Edge& e : f.edges())
          for (const Face& nb : g_.faces_of_edge(e)) region.insert(nb);
      }
      std::set<Edge> candidates;
      for (const Face& f : region)
        for (const Edge& e : f.edges()) candidates.insert(e);

      bool found = false;
      Edge best(0, 1);
      double best_gain = 0.0;
      VertexId bx = kNoVertex, by = kNoVertex;
      for (const Edge& e : candidates) {
        auto fs = g_.faces_of_edge(e);
        VertexId x = fs[0].opposite(e);
        VertexId y = fs[1].opposite(e);
        if (g_.has_edge(x, y)) continue;
        if (g_.degree(e.a) < 4 || g_.degree(e.b) < 4) continue;
        double gain = w_.weight(x, y) - w_.weight(e);
        if (gain > best_gain) {
          best_gain = gain;
          best = e;
          bx = x;
          by = y;
          found = true;
        }
      }
      if (!found) break;

      auto fs = g_.faces_of_edge(best);
      MoveRecord rec = apply_t1(g_, best, w_, &total_);
      ++stats_.moves_applied[MoveKind::T1];
      if (cfg_.record_moves) moves_.push_back(rec);
      ct_valid_ = false;

      cache_.remove_face(fs[0]);
      cache_.remove_face(fs[1]);
      Face nf1(bx, by, best.a), nf2(bx, by, best.b);
      cache_.add_face(nf1, counting_);
      cache_.add_face(nf2, counting_);
      face_origin_.erase(fs[0]);
      face_origin_.erase(fs[1]);
      face_origin_[nf1] = 0;
      face_origin_[nf2] = 0;
      if (cfg_.variant == Variant::A) {
        a_cache_.erase(best);
        refresh_a({best.a, best.b, bx, by});
      }
      frontier = {nf1, nf2};
    }
  }

  // All 24 label permutations of the just-created clique; apply the best one
  // when its exact re-routing gain is positive.
  void try_s(const std::array<VertexId, 4>& clique) {
    std::array<std::vector<VertexId>, 4> outs;
    for (int i = 0; i < 4; ++i)
      for (VertexId x : g_.neighbors(clique[i]))
        if (std::find(clique.begin(), clique.end(), x) == clique.end())
          outs[i].push_back(x);

    std::array<VertexId, 4> img = clique;
    std::array<VertexId, 4> best_img = clique;
    double best_gain = 0.0;
    bool found = false;
    do {
      ExactSum s;
      for (int i = 0; i < 4; ++i) {
        if (img[i] == clique[i]) continue;
        for (VertexId x : outs[i]) {
          s.add(w_.weight(x, img[i]));
          s.subtract(w_.weight(x, clique[i]));
        }
      }
      double gain = s.round();
      if (gain > best_gain) {
        best_gain = gain;
        best_img = img;
        found = true;
      }
    } while (std::next_permutation(img.begin(), img.end()));
    if (!found) return;

    std::map<VertexId, VertexId> perm;
    for (int i = 0; i < 4; ++i)
      if (clique[i] != best_img[i]) perm[clique[i]] = best_img[i];
    std::set<Face> affected;
    for (const auto& [m, tgt] : perm)
      for (const Face& f : g_.faces_at(m)) affected.insert(f);

    MoveRecord rec = apply_s(g_, clique, best_img, w_, &total_);
    ++stats_.moves_applied[MoveKind::S];
    if (cfg_.record_moves) moves_.push_back(rec);

    auto map_vertex = [&perm](VertexId u) {
      auto it = perm.find(u);
      return it == perm.end() ? u : it->second;
    };
    auto map_face = [&](const Face& f) {
      return Face(map_vertex(f.v[0]), map_vertex(f.v[1]), map_vertex(f.v[2]));
    };

    for (auto& c : ct_.cliques) {
      for (VertexId& u : c) u = map_vertex(u);
      std::sort(c.begin(), c.end());
    }
    for (auto& sep : ct_.separators) {
      for (VertexId& u : sep) u = map_vertex(u);
      std::sort(sep.begin(), sep.end());
    }

    std::vector<std::pair<Face, int>> moved_origins;
    for (const Face& f : affected) {
      moved_origins.emplace_back(map_face(f), face_origin_.at(f));
      face_origin_.erase(f);
    }
    for (const auto& [f, o] : moved_origins) face_origin_[f] = o;

    for (const Face& f : affected) cache_.remove_face(f);
    for (const auto& [f, o] : moved_origins) cache_.add_face(f, counting_);
  }

  const WeightOracle& w_;
  BuildConfig cfg_;
  ScoreFunction score_;
  std::array<VertexId, 4> seed_;
  Triangulation g_;
  GainCache cache_;
  ScoreFn counting_;
  std::map<Edge, FaceGain> a_cache_;
  CliqueTree ct_;
  bool ct_valid_ = true;
  std::map<Face, int> face_origin_;
  ExactSum total_;
  BuildStats stats_;
  std::vector<MoveRecord> moves_;
};

// Compacts the tree vectors after the clique at `removed` has been spliced
// out (parents must already point at surviving indices). Separators are
// recomputed as clique intersections, which reproduces the stored sets.
CliqueTree drop_clique(const CliqueTree& ct, int removed) {
  CliqueTree out;
  std::vector<int> to_new(ct.cliques.size(), -1);
  int next = 0;
  for (int i = 0; i < ct.size(); ++i)
    if (i != removed) to_new[i] = next++;
  for (int i = 0; i < ct.size(); ++i) {
    if (i == removed) continue;
    out.cliques.push_back(ct.cliques[i]);
    out.parent.push_back(ct.parent[i] < 0 ? -1 : to_new[ct.parent[i]]);
  }
  if (!out.parent.empty() && out.parent[0] != -1)
    throw std::logic_error("remove_vertex_online: tree root is no longer first");
  for (std::size_t i = 1; i < out.cliques.size(); ++i) {
    if (out.parent[i] < 0)
      throw std::logic_error("remove_vertex_online: removal disconnected the clique tree");
    std::array<VertexId, 3> sep{};
    int k = 0;
    const auto& c = out.cliques[i];
    const auto& pc = out.cliques[out.parent[i]];
    for (VertexId u : c)
      if (std::find(pc.begin(), pc.end(), u) != pc.end()) {
        if (k == 3)
          throw std::logic_error("remove_vertex_online: duplicate clique in the tree");
        sep[k++] = u;
      }
    if (k != 3)
      throw std::logic_error("remove_vertex_online: clique does not share a triangle with its parent");
    out.separators.push_back(sep);
  }
  return out;
}

}  // namespace

FilterResult build_tmfg(const WeightOracle& w, const BuildConfig& cfg) {
  return BuildEngine(w, cfg).run();
}

FilterResult insert_vertex_online(const FilterResult& result,
                                  std::span<const double> new_weights) {
  if (!result.tri)
    throw std::invalid_argument("insert_vertex_online: result carries no triangulation");
  if (!result.clique_tree)
    throw std::invalid_argument(
        "insert_vertex_online: result carries no clique tree; online insertion needs a "
        "chordal build");
  if (static_cast<int>(new_weights.size()) != result.p)
    throw std::invalid_argument("insert_vertex_online: weight row has " +
                                std::to_string(new_weights.size()) + " entries, expected " +
                                std::to_string(result.p));
  for (std::size_t i = 0; i < new_weights.size(); ++i)
    if (!(new_weights[i] >= 0.0) || new_weights[i] > std::numeric_limits<double>::max())
      throw std::invalid_argument("insert_vertex_online: weight " + std::to_string(i) +
                                  " must be finite and nonnegative");

  const Triangulation& old = *result.tri;
  const VertexId vnew = result.p;

  bool found = false;
  Face best(0, 1, 2);
  double best_score = 0.0;
  for (const Face& f : old.faces()) {
    double s = new_weights[f.v[0]] + new_weights[f.v[1]] + new_weights[f.v[2]];
    if (!found || s > best_score) {
      best = f;
      best_score = s;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("insert_vertex_online: result has no faces");

  std::vector<Edge> edges = old.edges();
  std::vector<Face> faces(old.faces().begin(), old.faces().end());
  Triangulation g(result.p + 1, edges, faces);
  g.mark_inserted(vnew);
  for (VertexId u : best.v) g.add_edge(vnew, u);
  g.remove_face(best);
  g.add_face(Face(vnew, best.v[0], best.v[1]));
  g.add_face(Face(vnew, best.v[0], best.v[2]));
  g.add_face(Face(vnew, best.v[1], best.v[2]));

  std::map<Edge, double> wmap;
  for (std::size_t k = 0; k < result.edges.size(); ++k)
    wmap[result.edges[k]] = result.edge_weights[k];
  for (VertexId u : best.v) wmap[Edge(u, vnew)] = new_weights[u];

  FilterResult r;
  r.method = result.method;
  r.p = result.p + 1;
  r.edges = g.edges();
  r.edge_weights.reserve(r.edges.size());
  for (const Edge& e : r.edges) r.edge_weights.push_back(wmap.at(e));
  r.total_weight = exact_sum(r.edge_weights);

  CliqueTree ct = *result.clique_tree;
  int owner = -1;
  for (int i = 0; i < ct.size(); ++i) {
    const auto& c = ct.cliques[i];
    bool all = true;
    for (VertexId u : best.v)
      if (std::find(c.begin(), c.end(), u) == c.end()) all = false;
    if (all) owner = i;  // latest owner wins
  }
  if (owner < 0)
    throw std::logic_error("insert_vertex_online: no clique contains the chosen face");
  ct.cliques.push_back(sorted4({best.v[0], best.v[1], best.v[2], vnew}));
  ct.separators.push_back(best.v);
  ct.parent.push_back(owner);
  r.clique_tree = std::move(ct);
  r.tri = std::move(g);

  r.stats = result.stats;
  ++r.stats.moves_applied[MoveKind::T2];
  r.stats.score_evaluations += static_cast<std::size_t>(old.face_count());
  r.moves = result.moves;
  MoveRecord rec;
  rec.kind = MoveKind::T2;
  rec.gain = new_weights[best.v[0]] + new_weights[best.v[1]] + new_weights[best.v[2]];
  rec.vertex = vnew;
  rec.face = best;
  r.moves.push_back(rec);
  return r;
}

FilterResult remove_vertex_online(const FilterResult& result, VertexId v,
                                  const WeightOracle& w) {
  if (!result.tri)
    throw std::invalid_argument("remove_vertex_online: result carries no triangulation");
  const Triangulation& old = *result.tri;
  if (!old.is_inserted(v))
    throw std::invalid_argument("remove_vertex_online: vertex " + std::to_string(v) +
                                " is not in the graph");
  int deg = old.degree(v);
  if (deg != 3 && deg != 4)
    throw std::invalid_argument("remove_vertex_online: vertex " + std::to_string(v) +
                                " has degree " + std::to_string(deg) +
                                ", not removable by a local move");

  Triangulation g = old;
  MoveRecord rec = deg == 3 ? apply_t2_inverse(g, v, w, nullptr)
                            : apply_a_inverse(g, v, w, nullptr);

  std::map<Edge, double> wmap;
  for (std::size_t k = 0; k < result.edges.size(); ++k)
    wmap[result.edges[k]] = result.edge_weights[k];
  if (deg == 4) wmap[rec.added_edge] = w.weight(rec.added_edge);

  FilterResult r;
  r.method = result.method;
  r.p = result.p;
  r.edges = g.edges();
  r.edge_weights.reserve(r.edges.size());
  for (const Edge& e : r.edges) r.edge_weights.push_back(wmap.at(e));
  r.total_weight = exact_sum(r.edge_weights);

  if (result.clique_tree) {
    CliqueTree ct = *result.clique_tree;
    std::vector<int> holding;  // cliques containing v
    for (int i = 0; i < ct.size(); ++i)
      if (std::find(ct.cliques[i].begin(), ct.cliques[i].end(), v) != ct.cliques[i].end())
        holding.push_back(i);

    if (deg == 3) {
      if (holding.size() != 1)
        throw std::logic_error("remove_vertex_online: degree-3 vertex is in " +
                               std::to_string(holding.size()) + " cliques, expected 1");
      int k = holding[0];
      if (k == 0) {
        int new_root = -1;
        for (int j = 1; j < ct.size(); ++j)
          if (ct.parent[j] == 0) {
            if (new_root < 0) {
              new_root = j;
              ct.parent[j] = -1;
            } else {
              ct.parent[j] = new_root;
            }
          }
      } else {
        for (int j = 0; j < ct.size(); ++j)
          if (ct.parent[j] == k) ct.parent[j] = ct.parent[k];
      }
      r.clique_tree = drop_clique(ct, k);
    } else {
      if (holding.size() != 2)
        throw std::logic_error("remove_vertex_online: degree-4 vertex is in " +
                               std::to_string(holding.size()) + " cliques, expected 2");
      int k1 = holding[0], k2 = holding[1];
      std::set<VertexId> merged;
      for (VertexId u : ct.cliques[k1])
        if (u != v) merged.insert(u);
      for (VertexId u : ct.cliques[k2])
        if (u != v) merged.insert(u);
      if (merged.size() != 4)
        throw std::logic_error("remove_vertex_online: cliques around the vertex do not merge");
      std::array<VertexId, 4> cprime{};
      std::copy(merged.begin(), merged.end(), cprime.begin());
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (!g.has_edge(cprime[i], cprime[j]))
            throw std::logic_error(
                "remove_vertex_online: merged clique is incomplete after the removal");

      if (ct.parent[k1] == k2) {
        ct.parent[k1] = ct.parent[k2];
      } else if (ct.parent[k2] != k1) {
        throw std::logic_error(
            "remove_vertex_online: the two cliques around the vertex are not adjacent");
      }
      ct.cliques[k1] = cprime;
      for (int j = 0; j < ct.size(); ++j)
        if (j != k1 && ct.parent[j] == k2) ct.parent[j] = k1;
      r.clique_tree = drop_clique(ct, k2);
    }
  }

  r.tri = std::move(g);
  r.stats = result.stats;
  ++r.stats.moves_applied[deg == 3 ? MoveKind::T2Inverse : MoveKind::AInverse];
  r.moves = result.moves;
  r.moves.push_back(rec);
  return r;
}

}  // namespace tmfg
