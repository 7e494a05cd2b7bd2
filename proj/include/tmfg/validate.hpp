#pragma once

#include <span>
#include <string>
#include <vector>

#include "tmfg/clique_tree.hpp"
#include "tmfg/filter_result.hpp"
#include "tmfg/tmfg.hpp"
#include "tmfg/types.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // empty iff pass
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
  }
};

// Maximum cardinality search plus a perfect-elimination check over the
// vertices that appear in the edge list. Throws when they are disconnected.
ValidationReport check_chordal(std::span<const Edge> edges);

// Count laws, clique completeness, separator/parent consistency, edge cover,
// and the running-intersection property, against the given edge list.
ValidationReport check_clique_tree(const CliqueTree& ct, std::span<const Edge> edges);

// Reference construction with a full gain rescan at every step; the cached
// build must match it move for move. Guard: p <= 200, base variant only.
FilterResult naive_tmfg_oracle(const WeightOracle& w, const BuildConfig& cfg = {});

// True optimum of the maximum-weight planar subgraph objective by exhaustive
// enumeration of 3p-6 edge subsets. Guard: p <= 7.
double exhaustive_wmpg(const WeightOracle& w);

// Planarity by exhaustive search for a K5 or K3,3 subdivision. Guard: p <= 12.
bool planar_by_kuratowski(int p, std::span<const Edge> edges);

}  // namespace tmfg
