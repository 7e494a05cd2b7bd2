#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmfg/filter_result.hpp"
#include "tmfg/types.hpp"
#include "tmfg/weight_oracle.hpp"

namespace tmfg::io {

inline constexpr std::string_view kToolName = "tmfg";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Ordered key/value metadata embedded in every output file. Only
// deterministic facts go in (command, options, seeds, input digests); given
// the same tool build, replaying the recorded command reproduces the output
// byte for byte.
struct RunManifest {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value);
  const std::string* find(std::string_view key) const;
};

// Manifest pre-seeded with tool name, version, and the command word.
RunManifest make_manifest(std::string_view command);

// FNV-1a (64-bit) of a byte string, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Digest of a file's raw bytes; throws std::runtime_error if unreadable.
std::string file_digest(const std::string& path);

// Dense numeric CSV: one row per line, optional single header line,
// '#'-prefixed comment lines skipped. Ragged rows or non-numeric cells
// raise std::runtime_error with "path:line:" context.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // row-major
};
Matrix read_matrix_csv(const std::string& path);

// Observations-by-variables CSV. The header line of variable names is
// required; it is what distinguishes a series file from a matrix file.
struct Series {
  int observations = 0;
  int variables = 0;
  std::vector<std::string> names;
  std::vector<double> data;  // row-major, observations x variables
};
Series read_timeseries_csv(const std::string& path);

// Filtered-network writers. All three embed the manifest; numbers print via
// %.17g so values survive a write/read round trip exactly.
void write_result_json(const std::string& path, const FilterResult& r,
                       const RunManifest& m);
void write_result_tsv(const std::string& path, const FilterResult& r,
                      const RunManifest& m);
void write_result_dot(const std::string& path, const FilterResult& r,
                      const RunManifest& m);

// Full symmetric matrix as CSV with the manifest in leading '#' comments,
// re-ingestable by read_matrix_csv.
void write_matrix_csv(const std::string& path, const WeightOracle& w,
                      const RunManifest& m);

// What cmd_validate needs back out of a result JSON.
struct LoadedResult {
  std::string method;
  int p = 0;
  std::vector<Edge> edges;
  std::vector<double> edge_weights;
  double total_weight = 0.0;
  std::optional<CliqueTree> clique_tree;
  std::map<std::string, std::string> manifest;
};
LoadedResult read_result_json(const std::string& path);

}  // namespace tmfg::io
