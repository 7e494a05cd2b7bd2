#include "tmfg/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tmfg::io {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  return f;
}

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

bool parse_cell(std::string_view cell, double& out) {
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return ec == std::errc{} && ptr == cell.data() + cell.size() && !cell.empty();
}

// Reads line by line, skipping blanks and '#' comments; calls fn(line_no, line).
template <typename Fn>
void for_data_lines(const std::string& path, Fn fn) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open");
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(line_no, t);
  }
}

void manifest_comments(std::ostream& os, const RunManifest& m, const char* prefix) {
  for (const auto& [k, v] : m.fields) os << prefix << k << ": " << v << "\n";
}

}  // namespace

void RunManifest::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
}

const std::string* RunManifest::find(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

RunManifest make_manifest(std::string_view command) {
  RunManifest m;
  m.add("tool", std::string(kToolName));
  m.add("version", std::string(kToolVersion));
  m.add("command", std::string(command));
  return m;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open");
  std::ostringstream ss;
  ss << f.rdbuf();
  return fnv1a_hex(ss.str());
}

Matrix read_matrix_csv(const std::string& path) {
  Matrix m;
  bool saw_data = false;
  for_data_lines(path, [&](int line_no, std::string_view line) {
    const auto cells = split_csv(line);
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!parse_cell(cells[i], row[i])) {
        // A non-numeric first line is the optional header; anywhere else it
        // is an error.
        if (!saw_data) return;
        fail_at(path, line_no,
                "column " + std::to_string(i + 1) + ": not a number: '" +
                    std::string(cells[i]) + "'");
      }
    }
    if (!saw_data) {
      m.cols = static_cast<int>(cells.size());
      saw_data = true;
    } else if (static_cast<int>(cells.size()) != m.cols) {
      fail_at(path, line_no,
              "expected " + std::to_string(m.cols) + " columns, got " +
                  std::to_string(cells.size()));
    }
    m.data.insert(m.data.end(), row.begin(), row.end());
    ++m.rows;
  });
  if (!saw_data) throw std::runtime_error(path + ": no numeric rows");
  return m;
}

Series read_timeseries_csv(const std::string& path) {
  Series s;
  bool saw_header = false;
  for_data_lines(path, [&](int line_no, std::string_view line) {
    const auto cells = split_csv(line);
    if (!saw_header) {
      for (auto c : cells) s.names.emplace_back(c);
      s.variables = static_cast<int>(cells.size());
      saw_header = true;
      return;
    }
    if (static_cast<int>(cells.size()) != s.variables)
      fail_at(path, line_no,
              "expected " + std::to_string(s.variables) + " columns, got " +
                  std::to_string(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double v = 0.0;
      if (!parse_cell(cells[i], v))
        fail_at(path, line_no,
                "column " + std::to_string(i + 1) + ": not a number: '" +
                    std::string(cells[i]) + "'");
      s.data.push_back(v);
    }
    ++s.observations;
  });
  if (!saw_header) throw std::runtime_error(path + ": missing header line");
  if (s.observations == 0) throw std::runtime_error(path + ": no data rows");
  return s;
}

void write_result_json(const std::string& path, const FilterResult& r,
                       const RunManifest& m) {
  auto f = open_out(path);
  f << "{\n";
  f << "  \"method\": \"" << json_escape(r.method) << "\",\n";
  f << "  \"p\": " << r.p << ",\n";
  f << "  \"nodes\": [";
  for (int i = 0; i < r.p; ++i) f << (i ? ", " : "") << i;
  f << "],\n";
  f << "  \"edges\": [\n";
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    f << "    [" << r.edges[i].a << ", " << r.edges[i].b << ", "
      << fmt(r.edge_weights[i]) << "]" << (i + 1 < r.edges.size() ? "," : "")
      << "\n";
  }
  f << "  ],\n";
  f << "  \"total_weight\": " << fmt(r.total_weight) << ",\n";
  if (r.clique_tree) {
    const auto& ct = *r.clique_tree;
    f << "  \"cliques\": [";
    for (std::size_t i = 0; i < ct.cliques.size(); ++i) {
      const auto& c = ct.cliques[i];
      f << (i ? ", " : "") << "[" << c[0] << ", " << c[1] << ", " << c[2] << ", "
        << c[3] << "]";
    }
    f << "],\n";
    f << "  \"separators\": [";
    for (std::size_t i = 0; i < ct.separators.size(); ++i) {
      const auto& s = ct.separators[i];
      f << (i ? ", " : "") << "[" << s[0] << ", " << s[1] << ", " << s[2] << "]";
    }
    f << "],\n";
    f << "  \"clique_parents\": [";
    for (std::size_t i = 0; i < ct.parent.size(); ++i)
      f << (i ? ", " : "") << ct.parent[i];
    f << "],\n";
  }
  f << "  \"manifest\": {\n";
  for (std::size_t i = 0; i < m.fields.size(); ++i) {
    f << "    \"" << json_escape(m.fields[i].first) << "\": \""
      << json_escape(m.fields[i].second) << "\""
      << (i + 1 < m.fields.size() ? "," : "") << "\n";
  }
  f << "  }\n";
  f << "}\n";
  if (!f) throw std::runtime_error(path + ": write failed");
}

void write_result_tsv(const std::string& path, const FilterResult& r,
                      const RunManifest& m) {
  auto f = open_out(path);
  manifest_comments(f, m, "# ");
  f << "# method: " << r.method << "\n";
  f << "# p: " << r.p << "\n";
  f << "# total_weight: " << fmt(r.total_weight) << "\n";
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    f << r.edges[i].a << "\t" << r.edges[i].b << "\t" << fmt(r.edge_weights[i])
      << "\n";
  if (!f) throw std::runtime_error(path + ": write failed");
}

void write_result_dot(const std::string& path, const FilterResult& r,
                      const RunManifest& m) {
  auto f = open_out(path);
  manifest_comments(f, m, "// ");
  f << "graph \"" << r.method << "\" {\n";
  for (int i = 0; i < r.p; ++i) f << "  " << i << ";\n";
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    f << "  " << r.edges[i].a << " -- " << r.edges[i].b << " [label=\""
      << fmt(r.edge_weights[i]) << "\"];\n";
  f << "}\n";
  if (!f) throw std::runtime_error(path + ": write failed");
}

void write_matrix_csv(const std::string& path, const WeightOracle& w,
                      const RunManifest& m) {
  auto f = open_out(path);
  manifest_comments(f, m, "# ");
  const int p = w.dimension();
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (j) f << ",";
      f << (i == j ? "0" : fmt(w.weight(i, j)));
    }
    f << "\n";
  }
  if (!f) throw std::runtime_error(path + ": write failed");
}

LoadedResult read_result_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open");
  LoadedResult out;
  try {
    const auto j = nlohmann::json::parse(f);
    out.method = j.at("method").get<std::string>();
    out.p = j.at("p").get<int>();
    for (const auto& e : j.at("edges")) {
      out.edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
      out.edge_weights.push_back(e.at(2).get<double>());
    }
    out.total_weight = j.at("total_weight").get<double>();
    if (j.contains("cliques")) {
      CliqueTree ct;
      for (const auto& c : j.at("cliques"))
        ct.cliques.push_back({c.at(0).get<VertexId>(), c.at(1).get<VertexId>(),
                              c.at(2).get<VertexId>(), c.at(3).get<VertexId>()});
      for (const auto& s : j.at("separators"))
        ct.separators.push_back({s.at(0).get<VertexId>(), s.at(1).get<VertexId>(),
                                 s.at(2).get<VertexId>()});
      for (const auto& v : j.at("clique_parents")) ct.parent.push_back(v.get<int>());
      out.clique_tree = std::move(ct);
    }
    if (j.contains("manifest"))
      for (const auto& [k, v] : j.at("manifest").items())
        out.manifest[k] = v.get<std::string>();
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return out;
}

}  // namespace tmfg::io
