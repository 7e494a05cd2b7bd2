#include "tmfg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"
#include "tmfg/exact_sum.hpp"
#include "tmfg/gaussian.hpp"
#include "tmfg/io.hpp"
#include "tmfg/planarity.hpp"
#include "tmfg/pmfg.hpp"
#include "tmfg/rng.hpp"
#include "tmfg/tmfg.hpp"
#include "tmfg/validate.hpp"

namespace tmfg::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_seconds(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

// Output files land in $TMFG_OUTPUT_DIR when set and no --output was given.
std::string default_output(const std::string& name) {
  if (const char* dir = std::getenv("TMFG_OUTPUT_DIR"); dir && *dir)
    return std::string(dir) + "/" + name;
  return name;
}

void require_method(const std::string& name) {
  if (name == "pmfg") return;
  variant_from_name(name);  // throws on anything unknown
}

FilterResult build_method(const std::string& method, const WeightOracle& w,
                          const std::optional<ScoreFunction>& score) {
  if (method == "pmfg") {
    if (score)
      throw std::invalid_argument("pmfg does not take a vertex score");
    return build_pmfg(w);
  }
  BuildConfig cfg;
  cfg.variant = variant_from_name(method);
  cfg.score = score;
  return build_tmfg(w, cfg);
}

// Splits on commas that sit outside parentheses, so "uniform,beta(0.5,3)"
// yields two entries.
std::vector<std::string> split_outside_parens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::vector<std::string> s;
  s.reserve(xs.size());
  for (int x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

// Sample covariance (denominator q-1) of an observations-by-variables table.
std::vector<double> sample_covariance(const io::Series& s) {
  const int q = s.observations;
  const int p = s.variables;
  if (q < 2)
    throw std::invalid_argument("covariance needs at least 2 observations, got " +
                                std::to_string(q));
  std::vector<double> mean(p, 0.0);
  for (int t = 0; t < q; ++t)
    for (int i = 0; i < p; ++i) mean[i] += s.data[static_cast<std::size_t>(t) * p + i];
  for (double& m : mean) m /= q;
  std::vector<double> cov(static_cast<std::size_t>(p) * p, 0.0);
  for (int t = 0; t < q; ++t)
    for (int i = 0; i < p; ++i) {
      const double di = s.data[static_cast<std::size_t>(t) * p + i] - mean[i];
      for (int j = i; j < p; ++j) {
        const double dj = s.data[static_cast<std::size_t>(t) * p + j] - mean[j];
        cov[static_cast<std::size_t>(i) * p + j] += di * dj;
      }
    }
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      const double v = cov[static_cast<std::size_t>(i) * p + j] / (q - 1);
      cov[static_cast<std::size_t>(i) * p + j] = v;
      cov[static_cast<std::size_t>(j) * p + i] = v;
    }
  return cov;
}

struct FilterOptions {
  std::string input;
  bool timeseries = false;
  std::string method = "tmfg";
  std::string score = "sum";
  std::string transform = "squared";
  std::string format = "json";
  std::string output;
};

int cmd_filter(const FilterOptions& o) {
  require_method(o.method);
  if (o.score != "sum" && o.score != "entropy")
    throw std::invalid_argument("unknown score: " + o.score +
                                " (expected sum or entropy)");
  const Transform tr = transform_from_name(o.transform);

  std::unique_ptr<WeightOracle> oracle;
  std::optional<GaussianModel> model;
  if (o.timeseries) {
    auto s = io::read_timeseries_csv(o.input);
    if (o.score == "entropy") model.emplace(s.variables, sample_covariance(s));
    oracle = std::make_unique<TimeSeriesOracle>(std::move(s.data), s.observations,
                                                s.variables, tr);
  } else {
    auto m = io::read_matrix_csv(o.input);
    if (m.rows != m.cols)
      throw std::runtime_error(o.input + ": matrix must be square, got " +
                               std::to_string(m.rows) + "x" +
                               std::to_string(m.cols));
    oracle = std::make_unique<DenseWeightOracle>(m.rows, m.data);
  }

  std::optional<ScoreFunction> score;
  if (o.score == "entropy") {
    if (!model)
      throw std::invalid_argument(
          "--score entropy needs --timeseries input (a covariance model)");
    score = ScoreFunction::gaussian_entropy(*model);
  }

  const FilterResult r = build_method(o.method, *oracle, score);

  auto m = io::make_manifest("filter");
  m.add("input", o.input);
  m.add("input-digest", io::file_digest(o.input));
  m.add("input-kind", o.timeseries ? "timeseries" : "matrix");
  m.add("method", o.method);
  m.add("score", o.score);
  if (o.timeseries) m.add("transform", std::string(transform_name(tr)));
  m.add("format", o.format);

  if (o.format == "json")
    io::write_result_json(o.output, r, m);
  else if (o.format == "edge-tsv")
    io::write_result_tsv(o.output, r, m);
  else if (o.format == "dot")
    io::write_result_dot(o.output, r, m);
  else
    throw std::invalid_argument("unknown format: " + o.format +
                                " (expected json, edge-tsv, or dot)");

  std::cerr << r.method << ": p=" << r.p << ", " << r.edges.size()
            << " edges, total " << fmt17(r.total_weight) << ", "
            << fmt_seconds(r.stats.elapsed_seconds) << " s -> " << o.output
            << "\n";
  return 0;
}

struct GenOptions {
  std::string family = "uniform";
  int p = 0;
  std::uint64_t seed = 1;
  std::string transform = "squared";
  std::string output;
};

int cmd_gen(const GenOptions& o) {
  MatrixSpec spec = parse_matrix_spec(o.family);
  spec.p = o.p;
  spec.seed = o.seed;
  spec.transform = transform_from_name(o.transform);
  const auto oracle = generate(spec);

  auto m = io::make_manifest("gen");
  m.add("family", family_name(spec));
  m.add("p", std::to_string(spec.p));
  m.add("seed", std::to_string(spec.seed));
  if (spec.family == Family::Factor)
    m.add("transform", std::string(transform_name(spec.transform)));
  m.add("rng", std::string(rng::kAlgorithmId));
  io::write_matrix_csv(o.output, *oracle, m);

  std::cerr << "gen: " << family_name(spec) << ", p=" << spec.p << " -> "
            << o.output << "\n";
  return 0;
}

struct BenchOptions {
  std::string methods = "tmfg,pmfg";
  std::vector<int> sizes;
  int reps = 3;
  std::string distribution = "uniform";
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_bench(const BenchOptions& o) {
  const auto methods = split_outside_parens(o.methods);
  for (const auto& m : methods) require_method(m);
  if (o.sizes.empty()) throw std::invalid_argument("--sizes is required");
  for (int p : o.sizes)
    if (p < 50)
      throw std::invalid_argument("bench sizes must be at least 50, got " +
                                  std::to_string(p));
  if (o.reps < 3)
    throw std::invalid_argument("benchmarks need at least 3 reps");
  const MatrixSpec family = parse_matrix_spec(o.distribution);

  const auto points = bench_methods(methods, o.sizes, o.reps, family, o.seed);

  auto man = io::make_manifest("bench");
  man.add("methods", join(methods, ","));
  man.add("sizes", join_ints(o.sizes, ","));
  man.add("reps", std::to_string(o.reps));
  man.add("distribution", o.distribution);
  man.add("seed", std::to_string(o.seed));
  man.add("rng", std::string(rng::kAlgorithmId));

  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::runtime_error(o.output + ": cannot open for writing");
  for (const auto& [k, v] : man.fields) f << "# " << k << ": " << v << "\n";
  f << "method\tp\tmedian_seconds\n";
  for (const auto& pt : points)
    f << pt.method << "\t" << pt.p << "\t" << fmt_seconds(pt.median_seconds)
      << "\n";
  for (const auto& method : methods) {
    std::vector<BenchPoint> own;
    for (const auto& pt : points)
      if (pt.method == method) own.push_back(pt);
    // PMFG scales like a cubic, the T2-based methods like a quadratic.
    const int e1 = method == "pmfg" ? 3 : 2;
    const auto [a, b] = fit_two_term(own, e1, e1 - 1);
    f << "# fit: method=" << method << " form=a*p^" << e1 << "+b*p^" << (e1 - 1)
      << " a=" << fmt17(a) << " b=" << fmt17(b) << "\n";
    f << "# loglog_slope: method=" << method
      << " slope=" << fmt17(fitted_loglog_slope(own)) << "\n";
  }
  if (!f) throw std::runtime_error(o.output + ": write failed");

  std::cerr << "bench: " << points.size() << " (method, size) points -> "
            << o.output << "\n";
  return 0;
}

struct CompareOptions {
  std::string distributions = "uniform";
  std::string methods = "tmfg";
  int p = 0;
  std::vector<int> sizes;
  int samples = 10;
  std::uint64_t seed = 1;
  std::string transform = "squared";
  std::string output;
};

int cmd_compare(const CompareOptions& o) {
  const auto methods = split_outside_parens(o.methods);
  for (const auto& m : methods) require_method(m);
  if (o.samples < 1) throw std::invalid_argument("--samples must be at least 1");
  std::vector<int> sizes = o.sizes;
  if (o.p > 0 && !sizes.empty())
    throw std::invalid_argument("pass either --p or --sizes, not both");
  if (o.p > 0) sizes = {o.p};
  if (sizes.empty())
    throw std::invalid_argument("pass --p or --sizes");

  const Transform tr = transform_from_name(o.transform);
  std::vector<MatrixSpec> families;
  for (const auto& d : split_outside_parens(o.distributions)) {
    MatrixSpec spec = parse_matrix_spec(d);
    spec.transform = tr;
    families.push_back(spec);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = compare_methods(families, methods, sizes, o.samples, o.seed);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto man = io::make_manifest("compare");
  {
    std::vector<std::string> names;
    for (const auto& fam : families) names.push_back(family_name(fam));
    man.add("distributions", join(names, ","));
  }
  man.add("methods", join(methods, ","));
  man.add("sizes", join_ints(sizes, ","));
  man.add("samples", std::to_string(o.samples));
  man.add("seed", std::to_string(o.seed));
  man.add("transform", std::string(transform_name(tr)));
  man.add("rng", std::string(rng::kAlgorithmId));

  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::runtime_error(o.output + ": cannot open for writing");
  for (const auto& [k, v] : man.fields) f << "# " << k << ": " << v << "\n";
  f << "distribution\tmethod\tp\tsamples\tmean_ratio_pct\n";
  for (const auto& r : rows)
    f << r.distribution << "\t" << r.method << "\t" << r.p << "\t"
      << r.ratios.size() << "\t" << fmt17(r.mean_ratio * 100.0) << "\n";
  if (!f) throw std::runtime_error(o.output + ": write failed");

  std::cerr << "compare: " << rows.size() << " rows in " << fmt_seconds(elapsed)
            << " s -> " << o.output << "\n";
  return 0;
}

int cmd_validate(const std::string& input) {
  const io::LoadedResult r = io::read_result_json(input);
  ValidationReport report;

  bool well_formed = true;
  std::string wf_detail;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < r.edges.size() && well_formed; ++i) {
    const Edge& e = r.edges[i];
    if (e.a < 0 || e.b >= r.p) {
      well_formed = false;
      wf_detail = "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                  ") outside [0," + std::to_string(r.p) + ")";
    } else if (!seen.insert(e).second) {
      well_formed = false;
      wf_detail = "duplicate edge (" + std::to_string(e.a) + "," +
                  std::to_string(e.b) + ")";
    } else if (!std::isfinite(r.edge_weights[i])) {
      well_formed = false;
      wf_detail = "non-finite weight on edge (" + std::to_string(e.a) + "," +
                  std::to_string(e.b) + ")";
    }
  }
  report.add("edges-well-formed", well_formed, wf_detail);

  if (well_formed) {
    report.add("planar", is_planar(r.p, r.edges), "graph is not planar");

    const long expected = 3L * r.p - 6;
    report.add("edge-count", static_cast<long>(r.edges.size()) == expected,
               "expected " + std::to_string(expected) + " edges, found " +
                   std::to_string(r.edges.size()));

    const double recomputed = exact_sum(r.edge_weights);
    report.add("total-weight", recomputed == r.total_weight,
               "stored " + fmt17(r.total_weight) + ", edge list sums to " +
                   fmt17(recomputed));

    if (r.clique_tree) {
      try {
        for (const Check& c : check_chordal(r.edges).checks) report.checks.push_back(c);
      } catch (const std::exception& e) {
        report.add("chordal", false, e.what());
      }
      for (const Check& c : check_clique_tree(*r.clique_tree, r.edges).checks)
        report.checks.push_back(c);
    }
  }

  for (const Check& c : report.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  if (!r.clique_tree)
    std::cout << "SKIP chordality and clique-tree checks (none claimed by "
              << r.method << ")\n";
  std::cout << (report.ok() ? "valid" : "invalid") << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

std::vector<BenchPoint> bench_methods(const std::vector<std::string>& methods,
                                      const std::vector<int>& sizes, int reps,
                                      MatrixSpec family, std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  std::vector<BenchPoint> points;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    family.p = sizes[si];
    family.seed = rng::substream_seed(seed, si);
    const auto oracle = generate(family);
    for (const auto& method : methods) {
      std::vector<double> times(static_cast<std::size_t>(reps));
      for (double& t : times)
        t = build_method(method, *oracle, std::nullopt).stats.elapsed_seconds;
      std::sort(times.begin(), times.end());
      const std::size_t n = times.size();
      const double median = n % 2 ? times[n / 2]
                                  : 0.5 * (times[n / 2 - 1] + times[n / 2]);
      points.push_back({method, sizes[si], median});
    }
  }
  return points;
}

double fitted_loglog_slope(std::span<const BenchPoint> points) {
  if (points.size() < 2)
    throw std::invalid_argument("slope fit needs at least 2 points");
  double mx = 0.0, my = 0.0;
  for (const auto& pt : points) {
    mx += std::log(static_cast<double>(pt.p));
    my += std::log(std::max(pt.median_seconds, 1e-12));
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& pt : points) {
    const double dx = std::log(static_cast<double>(pt.p)) - mx;
    const double dy = std::log(std::max(pt.median_seconds, 1e-12)) - my;
    sxy += dx * dy;
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct sizes");
  return sxy / sxx;
}

std::array<double, 2> fit_two_term(std::span<const BenchPoint> points, int e1,
                                   int e2) {
  if (points.size() < 2)
    throw std::invalid_argument("coefficient fit needs at least 2 points");
  double xx = 0.0, xy = 0.0, yy = 0.0, xt = 0.0, yt = 0.0;
  for (const auto& pt : points) {
    const double x = std::pow(static_cast<double>(pt.p), e1);
    const double y = std::pow(static_cast<double>(pt.p), e2);
    xx += x * x;
    xy += x * y;
    yy += y * y;
    xt += x * pt.median_seconds;
    yt += y * pt.median_seconds;
  }
  const double det = xx * yy - xy * xy;
  if (det == 0.0) throw std::invalid_argument("coefficient fit needs distinct sizes");
  return {(xt * yy - yt * xy) / det, (yt * xx - xt * xy) / det};
}

std::vector<CompareRow> compare_methods(const std::vector<MatrixSpec>& families,
                                        const std::vector<std::string>& methods,
                                        const std::vector<int>& sizes, int samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  std::vector<CompareRow> rows;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const std::uint64_t sub =
          rng::substream_seed(seed, fi * sizes.size() + si);
      std::vector<CompareRow> block;
      for (const auto& method : methods) {
        CompareRow r;
        r.distribution = family_name(families[fi]);
        r.method = method;
        r.p = sizes[si];
        r.ratios.reserve(static_cast<std::size_t>(samples));
        block.push_back(std::move(r));
      }
      for (int s = 0; s < samples; ++s) {
        MatrixSpec spec = families[fi];
        spec.p = sizes[si];
        spec.seed = rng::substream_seed(sub, static_cast<std::uint64_t>(s));
        const auto oracle = generate(spec);
        const double baseline = build_pmfg(*oracle).total_weight;
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
          const double total =
              methods[mi] == "pmfg"
                  ? baseline
                  : build_method(methods[mi], *oracle, std::nullopt).total_weight;
          block[mi].ratios.push_back(total / baseline);
        }
      }
      for (auto& r : block) {
        ExactSum acc;
        for (double x : r.ratios) acc.add(x);
        r.mean_ratio = acc.round() / static_cast<double>(r.ratios.size());
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"planar filtered networks from dense weight matrices"};
  app.require_subcommand(1);

  FilterOptions fo;
  auto* filter = app.add_subcommand(
      "filter", "filter a weight matrix or time series into a planar network");
  filter->add_option("-i,--input", fo.input, "CSV input file")->required();
  filter->add_flag("--timeseries", fo.timeseries,
                   "input is observations x variables with a header line");
  filter->add_option("-m,--method", fo.method,
                     "tmfg | tmfg-t1 | tmfg-s | tmfg-a | pmfg");
  filter->add_option("--score", fo.score,
                     "vertex selection score: sum | entropy (entropy needs "
                     "--timeseries)");
  filter->add_option("--transform", fo.transform,
                     "correlation transform for time series: squared | "
                     "absolute | raw");
  filter->add_option("-f,--format", fo.format, "json | edge-tsv | dot");
  filter->add_option("-o,--output", fo.output, "output path");

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "generate a synthetic weight matrix CSV");
  gen->add_option("--family", go.family,
                  "uniform | beta(a,b) | pareto(e) | factor(k) | factor(k,q)")
      ->required();
  gen->add_option("--p", go.p, "matrix dimension")->required();
  gen->add_option("--seed", go.seed, "RNG seed");
  gen->add_option("--transform", go.transform,
                  "correlation transform for the factor family");
  gen->add_option("-o,--output", go.output, "output path");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "time methods across sizes");
  bench->add_option("--methods", bo.methods, "comma-separated method list");
  bench->add_option("--sizes", bo.sizes, "comma-separated p list (each >= 50)")
      ->delimiter(',')
      ->required();
  bench->add_option("--reps", bo.reps, "timed repetitions per point (>= 3)");
  bench->add_option("--distribution", bo.distribution, "matrix family");
  bench->add_option("--seed", bo.seed, "RNG seed");
  bench->add_option("-o,--output", bo.output, "output path");

  CompareOptions co;
  auto* compare = app.add_subcommand(
      "compare", "retained-weight ratios of methods against pmfg");
  compare->add_option("--distributions", co.distributions,
                      "comma-separated family list");
  compare->add_option("--methods", co.methods, "comma-separated method list");
  compare->add_option("--p", co.p, "single matrix dimension");
  compare->add_option("--sizes", co.sizes, "comma-separated p list (sweep mode)")
      ->delimiter(',');
  compare->add_option("--samples", co.samples, "matrices per (family, size)");
  compare->add_option("--seed", co.seed, "RNG seed");
  compare->add_option("--transform", co.transform,
                      "correlation transform for factor families");
  compare->add_option("-o,--output", co.output, "output path");

  std::string vo_input;
  auto* validate = app.add_subcommand("validate", "check a result JSON file");
  validate->add_option("input", vo_input, "result JSON path")->required();

  int rc = 0;
  filter->callback([&] {
    if (fo.output.empty()) {
      const char* ext = fo.format == "edge-tsv" ? "filter.tsv"
                        : fo.format == "dot"    ? "filter.dot"
                                                : "filter.json";
      fo.output = default_output(ext);
    }
    rc = cmd_filter(fo);
  });
  gen->callback([&] {
    if (go.output.empty()) go.output = default_output("gen.csv");
    rc = cmd_gen(go);
  });
  bench->callback([&] {
    if (bo.output.empty()) bo.output = default_output("bench.tsv");
    rc = cmd_bench(bo);
  });
  compare->callback([&] {
    if (co.output.empty()) co.output = default_output("compare.tsv");
    rc = cmd_compare(co);
  });
  validate->callback([&] { rc = cmd_validate(vo_input); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace tmfg::cli
