#include "tmfg/synth.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "tmfg/io.hpp"
#include "tmfg/rng.hpp"

namespace tmfg {

namespace {

// Substream roles, so adding a draw to one stage never shifts another.
constexpr std::uint64_t kStreamEntries = 0;   // iid upper-triangle families
constexpr std::uint64_t kStreamLoadings = 0;  // factor model
constexpr std::uint64_t kStreamFactors = 1;
constexpr std::uint64_t kStreamNoise = 2;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_spec(std::string_view text) {
  throw std::invalid_argument("unrecognized matrix family: '" + std::string(text) +
                              "' (expected uniform | beta(a,b) | pareto(e) | "
                              "factor(k) | factor(k,q))");
}

double parse_number(std::string_view text, std::string_view whole) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) bad_spec(whole);
  return v;
}

std::vector<std::string_view> split_args(std::string_view inner) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',') {
      out.push_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// One iid nonnegative draw per unordered pair, row-major upper-triangle
// order, mirrored below the diagonal.
template <typename Draw>
std::unique_ptr<WeightOracle> iid_matrix(int p, Draw draw) {
  std::vector<double> m(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const double v = draw();
      m[static_cast<std::size_t>(i) * p + j] = v;
      m[static_cast<std::size_t>(j) * p + i] = v;
    }
  return std::make_unique<DenseWeightOracle>(p, m);
}

void require_dimension(int p) {
  if (p < 4)
    throw std::invalid_argument("matrix dimension must be at least 4, got " +
                                std::to_string(p));
}

}  // namespace

MatrixSpec parse_matrix_spec(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  MatrixSpec spec;
  if (text == "uniform") {
    spec.family = Family::Uniform;
    return spec;
  }
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    bad_spec(whole);
  const auto name = trim(text.substr(0, open));
  const auto args = split_args(text.substr(open + 1, text.size() - open - 2));
  if (name == "beta" && args.size() == 2) {
    spec.family = Family::Beta;
    spec.alpha = parse_number(args[0], whole);
    spec.beta = parse_number(args[1], whole);
  } else if (name == "pareto" && args.size() == 1) {
    spec.family = Family::Pareto;
    spec.exponent = parse_number(args[0], whole);
  } else if (name == "factor" && (args.size() == 1 || args.size() == 2)) {
    spec.family = Family::Factor;
    const double k = parse_number(args[0], whole);
    if (k != static_cast<int>(k)) bad_spec(whole);
    spec.factors = static_cast<int>(k);
    if (args.size() == 2) {
      const double q = parse_number(args[1], whole);
      if (q != static_cast<int>(q)) bad_spec(whole);
      spec.observations = static_cast<int>(q);
    }
  } else {
    bad_spec(whole);
  }
  return spec;
}

std::string family_name(const MatrixSpec& spec) {
  switch (spec.family) {
    case Family::Uniform:
      return "uniform";
    case Family::Beta:
      return "beta(" + format_param(spec.alpha) + "," + format_param(spec.beta) + ")";
    case Family::Pareto:
      return "pareto(" + format_param(spec.exponent) + ")";
    case Family::Factor:
      if (spec.observations == 1000)
        return "factor(" + std::to_string(spec.factors) + ")";
      return "factor(" + std::to_string(spec.factors) + "," +
             std::to_string(spec.observations) + ")";
    case Family::FileMatrix:
      return "file-matrix";
    case Family::FileTimeseries:
      return "file-timeseries";
  }
  throw std::logic_error("unhandled family");
}

std::vector<double> simulate_factor_series(int p, int k, int q,
                                           std::uint64_t seed) {
  if (p < 1) throw std::invalid_argument("variable count must be >= 1");
  if (k < 1) throw std::invalid_argument("factor count must be >= 1");
  if (q < 2) throw std::invalid_argument("series length must be >= 2");
  rng::Sampler loadings_rng(rng::substream_seed(seed, kStreamLoadings));
  rng::Sampler factors_rng(rng::substream_seed(seed, kStreamFactors));
  rng::Sampler noise_rng(rng::substream_seed(seed, kStreamNoise));

  std::vector<double> loadings(static_cast<std::size_t>(p) * k);
  for (auto& v : loadings) v = loadings_rng.normal();
  std::vector<double> factors(static_cast<std::size_t>(k) * q);
  for (auto& v : factors) v = factors_rng.normal();

  std::vector<double> series(static_cast<std::size_t>(q) * p);
  for (int t = 0; t < q; ++t)
    for (int i = 0; i < p; ++i) {
      double x = 0.0;
      for (int f = 0; f < k; ++f)
        x += loadings[static_cast<std::size_t>(i) * k + f] *
             factors[static_cast<std::size_t>(f) * q + t];
      series[static_cast<std::size_t>(t) * p + i] = x + noise_rng.normal();
    }
  return series;
}

std::unique_ptr<WeightOracle> generate(const MatrixSpec& spec) {
  switch (spec.family) {
    case Family::Uniform: {
      require_dimension(spec.p);
      rng::Sampler s(rng::substream_seed(spec.seed, kStreamEntries));
      return iid_matrix(spec.p, [&] { return s.uniform01(); });
    }
    case Family::Beta: {
      require_dimension(spec.p);
      if (!(spec.alpha > 0.0) || !(spec.beta > 0.0))
        throw std::invalid_argument("beta family needs positive shape parameters");
      rng::Sampler s(rng::substream_seed(spec.seed, kStreamEntries));
      return iid_matrix(spec.p, [&] { return s.beta(spec.alpha, spec.beta); });
    }
    case Family::Pareto: {
      require_dimension(spec.p);
      if (!(spec.exponent > 0.0))
        throw std::invalid_argument("pareto family needs a positive exponent");
      rng::Sampler s(rng::substream_seed(spec.seed, kStreamEntries));
      return iid_matrix(spec.p, [&] { return s.pareto(spec.exponent); });
    }
    case Family::Factor: {
      require_dimension(spec.p);
      auto series =
          simulate_factor_series(spec.p, spec.factors, spec.observations, spec.seed);
      TimeSeriesOracle lazy(std::move(series), spec.observations, spec.p,
                            spec.transform);
      return std::make_unique<DenseWeightOracle>(lazy.materialize());
    }
    case Family::FileMatrix: {
      if (spec.path.empty())
        throw std::invalid_argument("file-matrix spec needs a path");
      auto m = io::read_matrix_csv(spec.path);
      if (m.rows != m.cols)
        throw std::runtime_error(spec.path + ": matrix must be square, got " +
                                 std::to_string(m.rows) + "x" +
                                 std::to_string(m.cols));
      require_dimension(m.rows);
      return std::make_unique<DenseWeightOracle>(m.rows, m.data);
    }
    case Family::FileTimeseries: {
      if (spec.path.empty())
        throw std::invalid_argument("file-timeseries spec needs a path");
      auto s = io::read_timeseries_csv(spec.path);
      require_dimension(s.variables);
      return std::make_unique<TimeSeriesOracle>(std::move(s.data), s.observations,
                                                s.variables, spec.transform);
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace tmfg
