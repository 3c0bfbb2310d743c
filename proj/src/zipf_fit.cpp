#include "zipfben/zipf_fit.hpp"

#include <ostream>
#include <random>

#include <fmt/format.h>

#include "text_format.hpp"

namespace zipfben {

namespace {

std::string synthetic_label(std::size_t rank) { return fmt::format("w{:06d}", rank); }

FrequencyTable round_expected(const std::vector<double>& expected) {
  std::vector<FrequencyEntry> entries;
  entries.reserve(expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto rounded = std::llround(expected[i]);
    entries.push_back({synthetic_label(i + 1), static_cast<Count>(std::max<long long>(1, rounded))});
  }
  return FrequencyTable::from_counts(std::move(entries));
}

void check_sample_args(std::size_t n, Count total) {
  if (n == 0) {
    throw ConfigError("sampler: N must be at least 1");
  }
  if (total < n) {
    throw ConfigError(fmt::format("sampler: total {} is smaller than N {}", total, n));
  }
}

} // namespace

ZipfFitResult zipf_correlation(const RankedView& table, const ZipfCurve& curve,
                               const RankWindow& window) {
  if (window.size() < 2) {
    throw AnalysisError("Zipf correlation: window " + to_string(window) +
                        " holds fewer than two ranks");
  }
  table.require(window);
  if (window.hi() > curve.n()) {
    throw AnalysisError(fmt::format("Zipf correlation: window {} exceeds curve ranks 1..{}",
                                    to_string(window), curve.n()));
  }
  const double r = pearson(table.frequencies(window), curve.predicted(window));
  return {window, r, curve};
}

void write_zipf_tsv(std::ostream& out, const RankedView& table, const ZipfCurve& curve,
                    const RankWindow& window) {
  table.require(window);
  out << "rank\tactual_frequency\tpredicted_frequency\n";
  for (std::size_t rank = window.lo(); rank <= window.hi(); ++rank) {
    out << fmt::format("{}\t{}\t{}\n", rank, fixed6(table.frequency(rank)), fixed6(curve.predicted(rank)));
  }
}

FrequencyTable sample_zipf_table(std::size_t n, Count total, double alpha, std::uint64_t seed,
                                 double noise) {
  check_sample_args(n, total);
  const ZipfCurve curve(n, alpha);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> expected(n);
  for (std::size_t rank = 1; rank <= n; ++rank) {
    double value = static_cast<double>(total) * curve.predicted(rank);
    if (noise > 0.0) {
      value *= std::exp(noise * normal(rng));
    }
    expected[rank - 1] = value;
  }
  return round_expected(expected);
}

FrequencyTable sample_piecewise_table(std::size_t n, Count total,
                                      std::span<const PowerSegment> segments) {
  check_sample_args(n, total);
  if (segments.empty() || segments.front().from != 1) {
    throw ConfigError("piecewise sampler: first regime must start at rank 1");
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].alpha > 0.0)) {
      throw ConfigError("piecewise sampler: exponents must be positive");
    }
    if (i > 0 && segments[i].from <= segments[i - 1].from) {
      throw ConfigError("piecewise sampler: regimes must start at ascending ranks");
    }
  }
  // Unnormalized shape, continuous at every regime boundary.
  std::vector<double> shape(n);
  std::size_t seg = 0;
  double anchor_value = 1.0;
  std::size_t anchor_rank = 1;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    if (seg + 1 < segments.size() && rank == segments[seg + 1].from) {
      anchor_value = shape[rank - 2];
      anchor_rank = rank - 1;
      ++seg;
    }
    shape[rank - 1] = anchor_value * std::pow(static_cast<double>(anchor_rank) / rank, segments[seg].alpha);
  }
  double sum = 0.0;
  for (auto it = shape.rbegin(); it != shape.rend(); ++it) {
    sum += *it;
  }
  for (auto& value : shape) {
    value *= static_cast<double>(total) / sum;
  }
  return round_expected(shape);
}

TokenStream expand_to_stream(const FrequencyTable& table, std::uint64_t seed) {
  TokenStream stream;
  stream.tokens.reserve(table.total_tokens());
  for (const auto& e : table.entries()) {
    stream.tokens.insert(stream.tokens.end(), e.count, e.eu);
  }
  // Fisher-Yates with modulo draws so the order only depends on mt19937_64.
  std::mt19937_64 rng(seed);
  for (std::size_t i = stream.tokens.size(); i > 1; --i) {
    std::swap(stream.tokens[i - 1], stream.tokens[rng() % i]);
  }
  return stream;
}

} // namespace zipfben
