#include "zipfben/benford.hpp"

#include <ostream>

#include <fmt/format.h>

#include "text_format.hpp"
#include "zipfben/error.hpp"
#include "zipfben/stats.hpp"

namespace zipfben {

int leading_digit(std::uint64_t x) {
  if (x == 0) {
    throw AnalysisError("leading digit: value must be positive");
  }
  while (x >= 10) {
    x /= 10;
  }
  return static_cast<int>(x);
}

DigitVector<double> DigitHistogram::proportions() const {
  DigitVector<double> p;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = static_cast<double>(counts[i]) / static_cast<double>(n_items);
  }
  return p;
}

DigitHistogram& DigitHistogram::operator+=(const DigitHistogram& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    counts[i] += other.counts[i];
  }
  n_items += other.n_items;
  return *this;
}

DigitHistogram digit_histogram(std::span<const std::uint64_t> values) {
  DigitHistogram hist;
  for (const auto v : values) {
    ++hist.counts[static_cast<std::size_t>(leading_digit(v) - 1)];
  }
  hist.n_items = values.size();
  return hist;
}

BenfordResult benford_correlation(const DigitHistogram& hist) {
  if (hist.n_items == 0) {
    throw AnalysisError("Benford correlation: empty histogram");
  }
  BenfordResult result{hist.proportions(), benford_probabilities<double>(), 0.0, 0.0};
  result.r = pearson(result.empirical, result.theoretical);
  result.pct_leading_1 = 100.0 * result.empirical(0);
  return result;
}

DigitHistogram amalgamate(std::span<const DigitHistogram> histograms) {
  if (histograms.empty()) {
    throw ConfigError("amalgamate: no histograms given");
  }
  DigitHistogram total;
  for (const auto& h : histograms) {
    total += h;
  }
  return total;
}

EliminationSensitivity elimination_sensitivity(const RankedView& table, std::size_t k) {
  const auto dropped = drop_top(table, k);
  const auto all = table.counts();
  const auto rest = dropped.counts();
  EliminationSensitivity out{};
  out.r_full = benford_correlation(digit_histogram(all)).r;
  out.r_dropped = k == 0 ? out.r_full : benford_correlation(digit_histogram(rest)).r;
  out.relative_delta_pct = 100.0 * (out.r_dropped - out.r_full) / out.r_full;
  return out;
}

void write_digits_tsv(std::ostream& out, const DigitHistogram& hist) {
  const auto theoretical = benford_probabilities<double>();
  out << "digit\tempirical_proportion\tbenford_proportion\n";
  for (int d = 1; d <= 9; ++d) {
    const double empirical =
        hist.n_items == 0 ? 0.0 : static_cast<double>(hist.count(d)) / static_cast<double>(hist.n_items);
    out << fmt::format("{}\t{}\t{}\n", d, fixed6(empirical), fixed6(theoretical(d - 1)));
  }
}

} // namespace zipfben
