#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>

#include <Eigen/Core>

#include "zipfben/freq_table.hpp"

namespace zipfben {

template <typename Scalar>
using DigitVector = Eigen::Matrix<Scalar, 9, 1>;

/// P(d) = log10(1 + 1/d) for d = 1..9, entry d-1.
template <typename Scalar = double>
DigitVector<Scalar> benford_probabilities() {
  DigitVector<Scalar> p;
  for (int d = 1; d <= 9; ++d) {
    using std::log10;
    p(d - 1) = log10(Scalar(1) + Scalar(1) / Scalar(d));
  }
  return p;
}

/// First decimal digit of a positive integer.
int leading_digit(std::uint64_t x);

/// Leading-digit counts; counts[d - 1] holds digit d.
struct DigitHistogram {
  std::array<std::uint64_t, 9> counts{};
  std::uint64_t n_items = 0;

  std::uint64_t count(int digit) const { return counts.at(static_cast<std::size_t>(digit - 1)); }
  DigitVector<double> proportions() const;

  DigitHistogram& operator+=(const DigitHistogram& other);
  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;
};

/// Throws AnalysisError if any value is zero.
DigitHistogram digit_histogram(std::span<const std::uint64_t> values);

struct BenfordResult {
  DigitVector<double> empirical;
  DigitVector<double> theoretical;
  double r;
  double pct_leading_1;
};

/// Correlation between the empirical digit proportions and Benford's law.
/// Throws AnalysisError for an empty histogram and UndefinedCorrelation when
/// the proportions are all equal.
BenfordResult benford_correlation(const DigitHistogram& hist);

/// Componentwise sum; throws ConfigError for an empty sequence.
DigitHistogram amalgamate(std::span<const DigitHistogram> histograms);

struct EliminationSensitivity {
  double r_full;
  double r_dropped;
  /// 100 * (r_dropped - r_full) / r_full
  double relative_delta_pct;
};

/// Benford correlation of all counts against that of ranks k+1..N.
EliminationSensitivity elimination_sensitivity(const RankedView& table, std::size_t k);

/// Fig. 8 style data: digit, empirical_proportion, benford_proportion.
void write_digits_tsv(std::ostream& out, const DigitHistogram& hist);

} // namespace zipfben
