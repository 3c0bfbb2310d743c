#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "zipfben/freq_table.hpp"

namespace zipfben {

/// OLS line through (ln n, ln f(n)) over a rank window.
struct LogLogFit {
  RankWindow window{1, 1};
  double slope = 0.0;
  double intercept = 0.0;
  /// Correlation of the regression; absent when ln f is constant on the window.
  std::optional<double> r;
  /// Estimated exponent, |slope|.
  double alpha_hat = 0.0;

  double fitted(std::size_t rank) const;
};

LogLogFit loglog_fit(const RankedView& table, const RankWindow& window);

/// Fits consecutive windows cut at `breakpoints`.
///
/// With two or more breakpoints b0 < b1 < ... < bk the windows are
/// [b0, b1], [b1 + 1, b2], ..., [b(k-1) + 1, bk]. A single breakpoint b
/// gives one window from the view's first rank to b.
std::vector<LogLogFit> fit_segments(const RankedView& table, std::span<const std::size_t> breakpoints);

/// Parses "a,b,c" into ranks.
std::vector<std::size_t> parse_breakpoints(std::string_view text);

/// Plot data: ln_rank, ln_frequency, fitted_value for each rank of the fit window.
void write_loglog_tsv(std::ostream& out, const RankedView& table, const LogLogFit& fit);

} // namespace zipfben
