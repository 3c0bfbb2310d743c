#include "zipfben/powerlaw_fit.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "text_format.hpp"

#include "zipfben/stats.hpp"

namespace zipfben {

double LogLogFit::fitted(std::size_t rank) const {
  return intercept + slope * std::log(static_cast<double>(rank));
}

LogLogFit loglog_fit(const RankedView& table, const RankWindow& window) {
  if (window.size() < 2) {
    throw AnalysisError("log-log fit: window " + to_string(window) + " holds fewer than two ranks");
  }
  table.require(window);
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::VectorXd ln_rank(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    ln_rank(i) = std::log(static_cast<double>(window.lo() + static_cast<std::size_t>(i)));
  }
  const Eigen::VectorXd ln_freq = table.frequencies(window).array().log().matrix();
  const auto line = ols_line(ln_rank, ln_freq);
  return {window, line.slope, line.intercept, line.r, std::abs(line.slope)};
}

std::vector<LogLogFit> fit_segments(const RankedView& table, std::span<const std::size_t> breakpoints) {
  if (breakpoints.empty()) {
    throw ConfigError("segment fit: at least one breakpoint is required");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= breakpoints[i - 1]) {
      throw ConfigError("segment fit: breakpoints must be strictly ascending");
    }
  }
  if (breakpoints.front() < table.first_rank() || breakpoints.back() > table.last_rank()) {
    throw AnalysisError(fmt::format("segment fit: breakpoints outside table ranks {}..{}",
                                    table.first_rank(), table.last_rank()));
  }
  std::vector<LogLogFit> fits;
  if (breakpoints.size() == 1) {
    fits.push_back(loglog_fit(table, RankWindow(table.first_rank(), breakpoints.front())));
    return fits;
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const auto lo = i == 1 ? breakpoints[0] : breakpoints[i - 1] + 1;
    fits.push_back(loglog_fit(table, RankWindow(lo, breakpoints[i])));
  }
  return fits;
}

std::vector<std::size_t> parse_breakpoints(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw ConfigError("invalid breakpoint '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

void write_loglog_tsv(std::ostream& out, const RankedView& table, const LogLogFit& fit) {
  out << "ln_rank\tln_frequency\tfitted_value\n";
  for (std::size_t rank = fit.window.lo(); rank <= fit.window.hi(); ++rank) {
    out << fmt::format("{}\t{}\t{}\n", fixed6(std::log(static_cast<double>(rank))),
                       fixed6(std::log(table.frequency(rank))), fixed6(fit.fitted(rank)));
  }
}

} // namespace zipfben
