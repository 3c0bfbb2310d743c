#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zipfben/tokenizer.hpp"

namespace zipfben {

using Count = std::uint64_t;

struct FrequencyEntry {
  std::string eu;
  Count count = 0;

  friend bool operator==(const FrequencyEntry&, const FrequencyEntry&) = default;
};

/// Inclusive 1-based rank interval.
class RankWindow {
public:
  RankWindow(std::size_t lo, std::size_t hi);

  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }
  std::size_t size() const { return hi_ - lo_ + 1; }

  friend bool operator==(const RankWindow&, const RankWindow&) = default;

private:
  std::size_t lo_;
  std::size_t hi_;
};

/// Parses "LO:HI".
RankWindow parse_window(std::string_view text);
std::string to_string(const RankWindow& window);

/// Read-only view over consecutive ranks of a frequency table.
///
/// Ranks keep their original labels and frequencies keep the original
/// denominator, so a view produced by drop_top is directly comparable with
/// the full table.
class RankedView {
public:
  RankedView(std::span<const FrequencyEntry> entries, std::size_t first_rank, Count total_tokens)
      : entries_(entries), first_rank_(first_rank), total_tokens_(total_tokens) {}

  std::size_t first_rank() const { return first_rank_; }
  /// Highest rank present, or first_rank() - 1 when empty.
  std::size_t last_rank() const { return first_rank_ + entries_.size() - 1; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Count total_tokens() const { return total_tokens_; }
  std::span<const FrequencyEntry> entries() const { return entries_; }

  const FrequencyEntry& at_rank(std::size_t rank) const;
  Count count(std::size_t rank) const { return at_rank(rank).count; }
  double frequency(std::size_t rank) const;

  /// Throws AnalysisError unless every rank of `window` is present.
  void require(const RankWindow& window) const;

  /// Frequencies over `window`, one entry per rank.
  Eigen::VectorXd frequencies(const RankWindow& window) const;

  std::vector<Count> counts() const;

private:
  std::span<const FrequencyEntry> entries_;
  std::size_t first_rank_;
  Count total_tokens_;
};

/// Ranked EU counts. Entries are sorted by count descending, ties by EU in
/// ascending code point order.
class FrequencyTable {
public:
  FrequencyTable() = default;

  /// Takes unordered (eu, count) pairs; EUs must be distinct and counts >= 1.
  static FrequencyTable from_counts(std::vector<FrequencyEntry> entries);

  const std::vector<FrequencyEntry>& entries() const { return entries_; }
  Count total_tokens() const { return total_tokens_; }
  std::size_t unique_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double frequency(std::size_t rank) const { return view().frequency(rank); }
  RankedView view() const { return RankedView(entries_, 1, total_tokens_); }
  operator RankedView() const { return view(); }

private:
  std::vector<FrequencyEntry> entries_;
  Count total_tokens_ = 0;
};

FrequencyTable build_frequency_table(const TokenStream& stream);

/// Ranks k+1..N of `view`, frequencies not renormalized.
/// Throws AnalysisError when k >= number of ranks in the view.
RankedView drop_top(const RankedView& view, std::size_t k);

/// TSV with header `rank eu count frequency`. Tabs, newlines and
/// backslashes inside an EU are written as \t, \n, \r and \\.
void write_rankfreq_tsv(std::ostream& out, const RankedView& view);
void write_rankfreq_tsv(const std::filesystem::path& path, const RankedView& view);

/// Reads a file produced by write_rankfreq_tsv back into a table.
FrequencyTable read_rankfreq_tsv(std::istream& in);

} // namespace zipfben
