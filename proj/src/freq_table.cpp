#include "zipfben/freq_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "text_format.hpp"

#include "zipfben/error.hpp"

namespace zipfben {

namespace {

std::size_t parse_rank(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid rank '" + std::string(text) + "'");
  }
  return value;
}

std::string escape_eu(std::string_view eu) {
  std::string out;
  out.reserve(eu.size());
  for (const char c : eu) {
    switch (c) {
    case '\t':
      out += "\\t";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\r':
      out += "\\r";
      break;
    case '\\':
      out += "\\\\";
      break;
    default:
      out.push_back(c);
    }
  }
  return out;
}

std::string unescape_eu(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
    case 't':
      out.push_back('\t');
      break;
    case 'n':
      out.push_back('\n');
      break;
    case 'r':
      out.push_back('\r');
      break;
    default:
      out.push_back(text[i]);
    }
  }
  return out;
}

} // namespace

RankWindow::RankWindow(std::size_t lo, std::size_t hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || hi < lo) {
    throw ConfigError(fmt::format("invalid rank window [{}, {}]: need 1 <= lo <= hi", lo, hi));
  }
}

RankWindow parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("rank window must look like LO:HI, got '" + std::string(text) + "'");
  }
  return RankWindow(parse_rank(text.substr(0, colon)), parse_rank(text.substr(colon + 1)));
}

std::string to_string(const RankWindow& window) {
  return fmt::format("[{}, {}]", window.lo(), window.hi());
}

const FrequencyEntry& RankedView::at_rank(std::size_t rank) const {
  if (rank < first_rank_ || rank > last_rank() || entries_.empty()) {
    throw AnalysisError(fmt::format("rank {} not present (available {}..{})", rank, first_rank_,
                                    last_rank()));
  }
  return entries_[rank - first_rank_];
}

double RankedView::frequency(std::size_t rank) const {
  return static_cast<double>(count(rank)) / static_cast<double>(total_tokens_);
}

void RankedView::require(const RankWindow& window) const {
  if (entries_.empty() || window.lo() < first_rank_ || window.hi() > last_rank()) {
    throw AnalysisError(fmt::format("window {} exceeds table ranks {}..{}", to_string(window),
                                    first_rank_, entries_.empty() ? first_rank_ - 1 : last_rank()));
  }
}

Eigen::VectorXd RankedView::frequencies(const RankWindow& window) const {
  require(window);
  Eigen::VectorXd out(static_cast<Eigen::Index>(window.size()));
  for (std::size_t rank = window.lo(); rank <= window.hi(); ++rank) {
    out(static_cast<Eigen::Index>(rank - window.lo())) = frequency(rank);
  }
  return out;
}

std::vector<Count> RankedView::counts() const {
  std::vector<Count> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back(e.count);
  }
  return out;
}

FrequencyTable FrequencyTable::from_counts(std::vector<FrequencyEntry> entries) {
  std::unordered_set<std::string_view> seen;
  FrequencyTable table;
  for (const auto& e : entries) {
    if (e.count == 0) {
      throw AnalysisError("frequency table: count for '" + e.eu + "' must be positive");
    }
    if (!seen.insert(e.eu).second) {
      throw AnalysisError("frequency table: duplicate EU '" + e.eu + "'");
    }
    table.total_tokens_ += e.count;
  }
  std::sort(entries.begin(), entries.end(), [](const FrequencyEntry& a, const FrequencyEntry& b) {
    return a.count != b.count ? a.count > b.count : a.eu < b.eu;
  });
  table.entries_ = std::move(entries);
  return table;
}

FrequencyTable build_frequency_table(const TokenStream& stream) {
  std::unordered_map<std::string_view, Count> counts;
  for (const auto& token : stream.tokens) {
    ++counts[token];
  }
  std::vector<FrequencyEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [eu, count] : counts) {
    entries.push_back({std::string(eu), count});
  }
  return FrequencyTable::from_counts(std::move(entries));
}

RankedView drop_top(const RankedView& view, std::size_t k) {
  if (k >= view.size()) {
    throw AnalysisError(fmt::format("cannot drop top {} of {} ranks", k, view.size()));
  }
  return RankedView(view.entries().subspan(k), view.first_rank() + k, view.total_tokens());
}

void write_rankfreq_tsv(std::ostream& out, const RankedView& view) {
  out << "rank\teu\tcount\tfrequency\n";
  std::size_t rank = view.first_rank();
  for (const auto& e : view.entries()) {
    const double f = static_cast<double>(e.count) / static_cast<double>(view.total_tokens());
    out << fmt::format("{}\t{}\t{}\t{}\n", rank, escape_eu(e.eu), e.count, fixed6(f));
    ++rank;
  }
}

void write_rankfreq_tsv(const std::filesystem::path& path, const RankedView& view) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write " + path.string());
  }
  write_rankfreq_tsv(out, view);
}

FrequencyTable read_rankfreq_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "rank\teu\tcount\tfrequency") {
    throw DataError("rank/frequency TSV: missing header");
  }
  std::vector<FrequencyEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const auto t3 = line.find('\t', t2 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos || t3 == std::string::npos) {
      throw DataError("rank/frequency TSV: malformed row '" + line + "'");
    }
    const std::string_view view(line);
    FrequencyEntry entry{unescape_eu(view.substr(t1 + 1, t2 - t1 - 1)), 0};
    const auto count_text = view.substr(t2 + 1, t3 - t2 - 1);
    const auto [ptr, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), entry.count);
    if (ec != std::errc{} || ptr != count_text.data() + count_text.size()) {
      throw DataError("rank/frequency TSV: bad count in '" + line + "'");
    }
    entries.push_back(std::move(entry));
  }
  return FrequencyTable::from_counts(std::move(entries));
}

} // namespace zipfben
