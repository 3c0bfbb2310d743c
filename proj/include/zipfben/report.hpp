#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zipfben/benford.hpp"
#include "zipfben/corpus_io.hpp"
#include "zipfben/freq_table.hpp"
#include "zipfben/powerlaw_fit.hpp"
#include "zipfben/tokenizer.hpp"
#include "zipfben/zipf_fit.hpp"

namespace zipfben {

enum class OutputFormat { json, csv, tsv };

OutputFormat parse_format(std::string_view token);
std::string_view to_string(OutputFormat format);

/// Pipeline parameters. The defaults follow the published protocol: drop
/// the ten most frequent EUs, correlate on ranks 1..100 and 11..110 against
/// the alpha = 1 curve.
struct AnalysisConfig {
  std::size_t drop_k = 10;
  RankWindow full_window{1, 100};
  RankWindow dropped_window{11, 110};
  double alpha = 1.0;
  std::vector<std::size_t> breakpoints;
  Fold fold = Fold::upper;
  OutputFormat output_format = OutputFormat::json;

  /// Throws ConfigError when the dropped window reaches into dropped ranks,
  /// alpha is not positive, or breakpoints are not ascending.
  void validate() const;
};

struct CorpusSummary {
  std::string label;
  Count total_tokens = 0;
  std::size_t unique_count = 0;
  double r_zipf_full = 0.0;
  double r_zipf_dropped = 0.0;
  double alpha_hat = 0.0;
  std::optional<std::vector<LogLogFit>> segment_fits;
  double r_benford = 0.0;
  double pct_leading_1 = 0.0;
  double benford_delta_pct = 0.0;

  // Retained for run-level amalgamation; not emitted.
  DigitHistogram histogram;
  DigitHistogram dropped_histogram;
};

/// Everything computed for one corpus; the plot files are written from it.
struct CorpusAnalysis {
  CorpusSummary summary;
  FrequencyTable table;
  LogLogFit dropped_fit;
};

/// Runs tokenized input through the statistics stages. Errors are rethrown
/// with the corpus label and stage name prepended, keeping their category.
CorpusAnalysis analyze_stream(std::string label, const TokenStream& stream,
                              const AnalysisConfig& config);

/// load -> tokenize -> analyze_stream.
CorpusAnalysis analyze(const CorpusSpec& spec, const AnalysisConfig& config);

/// Analyzes all corpora concurrently; results come back in input order.
std::vector<CorpusAnalysis> analyze_all(const std::vector<CorpusSpec>& specs,
                                        const AnalysisConfig& config);

struct AmalgamatedBenford {
  DigitHistogram histogram;
  std::uint64_t n_items = 0;
  double r_benford = 0.0;
  double pct_leading_1 = 0.0;
  double benford_delta_pct = 0.0;
};

struct RunReport {
  std::vector<CorpusSummary> corpora;
  std::optional<AmalgamatedBenford> amalgamated;
};

/// Per-corpus rows plus one Benford row over the amalgamated histograms.
/// Throws ConfigError for an empty sequence.
RunReport summarize_run(std::vector<CorpusSummary> summaries);

/// Deterministic rendering. JSON keys follow CorpusSummary's field order;
/// CSV/TSV carry a header row. Reals use six decimals.
std::string emit(const CorpusSummary& summary, OutputFormat format);
std::string emit(const RunReport& report, OutputFormat format);

/// Writes <label>.summary.<fmt>, <label>.rankfreq.tsv, <label>.loglog.tsv,
/// <label>.digits.tsv, and, for segment fits, <label>.segment<i>.loglog.tsv;
/// plus Zipf plot data <label>.zipf_full.tsv and <label>.zipf_dropped.tsv.
void write_artifacts(const std::filesystem::path& dir, const CorpusAnalysis& analysis,
                     const AnalysisConfig& config);

/// Writes run.summary.<fmt>.
void write_run_report(const std::filesystem::path& dir, const RunReport& report, OutputFormat format);

} // namespace zipfben
