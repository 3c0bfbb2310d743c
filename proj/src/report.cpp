#include "zipfben/report.hpp"

#include <array>
#include <fstream>
#include <future>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "text_format.hpp"
#include "zipfben/error.hpp"

namespace zipfben {

namespace {

constexpr std::string_view kAmalgamatedLabel = "(amalgamated)";

constexpr std::array<std::string_view, 10> kSummaryColumns{
    "label",         "total_tokens", "unique_count",  "r_zipf_full",       "r_zipf_dropped",
    "alpha_hat",     "segment_fits", "r_benford",     "pct_leading_1",     "benford_delta_pct"};

// Runs one pipeline stage, prefixing any library error with corpus and stage.
template <typename Fn>
auto stage(std::string_view label, std::string_view name, Fn&& fn) -> decltype(fn()) {
  const auto where = [&](const Error& e) {
    return fmt::format("corpus '{}', stage {}: {}", label, name, e.what());
  };
  try {
    return fn();
  } catch (const DataError& e) {
    throw DataError(where(e));
  } catch (const ConfigError& e) {
    throw ConfigError(where(e));
  } catch (const AnalysisError& e) {
    throw AnalysisError(where(e));
  }
}

std::string json_string(std::string_view text) {
  return nlohmann::json(std::string(text)).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string json_optional(const std::optional<double>& value) {
  return value ? fixed6(*value) : "null";
}

std::string csv_cell(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

std::string tsv_cell(std::string_view text) {
  std::string out;
  for (const char c : text) {
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

std::string segments_cell(const std::optional<std::vector<LogLogFit>>& fits) {
  if (!fits) {
    return {};
  }
  std::string out;
  for (const auto& fit : *fits) {
    if (!out.empty()) {
      out.push_back(';');
    }
    out += fmt::format("{}:{}:{}", fit.window.lo(), fit.window.hi(), fixed6(fit.alpha_hat));
  }
  return out;
}

std::string summary_json(const CorpusSummary& s) {
  std::string segments = "null";
  if (s.segment_fits) {
    segments = "[";
    for (std::size_t i = 0; i < s.segment_fits->size(); ++i) {
      const auto& fit = (*s.segment_fits)[i];
      segments += fmt::format(
          "{}{{\"lo\": {}, \"hi\": {}, \"slope\": {}, \"intercept\": {}, \"r\": {}, \"alpha_hat\": {}}}",
          i == 0 ? "" : ", ", fit.window.lo(), fit.window.hi(), fixed6(fit.slope),
          fixed6(fit.intercept), json_optional(fit.r), fixed6(fit.alpha_hat));
    }
    segments += "]";
  }
  return fmt::format("{{\"label\": {}, \"total_tokens\": {}, \"unique_count\": {}, "
                     "\"r_zipf_full\": {}, \"r_zipf_dropped\": {}, \"alpha_hat\": {}, "
                     "\"segment_fits\": {}, \"r_benford\": {}, \"pct_leading_1\": {}, "
                     "\"benford_delta_pct\": {}}}",
                     json_string(s.label), s.total_tokens, s.unique_count, fixed6(s.r_zipf_full),
                     fixed6(s.r_zipf_dropped), fixed6(s.alpha_hat), segments, fixed6(s.r_benford),
                     fixed6(s.pct_leading_1), fixed6(s.benford_delta_pct));
}

std::string amalgamated_json(const AmalgamatedBenford& a) {
  return fmt::format("{{\"label\": {}, \"n_items\": {}, \"r_benford\": {}, \"pct_leading_1\": {}, "
                     "\"benford_delta_pct\": {}}}",
                     json_string(kAmalgamatedLabel), a.n_items, fixed6(a.r_benford),
                     fixed6(a.pct_leading_1), fixed6(a.benford_delta_pct));
}

std::vector<std::string> summary_cells(const CorpusSummary& s) {
  return {s.label,
          std::to_string(s.total_tokens),
          std::to_string(s.unique_count),
          fixed6(s.r_zipf_full),
          fixed6(s.r_zipf_dropped),
          fixed6(s.alpha_hat),
          segments_cell(s.segment_fits),
          fixed6(s.r_benford),
          fixed6(s.pct_leading_1),
          fixed6(s.benford_delta_pct)};
}

std::vector<std::string> amalgamated_cells(const AmalgamatedBenford& a) {
  return {std::string(kAmalgamatedLabel), "", "", "", "", "", "", fixed6(a.r_benford),
          fixed6(a.pct_leading_1), fixed6(a.benford_delta_pct)};
}

std::string table_line(const std::vector<std::string>& cells, OutputFormat format) {
  const char sep = format == OutputFormat::csv ? ',' : '\t';
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      line.push_back(sep);
    }
    line += format == OutputFormat::csv ? csv_cell(cells[i]) : tsv_cell(cells[i]);
  }
  line.push_back('\n');
  return line;
}

std::string table_header(OutputFormat format) {
  return table_line(std::vector<std::string>(kSummaryColumns.begin(), kSummaryColumns.end()), format);
}

void check_label_is_filename(const std::string& label) {
  if (label.empty() || label == "." || label == ".." || label == "run" ||
      label.find_first_of("/\\") != std::string::npos) {
    throw ConfigError("label '" + label + "' cannot be used as an output file name");
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write " + path.string());
  }
  writer(out);
  out.flush();
  if (!out) {
    throw ConfigError("write failed for " + path.string());
  }
}

} // namespace

OutputFormat parse_format(std::string_view token) {
  if (token == "json") {
    return OutputFormat::json;
  }
  if (token == "csv") {
    return OutputFormat::csv;
  }
  if (token == "tsv") {
    return OutputFormat::tsv;
  }
  throw ConfigError("unknown format '" + std::string(token) + "' (expected json, csv or tsv)");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
  case OutputFormat::json:
    return "json";
  case OutputFormat::csv:
    return "csv";
  case OutputFormat::tsv:
    return "tsv";
  }
  return "json";
}

void AnalysisConfig::validate() const {
  if (!(alpha > 0.0)) {
    throw ConfigError("alpha must be positive");
  }
  if (dropped_window.lo() <= drop_k) {
    throw ConfigError(fmt::format("dropped window {} starts inside the {} eliminated ranks",
                                  to_string(dropped_window), drop_k));
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= breakpoints[i - 1]) {
      throw ConfigError("breakpoints must be strictly ascending");
    }
  }
}

CorpusAnalysis analyze_stream(std::string label, const TokenStream& stream,
                              const AnalysisConfig& config) {
  config.validate();
  CorpusAnalysis out;
  auto& s = out.summary;
  s.label = std::move(label);
  out.table = stage(s.label, "build_frequency_table", [&] { return build_frequency_table(stream); });
  s.total_tokens = out.table.total_tokens();
  s.unique_count = out.table.unique_count();
  if (out.table.empty()) {
    throw AnalysisError(fmt::format("corpus '{}', stage build_frequency_table: no tokens", s.label));
  }
  const auto full = out.table.view();
  const auto curve = stage(s.label, "zipf_curve", [&] { return zipf_curve(s.unique_count, config.alpha); });
  s.r_zipf_full = stage(s.label, "zipf_correlation(full)",
                        [&] { return zipf_correlation(full, curve, config.full_window).r; });
  const auto dropped = stage(s.label, "drop_top", [&] { return drop_top(full, config.drop_k); });
  s.r_zipf_dropped = stage(s.label, "zipf_correlation(dropped)",
                           [&] { return zipf_correlation(dropped, curve, config.dropped_window).r; });
  out.dropped_fit = stage(s.label, "loglog_fit", [&] { return loglog_fit(dropped, config.dropped_window); });
  s.alpha_hat = out.dropped_fit.alpha_hat;
  if (!config.breakpoints.empty()) {
    s.segment_fits = stage(s.label, "fit_segments", [&] { return fit_segments(full, config.breakpoints); });
  }
  stage(s.label, "benford_correlation", [&] {
    const auto all_counts = full.counts();
    const auto dropped_counts = dropped.counts();
    s.histogram = digit_histogram(all_counts);
    s.dropped_histogram = digit_histogram(dropped_counts);
    const auto benford = benford_correlation(s.histogram);
    s.r_benford = benford.r;
    s.pct_leading_1 = benford.pct_leading_1;
  });
  s.benford_delta_pct = stage(s.label, "elimination_sensitivity", [&] {
    return elimination_sensitivity(full, config.drop_k).relative_delta_pct;
  });
  return out;
}

CorpusAnalysis analyze(const CorpusSpec& spec, const AnalysisConfig& config) {
  const auto text = stage(spec.label, "load_corpus", [&] { return load_corpus(spec); });
  const auto stream = stage(spec.label, "tokenize", [&] { return tokenize(text, spec.mode, config.fold); });
  return analyze_stream(spec.label, stream, config);
}

std::vector<CorpusAnalysis> analyze_all(const std::vector<CorpusSpec>& specs,
                                        const AnalysisConfig& config) {
  std::vector<std::future<CorpusAnalysis>> pending;
  pending.reserve(specs.size());
  for (const auto& spec : specs) {
    pending.push_back(std::async(std::launch::async, [&spec, &config] { return analyze(spec, config); }));
  }
  std::vector<CorpusAnalysis> results;
  results.reserve(specs.size());
  // get() in manifest order: the first failing corpus in that order is reported.
  for (auto& f : pending) {
    results.push_back(f.get());
  }
  return results;
}

RunReport summarize_run(std::vector<CorpusSummary> summaries) {
  if (summaries.empty()) {
    throw ConfigError("run summary: no corpora");
  }
  std::vector<DigitHistogram> full;
  std::vector<DigitHistogram> dropped;
  for (const auto& s : summaries) {
    full.push_back(s.histogram);
    dropped.push_back(s.dropped_histogram);
  }
  AmalgamatedBenford a;
  a.histogram = amalgamate(full);
  a.n_items = a.histogram.n_items;
  const auto result = benford_correlation(a.histogram);
  a.r_benford = result.r;
  a.pct_leading_1 = result.pct_leading_1;
  const double r_dropped = benford_correlation(amalgamate(dropped)).r;
  a.benford_delta_pct = 100.0 * (r_dropped - a.r_benford) / a.r_benford;
  return {std::move(summaries), std::move(a)};
}

std::string emit(const CorpusSummary& summary, OutputFormat format) {
  if (format == OutputFormat::json) {
    return summary_json(summary) + "\n";
  }
  return table_header(format) + table_line(summary_cells(summary), format);
}

std::string emit(const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    std::string out = "{\"corpora\": [";
    for (std::size_t i = 0; i < report.corpora.size(); ++i) {
      out += (i == 0 ? "" : ", ") + summary_json(report.corpora[i]);
    }
    out += "], \"amalgamated\": ";
    out += report.amalgamated ? amalgamated_json(*report.amalgamated) : "null";
    out += "}\n";
    return out;
  }
  std::string out = table_header(format);
  for (const auto& s : report.corpora) {
    out += table_line(summary_cells(s), format);
  }
  if (report.amalgamated) {
    out += table_line(amalgamated_cells(*report.amalgamated), format);
  }
  return out;
}

void write_artifacts(const std::filesystem::path& dir, const CorpusAnalysis& analysis,
                     const AnalysisConfig& config) {
  const auto& s = analysis.summary;
  check_label_is_filename(s.label);
  std::filesystem::create_directories(dir);
  const auto full = analysis.table.view();
  const auto curve = zipf_curve(s.unique_count, config.alpha);
  const auto dropped = drop_top(full, config.drop_k);

  write_file(dir / fmt::format("{}.summary.{}", s.label, to_string(config.output_format)),
             [&](std::ostream& out) { out << emit(s, config.output_format); });
  write_file(dir / (s.label + ".rankfreq.tsv"), [&](std::ostream& out) { write_rankfreq_tsv(out, full); });
  write_file(dir / (s.label + ".loglog.tsv"),
             [&](std::ostream& out) { write_loglog_tsv(out, dropped, analysis.dropped_fit); });
  write_file(dir / (s.label + ".digits.tsv"),
             [&](std::ostream& out) { write_digits_tsv(out, s.histogram); });
  write_file(dir / (s.label + ".zipf_full.tsv"),
             [&](std::ostream& out) { write_zipf_tsv(out, full, curve, config.full_window); });
  write_file(dir / (s.label + ".zipf_dropped.tsv"),
             [&](std::ostream& out) { write_zipf_tsv(out, dropped, curve, config.dropped_window); });
  if (s.segment_fits) {
    for (std::size_t i = 0; i < s.segment_fits->size(); ++i) {
      write_file(dir / fmt::format("{}.segment{}.loglog.tsv", s.label, i + 1),
                 [&](std::ostream& out) { write_loglog_tsv(out, full, (*s.segment_fits)[i]); });
    }
  }
}

void write_run_report(const std::filesystem::path& dir, const RunReport& report, OutputFormat format) {
  std::filesystem::create_directories(dir);
  write_file(dir / fmt::format("run.summary.{}", to_string(format)),
             [&](std::ostream& out) { out << emit(report, format); });
}

} // namespace zipfben
