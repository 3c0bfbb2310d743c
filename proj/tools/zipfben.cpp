// zipfben: Zipf rank-frequency and Benford leading-digit statistics for
// natural-language and source-code corpora.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "zipfben/benford.hpp"
#include "zipfben/error.hpp"
#include "zipfben/report.hpp"
#include "zipfben/zipf_fit.hpp"

namespace {

namespace zb = zipfben;

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kAnalysis = 3 };

struct AnalyzeOptions {
  std::string manifest;
  std::string input;
  std::string mode;
  std::string encoding = "utf8";
  std::string label;
  std::size_t drop_k = 10;
  std::string full_window = "1:100";
  std::string dropped_window;
  double alpha = 1.0;
  std::string breakpoints;
  std::string fold = "upper";
  std::string format = "json";
  std::string out_dir = ".";
  bool dump_tokens = false;
};

struct SynthOptions {
  std::size_t n = 0;
  zb::Count total = 0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  double noise = 0.0;
  std::string out;
};

struct DigitsOptions {
  std::string input;
  std::string format = "tsv";
};

zb::AnalysisConfig make_config(const AnalyzeOptions& opt) {
  zb::AnalysisConfig config;
  config.drop_k = opt.drop_k;
  config.full_window = zb::parse_window(opt.full_window);
  // Without an explicit window the dropped fit covers the hundred ranks after
  // the eliminated ones.
  config.dropped_window = opt.dropped_window.empty()
                              ? zb::RankWindow(opt.drop_k + 1, opt.drop_k + 100)
                              : zb::parse_window(opt.dropped_window);
  config.alpha = opt.alpha;
  if (!opt.breakpoints.empty()) {
    config.breakpoints = zb::parse_breakpoints(opt.breakpoints);
  }
  config.fold = zb::parse_fold(opt.fold);
  config.output_format = zb::parse_format(opt.format);
  config.validate();
  return config;
}

int run_analyze(const AnalyzeOptions& opt) {
  const auto config = make_config(opt);
  std::vector<zb::CorpusSpec> specs;
  if (!opt.manifest.empty()) {
    specs = zb::parse_manifest(opt.manifest);
  } else {
    zb::CorpusSpec spec;
    spec.path = opt.input;
    spec.label = opt.label.empty() ? spec.path.stem().string() : opt.label;
    spec.mode = zb::parse_mode(opt.mode);
    spec.encoding = zb::parse_encoding(opt.encoding);
    specs.push_back(std::move(spec));
  }

  if (opt.dump_tokens) {
    for (const auto& spec : specs) {
      const auto stream = zb::tokenize(zb::load_corpus(spec), spec.mode, config.fold);
      for (const auto& token : stream.tokens) {
        std::cout << token << '\n';
      }
    }
    return kOk;
  }

  const auto analyses = zb::analyze_all(specs, config);
  zb::RunReport report;
  if (!analyses.empty()) {
    std::vector<zb::CorpusSummary> summaries;
    for (const auto& a : analyses) {
      zb::write_artifacts(opt.out_dir, a, config);
      summaries.push_back(a.summary);
    }
    report = zb::summarize_run(std::move(summaries));
  }
  zb::write_run_report(opt.out_dir, report, config.output_format);
  std::cout << zb::emit(report, config.output_format);
  return kOk;
}

int run_synth(const SynthOptions& opt) {
  const auto table = zb::sample_zipf_table(opt.n, opt.total, opt.alpha, opt.seed, opt.noise);
  const auto stream = zb::expand_to_stream(table, opt.seed);
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) {
    throw zb::ConfigError("cannot write " + opt.out);
  }
  for (const auto& token : stream.tokens) {
    out << token << '\n';
  }
  return kOk;
}

std::vector<std::uint64_t> read_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw zb::DataError("cannot read " + path);
  }
  std::vector<std::uint64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view item(line.data() + first, last - first + 1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw zb::DataError(fmt::format("{}:{}: expected a positive integer, got '{}'", path, line_no, item));
    }
    values.push_back(value);
  }
  return values;
}

int run_digits(const DigitsOptions& opt) {
  const auto values = read_counts(opt.input);
  const auto hist = zb::digit_histogram(values);
  const auto result = zb::benford_correlation(hist);
  if (opt.format == "json") {
    std::cout << fmt::format("{{\"n_items\": {}, \"r_benford\": {:.6f}, \"pct_leading_1\": {:.6f}, "
                             "\"counts\": [{}]}}\n",
                             hist.n_items, result.r, result.pct_leading_1, fmt::join(hist.counts, ", "));
  } else {
    std::cout << fmt::format("n_items\t{}\nr_benford\t{:.6f}\npct_leading_1\t{:.6f}\n\n",
                             hist.n_items, result.r, result.pct_leading_1);
    zb::write_digits_tsv(std::cout, hist);
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zipf rank-frequency and Benford leading-digit statistics for text corpora"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze corpora and write reports and plot data");
  auto* manifest_opt =
      analyze_cmd->add_option("--manifest", analyze.manifest, "TSV manifest: label, mode, [encoding,] path")
          ->check(CLI::ExistingFile);
  auto* input_opt = analyze_cmd->add_option("--input", analyze.input, "Single corpus file");
  auto* mode_opt = analyze_cmd->add_option("--mode", analyze.mode, "natural, java or cpp")
                       ->check(CLI::IsMember({"natural", "java", "cpp"}));
  manifest_opt->excludes(input_opt);
  input_opt->needs(mode_opt);
  analyze_cmd->add_option("--encoding", analyze.encoding, "utf8, windows1251 or koi8r (with --input)")
      ->check(CLI::IsMember({"utf8", "windows1251", "koi8r"}))
      ->needs(input_opt);
  analyze_cmd->add_option("--label", analyze.label, "Corpus label (with --input; default: file stem)")
      ->needs(input_opt);
  analyze_cmd->add_option("--drop-top", analyze.drop_k, "Number of most frequent EUs to eliminate");
  analyze_cmd->add_option("--full-window", analyze.full_window, "Rank window LO:HI for the full fit");
  analyze_cmd->add_option("--dropped-window", analyze.dropped_window,
                          "Rank window LO:HI for the dropped fit (default K+1:K+100)");
  analyze_cmd->add_option("--alpha", analyze.alpha, "Exponent of the reference Zipf curve");
  analyze_cmd->add_option("--breakpoints", analyze.breakpoints, "Ascending ranks a,b,... for piecewise fits");
  analyze_cmd->add_option("--fold", analyze.fold, "Case fold")->check(CLI::IsMember({"upper", "lower", "none"}));
  analyze_cmd->add_option("--format", analyze.format, "Summary format")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));
  analyze_cmd->add_option("--out", analyze.out_dir, "Output directory");
  analyze_cmd->add_flag("--dump-tokens", analyze.dump_tokens, "Print the token stream, one EU per line, and exit");

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic Zipf token stream, one token per line");
  synth_cmd->add_option("--n", synth.n, "Number of distinct tokens")->required();
  synth_cmd->add_option("--total", synth.total, "Total number of tokens")->required();
  synth_cmd->add_option("--alpha", synth.alpha, "Zipf exponent");
  synth_cmd->add_option("--seed", synth.seed, "Seed for token order and noise");
  synth_cmd->add_option("--noise", synth.noise, "Log-normal noise on expected counts (0 = noiseless)");
  synth_cmd->add_option("--out", synth.out, "Output file")->required();

  DigitsOptions digits;
  auto* digits_cmd = app.add_subcommand("digits", "Benford report for one positive integer per line");
  digits_cmd->add_option("--input", digits.input, "Counts file")->required();
  digits_cmd->add_option("--format", digits.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (analyze.manifest.empty() && analyze.input.empty()) {
        throw zb::ConfigError("analyze needs --manifest FILE or --input FILE --mode MODE");
      }
      return run_analyze(analyze);
    }
    if (synth_cmd->parsed()) {
      return run_synth(synth);
    }
    return run_digits(digits);
  } catch (const zb::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const zb::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const zb::AnalysisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAnalysis;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
