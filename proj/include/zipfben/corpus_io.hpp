#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace zipfben {

enum class Mode { natural, java, cpp };
enum class Encoding { utf8, windows1251, koi8r };

Mode parse_mode(std::string_view token);
Encoding parse_encoding(std::string_view token);
std::string_view to_string(Mode mode);
std::string_view to_string(Encoding encoding);

/// One manifest record: which file to analyze and how.
struct CorpusSpec {
  std::string label;
  std::filesystem::path path;
  Mode mode = Mode::natural;
  Encoding encoding = Encoding::utf8;
};

/// Fully decoded corpus text.
struct RawText {
  std::u32string content;
  std::string source_label;
};

/// Reads a tab-separated manifest: label, mode, [encoding,] path.
///
/// Blank lines and lines starting with '#' are skipped. Relative paths are
/// resolved against the manifest's directory. Records come back in file
/// order, which is the processing order for a run.
std::vector<CorpusSpec> parse_manifest(const std::filesystem::path& path);

/// Loads and decodes the corpus named by `spec`, dropping a leading BOM.
/// Throws DataError for unreadable files or bytes invalid in the declared
/// encoding.
RawText load_corpus(const CorpusSpec& spec);

/// Decodes `bytes` from `encoding`; throws DataError on invalid input.
std::u32string decode(std::string_view bytes, Encoding encoding);

std::string to_utf8(std::u32string_view text);
std::u32string from_utf8(std::string_view text);

} // namespace zipfben
