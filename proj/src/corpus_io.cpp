#include "zipfben/corpus_io.hpp"

#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <unordered_set>

#include <unicode/ucnv.h>
#include <unicode/unistr.h>

#include "zipfben/error.hpp"

namespace zipfben {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) {
      break;
    }
    start = tab + 1;
  }
  return fields;
}

const char* icu_name(Encoding encoding) {
  switch (encoding) {
  case Encoding::utf8:
    return "UTF-8";
  case Encoding::windows1251:
    return "windows-1251";
  case Encoding::koi8r:
    return "KOI8-R";
  }
  return "UTF-8";
}

struct ConverterCloser {
  void operator()(UConverter* cnv) const { ucnv_close(cnv); }
};

} // namespace

Mode parse_mode(std::string_view token) {
  if (token == "natural") {
    return Mode::natural;
  }
  if (token == "java") {
    return Mode::java;
  }
  if (token == "cpp") {
    return Mode::cpp;
  }
  throw ConfigError("unknown mode '" + std::string(token) + "' (expected natural, java or cpp)");
}

Encoding parse_encoding(std::string_view token) {
  if (token == "utf8") {
    return Encoding::utf8;
  }
  if (token == "windows1251") {
    return Encoding::windows1251;
  }
  if (token == "koi8r") {
    return Encoding::koi8r;
  }
  throw ConfigError("unknown encoding '" + std::string(token) +
                    "' (expected utf8, windows1251 or koi8r)");
}

std::string_view to_string(Mode mode) {
  switch (mode) {
  case Mode::natural:
    return "natural";
  case Mode::java:
    return "java";
  case Mode::cpp:
    return "cpp";
  }
  return "natural";
}

std::string_view to_string(Encoding encoding) {
  switch (encoding) {
  case Encoding::utf8:
    return "utf8";
  case Encoding::windows1251:
    return "windows1251";
  case Encoding::koi8r:
    return "koi8r";
  }
  return "utf8";
}

std::vector<CorpusSpec> parse_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open manifest " + path.string());
  }
  const auto base = path.parent_path();
  std::vector<CorpusSpec> specs;
  std::unordered_set<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto where = path.string() + ":" + std::to_string(line_no) + ": ";
    const auto fields = split_tabs(line);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ConfigError(where + "expected label, mode, [encoding,] path separated by tabs");
    }
    CorpusSpec spec;
    spec.label = std::string(fields[0]);
    if (spec.label.empty()) {
      throw ConfigError(where + "empty label");
    }
    try {
      spec.mode = parse_mode(fields[1]);
      if (fields.size() == 4) {
        spec.encoding = parse_encoding(fields[2]);
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
    const std::filesystem::path file{std::string(fields.back())};
    if (file.empty()) {
      throw ConfigError(where + "empty path");
    }
    spec.path = file.is_absolute() ? file : base / file;
    if (!labels.insert(spec.label).second) {
      throw ConfigError(where + "duplicate label '" + spec.label + "'");
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::u32string decode(std::string_view bytes, Encoding encoding) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<UConverter, ConverterCloser> cnv(ucnv_open(icu_name(encoding), &status));
  if (U_FAILURE(status)) {
    throw DataError(std::string("converter unavailable for ") + icu_name(encoding));
  }
  ucnv_setToUCallBack(cnv.get(), UCNV_TO_U_CALLBACK_STOP, nullptr, nullptr, nullptr, &status);

  std::u32string out;
  out.reserve(bytes.size());
  const char* src = bytes.data();
  const char* const end = src + bytes.size();
  while (src < end) {
    const UChar32 c = ucnv_getNextUChar(cnv.get(), &src, end, &status);
    if (U_FAILURE(status)) {
      const auto offset = static_cast<std::size_t>(src - bytes.data());
      throw DataError("invalid " + std::string(to_string(encoding)) + " byte sequence near offset " +
                      std::to_string(offset));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

RawText load_corpus(const CorpusSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) {
    throw DataError("cannot read " + spec.path.string());
  }
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) {
    throw DataError("read error on " + spec.path.string());
  }
  RawText text;
  text.source_label = spec.label;
  try {
    text.content = decode(bytes, spec.encoding);
  } catch (const DataError& e) {
    throw DataError(spec.path.string() + ": " + e.what());
  }
  if (!text.content.empty() && text.content.front() == U'\uFEFF') {
    text.content.erase(0, 1);
  }
  return text;
}

std::string to_utf8(std::u32string_view text) {
  const auto ustr = icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(text.data()),
                                                  static_cast<int32_t>(text.size()));
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

std::u32string from_utf8(std::string_view text) { return decode(text, Encoding::utf8); }

} // namespace zipfben
