#include "zipfben/tokenizer.hpp"

#include <array>

#include <unicode/uchar.h>

#include "zipfben/error.hpp"

namespace zipfben {

namespace {

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

bool is_punct_or_symbol(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

bool is_invisible(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_CC_MASK | U_GC_CF_MASK)) != 0;
}

bool is_ascii_word(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         c == U'_';
}

char32_t fold_char(char32_t c, Fold fold) {
  switch (fold) {
  case Fold::upper:
    return static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
  case Fold::lower:
    return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  case Fold::none:
    break;
  }
  return c;
}

std::string finish_token(std::u32string& word, Fold fold) {
  for (auto& c : word) {
    c = fold_char(c, fold);
  }
  auto utf8 = to_utf8(word);
  word.clear();
  return utf8;
}

enum class SegmentKind { code, comment, literal };

struct Segment {
  SegmentKind kind;
  std::size_t begin;
  std::size_t end;
};

// Splits source text into code, comment and literal regions.
class SourceScanner {
public:
  SourceScanner(std::u32string_view text, Mode mode) : text_(text), mode_(mode) {}

  std::vector<Segment> run() {
    while (pos_ < text_.size()) {
      const char32_t c = text_[pos_];
      const char32_t next = peek(1);
      if (c == U'/' && next == U'/') {
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != U'\n' && text_[pos_] != U'\r') {
          ++pos_;
        }
        push(SegmentKind::comment, start);
      } else if (c == U'/' && next == U'*') {
        const auto start = pos_;
        const auto close = text_.find(U"*/", pos_ + 2);
        pos_ = close == std::u32string_view::npos ? text_.size() : close + 2;
        push(SegmentKind::comment, start);
      } else if (c == U'"') {
        scan_string();
      } else if (c == U'\'' && !is_digit_separator()) {
        const auto start = pos_ - prefix_length();
        ++pos_;
        scan_quoted(U'\'');
        push(SegmentKind::literal, start);
      } else {
        ++pos_;
      }
    }
    flush_code(text_.size());
    return std::move(segments_);
  }

private:
  char32_t peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : U'\0';
  }

  void flush_code(std::size_t until) {
    if (until > code_start_) {
      segments_.push_back({SegmentKind::code, code_start_, until});
    }
  }

  void push(SegmentKind kind, std::size_t start) {
    flush_code(start);
    segments_.push_back({kind, start, pos_});
    code_start_ = pos_;
  }

  // Identifier characters glued to the left of pos_, restricted to the
  // current code segment.
  std::u32string_view word_before() const {
    auto begin = pos_;
    while (begin > code_start_ && is_ascii_word(text_[begin - 1])) {
      --begin;
    }
    return text_.substr(begin, pos_ - begin);
  }

  // Length of a C++ encoding or raw prefix (L, u8, R, u8R, ...) glued to a quote.
  std::size_t prefix_length() const {
    if (mode_ != Mode::cpp) {
      return 0;
    }
    static constexpr std::array<std::u32string_view, 9> prefixes{
        U"L", U"u", U"U", U"u8", U"R", U"LR", U"uR", U"UR", U"u8R"};
    const auto word = word_before();
    for (const auto p : prefixes) {
      if (word == p) {
        return word.size();
      }
    }
    return 0;
  }

  // C++14 digit separator: a quote inside a numeric literal such as 1'000.
  bool is_digit_separator() const {
    if (mode_ != Mode::cpp || pos_ == code_start_) {
      return false;
    }
    auto begin = pos_;
    while (begin > code_start_ &&
           (is_ascii_word(text_[begin - 1]) || text_[begin - 1] == U'\'' || text_[begin - 1] == U'.')) {
      --begin;
    }
    return begin < pos_ && text_[begin] >= U'0' && text_[begin] <= U'9';
  }

  // Consumes up to and including the closing quote. Ordinary literals may not
  // span lines, so an unterminated one stops before the newline.
  void scan_quoted(char32_t quote) {
    while (pos_ < text_.size()) {
      const char32_t c = text_[pos_];
      if (c == U'\\') {
        pos_ = std::min(pos_ + 2, text_.size());
      } else if (c == quote) {
        ++pos_;
        return;
      } else if (c == U'\n' || c == U'\r') {
        return;
      } else {
        ++pos_;
      }
    }
  }

  void scan_string() {
    const auto prefix = prefix_length();
    const auto start = pos_ - prefix;
    if (prefix > 0 && text_[pos_ - 1] == U'R') {
      scan_raw_string();
    } else if (mode_ == Mode::java && peek(1) == U'"' && peek(2) == U'"') {
      pos_ += 3;
      while (pos_ < text_.size()) {
        if (text_[pos_] == U'\\') {
          pos_ = std::min(pos_ + 2, text_.size());
        } else if (text_.compare(pos_, 3, U"\"\"\"") == 0) {
          pos_ += 3;
          break;
        } else {
          ++pos_;
        }
      }
    } else {
      ++pos_;
      scan_quoted(U'"');
    }
    push(SegmentKind::literal, start);
  }

  // R"delim( ... )delim"
  void scan_raw_string() {
    const auto open = text_.find(U'(', pos_ + 1);
    if (open == std::u32string_view::npos || open - pos_ - 1 > 16) {
      ++pos_;
      scan_quoted(U'"');
      return;
    }
    std::u32string closing = U")";
    closing.append(text_.substr(pos_ + 1, open - pos_ - 1));
    closing.push_back(U'"');
    const auto close = text_.find(closing, open + 1);
    pos_ = close == std::u32string_view::npos ? text_.size() : close + closing.size();
  }

  std::u32string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
  std::size_t code_start_ = 0;
  std::vector<Segment> segments_;
};

void require_code_mode(Mode mode) {
  if (mode == Mode::natural) {
    throw ConfigError("code tokenization requires mode java or cpp");
  }
}

} // namespace

Fold parse_fold(std::string_view token) {
  if (token == "upper") {
    return Fold::upper;
  }
  if (token == "lower") {
    return Fold::lower;
  }
  if (token == "none") {
    return Fold::none;
  }
  throw ConfigError("unknown fold '" + std::string(token) + "' (expected upper, lower or none)");
}

std::string_view to_string(Fold fold) {
  switch (fold) {
  case Fold::upper:
    return "upper";
  case Fold::lower:
    return "lower";
  case Fold::none:
    return "none";
  }
  return "upper";
}

TokenStream tokenize_natural(const RawText& text, Fold fold) {
  TokenStream stream{{}, Mode::natural, fold};
  std::u32string word;
  for (const char32_t c : text.content) {
    if (is_space(c)) {
      if (!word.empty()) {
        stream.tokens.push_back(finish_token(word, fold));
      }
    } else if (!is_punct_or_symbol(c) && !is_invisible(c)) {
      word.push_back(c);
    }
  }
  if (!word.empty()) {
    stream.tokens.push_back(finish_token(word, fold));
  }
  return stream;
}

RawText strip_comments(const RawText& src, Mode mode) {
  require_code_mode(mode);
  const std::u32string_view text = src.content;
  RawText out;
  out.source_label = src.source_label;
  out.content.reserve(text.size());
  for (const auto& seg : SourceScanner(text, mode).run()) {
    if (seg.kind == SegmentKind::comment) {
      out.content.push_back(U' ');
    } else {
      out.content.append(text.substr(seg.begin, seg.end - seg.begin));
    }
  }
  return out;
}

TokenStream tokenize_code(const RawText& src, Mode mode, Fold fold) {
  require_code_mode(mode);
  const std::u32string_view text = src.content;
  TokenStream stream{{}, mode, fold};
  std::u32string word;
  auto flush = [&] {
    if (!word.empty()) {
      stream.tokens.push_back(finish_token(word, fold));
    }
  };
  for (const auto& seg : SourceScanner(text, mode).run()) {
    if (seg.kind == SegmentKind::comment) {
      flush();
      continue;
    }
    if (seg.kind == SegmentKind::literal) {
      flush();
      word.assign(text.substr(seg.begin, seg.end - seg.begin));
      flush();
      continue;
    }
    for (std::size_t i = seg.begin; i < seg.end; ++i) {
      const char32_t c = text[i];
      if (is_space(c)) {
        flush();
      } else if (c == U'_' || c == U'$' || c == U'\'') {
        // Identifier characters, and (in code segments) C++ digit separators.
        word.push_back(c);
      } else if (is_punct_or_symbol(c)) {
        flush();
        word.push_back(c);
        flush();
      } else {
        word.push_back(c);
      }
    }
  }
  flush();
  return stream;
}

TokenStream tokenize(const RawText& text, Mode mode, Fold fold) {
  return mode == Mode::natural ? tokenize_natural(text, fold) : tokenize_code(text, mode, fold);
}

} // namespace zipfben
