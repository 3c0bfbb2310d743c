#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zipfben/corpus_io.hpp"

namespace zipfben {

enum class Fold { upper, lower, none };

Fold parse_fold(std::string_view token);
std::string_view to_string(Fold fold);

/// Ordered expression units (EUs), UTF-8 encoded and case-folded.
struct TokenStream {
  std::vector<std::string> tokens;
  Mode mode = Mode::natural;
  Fold fold = Fold::upper;
};

/// Natural-language tokenization: punctuation and symbol characters
/// (Unicode P* and S*), plus invisible format/control characters, are deleted
/// in place; the remainder is split on whitespace.
TokenStream tokenize_natural(const RawText& text, Fold fold = Fold::upper);

/// Replaces each `//` line comment and `/* */` block comment by one space.
/// String, character, Java text-block and C++ raw-string literals are
/// skipped, so comment markers inside them survive. An unterminated block
/// comment runs to the end of input.
RawText strip_comments(const RawText& src, Mode mode);

/// Code tokenization: comments are stripped, every punctuation/operator
/// character becomes its own EU, literals stay whole, and the rest is split
/// on whitespace.
TokenStream tokenize_code(const RawText& src, Mode mode, Fold fold = Fold::upper);

/// Dispatches on `mode`.
TokenStream tokenize(const RawText& text, Mode mode, Fold fold = Fold::upper);

} // namespace zipfben
