#include <algorithm>
#include <random>

#include <gtest/gtest.h>
#include <unicode/uchar.h>

#include "zipfben/error.hpp"
#include "zipfben/tokenizer.hpp"

namespace zipfben {
namespace {

using Tokens = std::vector<std::string>;

RawText raw(std::u32string text) { return {std::move(text), "t"}; }

std::u32string join(const Tokens& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    joined += (joined.empty() ? "" : " ") + t;
  }
  return from_utf8(joined);
}

TEST(TokenizeNatural, StripsPunctuationAndFoldsUpper) {
  EXPECT_EQ(tokenize_natural(raw(U"Hello, world! hello")).tokens, (Tokens{"HELLO", "WORLD", "HELLO"}));
}

TEST(TokenizeNatural, CyrillicMatchesTableForms) {
  EXPECT_EQ(tokenize_natural(raw(U"И в не")).tokens, (Tokens{"И", "В", "НЕ"}));
}

TEST(TokenizeNatural, EmptyInput) { EXPECT_TRUE(tokenize_natural(raw(U"")).tokens.empty()); }

TEST(TokenizeNatural, PunctuationDeletedInPlace) {
  EXPECT_EQ(tokenize_natural(raw(U"don't well-known — «quoted» 3.14 x+y")).tokens,
            (Tokens{"DONT", "WELLKNOWN", "QUOTED", "314", "XY"}));
}

TEST(TokenizeNatural, DelimiterSet) {
  EXPECT_EQ(tokenize_natural(raw(U"a\fb\nc\rd\te\vf  g h"), Fold::none).tokens,
            (Tokens{"a", "b", "c", "d", "e", "f", "g", "h"}));
}

TEST(TokenizeNatural, FoldModes) {
  EXPECT_EQ(tokenize_natural(raw(U"Война и МИР"), Fold::lower).tokens, (Tokens{"война", "и", "мир"}));
  EXPECT_EQ(tokenize_natural(raw(U"Война и МИР"), Fold::none).tokens, (Tokens{"Война", "и", "МИР"}));
}

TEST(TokenizeNatural, SoftHyphenRemoved) {
  EXPECT_EQ(tokenize_natural(raw(U"во\u00ADйна")).tokens, (Tokens{"ВОЙНА"}));
}

std::u32string random_text(std::mt19937_64& rng) {
  static const std::u32string pool =
      U"abcXYZ ИвнеЁё019 .,;:!?-—'\"()[]{}«»…+=<>\t\n$€_ ";
  std::u32string text;
  const auto length = rng() % 80;
  for (std::size_t i = 0; i < length; ++i) {
    text.push_back(pool[rng() % pool.size()]);
  }
  return text;
}

bool is_space_or_punct(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c)) ||
         (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

TEST(TokenizeNatural, TokensHoldNoWhitespaceOrPunctuation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    for (const auto& token : tokenize_natural(raw(random_text(rng))).tokens) {
      ASSERT_FALSE(token.empty());
      const auto chars = from_utf8(token);
      ASSERT_TRUE(std::none_of(chars.begin(), chars.end(), is_space_or_punct)) << token;
    }
  }
}

TEST(TokenizeNatural, RetokenizingJoinedTokensIsAFixpoint) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    for (const auto fold : {Fold::upper, Fold::lower, Fold::none}) {
      const auto once = tokenize_natural(raw(random_text(rng)), fold).tokens;
      ASSERT_EQ(tokenize_natural(raw(join(once)), fold).tokens, once);
    }
  }
}

TEST(TokenizeNatural, FoldedStreamIgnoresInputCase) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    auto text = random_text(rng);
    auto flipped = text;
    for (auto& c : flipped) {
      if (rng() % 2 != 0) {
        c = static_cast<char32_t>(u_isupper(static_cast<UChar32>(c)) ? u_tolower(static_cast<UChar32>(c))
                                                                      : u_toupper(static_cast<UChar32>(c)));
      }
    }
    ASSERT_EQ(tokenize_natural(raw(text), Fold::upper).tokens,
              tokenize_natural(raw(flipped), Fold::upper).tokens);
    ASSERT_EQ(tokenize_natural(raw(text), Fold::lower).tokens,
              tokenize_natural(raw(flipped), Fold::lower).tokens);
  }
}

TEST(StripComments, LineComment) {
  EXPECT_EQ(strip_comments(raw(U"int x; // note"), Mode::cpp).content, U"int x;  ");
}

TEST(StripComments, BlockComment) {
  EXPECT_EQ(strip_comments(raw(U"a/*b*/c"), Mode::java).content, U"a c");
}

TEST(StripComments, MarkersInsideLiteralsSurvive) {
  EXPECT_EQ(strip_comments(raw(U"s = \"//not a comment\";"), Mode::java).content,
            U"s = \"//not a comment\";");
  EXPECT_EQ(strip_comments(raw(U"c = '/'; d = \"a\\\"/*\"; // x"), Mode::cpp).content,
            U"c = '/'; d = \"a\\\"/*\";  ");
}

TEST(StripComments, UnterminatedBlockRunsToEnd) {
  EXPECT_EQ(strip_comments(raw(U"a /* b\nc"), Mode::cpp).content, U"a  ");
}

TEST(StripComments, LineCommentKeepsNewline) {
  EXPECT_EQ(strip_comments(raw(U"a // b\nc"), Mode::cpp).content, U"a  \nc");
}

TEST(StripComments, JavaTextBlock) {
  const std::u32string src = U"s = \"\"\"\n  // kept\n  \"\"\"; // gone";
  EXPECT_EQ(strip_comments(raw(src), Mode::java).content, U"s = \"\"\"\n  // kept\n  \"\"\";  ");
}

TEST(StripComments, CppRawStringAndDigitSeparators) {
  EXPECT_EQ(strip_comments(raw(U"auto s = R\"x(a)\" // b)x\"; // c"), Mode::cpp).content,
            U"auto s = R\"x(a)\" // b)x\";  ");
  EXPECT_EQ(strip_comments(raw(U"n = 1'000'000; // c"), Mode::cpp).content, U"n = 1'000'000;  ");
}

TEST(StripComments, UnterminatedStringStopsAtNewline) {
  EXPECT_EQ(strip_comments(raw(U"s = \"abc\n// c"), Mode::java).content, U"s = \"abc\n ");
}

TEST(StripComments, RejectsNaturalMode) {
  EXPECT_THROW(strip_comments(raw(U"x"), Mode::natural), ConfigError);
}

TEST(TokenizeCode, SplitsOperatorsAndFolds) {
  EXPECT_EQ(tokenize_code(raw(U"int x = 1;"), Mode::java).tokens, (Tokens{"INT", "X", "=", "1", ";"}));
  EXPECT_EQ(tokenize_code(raw(U"f(a,b);"), Mode::cpp).tokens,
            (Tokens{"F", "(", "A", ",", "B", ")", ";"}));
}

TEST(TokenizeCode, ComposesWithStripComments) {
  EXPECT_EQ(tokenize_code(raw(U"x=1; //c"), Mode::cpp).tokens, (Tokens{"X", "=", "1", ";"}));
}

TEST(TokenizeCode, MultiCharacterOperatorsSplit) {
  EXPECT_EQ(tokenize_code(raw(U"a==b&&p->q"), Mode::cpp, Fold::none).tokens,
            (Tokens{"a", "=", "=", "b", "&", "&", "p", "-", ">", "q"}));
}

TEST(TokenizeCode, LiteralsStayWhole) {
  EXPECT_EQ(tokenize_code(raw(U"s = \"a, b;\" + 'c';"), Mode::java, Fold::none).tokens,
            (Tokens{"s", "=", "\"a, b;\"", "+", "'c'", ";"}));
  EXPECT_EQ(tokenize_code(raw(U"w = L\"x\";"), Mode::cpp, Fold::none).tokens,
            (Tokens{"w", "=", "L\"x\"", ";"}));
}

TEST(TokenizeCode, IdentifiersAndNumbers) {
  EXPECT_EQ(tokenize_code(raw(U"my_var$1 = 1'000.5;"), Mode::cpp, Fold::none).tokens,
            (Tokens{"my_var$1", "=", "1'000", ".", "5", ";"}));
}

// Builds code from fragments with a known number of semicolons outside
// comments and literals.
TEST(TokenizeCode, SemicolonCountMatchesSource) {
  const std::vector<std::pair<std::u32string, int>> fragments{
      {U"x = 1;", 1},          {U" // a; b;\n", 0},     {U"/* ; */", 0},
      {U" s = \";;\";", 1},    {U" c = ';';", 1},       {U"for(;;){}", 2},
      {U"\n", 0},              {U" f(a, b) ;", 1},      {U" /* unclosed? no */ ", 0}};
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::u32string src;
    long expected = 0;
    const auto pieces = 1 + rng() % 20;
    for (std::size_t i = 0; i < pieces; ++i) {
      const auto& [text, semis] = fragments[rng() % fragments.size()];
      src += text;
      expected += semis;
    }
    for (const auto mode : {Mode::java, Mode::cpp}) {
      const auto tokens = tokenize_code(raw(src), mode).tokens;
      ASSERT_EQ(std::count(tokens.begin(), tokens.end(), ";"), expected) << to_utf8(src);
    }
  }
}

TEST(Tokenize, DispatchesOnMode) {
  EXPECT_EQ(tokenize(raw(U"a;b"), Mode::natural).tokens, (Tokens{"AB"}));
  EXPECT_EQ(tokenize(raw(U"a;b"), Mode::cpp).tokens, (Tokens{"A", ";", "B"}));
  EXPECT_EQ(tokenize(raw(U"a;b"), Mode::java).mode, Mode::java);
}

TEST(ParseFold, Tokens) {
  EXPECT_EQ(parse_fold("upper"), Fold::upper);
  EXPECT_EQ(parse_fold("none"), Fold::none);
  EXPECT_THROW(parse_fold("title"), ConfigError);
}

} // namespace
} // namespace zipfben
