#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lvrover/lexicon.hpp"
#include "lvrover/random.hpp"

namespace lvrover {
namespace {

Lexicon load(const std::string& text, NormalizationPolicy policy = {}, std::vector<LexiconWarning>* w = nullptr) {
  std::istringstream in(text);
  return load_lexicon(in, policy, ' ', w);
}

std::vector<NormalizationPolicy> all_policies() {
  std::vector<NormalizationPolicy> out;
  for (bool fold : {false, true})
    for (auto form : {UnicodeForm::none, UnicodeForm::nfc})
      for (bool strip : {false, true}) out.push_back({fold, form, strip});
  return out;
}

TEST(Lexicon, LoadCollapsesDuplicates) {
  EXPECT_EQ(load("le\nchat\nle\n").size(), 2u);
}

TEST(Lexicon, CaseFoldingPolicy) {
  NormalizationPolicy fold;
  fold.case_fold = true;
  const Lexicon lex = load("Le\n", fold);
  EXPECT_TRUE(lex.contains("le"));
  EXPECT_TRUE(lex.contains("LE"));
  EXPECT_FALSE(load("Le\n").contains("le"));
}

TEST(Lexicon, Contains) {
  const Lexicon lex = Lexicon::from_words({"le", "chat"});
  EXPECT_TRUE(lex.contains("chat"));
  EXPECT_FALSE(lex.contains("chal"));
  EXPECT_FALSE(Lexicon{}.contains("chat"));
  EXPECT_FALSE(Lexicon{}.contains(""));
}

TEST(Lexicon, EmptySourceIsEmptyLexicon) {
  EXPECT_EQ(load("").size(), 0u);
  EXPECT_EQ(load("\n\r\n\n").size(), 0u);
}

TEST(Lexicon, CrlfAndBomAreIgnored) {
  const Lexicon lex = load("\xEF\xBB\xBFle\r\nchat\r\n");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_TRUE(lex.contains("le"));
  EXPECT_TRUE(lex.contains("chat"));
}

TEST(Lexicon, WhitespaceWordsAreSkippedWithWarning) {
  std::vector<LexiconWarning> warnings;
  const Lexicon lex = load("le chat\nchien\n\tx\n", {}, &warnings);
  EXPECT_EQ(lex.size(), 1u);
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_EQ(warnings[0].line, 1u);
  EXPECT_EQ(warnings[1].line, 3u);
  EXPECT_THROW(Lexicon().insert("a b"), InputError);
}

TEST(Lexicon, MalformedUtf8ReportsByteOffset) {
  try {
    load("ok\nbad\xFF\n");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.byte_offset(), 6u);
  }
}

TEST(Lexicon, CanonicalCompositionMatchesDecomposedInput) {
  const Lexicon lex = Lexicon::from_words({"re\xC3\xA7u"});  // composed c-cedilla
  EXPECT_TRUE(lex.contains("rec\xCC\xA7u"));                // c + combining cedilla
  NormalizationPolicy raw;
  raw.unicode_form = UnicodeForm::none;
  EXPECT_FALSE(Lexicon::from_words({"re\xC3\xA7u"}, raw).contains("rec\xCC\xA7u"));
}

TEST(Lexicon, PunctuationStripping) {
  NormalizationPolicy strip;
  strip.strip_surrounding_punctuation = true;
  const Lexicon lex = Lexicon::from_words({"chat"}, strip);
  EXPECT_TRUE(lex.contains("\xC2\xAB" "chat,"));  // «chat,
  EXPECT_TRUE(lex.contains("(chat)"));
  EXPECT_FALSE(lex.contains("ch-at"));
}

TEST(Lexicon, Merge) {
  EXPECT_EQ(merge(Lexicon::from_words({"a"}), Lexicon::from_words({"b"})).size(), 2u);
  EXPECT_EQ(merge(Lexicon::from_words({"a"}), Lexicon::from_words({"a"})).size(), 1u);
  const Lexicon l = Lexicon::from_words({"x", "y"});
  const Lexicon m = merge(Lexicon{}, l);
  EXPECT_EQ(m.words(), l.words());
}

TEST(Lexicon, MergeRejectsPolicyMismatch) {
  NormalizationPolicy fold;
  fold.case_fold = true;
  EXPECT_THROW(merge(Lexicon::from_words({"a"}), Lexicon::from_words({"a"}, fold)), ConfigError);
}

TEST(Lexicon, Coverage) {
  const std::vector<std::string> aba{"a b a"};
  const std::vector<std::string> ab{"a b"};
  EXPECT_DOUBLE_EQ(coverage(Lexicon::from_words({"a", "b"}), aba), 1.0);
  EXPECT_DOUBLE_EQ(coverage(Lexicon::from_words({"a"}), ab), 0.5);
  EXPECT_DOUBLE_EQ(coverage(Lexicon{}, ab), 0.0);
  const std::vector<std::string> blank{"", "   "};
  EXPECT_THROW(coverage(Lexicon::from_words({"a"}), blank), UndefinedRateError);
}

// Random words over letters, accents (precomposed and combining), upper case
// and punctuation.
std::string random_word(Rng& rng) {
  static const std::vector<std::string> pieces = {"a", "e", "c", "E", "\xC3\xA9", "\xC3\x89", "\xCC\x81", "\xCC\xA7",
                                                  "\xC3\xA7", ".", ",", "\xC2\xAB", "-", "\xC3\x9F", "I", "\xC4\xB0"};
  std::string w;
  const std::size_t len = 1 + rng.below(6);
  for (std::size_t k = 0; k < len; ++k) w += pieces[rng.below(pieces.size())];
  return w;
}

TEST(LexiconProperty, NormalizationIsIdempotent) {
  Rng rng(11);
  for (const auto& policy : all_policies()) {
    for (int trial = 0; trial < 3000; ++trial) {
      const std::string w = random_word(rng);
      const std::string once = normalize(w, policy);
      EXPECT_EQ(normalize(once, policy), once) << "word=" << w;
    }
  }
}

TEST(LexiconProperty, MembershipInvariantUnderRenormalization) {
  Rng rng(12);
  for (const auto& policy : all_policies()) {
    Lexicon lex(policy);
    for (int k = 0; k < 200; ++k) {
      const std::string w = random_word(rng);
      if (!normalize(w, policy).empty()) lex.insert(w);
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const std::string q = random_word(rng);
      EXPECT_EQ(lex.contains(q), lex.contains(normalize(q, policy)));
    }
    for (const auto& stored : lex.words()) EXPECT_EQ(normalize(stored, policy), stored);
  }
}

TEST(LexiconProperty, MergeIsCommutativeAssociativeAndRaisesCoverage) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_lex = [&] {
      Lexicon lex;
      const std::size_t n = rng.below(30);
      for (std::size_t k = 0; k < n; ++k) lex.insert("w" + std::to_string(rng.below(60)));
      return lex;
    };
    const Lexicon a = rand_lex(), b = rand_lex(), c = rand_lex();
    EXPECT_EQ(merge(a, b).words(), merge(b, a).words());
    EXPECT_EQ(merge(merge(a, b), c).words(), merge(a, merge(b, c)).words());
    EXPECT_LE(merge(a, b).size(), a.size() + b.size());

    std::vector<std::string> corpus;
    for (int l = 0; l < 5; ++l) {
      std::string line;
      for (int k = 0; k < 6; ++k) line += (k ? " w" : "w") + std::to_string(rng.below(60));
      corpus.push_back(line);
    }
    EXPECT_GE(coverage(merge(a, b), corpus), coverage(a, corpus));
  }
}

// A 3.3M-line lexicon loads, and its size matches `sort -u` run on the file.
TEST(LexiconScale, MillionsOfWordsMatchExternalDistinctCount) {
  const auto dir = std::filesystem::temp_directory_path() / "lvrover_lexicon_scale";
  std::filesystem::create_directories(dir);
  const auto path = dir / "words.txt";
  {
    std::ofstream out(path, std::ios::binary);
    Rng rng(3300000);
    static const char letters[] = "abcdefghijklmnopqrstuvwxyz";
    std::string w;
    for (std::size_t i = 0; i < 3'300'000; ++i) {
      w.clear();
      const std::size_t len = 3 + rng.below(4);
      for (std::size_t k = 0; k < len; ++k) w.push_back(letters[rng.below(26)]);
      out << w << '\n';
    }
  }
  const auto count_path = dir / "count.txt";
  const std::string cmd = "LC_ALL=C sort -u '" + path.string() + "' | wc -l > '" + count_path.string() + "'";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::size_t expected = 0;
  std::ifstream(count_path) >> expected;
  ASSERT_GT(expected, 1'000'000u);

  std::ifstream in(path, std::ios::binary);
  const Lexicon lex = load_lexicon(in);
  EXPECT_EQ(lex.size(), expected);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace lvrover
