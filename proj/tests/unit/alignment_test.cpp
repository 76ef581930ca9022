#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lvrover/alignment.hpp"
#include "lvrover/random.hpp"

namespace lvrover {
namespace {

using Tokens = std::vector<std::string>;

TEST(Tokenize, SplitsOnDelimiter) {
  EXPECT_EQ(tokenize("le chat"), (Tokens{"le", "chat"}));
  EXPECT_EQ(tokenize(" le  chat "), (Tokens{"le", "chat"}));
  EXPECT_EQ(tokenize("bonjour"), (Tokens{"bonjour"}));
  EXPECT_EQ(tokenize(""), Tokens{});
  EXPECT_EQ(tokenize("   "), Tokens{});
}

TEST(Tokenize, LiteralModeKeepsEmptyWords) {
  const TokenizeOptions literal{' ', false};
  EXPECT_EQ(tokenize(" le  chat ", literal), (Tokens{"", "le", "", "chat", ""}));
  EXPECT_EQ(tokenize("", literal), Tokens{""});
  EXPECT_EQ(count_tokens("a  b", literal), 3u);
}

TEST(Tokenize, CustomDelimiter) {
  const TokenizeOptions underscore{'_', true};
  EXPECT_EQ(tokenize("le_chat noir", underscore), (Tokens{"le", "chat noir"}));
}

TEST(WordCountVote, StrictMajority) {
  const auto hs = make_hypotheses({"le chat", "le chal", "le ch at"});
  const WordCountVote v = estimate_word_count(hs);
  EXPECT_EQ(v.histogram, (std::map<std::size_t, std::size_t>{{2, 2}, {3, 1}}));
  EXPECT_EQ(v.nb_words, 2u);
  EXPECT_EQ(v.retained, (std::vector<std::size_t>{0, 1}));
}

TEST(WordCountVote, UnanimousPool) {
  std::vector<std::string> texts(454, "un deux trois quatre cinq");
  const auto v = estimate_word_count(make_hypotheses(texts));
  EXPECT_EQ(v.nb_words, 5u);
  EXPECT_EQ(v.retained.size(), 454u);
}

TEST(WordCountVote, TieGoesToSmallestCount) {
  const auto v = estimate_word_count(make_hypotheses({"a b", "a b c d"}));
  EXPECT_EQ(v.histogram, (std::map<std::size_t, std::size_t>{{2, 1}, {4, 1}}));
  EXPECT_EQ(v.nb_words, 2u);
}

TEST(WordCountVote, EmptyPoolIsAnError) {
  EXPECT_THROW(estimate_word_count(std::vector<Hypothesis>{}), InputError);
  EXPECT_THROW(build_lattice(std::vector<Hypothesis>{}), InputError);
}

TEST(WordCountVote, EmptyHypothesesCountZeroWords) {
  const auto v = estimate_word_count(make_hypotheses({"", "a", ""}));
  EXPECT_EQ(v.nb_words, 0u);
  EXPECT_EQ(v.retained, (std::vector<std::size_t>{0, 2}));
  const auto w = estimate_word_count(make_hypotheses({"", "a", "b"}));
  EXPECT_EQ(w.nb_words, 1u);
}

TEST(BuildLattice, KeepsMajorityRowsInInputOrder) {
  const auto [lat, vote] = build_lattice(make_hypotheses({"le chat", "le chal", "le ch at"}));
  EXPECT_EQ(lat.to_rows(), (std::vector<Tokens>{{"le", "chat"}, {"le", "chal"}}));
  EXPECT_EQ(vote.nb_words, 2u);
}

TEST(BuildLattice, SingleHypothesis) {
  const auto [lat, vote] = build_lattice(make_hypotheses({"x y"}));
  EXPECT_EQ(lat.rows(), 1u);
  EXPECT_EQ(lat.cols(), 2u);
}

TEST(BuildLattice, AllCountsDistinct) {
  const auto [lat, vote] = build_lattice(make_hypotheses({"c d e", "a", "b c"}));
  EXPECT_EQ(vote.nb_words, 1u);
  EXPECT_EQ(lat.to_rows(), (std::vector<Tokens>{{"a"}}));
}

std::vector<std::string> random_texts(Rng& rng, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    const std::size_t words = rng.below(5);
    for (std::size_t k = 0; k < words; ++k) {
      if (rng.uniform() < 0.2) s += " ";
      s += (k ? " " : "") + std::string(1, static_cast<char>('a' + rng.below(4)));
    }
    out.push_back(s);
  }
  return out;
}

TEST(BuildLatticeProperty, RowsMatchVotedWordCount) {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto texts = random_texts(rng, 1 + rng.below(12));
    for (bool collapse : {true, false}) {
      const auto [lat, vote] = build_lattice(make_hypotheses(texts), {' ', collapse});
      EXPECT_EQ(vote.total(), texts.size());
      EXPECT_EQ(lat.rows(), vote.histogram.at(vote.nb_words));
      EXPECT_EQ(lat.cols(), vote.nb_words);
      for (const auto& [count, freq] : vote.histogram) {
        EXPECT_TRUE(freq < lat.rows() || (freq == lat.rows() && count >= vote.nb_words));
      }
    }
  }
}

TEST(BuildLatticeProperty, PermutationEquivariant) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto texts = random_texts(rng, 1 + rng.below(10));
    std::vector<std::size_t> perm(texts.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<std::string> shuffled;
    for (auto p : perm) shuffled.push_back(texts[p]);

    const auto [lat, vote] = build_lattice(make_hypotheses(texts));
    const auto [plat, pvote] = build_lattice(make_hypotheses(shuffled));
    EXPECT_EQ(vote.nb_words, pvote.nb_words);
    EXPECT_EQ(vote.histogram, pvote.histogram);
    // Row r of the permuted lattice is the row of its source hypothesis.
    for (std::size_t r = 0; r < pvote.retained.size(); ++r) {
      const std::size_t src = perm[pvote.retained[r]];
      const auto it = std::find(vote.retained.begin(), vote.retained.end(), src);
      ASSERT_NE(it, vote.retained.end());
      const auto orig_row = lat.row(static_cast<std::size_t>(it - vote.retained.begin()));
      const auto perm_row = plat.row(r);
      EXPECT_TRUE(std::equal(orig_row.begin(), orig_row.end(), perm_row.begin(), perm_row.end()));
    }
  }
}

TEST(BuildLatticeProperty, IdenticalHypothesesGiveIdenticalRows) {
  std::vector<std::string> texts(7, "il fait beau");
  const auto [lat, vote] = build_lattice(make_hypotheses(texts));
  EXPECT_EQ(lat.rows(), 7u);
  for (std::size_t i = 0; i < lat.rows(); ++i) EXPECT_EQ(lat.to_rows()[i], (Tokens{"il", "fait", "beau"}));
}

}  // namespace
}  // namespace lvrover
