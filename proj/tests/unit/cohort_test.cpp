#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "lvrover/cohort.hpp"
#include "lvrover/metrics.hpp"
#include "lvrover/pipeline.hpp"

namespace lvrover {
namespace {

ChannelParams clean(std::u32string alphabet = U"abcdefghij") {
  ChannelParams p;
  p.alphabet = std::move(alphabet);
  return p;
}

TEST(CorruptLine, IdentityChannel) {
  Rng rng(1);
  EXPECT_EQ(corrupt_line("le petit chat", clean(), rng), "le petit chat");
}

TEST(CorruptLine, FullDeletionEmptiesLine) {
  ChannelParams p = clean();
  p.del_rate = 1.0;
  Rng rng(2);
  EXPECT_EQ(corrupt_line("le petit chat", p, rng), "");
}

TEST(CorruptLine, SubstitutionRateMatchesBinomialExpectation) {
  ChannelParams p = clean(U"abcdefghijklmnopqrstuvwxyz");
  p.sub_rate = 0.1;
  std::string line(10'000, 'a');
  Rng chars(3);
  for (auto& c : line) c = static_cast<char>('a' + chars.below(26));
  Rng rng(4);
  const std::string out = corrupt_line(line, p, rng);
  ASSERT_EQ(out.size(), line.size());
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < line.size(); ++i) diffs += out[i] != line[i];
  const double frac = static_cast<double>(diffs) / static_cast<double>(line.size());
  EXPECT_GE(frac, 0.08);
  EXPECT_LE(frac, 0.12);
}

TEST(CorruptLine, SpaceKnobsChangeWordCounts) {
  const std::string line = "aaaa bbbb cccc dddd eeee ffff";
  ChannelParams merge = clean();
  merge.space_del_rate = 1.0;
  Rng r1(5);
  EXPECT_EQ(corrupt_line(line, merge, r1), "aaaabbbbccccddddeeeeffff");
  ChannelParams split = clean();
  split.space_ins_rate = 1.0;
  Rng r2(6);
  EXPECT_EQ(count_tokens(corrupt_line(line, split, r2)), 24u);
}

TEST(CorruptLine, RejectsInvalidConfiguration) {
  Rng rng(7);
  ChannelParams p = clean();
  p.sub_rate = 0.7;
  p.del_rate = 0.5;
  EXPECT_THROW(corrupt_line("abc", p, rng), ConfigError);
  p = clean();
  p.ins_rate = -0.1;
  EXPECT_THROW(corrupt_line("abc", p, rng), ConfigError);
  p = clean(U"ab ");
  EXPECT_THROW(corrupt_line("abc", p, rng), ConfigError);
  p = clean(U"");
  p.sub_rate = 0.1;
  EXPECT_THROW(corrupt_line("abc", p, rng), ConfigError);
  EXPECT_THROW(corrupt_line("", clean(), rng), InputError);
}

TEST(CorruptLine, SameGeneratorStateSameOutput) {
  ChannelParams p = channel_for_target_cer(0.2);
  p.alphabet = U"abcdeé";
  Rng a(9), b(9);
  EXPECT_EQ(corrupt_line("il était une fois", p, a), corrupt_line("il était une fois", p, b));
}

TEST(SimulateCohort, SingleCleanRecognizerCopiesCorpus) {
  const std::vector<std::string> truth{"un deux", "trois"};
  CohortConfig cfg;
  cfg.size = 1;
  const auto sim = simulate_cohort(truth, cfg);
  ASSERT_EQ(sim.size(), 2u);
  EXPECT_EQ(sim[0].hypotheses, std::vector<std::string>{"un deux"});
  EXPECT_EQ(sim[1].hypotheses, std::vector<std::string>{"trois"});
  EXPECT_EQ(sim[1].line_id, "1");
}

TEST(SimulateCohort, DeterministicAcrossRunsAndThreadCounts) {
  const auto corpus = make_synthetic_corpus(40, 200, 3, 8, 5);
  CohortConfig cfg;
  cfg.size = 20;
  cfg.base = channel_for_target_cer(0.15);
  cfg.jitter = 0.5;
  cfg.master_seed = 77;
  const auto a = simulate_cohort(corpus.lines, cfg, 1);
  const auto b = simulate_cohort(corpus.lines, cfg, 1);
  const auto c = simulate_cohort(corpus.lines, cfg, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].hypotheses, b[i].hypotheses);
    EXPECT_EQ(a[i].hypotheses, c[i].hypotheses);
  }
  cfg.master_seed = 78;
  EXPECT_NE(simulate_cohort(corpus.lines, cfg)[0].hypotheses, a[0].hypotheses);
}

TEST(SimulateCohort, RejectsBadInput) {
  CohortConfig cfg;
  cfg.size = 0;
  const std::vector<std::string> truth{"a"};
  EXPECT_THROW(simulate_cohort(truth, cfg), ConfigError);
  cfg.size = 2;
  EXPECT_THROW(simulate_cohort(std::vector<std::string>{}, cfg), InputError);
  EXPECT_THROW(simulate_cohort(std::vector<std::string>{"a", ""}, cfg), InputError);
  cfg.jitter = -1.0;
  EXPECT_THROW(simulate_cohort(truth, cfg), ConfigError);
}

TEST(SimulateCohort, JitteredRatesStayValid) {
  CohortConfig cfg;
  cfg.base.sub_rate = 0.6;
  cfg.base.del_rate = 0.4;
  cfg.jitter = 3.0;
  for (std::size_t r = 0; r < 200; ++r) {
    const auto p = recognizer_params(cfg, r);
    EXPECT_LE(p.sub_rate + p.del_rate, 1.0 + 1e-12);
    EXPECT_GE(p.sub_rate, 0.0);
    EXPECT_LE(p.del_rate, 1.0);
  }
}

// Mean single-recognizer CER of a 100-member cohort lands near the target.
TEST(SimulateCohort, TargetCerCalibration) {
  const auto corpus = make_synthetic_corpus(300, 1000, 4, 10, 8);
  CohortConfig cfg;
  cfg.size = 100;
  cfg.base = channel_for_target_cer(0.10);
  cfg.jitter = 0.3;
  cfg.master_seed = 8;
  const auto sim = simulate_cohort(corpus.lines, cfg);
  double mean = 0.0;
  for (const auto& rep : evaluate_cohort(corpus.lines, sim)) mean += rep.cer / 100.0;
  EXPECT_GE(mean, 0.07);
  EXPECT_LE(mean, 0.13);
}

TEST(SimulateCohort, CerGrowsWithSubstitutionRate) {
  const auto corpus = make_synthetic_corpus(150, 500, 4, 10, 9);
  double prev = -1.0;
  for (double sub : {0.0, 0.05, 0.1, 0.2, 0.4}) {
    CohortConfig cfg;
    cfg.size = 5;
    cfg.base = channel_for_target_cer(0.05);
    cfg.base.sub_rate = sub;
    cfg.master_seed = 10;
    const auto sim = simulate_cohort(corpus.lines, cfg);
    double mean = 0.0;
    for (const auto& rep : evaluate_cohort(corpus.lines, sim)) mean += rep.cer / 5.0;
    EXPECT_GE(mean, prev - 0.005) << "sub_rate=" << sub;
    prev = mean;
  }
}

TEST(SyntheticCorpus, ShapeAndDistractors) {
  const auto corpus = make_synthetic_corpus(50, 100, 2, 5, 3);
  ASSERT_EQ(corpus.lines.size(), 50u);
  EXPECT_EQ(corpus.vocabulary.size(), 100u);
  for (const auto& l : corpus.lines) {
    EXPECT_GE(count_tokens(l), 2u);
    EXPECT_LE(count_tokens(l), 5u);
  }
  const std::set<std::string> vocab(corpus.vocabulary.begin(), corpus.vocabulary.end());
  const auto d = make_distractors(500, corpus_alphabet(corpus.lines), vocab, 4);
  EXPECT_EQ(d.size(), 500u);
  for (const auto& w : d) EXPECT_FALSE(vocab.contains(w));
  EXPECT_EQ(std::set<std::string>(d.begin(), d.end()).size(), d.size());
}

}  // namespace
}  // namespace lvrover
