#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lvrover/error.hpp"
#include "lvrover/parallel.hpp"
#include "lvrover/random.hpp"
#include "lvrover/utf8.hpp"

namespace lvrover {

// Per-character noise rates of a simulated recognizer.
struct ChannelParams {
  double sub_rate = 0.0;
  double ins_rate = 0.0;
  double del_rate = 0.0;
  double space_ins_rate = 0.0;  // split a word after a character
  double space_del_rate = 0.0;  // drop a delimiter, merging two words
  std::u32string alphabet;      // substitution and insertion symbols

  void validate(char delimiter = ' ') const {
    for (double r : {sub_rate, ins_rate, del_rate, space_ins_rate, space_del_rate}) {
      if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("channel rates must lie in [0, 1]");
    }
    if (sub_rate + del_rate > 1.0 + 1e-12) throw ConfigError("sub_rate + del_rate must not exceed 1");
    if (alphabet.empty() && (sub_rate > 0.0 || ins_rate > 0.0)) throw ConfigError("channel alphabet is empty");
    if (alphabet.find(static_cast<char32_t>(static_cast<unsigned char>(delimiter))) != std::u32string::npos)
      throw ConfigError("channel alphabet must not contain the delimiter");
  }
};

// Cohort-wide substitution bias: each symbol has one preferred confusion,
// used with probability `strength` whenever a substitution fires.
struct ConfusionTable {
  std::unordered_map<char32_t, char32_t> preferred;
  double strength = 0.0;

  static ConfusionTable build(std::u32string_view alphabet, std::uint64_t seed, double strength) {
    ConfusionTable t;
    t.strength = strength;
    Rng rng(derive_seed(seed, {0xC0F5}));
    for (char32_t c : alphabet) {
      if (alphabet.size() < 2) break;
      char32_t sub;
      do sub = alphabet[rng.below(alphabet.size())];
      while (sub == c);
      t.preferred.emplace(c, sub);
    }
    return t;
  }
};

namespace detail {

inline char32_t substitute(char32_t c, const ChannelParams& p, const ConfusionTable* confusion, double u_bias,
                           double u_pick) {
  if (confusion != nullptr && u_bias < confusion->strength) {
    if (auto it = confusion->preferred.find(c); it != confusion->preferred.end()) return it->second;
  }
  const std::size_t n = p.alphabet.size();
  if (n == 1) return p.alphabet[0];
  // Uniform over the alphabet minus `c` when `c` belongs to it.
  const bool member = p.alphabet.find(c) != std::u32string::npos;
  const std::size_t choices = member ? n - 1 : n;
  auto k = std::min(static_cast<std::size_t>(u_pick * static_cast<double>(choices)), choices - 1);
  char32_t s = p.alphabet[k];
  if (member && s == c) s = p.alphabet[n - 1];
  return s;
}

}  // namespace detail

// Passes a ground-truth line through the noise channel. Every character
// consumes the same number of draws whatever the rates, so two channels that
// differ only in rates see identical random streams.
inline std::string corrupt_line(std::string_view line, const ChannelParams& params, Rng& rng,
                                const ConfusionTable* confusion = nullptr, char delimiter = ' ') {
  if (line.empty()) throw InputError("cannot corrupt an empty line");
  params.validate(delimiter);
  const std::u32string cps = utf8::decode(line);
  const auto delim = static_cast<char32_t>(static_cast<unsigned char>(delimiter));
  std::u32string out;
  out.reserve(cps.size() + cps.size() / 4);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    const double u_op = rng.uniform();
    const double u_bias = rng.uniform();
    const double u_pick = rng.uniform();
    const double u_ins = rng.uniform();
    const double u_ins_pick = rng.uniform();
    const double u_space = rng.uniform();

    if (c == delim) {
      if (!(u_op < params.del_rate || u_space < params.space_del_rate)) out.push_back(c);
    } else if (u_op < params.del_rate) {
      // deleted
    } else if (u_op < params.del_rate + params.sub_rate) {
      out.push_back(detail::substitute(c, params, confusion, u_bias, u_pick));
    } else {
      out.push_back(c);
    }
    if (u_ins < params.ins_rate) {
      out.push_back(params.alphabet[std::min(static_cast<std::size_t>(u_ins_pick * params.alphabet.size()),
                                             params.alphabet.size() - 1)]);
    }
    if (c != delim && i + 1 < cps.size() && cps[i + 1] != delim && u_space < params.space_ins_rate) {
      out.push_back(delim);
    }
  }
  return utf8::encode(out);
}

struct CohortConfig {
  std::size_t size = 1;
  ChannelParams base;
  double jitter = 0.0;  // relative spread of each recognizer's rates around base
  std::uint64_t shared_confusion_seed = 0;
  double confusion_strength = 0.5;
  std::uint64_t master_seed = 0;
  char delimiter = ' ';

  void validate() const {
    if (size == 0) throw ConfigError("cohort size must be at least 1");
    if (!(jitter >= 0.0)) throw ConfigError("jitter must be non-negative");
    if (!(confusion_strength >= 0.0 && confusion_strength <= 1.0))
      throw ConfigError("confusion strength must lie in [0, 1]");
  }
};

// Rates for recognizer `index`: base * (1 + jitter * u), u uniform in
// [-1, 1], clamped to [0, 1]; sub and del are rescaled if their sum exceeds 1.
inline ChannelParams recognizer_params(const CohortConfig& cfg, std::size_t index) {
  ChannelParams p = cfg.base;
  Rng rng(derive_seed(cfg.master_seed, {0x717E, index}));
  for (double* r : {&p.sub_rate, &p.ins_rate, &p.del_rate, &p.space_ins_rate, &p.space_del_rate}) {
    const double u = 2.0 * rng.uniform() - 1.0;
    *r = std::clamp(*r * (1.0 + cfg.jitter * u), 0.0, 1.0);
  }
  if (p.sub_rate + p.del_rate > 1.0) {
    const double s = 1.0 / (p.sub_rate + p.del_rate);
    p.sub_rate *= s;
    p.del_rate *= s;
  }
  return p;
}

inline std::u32string corpus_alphabet(std::span<const std::string> lines, char delimiter = ' ') {
  std::set<char32_t> seen;
  for (const auto& l : lines)
    for (char32_t c : utf8::decode(l))
      if (c != static_cast<char32_t>(static_cast<unsigned char>(delimiter))) seen.insert(c);
  return {seen.begin(), seen.end()};
}

struct SimulatedLine {
  std::string line_id;
  std::vector<std::string> hypotheses;  // one per recognizer, recognizer order
};

// Corrupts every line once per recognizer. Each (line, recognizer) pair owns
// a generator seeded from (master_seed, line, recognizer), so the output does
// not depend on `threads`.
inline std::vector<SimulatedLine> simulate_cohort(std::span<const std::string> lines, CohortConfig cfg,
                                                  std::size_t threads = 1) {
  cfg.validate();
  if (lines.empty()) throw InputError("cannot simulate an empty corpus");
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].empty()) throw InputError("empty ground-truth line " + std::to_string(i + 1));
  if (cfg.base.alphabet.empty()) cfg.base.alphabet = corpus_alphabet(lines, cfg.delimiter);
  cfg.base.validate(cfg.delimiter);

  std::vector<ChannelParams> params;
  params.reserve(cfg.size);
  for (std::size_t r = 0; r < cfg.size; ++r) params.push_back(recognizer_params(cfg, r));
  const ConfusionTable confusion = ConfusionTable::build(cfg.base.alphabet, cfg.shared_confusion_seed,
                                                         cfg.confusion_strength);

  return parallel_map(lines.size(), threads, [&](std::size_t li) {
    SimulatedLine out{std::to_string(li), {}};
    out.hypotheses.reserve(cfg.size);
    for (std::size_t r = 0; r < cfg.size; ++r) {
      Rng rng(derive_seed(cfg.master_seed, {li, r}));
      out.hypotheses.push_back(corrupt_line(lines[li], params[r], rng, &confusion, cfg.delimiter));
    }
    return out;
  });
}

// Splits a target character error rate across the channel knobs. The split
// was calibrated on synthetic corpora of 4-10 word lines; measured CER lands
// close to `target` for targets up to about 0.3.
inline ChannelParams channel_for_target_cer(double target) {
  ChannelParams p;
  p.sub_rate = 0.68 * target;
  p.del_rate = 0.17 * target;
  p.ins_rate = 0.17 * target;
  p.space_ins_rate = 0.06 * target;
  p.space_del_rate = 0.28 * target;
  return p;
}

struct SyntheticCorpus {
  std::vector<std::string> lines;
  std::vector<std::string> vocabulary;  // distinct words, generation order
};

// Random lines over a random vocabulary with Zipf-like word frequencies.
inline SyntheticCorpus make_synthetic_corpus(std::size_t num_lines, std::size_t vocab_size, std::size_t min_words,
                                             std::size_t max_words, std::uint64_t seed) {
  if (num_lines == 0 || vocab_size == 0 || min_words == 0 || max_words < min_words)
    throw ConfigError("invalid synthetic corpus shape");
  static constexpr std::u32string_view kLetters = U"abcdefghijklmnopqrstuvwxyzeeaaiioouénèàçêôrstl";
  Rng rng(derive_seed(seed, {0xC0DE}));
  SyntheticCorpus corpus;
  std::set<std::string> seen;
  while (corpus.vocabulary.size() < vocab_size) {
    const std::size_t len = 1 + rng.below(9);
    std::u32string w;
    for (std::size_t k = 0; k < len; ++k) w.push_back(kLetters[rng.below(kLetters.size())]);
    std::string word = utf8::encode(w);
    if (seen.insert(word).second) corpus.vocabulary.push_back(std::move(word));
  }
  std::vector<double> cdf(vocab_size);
  double acc = 0.0;
  for (std::size_t k = 0; k < vocab_size; ++k) cdf[k] = (acc += 1.0 / std::pow(static_cast<double>(k + 1), 0.8));
  for (auto& c : cdf) c /= acc;

  corpus.lines.reserve(num_lines);
  for (std::size_t i = 0; i < num_lines; ++i) {
    const std::size_t words = min_words + rng.below(max_words - min_words + 1);
    std::string line;
    for (std::size_t k = 0; k < words; ++k) {
      const double u = rng.uniform();
      const auto idx = static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (k > 0) line.push_back(' ');
      line += corpus.vocabulary[std::min(idx, vocab_size - 1)];
    }
    corpus.lines.push_back(std::move(line));
  }
  return corpus;
}

// `count` random words over `alphabet` (lengths 1-10) that avoid `exclude`
// and each other.
template <typename ExcludeSet>
std::vector<std::string> make_distractors(std::size_t count, std::u32string_view alphabet, const ExcludeSet& exclude,
                                          std::uint64_t seed) {
  if (alphabet.empty()) throw ConfigError("distractor alphabet is empty");
  Rng rng(derive_seed(seed, {0xD157}));
  std::set<std::string> made;
  std::vector<std::string> out;
  out.reserve(count);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * count + 1000) throw ConfigError("cannot draw enough distinct distractor words");
    const std::size_t len = 1 + rng.below(10);
    std::u32string w;
    for (std::size_t k = 0; k < len; ++k) w.push_back(alphabet[rng.below(alphabet.size())]);
    std::string word = utf8::encode(w);
    if (exclude.contains(word) || !made.insert(word).second) continue;
    out.push_back(std::move(word));
  }
  return out;
}

}  // namespace lvrover
