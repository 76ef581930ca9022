#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lvrover/cohort.hpp"
#include "lvrover/lexicon.hpp"
#include "lvrover/rover.hpp"
#include "lvrover/voting.hpp"

namespace lvrover::bench {

struct Config {
  std::vector<std::size_t> ns = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t line_chars = 80;
  std::size_t batch_lines = 4;
  std::size_t rover_n = 16;
  std::vector<std::size_t> rover_words = {16, 32, 64, 128};
  std::size_t repeats = 5;
  double min_seconds = 0.02;  // minimum wall time of one timed sample
  double noise_cer = 0.10;
  std::uint64_t seed = 1;
};

struct Row {
  std::string sweep;   // "n" (cohort size) or "words" (line length in words)
  std::string system;  // "lv-rover" or "rover"
  std::size_t n = 0;
  std::size_t line_chars = 0;  // mean ground-truth characters per line
  std::size_t words = 0;       // mean ground-truth words per line
  double median_seconds = 0.0;  // per line
  std::optional<double> ratio;  // against the previous row of the same sweep and system
};

// Median over `repeats` samples of the per-call wall time of `fn`. Each
// sample loops until `min_seconds` have elapsed.
template <typename Fn>
double median_time(Fn&& fn, std::size_t repeats, double min_seconds) {
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  fn();  // warm-up
  for (std::size_t r = 0; r < repeats; ++r) {
    std::size_t calls = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
      fn();
      ++calls;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < min_seconds);
    samples.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

struct Workload {
  std::vector<std::string> truth;
  std::vector<std::vector<Hypothesis>> hypotheses;  // per line, max_n each
};

// Ground-truth lines of about `chars` characters (or exactly `words` words when
// set), each corrupted by `n` simulated recognizers.
inline Workload make_workload(std::size_t lines, std::size_t chars, std::optional<std::size_t> words, std::size_t n,
                              double noise_cer, std::uint64_t seed) {
  auto corpus = make_synthetic_corpus(64, 2000, 4, 10, seed);
  Workload wl;
  Rng pick(derive_seed(seed, {0xB3}));
  for (std::size_t l = 0; l < lines; ++l) {
    std::string line;
    std::size_t count = 0;
    while (words ? count < *words : line.size() < chars) {
      if (!line.empty()) line.push_back(' ');
      line += corpus.vocabulary[pick.below(corpus.vocabulary.size())];
      ++count;
    }
    wl.truth.push_back(std::move(line));
  }
  CohortConfig cfg;
  cfg.size = n;
  cfg.base = channel_for_target_cer(noise_cer);
  cfg.jitter = 0.3;
  cfg.master_seed = seed;
  cfg.shared_confusion_seed = seed;
  for (const auto& sl : simulate_cohort(wl.truth, cfg)) wl.hypotheses.push_back(make_hypotheses(sl.hypotheses));
  return wl;
}

inline std::vector<Row> run(const Config& cfg, const Lexicon& lex = Lexicon{}) {
  std::vector<Row> rows;
  volatile std::size_t sink = 0;

  auto mean_sizes = [](const Workload& wl, Row& row) {
    std::size_t chars = 0, words = 0;
    for (const auto& t : wl.truth) chars += t.size(), words += count_tokens(t);
    row.line_chars = chars / wl.truth.size();
    row.words = words / wl.truth.size();
  };

  const std::size_t max_n = cfg.ns.empty() ? 1 : *std::max_element(cfg.ns.begin(), cfg.ns.end());
  const Workload wl = make_workload(cfg.batch_lines, cfg.line_chars, std::nullopt, max_n, cfg.noise_cer, cfg.seed);
  for (const char* system : {"lv-rover", "rover"}) {
    std::optional<double> prev;
    for (std::size_t n : cfg.ns) {
      std::vector<std::vector<Hypothesis>> batch;
      for (const auto& hs : wl.hypotheses) batch.emplace_back(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(n));
      const bool lv = std::string(system) == "lv-rover";
      double t = median_time(
          [&] {
            for (const auto& hs : batch) sink = sink + (lv ? combine(hs, lex).tokens.size() : rover_combine(hs).tokens.size());
          },
          cfg.repeats, cfg.min_seconds);
      Row row{"n", system, n, 0, 0, t / static_cast<double>(batch.size()), std::nullopt};
      mean_sizes(wl, row);
      if (prev) row.ratio = row.median_seconds / *prev;
      prev = row.median_seconds;
      rows.push_back(row);
    }
  }

  std::optional<double> prev;
  for (std::size_t words : cfg.rover_words) {
    const Workload wlw = make_workload(cfg.batch_lines, 0, words, cfg.rover_n, cfg.noise_cer, cfg.seed + words);
    double t = median_time(
        [&] {
          for (const auto& hs : wlw.hypotheses) sink = sink + rover_combine(hs).tokens.size();
        },
        cfg.repeats, cfg.min_seconds);
    Row row{"words", "rover", cfg.rover_n, 0, 0, t / static_cast<double>(wlw.hypotheses.size()), std::nullopt};
    mean_sizes(wlw, row);
    if (prev) row.ratio = row.median_seconds / *prev;
    prev = row.median_seconds;
    rows.push_back(row);
  }
  return rows;
}

inline std::string to_csv(const std::vector<Row>& rows) {
  std::ostringstream os;
  os << "sweep,system,n,line_chars,words,median_seconds,ratio\n";
  for (const auto& r : rows) {
    os << r.sweep << ',' << r.system << ',' << r.n << ',' << r.line_chars << ',' << r.words << ','
       << r.median_seconds << ',';
    if (r.ratio) os << *r.ratio;
    os << '\n';
  }
  return os.str();
}

}  // namespace lvrover::bench
