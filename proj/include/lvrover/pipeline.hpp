#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "lvrover/cohort.hpp"
#include "lvrover/lexicon.hpp"
#include "lvrover/metrics.hpp"
#include "lvrover/parallel.hpp"
#include "lvrover/rover.hpp"
#include "lvrover/voting.hpp"

namespace lvrover {

inline std::vector<Hypothesis> to_hypotheses(const SimulatedLine& line) { return make_hypotheses(line.hypotheses); }

inline std::vector<CombinationResult> run_lvrover(std::span<const SimulatedLine> lines, const Lexicon& lex,
                                                  const CombineOptions& opts = {}, std::size_t threads = 1) {
  return parallel_map(lines.size(), threads, [&](std::size_t i) {
    const auto hs = to_hypotheses(lines[i]);
    return combine(hs, lex, opts);
  });
}

inline std::vector<RoverResult> run_rover(std::span<const SimulatedLine> lines, const RoverOptions& opts = {},
                                          std::size_t threads = 1) {
  return parallel_map(lines.size(), threads, [&](std::size_t i) {
    const auto hs = to_hypotheses(lines[i]);
    RoverResult r = rover_combine(hs, opts);
    r.wtn = {};
    return r;
  });
}

template <typename Results>
EvalReport evaluate_outputs(std::span<const std::string> truth, const Results& outputs,
                            const TokenizeOptions& opts = {}) {
  std::vector<LinePair> pairs;
  pairs.reserve(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) pairs.emplace_back(truth[i], outputs[i].text);
  return corpus_eval(pairs, false, opts);
}

// Corpus report of every simulated recognizer taken alone.
inline std::vector<EvalReport> evaluate_cohort(std::span<const std::string> truth,
                                               std::span<const SimulatedLine> lines,
                                               const TokenizeOptions& opts = {}, std::size_t threads = 1) {
  if (truth.size() != lines.size()) throw InputError("truth and cohort line counts differ");
  const std::size_t size = lines.empty() ? 0 : lines.front().hypotheses.size();
  return parallel_map(size, threads, [&](std::size_t r) {
    EvalReport rep;
    for (std::size_t i = 0; i < truth.size(); ++i) rep += count_line(truth[i], lines[i].hypotheses.at(r), opts);
    rep.finalize();
    return rep;
  });
}

inline Lexicon vocabulary_lexicon(std::span<const std::string> truth, const NormalizationPolicy& policy = {},
                                  const TokenizeOptions& opts = {}) {
  Lexicon lex(policy);
  for (const auto& line : truth)
    for (const auto& w : tokenize(line, opts)) lex.insert(w);
  return lex;
}

struct NamedLexicon {
  std::string name;
  Lexicon lexicon;
};

struct PipelineConfig {
  CohortConfig cohort;
  std::vector<NamedLexicon> lexicons;
  bool truth_lexicon = true;
  std::size_t distractor_factor = 0;  // pads the truth lexicon with factor * |vocabulary| distractors
  NormalizationPolicy policy;
  RoverOptions rover;
  CombineOptions combine;
  std::size_t threads = 1;
};

struct SystemRow {
  std::string system;
  std::string lexicon;
  std::optional<std::size_t> lexicon_size;
  std::optional<double> coverage;
  EvalReport report;
};

struct PipelineReport {
  std::vector<SystemRow> rows;
  std::size_t best_single = 0;  // recognizer index
  double mean_single_cer = 0.0;
};

// Simulates a cohort over `truth`, then scores the best single recognizer,
// classic ROVER and LV-ROVER under every configured lexicon.
inline PipelineReport run_pipeline(std::span<const std::string> truth, const PipelineConfig& cfg) {
  const auto& topts = cfg.combine.tokenize;
  const auto sim = simulate_cohort(truth, cfg.cohort, cfg.threads);
  const auto singles = evaluate_cohort(truth, sim, topts, cfg.threads);

  PipelineReport out;
  for (std::size_t r = 0; r < singles.size(); ++r) {
    out.mean_single_cer += singles[r].cer / static_cast<double>(singles.size());
    if (singles[r].cer < singles[out.best_single].cer) out.best_single = r;
  }
  out.rows.push_back({"single-best", "-", std::nullopt, std::nullopt, singles[out.best_single]});
  out.rows.push_back({"rover", "-", std::nullopt, std::nullopt,
                      evaluate_outputs(truth, run_rover(sim, cfg.rover, cfg.threads), topts)});

  auto add_lv = [&](const std::string& name, const Lexicon& lex) {
    std::optional<double> cov;
    if (!lex.empty()) cov = coverage(lex, truth, topts);
    out.rows.push_back({"lv-rover", name, lex.size(), cov,
                        evaluate_outputs(truth, run_lvrover(sim, lex, cfg.combine, cfg.threads), topts)});
  };

  add_lv("none", Lexicon(cfg.policy));
  for (const auto& nl : cfg.lexicons) add_lv(nl.name, nl.lexicon);
  if (cfg.lexicons.size() > 1) {
    Lexicon merged(cfg.lexicons.front().lexicon.policy());
    for (const auto& nl : cfg.lexicons) merged = merge(merged, nl.lexicon);
    add_lv("merged", merged);
  }
  if (cfg.truth_lexicon) {
    const Lexicon vocab = vocabulary_lexicon(truth, cfg.policy, topts);
    add_lv("truth", vocab);
    if (cfg.distractor_factor > 0) {
      std::u32string alphabet = cfg.cohort.base.alphabet;
      if (alphabet.empty()) alphabet = corpus_alphabet(truth, topts.delimiter);
      Lexicon padded = vocab;
      for (auto& w : make_distractors(cfg.distractor_factor * vocab.size(), alphabet, vocab.words(),
                                      cfg.cohort.master_seed))
        padded.insert(w);
      add_lv("truth+" + std::to_string(cfg.distractor_factor) + "x-distractors", padded);
    }
  }
  return out;
}

namespace detail {

inline std::string fmt_double(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

}  // namespace detail

inline std::string pipeline_csv(const PipelineReport& rep) {
  std::ostringstream os;
  os << "system,lexicon,lexicon_size,coverage,cer,wer,char_edits,ref_chars,word_edits,ref_words\n";
  for (const auto& r : rep.rows) {
    os << r.system << ',' << r.lexicon << ',' << (r.lexicon_size ? std::to_string(*r.lexicon_size) : "") << ','
       << (r.coverage ? detail::fmt_double(*r.coverage, 6) : "") << ',' << detail::fmt_double(r.report.cer, 6)
       << ',' << detail::fmt_double(r.report.wer, 6) << ',' << r.report.char_edits << ','
       << r.report.total_ref_chars << ',' << r.report.word_edits << ',' << r.report.total_ref_words << '\n';
  }
  return os.str();
}

inline std::string pipeline_table(const PipelineReport& rep) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-28s %10s %10s %8s %8s\n", "system", "lexicon", "size", "coverage%",
                "CER%", "WER%");
  os << line;
  for (const auto& r : rep.rows) {
    std::snprintf(line, sizeof line, "%-12s %-28s %10s %10s %8.2f %8.2f\n", r.system.c_str(), r.lexicon.c_str(),
                  r.lexicon_size ? std::to_string(*r.lexicon_size).c_str() : "-",
                  r.coverage ? detail::fmt_double(100.0 * *r.coverage, 2).c_str() : "-", 100.0 * r.report.cer,
                  100.0 * r.report.wer);
    os << line;
  }
  return os.str();
}

}  // namespace lvrover
