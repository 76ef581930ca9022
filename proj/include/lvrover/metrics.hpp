#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvrover/error.hpp"
#include "lvrover/tokenize.hpp"
#include "lvrover/utf8.hpp"

namespace lvrover {

// Unit-cost Levenshtein distance between two random-access sequences,
// O(|a|*|b|) time and O(min(|a|,|b|)) space.
template <typename SeqA, typename SeqB>
std::size_t edit_distance(const SeqA& a, const SeqB& b) {
  const auto n = static_cast<std::size_t>(std::size(a));
  const auto m = static_cast<std::size_t>(std::size(b));
  if (n < m) return edit_distance(b, a);
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  auto ai = std::begin(a);
  for (std::size_t i = 1; i <= n; ++i, ++ai) {
    cur[0] = i;
    auto bj = std::begin(b);
    for (std::size_t j = 1; j <= m; ++j, ++bj) {
      const std::size_t sub = prev[j - 1] + (*ai == *bj ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

struct LineCounts {
  std::size_t ref_chars = 0;
  std::size_t ref_words = 0;
  std::size_t char_edits = 0;
  std::size_t word_edits = 0;
};

// Character counts are Unicode scalar values; delimiters count as characters.
inline LineCounts count_line(std::string_view reference, std::string_view hypothesis,
                             const TokenizeOptions& opts = {}) {
  const std::u32string rc = utf8::decode(reference);
  const std::u32string hc = utf8::decode(hypothesis);
  const auto rw = tokenize(reference, opts);
  const auto hw = tokenize(hypothesis, opts);
  return {rc.size(), rw.size(), edit_distance(rc, hc), edit_distance(rw, hw)};
}

inline double cer(std::string_view reference, std::string_view hypothesis) {
  const std::u32string rc = utf8::decode(reference);
  if (rc.empty()) throw UndefinedRateError("CER undefined for an empty reference");
  return static_cast<double>(edit_distance(rc, utf8::decode(hypothesis))) / static_cast<double>(rc.size());
}

inline double wer(std::string_view reference, std::string_view hypothesis, const TokenizeOptions& opts = {}) {
  const auto rw = tokenize(reference, opts);
  if (rw.empty()) throw UndefinedRateError("WER undefined for a reference without words");
  return static_cast<double>(edit_distance(rw, tokenize(hypothesis, opts))) / static_cast<double>(rw.size());
}

struct EvalReport {
  std::size_t total_ref_chars = 0;
  std::size_t total_ref_words = 0;
  std::size_t char_edits = 0;
  std::size_t word_edits = 0;
  double cer = 0.0;
  double wer = 0.0;
  std::optional<std::vector<LineCounts>> per_line;

  EvalReport& operator+=(const LineCounts& c) {
    total_ref_chars += c.ref_chars;
    total_ref_words += c.ref_words;
    char_edits += c.char_edits;
    word_edits += c.word_edits;
    return *this;
  }

  void finalize() {
    if (total_ref_chars == 0) throw UndefinedRateError("corpus CER undefined: no reference characters");
    if (total_ref_words == 0) throw UndefinedRateError("corpus WER undefined: no reference words");
    cer = static_cast<double>(char_edits) / static_cast<double>(total_ref_chars);
    wer = static_cast<double>(word_edits) / static_cast<double>(total_ref_words);
  }
};

using LinePair = std::pair<std::string, std::string>;  // (reference, hypothesis)

// Micro-averaged rates: summed edits over summed reference lengths.
inline EvalReport corpus_eval(std::span<const LinePair> pairs, bool keep_per_line = false,
                              const TokenizeOptions& opts = {}) {
  if (pairs.empty()) throw InputError("empty evaluation corpus");
  EvalReport report;
  if (keep_per_line) report.per_line.emplace().reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.empty()) throw InputError("empty reference at line " + std::to_string(i + 1));
    LineCounts c = count_line(pairs[i].first, pairs[i].second, opts);
    report += c;
    if (keep_per_line) report.per_line->push_back(c);
  }
  report.finalize();
  return report;
}

}  // namespace lvrover
