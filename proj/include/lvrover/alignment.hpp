#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvrover/error.hpp"
#include "lvrover/tokenize.hpp"

namespace lvrover {

// One recognizer's raw output for one text line.
struct Hypothesis {
  std::string text;
  std::string recognizer_id;
};

// Wraps plain strings, numbering recognizers by position.
inline std::vector<Hypothesis> make_hypotheses(std::span<const std::string> texts) {
  std::vector<Hypothesis> hs;
  hs.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) hs.push_back({texts[i], std::to_string(i)});
  return hs;
}

inline std::vector<Hypothesis> make_hypotheses(std::initializer_list<std::string_view> texts) {
  std::vector<Hypothesis> hs;
  std::size_t i = 0;
  for (auto t : texts) hs.push_back({std::string(t), std::to_string(i++)});
  return hs;
}

struct WordCountVote {
  std::map<std::size_t, std::size_t> histogram;  // word count -> number of hypotheses
  std::size_t nb_words = 0;
  std::vector<std::size_t> retained;  // input positions whose word count is nb_words, ascending

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [count, freq] : histogram) n += freq;
    return n;
  }
};

// Rectangular matrix of word tokens: one row per retained hypothesis, one
// column per word position.
class WordLattice {
 public:
  WordLattice() = default;
  WordLattice(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  // Every row must have the same length.
  static WordLattice from_rows(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    WordLattice lat(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("lattice rows must all have the same length");
      for (std::size_t j = 0; j < cols; ++j) lat.at(i, j) = rows[i][j];
    }
    return lat;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const std::string& at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
  std::string& at(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }

  std::span<const std::string> row(std::size_t i) const { return {cells_.data() + i * cols_, cols_}; }

  std::vector<std::vector<std::string>> to_rows() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  friend bool operator==(const WordLattice&, const WordLattice&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> cells_;
};

// Majority vote over per-hypothesis word counts. Ties go to the smallest
// count.
inline WordCountVote estimate_word_count(std::span<const Hypothesis> hs, const TokenizeOptions& opts = {}) {
  if (hs.empty()) throw InputError("empty hypothesis pool");
  WordCountVote vote;
  std::vector<std::size_t> counts(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    counts[i] = count_tokens(hs[i].text, opts);
    ++vote.histogram[counts[i]];
  }
  std::size_t best_freq = 0;
  for (const auto& [count, freq] : vote.histogram) {  // ascending count, so strict > keeps the smallest on ties
    if (freq > best_freq) {
      best_freq = freq;
      vote.nb_words = count;
    }
  }
  vote.retained.reserve(best_freq);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (counts[i] == vote.nb_words) vote.retained.push_back(i);
  }
  return vote;
}

// Keeps the hypotheses matching the voted word count and stacks their tokens
// into a lattice, rows in input order. Linear in the total input size.
inline std::pair<WordLattice, WordCountVote> build_lattice(std::span<const Hypothesis> hs,
                                                           const TokenizeOptions& opts = {}) {
  WordCountVote vote = estimate_word_count(hs, opts);
  WordLattice lattice(vote.retained.size(), vote.nb_words);
  for (std::size_t r = 0; r < vote.retained.size(); ++r) {
    auto tokens = tokenize(hs[vote.retained[r]].text, opts);
    for (std::size_t j = 0; j < tokens.size(); ++j) lattice.at(r, j) = std::move(tokens[j]);
  }
  return {std::move(lattice), std::move(vote)};
}

}  // namespace lvrover
