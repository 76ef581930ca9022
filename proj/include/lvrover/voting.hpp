#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lvrover/alignment.hpp"
#include "lvrover/error.hpp"
#include "lvrover/lexicon.hpp"
#include "lvrover/tokenize.hpp"

namespace lvrover {

enum class Direction { forward, backward };

inline const char* to_string(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

struct CombinationResult {
  std::vector<std::string> tokens;
  std::string text;
  std::size_t verified_count = 0;
  Direction direction = Direction::forward;
  std::size_t fallback_events = 0;
  WordCountVote vote;
};

// Frequency and observed successors of one candidate word in a column.
// "Successor" means the word at the next column in traversal order, so for a
// backward pass it is the word to the left.
struct WordTally {
  std::string_view word;
  std::size_t frequency = 0;
  std::size_t first_row = 0;
  std::unordered_set<std::string_view> successors;
};

class TallyPool {
 public:
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<WordTally>& entries() const noexcept { return entries_; }

  const WordTally* find(std::string_view w) const {
    auto it = index_.find(w);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  WordTally& add(std::string_view w, std::size_t row) {
    auto [it, inserted] = index_.try_emplace(w, entries_.size());
    if (inserted) entries_.push_back(WordTally{w, 0, row, {}});
    WordTally& e = entries_[it->second];
    ++e.frequency;
    return e;
  }

  // Highest frequency; ties to the earliest first occurrence, then the
  // lexicographically smallest word.
  const WordTally& best() const {
    const WordTally* best = &entries_.front();
    for (const auto& e : entries_) {
      if (e.frequency > best->frequency ||
          (e.frequency == best->frequency &&
           (e.first_row < best->first_row || (e.first_row == best->first_row && e.word < best->word)))) {
        best = &e;
      }
    }
    return *best;
  }

 private:
  std::vector<WordTally> entries_;
  std::unordered_map<std::string_view, std::size_t> index_;
};

// Column votes split by lexicon verification. A word lands in exactly one pool.
struct ColumnTally {
  TallyPool in_lexicon;
  TallyPool oov;
};

using SolutionSet = std::optional<std::unordered_set<std::string_view>>;  // nullopt admits every word

// Tallies column `col` over the rows whose word is admitted by `allowed`,
// recording the word each row carries at `next_col` (if any).
inline ColumnTally tally_column(const WordLattice& lattice, std::size_t col, std::optional<std::size_t> next_col,
                                const SolutionSet& allowed, const Lexicon& lex) {
  ColumnTally tally;
  for (std::size_t i = 0; i < lattice.rows(); ++i) {
    std::string_view w = lattice.at(i, col);
    if (allowed && !allowed->contains(w)) continue;
    WordTally* entry;
    if (tally.in_lexicon.find(w)) {
      entry = &tally.in_lexicon.add(w, i);
    } else if (tally.oov.find(w)) {
      entry = &tally.oov.add(w, i);
    } else {
      entry = lex.contains(w) ? &tally.in_lexicon.add(w, i) : &tally.oov.add(w, i);
    }
    if (next_col) entry->successors.insert(lattice.at(i, *next_col));
  }
  return tally;
}

// One greedy pass over the lattice in the given direction. At each column the
// most frequent lexicon-verified word wins if any survives the adjacency
// filter, otherwise the most frequent out-of-vocabulary word; the winner's
// observed successors become the filter for the following column.
inline CombinationResult vote_directional(const WordLattice& lattice, const Lexicon& lex, Direction direction) {
  if (lattice.empty()) throw InputError("cannot vote on an empty lattice");
  const std::size_t cols = lattice.cols();

  CombinationResult result;
  result.direction = direction;
  result.tokens.resize(cols);
  result.vote.nb_words = cols;
  result.vote.histogram[cols] = lattice.rows();
  for (std::size_t i = 0; i < lattice.rows(); ++i) result.vote.retained.push_back(i);

  SolutionSet allowed;  // column 0 admits all of its words
  for (std::size_t step = 0; step < cols; ++step) {
    const std::size_t col = direction == Direction::forward ? step : cols - 1 - step;
    std::optional<std::size_t> next_col;
    if (step + 1 < cols) next_col = direction == Direction::forward ? col + 1 : col - 1;

    ColumnTally tally = tally_column(lattice, col, next_col, allowed, lex);
    if (tally.in_lexicon.empty() && tally.oov.empty()) {
      // Dead end: nothing at this column follows the previous choice.
      ++result.fallback_events;
      allowed.reset();
      tally = tally_column(lattice, col, next_col, allowed, lex);
    }
    const bool verified = !tally.in_lexicon.empty();
    const WordTally& winner = verified ? tally.in_lexicon.best() : tally.oov.best();
    result.tokens[col] = std::string(winner.word);
    if (verified) ++result.verified_count;
    allowed.emplace(winner.successors);
  }
  return result;
}

inline void finalize_text(CombinationResult& r, char delimiter) { r.text = join(r.tokens, delimiter); }

// Runs both directions and keeps the one with more lexicon-verified words;
// ties keep the forward pass.
inline CombinationResult vote_bidirectional(const WordLattice& lattice, const Lexicon& lex) {
  CombinationResult fwd = vote_directional(lattice, lex, Direction::forward);
  CombinationResult bwd = vote_directional(lattice, lex, Direction::backward);
  return bwd.verified_count > fwd.verified_count ? std::move(bwd) : std::move(fwd);
}

struct CombineOptions {
  TokenizeOptions tokenize;
  bool forward_only = false;
};

// Word-count alignment followed by lexicon-verified lattice voting.
inline CombinationResult combine(std::span<const Hypothesis> hs, const Lexicon& lex, const CombineOptions& opts = {}) {
  auto [lattice, vote] = build_lattice(hs, opts.tokenize);
  CombinationResult result;
  if (lattice.empty()) {
    // Voted word count is zero: every retained hypothesis is empty, and so is
    // the combined line.
    result.tokens.clear();
  } else {
    result = opts.forward_only ? vote_directional(lattice, lex, Direction::forward) : vote_bidirectional(lattice, lex);
  }
  result.vote = std::move(vote);
  finalize_text(result, opts.tokenize.delimiter);
  return result;
}

}  // namespace lvrover
