#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lvrover/alignment.hpp"
#include "lvrover/error.hpp"
#include "lvrover/tokenize.hpp"

namespace lvrover {

// One correspondence set of a word transition network. NULL (no word) is
// tracked apart from real words, so an empty-string token stays distinct.
struct Slot {
  std::map<std::string, std::size_t> words;
  std::size_t null_count = 0;

  std::size_t total() const {
    std::size_t n = null_count;
    for (const auto& [w, f] : words) n += f;
    return n;
  }
  bool contains(const std::string& w) const { return words.find(w) != words.end(); }

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct WordTransitionNetwork {
  std::vector<Slot> slots;
  std::size_t num_aligned = 0;

  static WordTransitionNetwork seed(std::span<const std::string> tokens) {
    WordTransitionNetwork wtn;
    wtn.num_aligned = 1;
    wtn.slots.reserve(tokens.size());
    for (const auto& t : tokens) wtn.slots.push_back(Slot{{{t, 1}}, 0});
    return wtn;
  }
};

struct EditCosts {
  unsigned substitution = 1;
  unsigned insertion = 1;
  unsigned deletion = 1;

  void validate() const {
    if (substitution == 0 || insertion == 0 || deletion == 0)
      throw ConfigError("edit costs must be positive so that a match is strictly cheapest");
  }
};

// Levenshtein alignment of `tokens` against the slot sequence (a token matches
// a slot at zero cost when the slot already holds it), then merges the result:
// matched and substituted tokens join their slot, deleted slots gain a NULL,
// and inserted tokens open new slots padded with NULL for every earlier
// hypothesis. O(L * L') per fold.
inline void fold_into(WordTransitionNetwork& wtn, std::span<const std::string> tokens, const EditCosts& costs = {}) {
  if (wtn.num_aligned == 0) throw InputError("word transition network must be seeded before folding");
  costs.validate();
  const std::size_t L = wtn.slots.size();
  const std::size_t M = tokens.size();
  const std::size_t width = M + 1;
  std::vector<unsigned> d((L + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> unsigned& { return d[i * width + j]; };
  auto sub_cost = [&](std::size_t i, std::size_t j) { return wtn.slots[i - 1].contains(tokens[j - 1]) ? 0u : costs.substitution; };

  for (std::size_t j = 1; j <= M; ++j) at(0, j) = at(0, j - 1) + costs.insertion;
  for (std::size_t i = 1; i <= L; ++i) {
    at(i, 0) = at(i - 1, 0) + costs.deletion;
    for (std::size_t j = 1; j <= M; ++j) {
      unsigned best = at(i - 1, j - 1) + sub_cost(i, j);
      best = std::min(best, at(i - 1, j) + costs.deletion);
      best = std::min(best, at(i, j - 1) + costs.insertion);
      at(i, j) = best;
    }
  }

  enum class Op { align, del, ins };
  std::vector<Op> ops;
  ops.reserve(L + M);
  std::size_t i = L, j = M;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + sub_cost(i, j)) {
      ops.push_back(Op::align), --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + costs.deletion) {
      ops.push_back(Op::del), --i;
    } else {
      ops.push_back(Op::ins), --j;
    }
  }

  std::vector<Slot> merged;
  merged.reserve(L + M);
  std::size_t si = 0, ti = 0;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (*it) {
      case Op::align:
        merged.push_back(std::move(wtn.slots[si++]));
        ++merged.back().words[tokens[ti++]];
        break;
      case Op::del:
        merged.push_back(std::move(wtn.slots[si++]));
        ++merged.back().null_count;
        break;
      case Op::ins:
        merged.push_back(Slot{{{tokens[ti++], 1}}, wtn.num_aligned});
        break;
    }
  }
  wtn.slots = std::move(merged);
  ++wtn.num_aligned;
}

inline WordTransitionNetwork dp_align_into_wtn(WordTransitionNetwork wtn, std::span<const std::string> tokens,
                                               const EditCosts& costs = {}) {
  fold_into(wtn, tokens, costs);
  return wtn;
}

enum class ReferencePolicy { first, longest };

struct RoverOptions {
  TokenizeOptions tokenize;
  ReferencePolicy reference = ReferencePolicy::first;
  EditCosts costs;
};

struct RoverResult {
  std::vector<std::string> tokens;
  std::string text;
  WordTransitionNetwork wtn;
};

// Most frequent entry per slot; ties go to the lexicographically smallest
// word and NULL loses every tie. NULL winners emit nothing.
inline std::vector<std::string> vote_slots(const WordTransitionNetwork& wtn) {
  std::vector<std::string> out;
  for (const auto& slot : wtn.slots) {
    const std::string* best = nullptr;
    std::size_t best_freq = 0;
    for (const auto& [w, f] : slot.words) {  // ascending order: strict > keeps the smallest word on ties
      if (f > best_freq) best = &w, best_freq = f;
    }
    if (best != nullptr && best_freq >= slot.null_count) out.push_back(*best);
  }
  return out;
}

// Classic ROVER: the reference hypothesis seeds the network, the others are
// folded in input order, then each slot is decided by frequency.
inline RoverResult rover_combine(std::span<const Hypothesis> hs, const RoverOptions& opts = {}) {
  if (hs.empty()) throw InputError("empty hypothesis pool");
  std::vector<std::vector<std::string>> toks;
  toks.reserve(hs.size());
  for (const auto& h : hs) toks.push_back(tokenize(h.text, opts.tokenize));

  std::size_t ref = 0;
  if (opts.reference == ReferencePolicy::longest) {
    for (std::size_t i = 1; i < toks.size(); ++i)
      if (toks[i].size() > toks[ref].size()) ref = i;
  }
  RoverResult result;
  result.wtn = WordTransitionNetwork::seed(toks[ref]);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i != ref) fold_into(result.wtn, toks[i], opts.costs);
  }
  result.tokens = vote_slots(result.wtn);
  result.text = join(result.tokens, opts.tokenize.delimiter);
  return result;
}

}  // namespace lvrover
