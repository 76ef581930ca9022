#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lvrover/alignment.hpp"
#include "lvrover/error.hpp"
#include "lvrover/lexicon.hpp"

namespace lvrover {

struct BestPath {
  std::vector<std::string> tokens;
  std::size_t verified_count = 0;
  std::size_t column_frequency = 0;  // sum over columns of the chosen word's frequency
};

// Exhaustive search over every token sequence in which each consecutive pair
// was seen consecutively in at least one lattice row. Maximizes the number of
// lexicon-verified words, then total column frequency, then prefers the
// lexicographically smallest sequence. Test oracle: refuses lattices wider
// than 8 columns or with more than 8 distinct words in a column.
inline BestPath brute_force_best_path(const WordLattice& lattice, const Lexicon& lex) {
  constexpr std::size_t kMaxCols = 8;
  constexpr std::size_t kMaxVocab = 8;
  if (lattice.empty()) throw InputError("cannot search an empty lattice");
  const std::size_t cols = lattice.cols();
  if (cols > kMaxCols) throw InputError("oracle bound exceeded: more than 8 columns");

  std::vector<std::map<std::string, std::size_t>> freq(cols);
  for (std::size_t i = 0; i < lattice.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) ++freq[j][lattice.at(i, j)];
  for (const auto& f : freq)
    if (f.size() > kMaxVocab) throw InputError("oracle bound exceeded: more than 8 words in a column");

  std::set<std::pair<std::string, std::string>> edges_at_col[kMaxCols];
  for (std::size_t i = 0; i < lattice.rows(); ++i)
    for (std::size_t j = 0; j + 1 < cols; ++j) edges_at_col[j].emplace(lattice.at(i, j), lattice.at(i, j + 1));

  BestPath best;
  bool have_best = false;
  std::vector<std::string> path;
  std::size_t verified = 0;
  std::size_t total_freq = 0;

  auto better = [&]() {
    if (!have_best) return true;
    if (verified != best.verified_count) return verified > best.verified_count;
    if (total_freq != best.column_frequency) return total_freq > best.column_frequency;
    return path < best.tokens;
  };

  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == cols) {
      if (better()) {
        best = {path, verified, total_freq};
        have_best = true;
      }
      return;
    }
    for (const auto& [word, f] : freq[j]) {
      if (j > 0 && !edges_at_col[j - 1].contains({path.back(), word})) continue;
      const bool in_lex = lex.contains(word);
      path.push_back(word);
      verified += in_lex;
      total_freq += f;
      self(self, j + 1);
      total_freq -= f;
      verified -= in_lex;
      path.pop_back();
    }
  };
  search(search, 0);
  return best;
}

}  // namespace lvrover
