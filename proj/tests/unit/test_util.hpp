#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvrover/alignment.hpp"
#include "lvrover/random.hpp"

namespace lvrover::testing {

// Random rectangular lattice; cell (i, j) is drawn from `vocab` words named
// "<prefix><k>".
inline WordLattice random_lattice(Rng& rng, std::size_t rows, std::size_t cols, std::size_t vocab) {
  WordLattice lat(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) lat.at(i, j) = "w" + std::to_string(rng.below(vocab));
  return lat;
}

inline std::vector<std::string> random_subset(Rng& rng, std::size_t vocab, double p) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < vocab; ++k)
    if (rng.uniform() < p) out.push_back("w" + std::to_string(k));
  return out;
}

}  // namespace lvrover::testing
