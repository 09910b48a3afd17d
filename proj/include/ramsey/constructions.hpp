#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Level-block coloring on B_{sum(e_i)-1}, t = 1: the first e_1 levels get
// color 1, the next e_2 levels color 2, and so on.
ChainColoring level_block_coloring(const std::vector<int>& e_values);

// The matching lower-bound coloring on B_{k+1}, t = 1: level i gets color i
// for 1 <= i <= k, the empty set color 1, the full set color k.
ChainColoring matching_lower_coloring(int k, int s);

// The diamond lower-bound coloring on B_{2k-1}, t = 1: levels 2i-2 and 2i-1
// get color i.
ChainColoring diamond_lower_coloring(int k, int r);

// Parameter record for the biased t-chain sampler; see prob_bounds.hpp for the
// threshold calculator over the same record.
struct LLLParameters;

// Independently color every t-chain of B_host_n: color i < k with probability
// p/(k-1), color k with probability 1-p, where p = (n_k+t*d+2)/m_k * ln(n) and
// n = 2^host_n is the host size. Reproducible from the seed.
ChainColoring lll_random_coloring(const LLLParameters& params, int host_n,
                                  std::uint64_t seed);

}  // namespace ramsey
