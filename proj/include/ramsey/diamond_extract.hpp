#pragma once

#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"

namespace ramsey {

// Full trace of the inductive construction, exposed so the step conditions
// are assertable from outside.
struct DiamondExtraction {
    Embedding embedding;  // strong copy of diamond(r): [bottom, middles..., top]
    int color = 0;

    std::vector<SubsetMask> X;                // X_0 .. X_{2k-1}
    std::vector<std::vector<SubsetMask>> Y;   // Y[i] = Y_i^1..Y_i^r for i = 1..2k-1
    std::vector<int> step_colors;             // c_0 .. c_{2k}
    int i1 = 0, i2 = 0, i3 = 0;               // the equal-colored triple
};

// Realizes the upper-bound construction: from any k-coloring of B_N with
// N = 3kr-2r-k+1, grow X_i / Y_i^j chains and read off a monochromatic induced
// r-diamond. Never fails on valid input. With allow_larger_host the host may
// exceed the exact dimension (extra ground elements only add candidates).
DiamondExtraction extract_monochromatic_diamond(int k, int r, const ChainColoring& coloring,
                                                bool allow_larger_host = false);

// Independent check: a strong embedding of diamond(r) with every image in the
// stated color. r is derived from the image count.
bool verify_extraction(const Embedding& embedding, const ChainColoring& coloring, int color);

// Uniform seeded k-coloring of the t-chains of B_host_n (test/CLI input maker).
ChainColoring uniform_random_coloring(int host_n, int t, int k, std::uint64_t seed);

}  // namespace ramsey
