#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/chains.hpp"
#include "ramsey/masks.hpp"
#include "ramsey/target_poset.hpp"

namespace ramsey {

enum class EmbeddingMode { Weak, Strong };

const char* to_string(EmbeddingMode mode);
EmbeddingMode embedding_mode_from_string(const std::string& s);

// An injection of a target poset into a Boolean lattice. images[i] is the
// image of target element i.
struct Embedding {
    std::vector<SubsetMask> images;
    EmbeddingMode mode = EmbeddingMode::Weak;
};

// Pairwise validity check of a complete assignment (no search).
bool is_valid_embedding(const TargetPoset& target, const std::vector<SubsetMask>& images,
                        EmbeddingMode mode);

// First embedding in canonical search order whose images all satisfy the
// filter, or nullopt. Canonical order: target elements in a greedy
// most-constrained-first linear extension, candidate images ascending by mask.
// Throws InfeasibleError when the search exceeds node_cap.
std::optional<Embedding> find_copy(const BooleanLattice& host, const TargetPoset& target,
                                   EmbeddingMode mode,
                                   const std::function<bool(SubsetMask)>& filter = nullptr,
                                   std::uint64_t node_cap = 1'000'000'000ULL);

// As find_copy, but the returned embedding must use `required` as one of its
// images.
std::optional<Embedding> find_copy_requiring(const BooleanLattice& host,
                                             const TargetPoset& target, EmbeddingMode mode,
                                             SubsetMask required,
                                             const std::function<bool(SubsetMask)>& filter = nullptr,
                                             std::uint64_t node_cap = 1'000'000'000ULL);

// Exact number of strong embeddings of B_m into B_N by exhaustive search.
// Refuses instances beyond the desk cap (m <= 3, N <= 6).
BigInt enumerate_strong_boolean_embeddings(int m, int N);

// Theorem-style closed form 2^(2*C(m,floor(m/2))*(N-m)). At tiny sizes this can
// undercut the exact count; callers compare and flag rather than assert.
BigInt embedding_count_upper_bound(int m, int N);

// Number of antichain families of B_m, empty family included (m <= 6).
BigInt count_antichains(int m);

struct LevelBoundResult {
    int value = 0;        // largest m with no weak embedding into m consecutive
                          // levels of B_N for all N <= probe_cap
    bool verified = false;  // the probe covered |P| dimensions, so the found
                            // (m+1)-level embedding persists by ground padding
    int witness_levels = 0;      // smallest embeddable window size found
    int witness_start_level = 0;
};

// e(P) within a bounded probe. Embeddability into a fixed-size level window is
// monotone in N (pad the ground set), so checking B_probe_cap covers every
// smaller dimension.
LevelBoundResult level_of_embedding_bound_e(const TargetPoset& target, int probe_cap);

struct ChainColoring;  // coloring.hpp

// True iff some (weak|strong) copy of the target has every t-chain image
// colored `color`; for t = 1 every element image must have that color.
bool monochromatic_copy_exists(const BooleanLattice& host, const TargetPoset& target,
                               EmbeddingMode mode, const ChainColoring& coloring, int color,
                               const ChainIndex* index = nullptr);

// As above, also returning the witness.
std::optional<Embedding> find_monochromatic_copy(const BooleanLattice& host,
                                                 const TargetPoset& target, EmbeddingMode mode,
                                                 const ChainColoring& coloring, int color,
                                                 const ChainIndex* index = nullptr);

}  // namespace ramsey
