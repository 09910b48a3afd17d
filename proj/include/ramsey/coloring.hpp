#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/chains.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/masks.hpp"
#include "ramsey/target_poset.hpp"

namespace ramsey {

enum class HostFamily { Boolean, Chain };

const char* to_string(HostFamily family);

// Assignment of colors 1..k to every t-chain of the host, indexed by canonical
// chain id. For t = 1 on a Boolean host the id is the element mask itself.
struct ChainColoring {
    int host_n = 0;
    int t = 1;
    int k = 1;
    HostFamily family = HostFamily::Boolean;
    std::vector<std::uint8_t> colors;

    std::uint64_t expected_chain_count() const;
    void validate() const;  // length and 1..k range

    int color_of(std::uint64_t chain_id) const { return colors[chain_id]; }
};

// The full problem tuple: k targets, chain size t, weak or strong copies,
// host family.
struct RamseyInstance {
    int t = 1;
    int k = 1;
    std::vector<TargetPoset> targets;
    EmbeddingMode mode = EmbeddingMode::Weak;
    HostFamily family = HostFamily::Boolean;

    void validate() const;
};

struct ColoringVerdict {
    bool good = false;
    int bad_color = 0;       // 1-based, set when !good
    Embedding witness;       // mono copy in bad_color, set when !good
};

// good iff no color i admits a monochromatic copy of targets[i-1] in color i.
// The bad witness is the first one in canonical order (smallest color, then
// canonical search order).
ColoringVerdict verify_coloring(const RamseyInstance& instance, int host_n,
                                const ChainColoring& coloring);

}  // namespace ramsey
