#include "ramsey/masks.hpp"

namespace ramsey {

std::string mask_to_set_notation(SubsetMask s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (s >> i & 1u) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::vector<SubsetMask> level_masks(int n, int level) {
    std::vector<SubsetMask> out;
    if (level < 0 || level > n) return out;
    if (level == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack over n-bit masks of fixed popcount.
    SubsetMask limit = static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
    SubsetMask c = static_cast<SubsetMask>((std::uint64_t{1} << level) - 1);
    while (c <= limit) {
        out.push_back(c);
        SubsetMask lo = c & (~c + 1);
        SubsetMask ripple = c + lo;
        if (ripple > limit || ripple == 0) break;
        c = ripple | (((c ^ ripple) >> 2) / lo);
    }
    return out;
}

}  // namespace ramsey
