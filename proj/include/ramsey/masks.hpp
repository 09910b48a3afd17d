#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// A subset of the ground set [n] = {1,..,n}: bit (i-1) set means element i is in.
// Masks are canonically ordered by their integer value.
using SubsetMask = std::uint32_t;

inline int cardinality(SubsetMask s) { return std::popcount(s); }
inline bool subset_of(SubsetMask a, SubsetMask b) { return (a & b) == a; }
inline bool proper_subset_of(SubsetMask a, SubsetMask b) { return a != b && subset_of(a, b); }
inline bool comparable_masks(SubsetMask a, SubsetMask b) {
    return subset_of(a, b) || subset_of(b, a);
}

// {1,3,4} notation, {} for the empty set.
std::string mask_to_set_notation(SubsetMask s);

// The Boolean lattice B_n: all 2^n subsets of [n] ordered by inclusion.
struct BooleanLattice {
    static constexpr int kDefaultDimensionCap = 28;

    int n = 0;

    explicit BooleanLattice(int dimension, int dimension_cap = kDefaultDimensionCap)
        : n(dimension) {
        if (dimension < 0 || dimension > dimension_cap)
            throw ParameterError("BooleanLattice: dimension " + std::to_string(dimension) +
                                 " outside [0, " + std::to_string(dimension_cap) + "]");
    }

    std::uint64_t element_count() const { return std::uint64_t{1} << n; }
    SubsetMask full_set() const { return static_cast<SubsetMask>((std::uint64_t{1} << n) - 1); }
    bool contains(SubsetMask s) const { return (s & ~full_set()) == 0; }
};

// All masks of B_n with |S| = level, ascending mask order.
std::vector<SubsetMask> level_masks(int n, int level);

}  // namespace ramsey
