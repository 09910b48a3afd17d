#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// A small abstract poset given by its full comparability-order matrix.
// Row bit j of leq_rows[i] means element i <= element j.
struct TargetPoset {
    static constexpr int kMaxSize = 64;

    int size = 0;
    std::vector<std::uint64_t> leq_rows;
    std::string label;  // family name with parameters, e.g. "diamond:2"

    TargetPoset() = default;
    TargetPoset(int p, std::vector<std::uint64_t> rows, std::string name);

    bool leq(int i, int j) const { return leq_rows[i] >> j & 1u; }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    // Order-reversal of the relation; the label is rewritten for named families.
    TargetPoset dual() const;

    // Number of t-chains (t pairwise-comparable distinct elements).
    std::uint64_t count_t_chains(int t) const;
    // All t-chains as ascending index tuples sorted topologically low-to-high.
    std::vector<std::vector<int>> t_chains(int t) const;

    // True when every element lies in at least one t-chain.
    bool every_element_in_a_t_chain(int t) const;
};

// Named constructors for the standard families.
TargetPoset make_chain(int n);
TargetPoset make_antichain(int n);
TargetPoset make_matching(int s);
TargetPoset make_butterfly(int r, int s);  // r bottoms below s tops
TargetPoset make_diamond(int r);
TargetPoset make_boolean(int m);

// Parse "family:params", e.g. "chain:3", "butterfly:2:2", "boolean:2".
TargetPoset make_target(const std::string& desc);

// Parse a comma-separated target list, e.g. "diamond:2,diamond:2".
std::vector<TargetPoset> parse_target_list(const std::string& list);
std::string format_target_list(const std::vector<TargetPoset>& targets);

// Exhaustive isomorphism test; sizes must be small (brute force over bijections).
bool posets_isomorphic(const TargetPoset& a, const TargetPoset& b);

// Whether the multiset of targets is invariant under replacing each P by its dual.
bool target_list_dual_invariant(const std::vector<TargetPoset>& targets);

}  // namespace ramsey
