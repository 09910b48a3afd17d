#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/masks.hpp"

namespace ramsey {

// A t-chain of B_N: t distinct pairwise-comparable masks. Strict inclusion
// implies strictly increasing mask value, so the canonical tuple is the
// numerically ascending one, and chains are ordered lexicographically by it.
struct TChain {
    std::vector<SubsetMask> sets;
    std::uint64_t id = 0;  // lexicographic rank among all t-chains of the host
};

// Exact number of t-chains of B_n: sum_{i=0}^{t-1} (-1)^{t-i+1} C(t-1,i) (i+2)^n.
// Evaluates to 0 whenever t > n+1.
BigInt chain_count_formula(long n, long t);

// Visit every t-chain of B_n once, in canonical id order. The callback sees the
// masks of the current chain; the storage is reused between calls.
void for_each_t_chain(const BooleanLattice& host, int t,
                      const std::function<void(const SubsetMask*, int)>& fn);

// Independent exhaustive count (no formula involved); oracle for the formula.
std::uint64_t count_t_chains_exhaustive(const BooleanLattice& host, int t);

// Materialize every t-chain with its id. Refuses counts above the cap.
std::vector<TChain> enumerate_t_chains(const BooleanLattice& host, int t,
                                       std::uint64_t materialize_cap = 100'000'000ULL);

// Canonical-id addressing for one (host, t) pair: id -> chain and chain -> id.
class ChainIndex {
public:
    ChainIndex(const BooleanLattice& host, int t);

    int host_n() const { return host_n_; }
    int t() const { return t_; }
    std::uint64_t count() const { return count_; }

    // Masks of chain `id`, ascending.
    const SubsetMask* chain(std::uint64_t id) const { return flat_.data() + id * t_; }
    // Rank of an ascending tuple of masks; the tuple must be a valid chain.
    std::uint64_t id_of(const SubsetMask* sets) const;

private:
    int host_n_;
    int t_;
    std::uint64_t count_;
    std::vector<SubsetMask> flat_;  // count_ * t_ masks, lexicographic tuple order
};

}  // namespace ramsey
