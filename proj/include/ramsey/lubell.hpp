#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/masks.hpp"
#include "ramsey/target_poset.hpp"

namespace ramsey {

// lu_N(F) = sum over F of 1/C(N,|F|), exact.
Rational lubell(int N, const std::vector<SubsetMask>& family);

// True iff the family is an antichain and its Lubell value is at most 1.
// Not-an-antichain short-circuits to false.
bool yblm_check(int N, const std::vector<SubsetMask>& family);

struct LubellMaxResult {
    bool exact = true;               // false when the node budget ran out
    Rational value;                  // best found (the maximum when exact)
    Rational upper_bound;            // equals value when exact
    std::vector<SubsetMask> witness;
    std::uint64_t nodes = 0;
};

// L_N(P; Q) = max lu_N(F) over weak-P-free families F inside B_N minus the
// excluded set, by branch-and-bound: elements in descending-weight order,
// bound = value + weight of undecided elements passing the single-element
// P-freeness relaxation.
LubellMaxResult max_lubell_P_free(int N, const TargetPoset& target,
                                  const std::vector<SubsetMask>& excluded,
                                  std::uint64_t node_budget = 2'000'000'000ULL);

// Closed forms from the matching analysis; each is only valid for the stated
// parameter range and excluded set.
Rational matching2_lubell_max(int N);          // 1 + 1/N, N >= 5, Q = {empty, full}
Rational matching_band_lower(int N, int s);    // 1 + 2(s-1)/(N(N-1))
Rational matching_band_upper(int N, int s);    // 1 + 4(s-1)/(N(N-1)), 3 <= s <= C(N,2)+1

struct LubellCondition {
    bool certified = false;  // k*L < N+1 - lu_N(Q) certifies R_k <= N
    Rational lhs;            // k*L
    Rational rhs;            // N+1 - lu_N(Q)
};

// The sufficient condition in exact rationals; L is the caller's value for
// L_N(P;Q), computed or from a closed form.
LubellCondition ramsey_upper_by_lubell(int k, int N, const Rational& L,
                                       const std::vector<SubsetMask>& excluded);

// Named excluded sets used throughout: {empty, full} and
// {empty, full} + level 1 + level N-1.
std::vector<SubsetMask> exclude_poles(int N);
std::vector<SubsetMask> exclude_poles_and_fringes(int N);

}  // namespace ramsey
