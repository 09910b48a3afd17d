#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bigint.hpp"
#include "ramsey/target_poset.hpp"

namespace ramsey {

// Parameter record shared by the threshold calculator and the biased sampler:
// k targets with sizes n_1 <= ... <= n_k and t-chain counts m_1..m_k.
struct LLLParameters {
    int k = 2;
    int t = 2;
    std::vector<long> n;   // n_i = |P_i|
    std::vector<BigInt> m;  // m_i = number of t-chains of P_i

    static LLLParameters from_targets(int t, const std::vector<TargetPoset>& targets);
    static LLLParameters from_counts(int t, std::vector<long> n, std::vector<BigInt> m);

    void validate() const;  // 2 <= t <= n_1 <= ... <= n_k, n_k >= 3, min m_i (i<k) >= 1

    BigInt m_min() const;   // min{m_1..m_{k-1}}
    BigInt d() const;       // C(n_k, t) - m_k
    BigInt a() const;       // max_{i<k} C(C(n_i,t), m_i)
    // p(n) = (n_k + t*d + 2)/m_k * ln n is sampleable only when ln n < m_k/(n_k+t*d+2)
    Rational p_threshold() const;  // m_k / (n_k + t*d + 2)
};

enum class LLLVerdict { Guaranteed, NotGuaranteed, IndeterminateAtPrecision };

const char* to_string(LLLVerdict v);

struct LLLCheckResult {
    LLLVerdict verdict = LLLVerdict::IndeterminateAtPrecision;
    bool trivial_regime = false;  // n < n_k: color everything k and be done
    // approximate margins, positive = inequality satisfied:
    //   margin1 = m_k/(n_k+td+2) - ln n
    //   margin2 = ln RHS2 - ln LHS2 of the second inequality
    double margin1 = 0.0;
    double margin2 = 0.0;
    int decided_at_bits = 0;  // interval precision that separated the ties
};

// Both strict threshold inequalities, evaluated with outward interval
// arithmetic; a verdict is emitted only when neither interval straddles its
// inequality. n is the host size (element count), not a dimension.
LLLCheckResult lll_threshold_check(const LLLParameters& params, const BigInt& n,
                                   int max_precision_bits = 1 << 14);

struct StrongLowerBoundResult {
    bool exact = false;          // both arms exact rationals
    Rational value;              // when exact
    double value_approx = 0.0;
    Rational arm1;               // exact when arm1_exact
    bool arm1_exact = false;
    double arm1_approx = 0.0;
    Rational arm2;               // always exact
    double arm2_approx = 0.0;
    int attained = 0;            // 1, 2, or 3 when both arms tie
};

// min{ m_1 + (h_{m_1}(t) + (h_{m_1}(t)-1)log2(k-1) - 1) / (4 C(m_1, m_1/2)),
//      m_k + (h_{m_k}(t) - 1) / (2 C(m_k, m_k/2)) }.
StrongLowerBoundResult strong_lower_bound(int k, int t, const std::vector<int>& dims);

struct CtBoundResult {
    bool vacuous = false;       // denominator <= 0: the bound says nothing
    Rational value;             // when !vacuous
    bool exceeds_one = false;   // not meaningful as a probability
    bool exact_counts = false;  // e(.,.) enumerated exactly vs closed-form bound
    bool lemma_hypotheses = false;  // t >= 3 and m, n >= 2
};

// e(m,N) 2^{-h_m(t)} / (1 - e(n,N) 2^{-h_n(t)}), exact e within enumeration
// caps, closed-form upper bound beyond them.
CtBoundResult c_t_upper_bound(int m, int n, int N, int t);

// Known values/bounds of the strong Ramsey number for B_m at fixed m, by k.
struct RecurrenceTable {
    std::map<int, BigInt> entries;

    const BigInt& at(int k) const;
    bool has(int k) const { return entries.count(k) > 0; }
};

// (R_{floor(k/2)} - 2) * R_{ceil(k/2)} + R_{floor(k/2)} for k >= 6, m >= 2.
BigInt theorem51_recurrence(int k, int m, const RecurrenceTable& base);

// Walzer's recurrence (m-1) R_{k-1} + m + k - 1 for k >= 3.
BigInt walzer_recurrence(int k, int m, const RecurrenceTable& base);

struct RecurrenceRow {
    int k = 0;
    std::optional<BigInt> halving;  // theorem-style recurrence, k >= 6
    std::optional<BigInt> walzer;   // k >= 3
    BigInt best;                    // running minimum incl. seeds
};

// Best-known table built from the seeds upward; k = 1 is auto-seeded with m.
std::vector<RecurrenceRow> recurrence_comparison(int k_max, int m, const RecurrenceTable& seeds);

struct DiamondBounds {
    BigInt lower;  // 2k
    BigInt upper;  // 3kr - 2r - k + 1
};

DiamondBounds diamond_bounds(long k, long r);

}  // namespace ramsey
