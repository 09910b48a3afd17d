#include "ramsey/prob_bounds.hpp"

#include <algorithm>

#include "ramsey/chains.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/interval.hpp"

namespace ramsey {

const char* to_string(LLLVerdict v) {
    switch (v) {
        case LLLVerdict::Guaranteed: return "guaranteed";
        case LLLVerdict::NotGuaranteed: return "not-guaranteed";
        default: return "indeterminate-at-precision";
    }
}

LLLParameters LLLParameters::from_targets(int t, const std::vector<TargetPoset>& targets) {
    LLLParameters p;
    p.k = static_cast<int>(targets.size());
    p.t = t;
    std::vector<std::pair<long, BigInt>> nm;
    for (const auto& tgt : targets) {
        if (!tgt.every_element_in_a_t_chain(t))
            throw ParameterError("LLL parameters: target '" + tgt.label +
                                 "' has an element lying in no " + std::to_string(t) + "-chain");
        nm.emplace_back(tgt.size, BigInt(tgt.count_t_chains(t)));
    }
    // the theorem orders targets by size; sort and keep the pairing
    std::stable_sort(nm.begin(), nm.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [nv, mv] : nm) {
        p.n.push_back(nv);
        p.m.push_back(mv);
    }
    p.validate();
    return p;
}

LLLParameters LLLParameters::from_counts(int t, std::vector<long> n, std::vector<BigInt> m) {
    LLLParameters p;
    p.k = static_cast<int>(n.size());
    p.t = t;
    p.n = std::move(n);
    p.m = std::move(m);
    p.validate();
    return p;
}

void LLLParameters::validate() const {
    if (k < 2) throw ParameterError("LLL parameters: k >= 2 required");
    if (static_cast<int>(n.size()) != k || static_cast<int>(m.size()) != k)
        throw ParameterError("LLL parameters: need k sizes and k chain counts");
    if (t < 2) throw ParameterError("LLL parameters: t >= 2 required");
    if (n.front() < t) throw ParameterError("LLL parameters: t <= n_1 required");
    for (int i = 1; i < k; ++i)
        if (n[i] < n[i - 1]) throw ParameterError("LLL parameters: sizes must be ascending");
    if (n.back() < 3) throw ParameterError("LLL parameters: n_k >= 3 required");
    if (m_min() < 1) throw ParameterError("LLL parameters: min chain count over P_1..P_{k-1} must be >= 1");
    for (int i = 0; i < k; ++i)
        if (m[i] < 0 || m[i] > binomial(n[i], t))
            throw ParameterError("LLL parameters: m_i outside [0, C(n_i, t)]");
}

BigInt LLLParameters::m_min() const {
    BigInt v = m[0];
    for (int i = 1; i < k - 1; ++i) v = std::min(v, m[i]);
    return v;
}

BigInt LLLParameters::d() const { return binomial(n.back(), t) - m.back(); }

BigInt LLLParameters::a() const {
    BigInt best = 0;
    for (int i = 0; i < k - 1; ++i) {
        // C(C(n_i, t), m_i)
        BigInt top = binomial(n[i], t);
        BigInt v = 1;
        BigInt mi = m[i];
        // binomial with big arguments, exact
        BigInt kk = mi;
        if (kk > top - kk) kk = top - kk;
        for (BigInt j = 1; j <= kk; ++j) {
            v *= top - kk + j;
            v /= j;
        }
        best = std::max(best, v);
    }
    return best;
}

Rational LLLParameters::p_threshold() const {
    BigInt denom = BigInt(n.back()) + BigInt(t) * d() + 2;
    return Rational(m.back(), denom);
}

LLLCheckResult lll_threshold_check(const LLLParameters& params, const BigInt& n,
                                   int max_precision_bits) {
    params.validate();
    if (n < 1) throw ParameterError("lll_threshold_check: host size n must be >= 1");

    LLLCheckResult out;
    out.trivial_regime = n < params.n.back();

    const BigInt m = params.m_min();
    const long m_long = m.convert_to<long>();
    const Rational thr = params.p_threshold();  // m_k / (n_k + t d + 2)
    const BigInt a = params.a();
    const long n1 = params.n.front();
    const long nk1 = params.n[params.k - 2];  // n_{k-1}

    for (int bits = 128; bits <= max_precision_bits; bits *= 2) {
        const mpfr_prec_t prec = bits;
        Interval ln_n = Interval::from_bigint(n, prec).log();
        Interval rhs1 = Interval::from_rational(thr, prec);
        auto ok1 = Interval::certainly_less(ln_n, rhs1);

        // second inequality in log form:
        //   m*ln(ln n) + n_{k-1}*ln n  <  ln C_0 + m*ln(m_k/(n_k+td+2))
        // with ln C_0 = (m-1)ln(k-1) - ln 2 - 1 - ln a + n_1 (ln n_1 - 1)
        Interval lhs2 = ln_n.log().mul_long(m_long) + ln_n.mul_long(nk1);
        Interval ln_c0 = Interval::from_long(params.k - 1, prec).log().mul_long(m_long - 1) -
                         Interval::from_long(2, prec).log() - Interval::from_long(1, prec) -
                         Interval::from_bigint(a, prec).log() +
                         (Interval::from_long(n1, prec).log() - Interval::from_long(1, prec))
                             .mul_long(n1);
        Interval rhs2 = ln_c0 + Interval::from_rational(thr, prec).log().mul_long(m_long);
        auto ok2 = Interval::certainly_less(lhs2, rhs2);

        if (ok1 && ok2) {
            out.margin1 = (rhs1 - ln_n).midpoint();
            out.margin2 = (rhs2 - lhs2).midpoint();
            out.decided_at_bits = bits;
            out.verdict = (*ok1 && *ok2) ? LLLVerdict::Guaranteed : LLLVerdict::NotGuaranteed;
            return out;
        }
        // a decided-false inequality settles the verdict regardless of the other
        if ((ok1 && !*ok1) || (ok2 && !*ok2)) {
            out.margin1 = (rhs1 - ln_n).midpoint();
            out.margin2 = (rhs2 - lhs2).midpoint();
            out.decided_at_bits = bits;
            out.verdict = LLLVerdict::NotGuaranteed;
            return out;
        }
    }
    out.verdict = LLLVerdict::IndeterminateAtPrecision;
    return out;
}

StrongLowerBoundResult strong_lower_bound(int k, int t, const std::vector<int>& dims) {
    if (k < 3) throw ParameterError("strong_lower_bound: k >= 3 required");
    if (t < 2) throw ParameterError("strong_lower_bound: t >= 2 required");
    if (static_cast<int>(dims.size()) != k)
        throw ParameterError("strong_lower_bound: need exactly k dimensions");
    for (int i = 1; i < k; ++i)
        if (dims[i] < dims[i - 1])
            throw ParameterError("strong_lower_bound: dimensions must be ascending");
    if (dims.front() < t - 1) throw ParameterError("strong_lower_bound: t-1 <= m_1 required");

    const int m1 = dims.front();
    const int mk = dims.back();
    const BigInt h1 = chain_count_formula(m1, t);
    const BigInt hk = chain_count_formula(mk, t);
    const BigInt c1 = binomial(m1, m1 / 2);
    const BigInt ck = binomial(mk, mk / 2);

    StrongLowerBoundResult r;
    r.arm2 = Rational(mk) + Rational(hk - 1, 2 * ck);
    r.arm2_approx = r.arm2.convert_to<double>();

    // log2(k-1) is rational only when k-1 is a power of two; the (h1-1) factor
    // can also annihilate the term
    const BigInt km1 = k - 1;
    long log2_exact = -1;
    {
        BigInt v = km1;
        long e = 0;
        while (v > 1 && (v & 1) == 0) {
            v >>= 1;
            ++e;
        }
        if (v == 1) log2_exact = e;
    }
    r.arm1_exact = (log2_exact >= 0) || (h1 == 1);
    if (r.arm1_exact) {
        const BigInt logterm = (log2_exact >= 0) ? BigInt(log2_exact) : BigInt(0);
        r.arm1 = Rational(m1) + Rational(h1 + (h1 - 1) * logterm - 1, 4 * c1);
        r.arm1_approx = r.arm1.convert_to<double>();
        r.exact = true;
        if (r.arm1 < r.arm2) {
            r.value = r.arm1;
            r.attained = 1;
        } else if (r.arm2 < r.arm1) {
            r.value = r.arm2;
            r.attained = 2;
        } else {
            r.value = r.arm1;
            r.attained = 3;
        }
        r.value_approx = r.value.convert_to<double>();
        return r;
    }

    // arm1 irrational: (h1-1) > 0 and k-1 not a power of two, so a tie with the
    // rational arm2 cannot occur and interval refinement always decides
    for (int bits = 128; bits <= (1 << 14); bits *= 2) {
        const mpfr_prec_t prec = bits;
        Interval log2k = Interval::from_long(k - 1, prec).log().div_pos(
            Interval::from_long(2, prec).log());
        Interval arm1 = Interval::from_long(m1, prec) +
                        (Interval::from_bigint(h1, prec) +
                         log2k.mul_long((h1 - 1).convert_to<long>()) -
                         Interval::from_long(1, prec))
                            .div_pos(Interval::from_bigint(4 * c1, prec));
        Interval arm2 = Interval::from_rational(r.arm2, prec);
        auto less = Interval::certainly_less(arm1, arm2);
        if (less) {
            r.arm1_approx = arm1.midpoint();
            r.attained = *less ? 1 : 2;
            r.value_approx = *less ? arm1.midpoint() : r.arm2_approx;
            if (!*less) {
                r.value = r.arm2;
            }
            return r;
        }
    }
    throw InfeasibleError("strong_lower_bound: arms not separated at maximum precision");
}

CtBoundResult c_t_upper_bound(int m, int n, int N, int t) {
    if (m < 0 || n < 0 || t < 1) throw ParameterError("c_t_upper_bound: bad parameters");
    if (m > N || n > N) throw ParameterError("c_t_upper_bound: m, n must be <= N");
    CtBoundResult out;
    out.lemma_hypotheses = (t >= 3 && m >= 2 && n >= 2);

    const BigInt hm = chain_count_formula(m, t);
    const BigInt hn = chain_count_formula(n, t);
    if (hm > 1'000'000 || hn > 1'000'000)
        throw InfeasibleError("c_t_upper_bound: 2^h terms beyond desk scale");

    auto embedding_count = [&](int dim, bool& exact) -> BigInt {
        if (dim <= 3 && N <= 6) {
            exact = true;
            return enumerate_strong_boolean_embeddings(dim, N);
        }
        exact = false;
        return embedding_count_upper_bound(dim, N);
    };
    bool exact_m = false, exact_n = false;
    const BigInt em = embedding_count(m, exact_m);
    const BigInt en = embedding_count(n, exact_n);
    out.exact_counts = exact_m && exact_n;

    const Rational numer = Rational(em, pow2(hm.convert_to<unsigned long>()));
    const Rational denom = 1 - Rational(en, pow2(hn.convert_to<unsigned long>()));
    if (denom <= 0) {
        out.vacuous = true;
        return out;
    }
    out.value = numer / denom;
    out.exceeds_one = out.value > 1;
    return out;
}

const BigInt& RecurrenceTable::at(int k) const {
    auto it = entries.find(k);
    if (it == entries.end())
        throw ParameterError("recurrence: missing base entry for k = " + std::to_string(k));
    return it->second;
}

BigInt theorem51_recurrence(int k, int m, const RecurrenceTable& base) {
    if (k < 6) throw ParameterError("theorem51_recurrence: k >= 6 required");
    if (m < 2) throw ParameterError("theorem51_recurrence: m >= 2 required");
    const BigInt& lo = base.at(k / 2);
    const BigInt& hi = base.at((k + 1) / 2);
    return (lo - 2) * hi + lo;
}

BigInt walzer_recurrence(int k, int m, const RecurrenceTable& base) {
    if (k < 3) throw ParameterError("walzer_recurrence: k >= 3 required");
    if (m < 2) throw ParameterError("walzer_recurrence: m >= 2 required");
    return BigInt(m - 1) * base.at(k - 1) + m + k - 1;
}

std::vector<RecurrenceRow> recurrence_comparison(int k_max, int m, const RecurrenceTable& seeds) {
    if (k_max < 1) throw ParameterError("recurrence_comparison: k_max >= 1 required");
    if (m < 2) throw ParameterError("recurrence_comparison: m >= 2 required");
    RecurrenceTable best = seeds;
    if (!best.has(1)) best.entries[1] = m;  // one color: the host must reach B_m
    std::vector<RecurrenceRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        RecurrenceRow row;
        row.k = k;
        if (k >= 3 && best.has(k - 1)) row.walzer = walzer_recurrence(k, m, best);
        if (k >= 6 && best.has(k / 2) && best.has((k + 1) / 2))
            row.halving = theorem51_recurrence(k, m, best);
        bool have = best.has(k);
        BigInt v;
        if (have) v = best.at(k);
        if (row.walzer && (!have || *row.walzer < v)) {
            v = *row.walzer;
            have = true;
        }
        if (row.halving && (!have || *row.halving < v)) {
            v = *row.halving;
            have = true;
        }
        if (!have)
            throw ParameterError("recurrence_comparison: no value derivable for k = " +
                                 std::to_string(k) + " (seed required)");
        best.entries[k] = v;
        row.best = v;
        rows.push_back(std::move(row));
    }
    return rows;
}

DiamondBounds diamond_bounds(long k, long r) {
    if (k < 1) throw ParameterError("diamond_bounds: k >= 1 required");
    if (r < 2) throw ParameterError("diamond_bounds: r >= 2 required");
    DiamondBounds b;
    b.lower = BigInt(2) * k;
    b.upper = BigInt(3) * k * r - 2 * r - k + 1;
    return b;
}

}  // namespace ramsey
