#include "ramsey/chains.hpp"

#include <algorithm>

namespace ramsey {

BigInt chain_count_formula(long n, long t) {
    if (t < 1) throw ParameterError("chain_count_formula: t must be >= 1");
    if (n < 0) throw ParameterError("chain_count_formula: n must be >= 0");
    BigInt total = 0;
    for (long i = 0; i < t; ++i) {
        BigInt term = binomial(t - 1, i);
        BigInt base = i + 2;
        BigInt p = 1;
        for (long e = 0; e < n; ++e) p *= base;
        term *= p;
        if ((t - i + 1) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

namespace {

// DFS in lexicographic tuple order: the next member ranges over proper
// supersets of the previous one in ascending mask value.
template <class Fn>
void walk_chains(int n, int t, Fn&& fn) {
    if (t < 1 || t > n + 1) return;
    const SubsetMask full = static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
    std::vector<SubsetMask> stack(static_cast<size_t>(t));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == t) {
            fn(stack.data(), t);
            return;
        }
        if (depth == 0) {
            for (std::uint64_t m = 0; m <= full; ++m) {
                stack[0] = static_cast<SubsetMask>(m);
                self(self, 1);
            }
            return;
        }
        const SubsetMask prev = stack[depth - 1];
        if (prev == full) return;
        // ascending enumeration of strict supersets of prev
        for (SubsetMask s = (prev + 1) | prev;; s = (s + 1) | prev) {
            stack[depth] = s;
            self(self, depth + 1);
            if (s == full) break;
        }
    };
    rec(rec, 0);
}

}  // namespace

void for_each_t_chain(const BooleanLattice& host, int t,
                      const std::function<void(const SubsetMask*, int)>& fn) {
    if (t < 1 || t > host.n + 1)
        throw ParameterError("for_each_t_chain: t outside [1, N+1]");
    walk_chains(host.n, t, [&](const SubsetMask* sets, int len) { fn(sets, len); });
}

std::uint64_t count_t_chains_exhaustive(const BooleanLattice& host, int t) {
    if (t < 1) throw ParameterError("count_t_chains_exhaustive: t must be >= 1");
    std::uint64_t cnt = 0;
    walk_chains(host.n, t, [&](const SubsetMask*, int) { ++cnt; });
    return cnt;
}

std::vector<TChain> enumerate_t_chains(const BooleanLattice& host, int t,
                                       std::uint64_t materialize_cap) {
    if (t < 1 || t > host.n + 1)
        throw ParameterError("enumerate_t_chains: t outside [1, N+1]");
    BigInt expected = chain_count_formula(host.n, t);
    if (expected > materialize_cap)
        throw InfeasibleError("enumerate_t_chains: " + expected.str() +
                              " chains exceed the materialization cap");
    std::vector<TChain> out;
    out.reserve(static_cast<size_t>(expected));
    std::uint64_t next = 0;
    walk_chains(host.n, t, [&](const SubsetMask* sets, int len) {
        TChain c;
        c.sets.assign(sets, sets + len);
        c.id = next++;
        out.push_back(std::move(c));
    });
    return out;
}

ChainIndex::ChainIndex(const BooleanLattice& host, int t) : host_n_(host.n), t_(t) {
    if (t < 1 || t > host.n + 1) throw ParameterError("ChainIndex: t outside [1, N+1]");
    BigInt expected = chain_count_formula(host.n, t);
    if (expected > 100'000'000ULL)
        throw InfeasibleError("ChainIndex: too many chains to index (" + expected.str() + ")");
    count_ = static_cast<std::uint64_t>(expected);
    flat_.reserve(count_ * static_cast<std::uint64_t>(t));
    walk_chains(host.n, t, [&](const SubsetMask* sets, int len) {
        flat_.insert(flat_.end(), sets, sets + len);
    });
}

std::uint64_t ChainIndex::id_of(const SubsetMask* sets) const {
    if (t_ == 1) return sets[0];  // rank of a singleton tuple is the mask itself
    std::uint64_t lo = 0, hi = count_;
    while (lo < hi) {
        std::uint64_t mid = (lo + hi) / 2;
        const SubsetMask* c = chain(mid);
        int cmp = 0;
        for (int j = 0; j < t_; ++j) {
            if (c[j] != sets[j]) {
                cmp = c[j] < sets[j] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace ramsey
