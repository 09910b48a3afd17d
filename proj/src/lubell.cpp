#include "ramsey/lubell.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ramsey/embedding.hpp"

namespace ramsey {

Rational lubell(int N, const std::vector<SubsetMask>& family) {
    if (N < 0 || N > 28) throw ParameterError("lubell: N outside [0, 28]");
    BooleanLattice host(N);
    Rational sum = 0;
    for (SubsetMask s : family) {
        if (!host.contains(s))
            throw ParameterError("lubell: member " + mask_to_set_notation(s) +
                                 " is not a subset of the ground set");
        sum += Rational(1, binomial(N, cardinality(s)));
    }
    return sum;
}

bool yblm_check(int N, const std::vector<SubsetMask>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j] || comparable_masks(family[i], family[j])) return false;
    return lubell(N, family) <= 1;
}

namespace {

// Exact integer weights: scale = lcm of the binomials C(N, 0..N).
std::uint64_t weight_scale(int N) {
    BigInt l = 1;
    for (int i = 0; i <= N; ++i) {
        BigInt b = binomial(N, i);
        l = boost::multiprecision::lcm(l, b);
    }
    if (l > std::numeric_limits<std::uint64_t>::max() >> 8)
        throw InfeasibleError("max_lubell_P_free: weight scale overflows at N = " +
                              std::to_string(N));
    return l.convert_to<std::uint64_t>();
}

struct MaxSearch {
    int N;
    const TargetPoset& target;
    BooleanLattice host;
    std::vector<SubsetMask> universe;  // descending weight, ascending mask
    std::vector<std::uint64_t> weight;
    std::uint64_t scale;

    std::vector<SubsetMask> chosen;
    std::vector<char> alive;
    std::vector<SubsetMask> alive_undo;  // flattened; frames delimited by counts

    std::uint64_t best = 0;
    std::vector<SubsetMask> best_family;
    std::uint64_t value = 0;

    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    bool budget_hit = false;
    std::uint64_t abandoned_bound = 0;

    MaxSearch(int n, const TargetPoset& t, std::uint64_t budget)
        : N(n), target(t), host(n), node_budget(budget) {}

    bool copy_appears_with(SubsetMask fresh) {
        // chosen + {fresh} gained a weak copy of the target iff one uses fresh
        std::function<bool(SubsetMask)> member = [&](SubsetMask m) {
            if (m == fresh) return true;
            for (SubsetMask c : chosen)
                if (c == m) return true;
            return false;
        };
        return find_copy_requiring(host, target, EmbeddingMode::Weak, fresh, member).has_value();
    }

    std::uint64_t forward_weight(std::size_t from) const {
        std::uint64_t sum = 0;
        for (std::size_t i = from; i < universe.size(); ++i)
            if (alive[i]) sum += weight[i];
        return sum;
    }

    void dfs(std::size_t idx) {
        if (value > best) {
            best = value;
            best_family = chosen;
        }
        if (idx == universe.size()) return;
        if (++nodes > node_budget) {
            budget_hit = true;
            abandoned_bound = std::max(abandoned_bound, value + forward_weight(idx));
            return;
        }
        const std::uint64_t bound = value + forward_weight(idx);
        if (bound <= best) return;

        if (alive[idx]) {
            // include universe[idx]; kill undecided elements that now complete a copy
            chosen.push_back(universe[idx]);
            value += weight[idx];
            std::size_t undo_from = alive_undo.size();
            for (std::size_t j = idx + 1; j < universe.size(); ++j) {
                if (!alive[j]) continue;
                if (copy_appears_with(universe[j])) {
                    alive[j] = 0;
                    alive_undo.push_back(static_cast<SubsetMask>(j));
                }
            }
            dfs(idx + 1);
            while (alive_undo.size() > undo_from) {
                alive[alive_undo.back()] = 1;
                alive_undo.pop_back();
            }
            value -= weight[idx];
            chosen.pop_back();
            if (budget_hit) {
                // the exclude branch is abandoned too; fold it into the bound
                abandoned_bound = std::max(abandoned_bound, value + forward_weight(idx + 1));
                return;
            }
        }
        dfs(idx + 1);  // exclude
    }
};

}  // namespace

LubellMaxResult max_lubell_P_free(int N, const TargetPoset& target,
                                  const std::vector<SubsetMask>& excluded,
                                  std::uint64_t node_budget) {
    if (N < 0 || N > 12)
        throw InfeasibleError("max_lubell_P_free: N outside the desk range [0, 12]");
    BooleanLattice host(N);
    std::vector<char> is_excluded(host.element_count(), 0);
    for (SubsetMask s : excluded) {
        if (!host.contains(s))
            throw ParameterError("max_lubell_P_free: excluded member outside the host");
        is_excluded[s] = 1;
    }

    MaxSearch search(N, target, node_budget);
    search.scale = weight_scale(N);
    for (std::uint64_t m = 0; m < host.element_count(); ++m)
        if (!is_excluded[m]) search.universe.push_back(static_cast<SubsetMask>(m));
    std::stable_sort(search.universe.begin(), search.universe.end(),
                     [&](SubsetMask a, SubsetMask b) {
                         BigInt ba = binomial(N, cardinality(a));
                         BigInt bb = binomial(N, cardinality(b));
                         if (ba != bb) return ba < bb;  // rarest sizes first
                         return a < b;
                     });
    search.weight.reserve(search.universe.size());
    for (SubsetMask s : search.universe)
        search.weight.push_back(search.scale /
                                binomial(N, cardinality(s)).convert_to<std::uint64_t>());
    search.alive.assign(search.universe.size(), 1);
    // elements individually completing a copy can never join (|P| = 1 targets)
    for (std::size_t i = 0; i < search.universe.size(); ++i)
        if (target.size == 1) search.alive[i] = 0;

    search.dfs(0);

    LubellMaxResult out;
    out.nodes = search.nodes;
    out.exact = !search.budget_hit;
    out.value = Rational(BigInt(search.best), BigInt(search.scale));
    out.upper_bound = out.exact
                          ? out.value
                          : Rational(BigInt(std::max(search.best, search.abandoned_bound)),
                                     BigInt(search.scale));
    out.witness = search.best_family;
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

Rational matching2_lubell_max(int N) {
    if (N < 5) throw ParameterError("matching2_lubell_max: the closed form needs N >= 5");
    return 1 + Rational(1, N);
}

Rational matching_band_lower(int N, int s) {
    if (N < 2) throw ParameterError("matching_band_lower: N >= 2 required");
    return 1 + Rational(2 * (s - 1), BigInt(N) * (N - 1));
}

Rational matching_band_upper(int N, int s) {
    if (s < 3 || Rational(s) > Rational(BigInt(N) * (N - 1), 2) + 1)
        throw ParameterError("matching_band_upper: need 3 <= s <= C(N,2)+1");
    return 1 + Rational(4 * (s - 1), BigInt(N) * (N - 1));
}

LubellCondition ramsey_upper_by_lubell(int k, int N, const Rational& L,
                                       const std::vector<SubsetMask>& excluded) {
    if (k < 1) throw ParameterError("ramsey_upper_by_lubell: k >= 1 required");
    LubellCondition c;
    c.lhs = Rational(k) * L;
    c.rhs = Rational(N + 1) - lubell(N, excluded);
    c.certified = c.lhs < c.rhs;
    return c;
}

std::vector<SubsetMask> exclude_poles(int N) {
    BooleanLattice host(N);
    return {SubsetMask{0}, host.full_set()};
}

std::vector<SubsetMask> exclude_poles_and_fringes(int N) {
    BooleanLattice host(N);
    std::vector<SubsetMask> q = {SubsetMask{0}, host.full_set()};
    for (SubsetMask s : level_masks(N, 1)) q.push_back(s);
    for (SubsetMask s : level_masks(N, N - 1)) q.push_back(s);
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

}  // namespace ramsey
