#include "ramsey/constructions.hpp"

#include <random>

#include "ramsey/interval.hpp"
#include "ramsey/prob_bounds.hpp"

namespace ramsey {

ChainColoring level_block_coloring(const std::vector<int>& e_values) {
    if (e_values.empty()) throw ParameterError("level_block_coloring: need at least one block");
    int total = 0;
    for (int e : e_values) {
        if (e < 1) throw ParameterError("level_block_coloring: every e_i must be >= 1");
        total += e;
    }
    const int k = static_cast<int>(e_values.size());
    const int host_n = total - 1;

    ChainColoring col;
    col.host_n = host_n;
    col.t = 1;
    col.k = k;
    // color of each level: block b covers e_b consecutive levels
    std::vector<std::uint8_t> level_color(total);
    int level = 0;
    for (int b = 0; b < k; ++b)
        for (int j = 0; j < e_values[b]; ++j) level_color[level++] = static_cast<std::uint8_t>(b + 1);
    const std::uint64_t count = std::uint64_t{1} << host_n;
    col.colors.resize(count);
    for (std::uint64_t m = 0; m < count; ++m)
        col.colors[m] = level_color[cardinality(static_cast<SubsetMask>(m))];
    col.validate();
    return col;
}

ChainColoring matching_lower_coloring(int k, int s) {
    if (k < 2) throw ParameterError("matching_lower_coloring: k >= 2 required");
    if (s < 2) throw ParameterError("matching_lower_coloring: s >= 2 required");
    const int host_n = k + 1;
    ChainColoring col;
    col.host_n = host_n;
    col.t = 1;
    col.k = k;
    const std::uint64_t count = std::uint64_t{1} << host_n;
    col.colors.resize(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        int level = cardinality(static_cast<SubsetMask>(m));
        int c;
        if (level == 0)
            c = 1;
        else if (level == host_n)
            c = k;
        else
            c = level;
        col.colors[m] = static_cast<std::uint8_t>(c);
    }
    col.validate();
    return col;
}

ChainColoring diamond_lower_coloring(int k, int r) {
    if (k < 1) throw ParameterError("diamond_lower_coloring: k >= 1 required");
    if (r < 2) throw ParameterError("diamond_lower_coloring: r >= 2 required");
    const int host_n = 2 * k - 1;
    ChainColoring col;
    col.host_n = host_n;
    col.t = 1;
    col.k = k;
    const std::uint64_t count = std::uint64_t{1} << host_n;
    col.colors.resize(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        int level = cardinality(static_cast<SubsetMask>(m));
        col.colors[m] = static_cast<std::uint8_t>(level / 2 + 1);  // levels 2i-2, 2i-1 -> i
    }
    col.validate();
    return col;
}

ChainColoring lll_random_coloring(const LLLParameters& params, int host_n, std::uint64_t seed) {
    params.validate();
    if (host_n < 0) throw ParameterError("lll_random_coloring: negative host dimension");
    const BigInt n = pow2(static_cast<unsigned long>(host_n));  // host size

    // domain: ln n < m_k/(n_k + t d + 2), else p would reach 1
    const Rational thr = params.p_threshold();
    {
        Interval ln_n = Interval::from_bigint(n, 256).log();
        Interval rhs = Interval::from_rational(thr, 256);
        auto ok = Interval::certainly_less(ln_n, rhs);
        if (!ok || !*ok)
            throw ParameterError("lll_random_coloring: ln(host size) >= m_k/(n_k+td+2); "
                                 "the biased distribution is out of domain");
    }
    const double p =
        Interval::from_bigint(n, 256).log().div_pos(Interval::from_rational(thr, 256)).midpoint();
    const int k = params.k;
    const double slice = p / (k - 1);  // p_i for i < k

    ChainColoring col;
    col.host_n = host_n;
    col.t = params.t;
    col.k = k;
    BooleanLattice host(host_n);
    BigInt hc = chain_count_formula(host_n, params.t);
    if (hc > 50'000'000ULL)
        throw InfeasibleError("lll_random_coloring: too many chains to sample");
    col.colors.resize(static_cast<std::size_t>(hc));

    std::mt19937_64 rng(seed);
    std::size_t idx = 0;
    for_each_t_chain(host, params.t, [&](const SubsetMask*, int) {
        // uniform in [0,1) from the top 53 bits; avoids distribution portability gaps
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        int c;
        if (u < p) {
            c = 1 + static_cast<int>(u / slice);
            if (c > k - 1) c = k - 1;
        } else {
            c = k;
        }
        col.colors[idx++] = static_cast<std::uint8_t>(c);
    });
    col.validate();
    return col;
}

}  // namespace ramsey
