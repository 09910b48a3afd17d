#include "ramsey/diamond_extract.hpp"

#include <random>
#include <stdexcept>

namespace ramsey {

DiamondExtraction extract_monochromatic_diamond(int k, int r, const ChainColoring& coloring,
                                                bool allow_larger_host) {
    if (k < 1) throw ParameterError("extract_monochromatic_diamond: k >= 1 required");
    if (r < 2) throw ParameterError("extract_monochromatic_diamond: r >= 2 required");
    const int exact_n = 3 * k * r - 2 * r - k + 1;
    if (coloring.t != 1) throw ParameterError("extract_monochromatic_diamond: need a t=1 coloring");
    if (coloring.k != k)
        throw ParameterError("extract_monochromatic_diamond: coloring has k = " +
                             std::to_string(coloring.k) + ", expected " + std::to_string(k));
    if (coloring.host_n != exact_n && !(allow_larger_host && coloring.host_n > exact_n))
        throw ParameterError("extract_monochromatic_diamond: host dimension " +
                             std::to_string(coloring.host_n) + " does not match " +
                             std::to_string(exact_n));
    coloring.validate();
    const int N = coloring.host_n;
    const SubsetMask full = BooleanLattice(N).full_set();

    DiamondExtraction out;
    out.X.push_back(0);  // X_0 = empty
    out.Y.emplace_back();  // index 0 unused
    out.step_colors.push_back(coloring.color_of(0));

    for (int i = 1; i <= 2 * k - 1; ++i) {
        const SubsetMask base = out.X.back();
        // candidates: base plus one new ground element, grouped by color
        std::vector<std::vector<SubsetMask>> bucket(k + 1);
        int pool = 0;
        SubsetMask rest = full & ~base;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            const SubsetMask cand = base | (SubsetMask{1} << b);
            bucket[coloring.color_of(cand)].push_back(cand);
            ++pool;
        }
        if (pool < k * (r - 1) + 1)
            throw std::logic_error("diamond extraction: candidate pool below the pigeonhole floor");
        int chosen_color = 0;
        for (int c = 1; c <= k; ++c)
            if (static_cast<int>(bucket[c].size()) >= r) {
                chosen_color = c;
                break;
            }
        if (chosen_color == 0)
            throw std::logic_error("diamond extraction: no color repeats r times");
        std::vector<SubsetMask> ys(bucket[chosen_color].begin(),
                                   bucket[chosen_color].begin() + r);
        SubsetMask next = base;
        for (SubsetMask y : ys) next |= y;
        out.Y.push_back(std::move(ys));
        out.X.push_back(next);
        out.step_colors.push_back(chosen_color);
        if (cardinality(next) != i * r)
            throw std::logic_error("diamond extraction: |X_i| != i*r");
    }
    out.step_colors.push_back(coloring.color_of(out.X.back()));  // c_{2k}

    // three equal colors among the 2k+1 step colors; smallest color value wins
    int cc = 0;
    for (int c = 1; c <= k && cc == 0; ++c) {
        int cnt = 0;
        for (int v : out.step_colors)
            if (v == c) ++cnt;
        if (cnt >= 3) cc = c;
    }
    if (cc == 0) throw std::logic_error("diamond extraction: no color occurs three times");
    std::vector<int> where;
    for (int idx = 0; idx <= 2 * k; ++idx)
        if (out.step_colors[idx] == cc && where.size() < 3) where.push_back(idx);
    out.i1 = where[0];
    out.i2 = where[1];
    out.i3 = where[2];
    out.color = cc;

    const SubsetMask bottom = out.i1 == 0 ? out.X[0] : out.Y[out.i1][0];
    const SubsetMask top = out.i3 == 2 * k ? out.X[2 * k - 1] : out.Y[out.i3][0];
    out.embedding.mode = EmbeddingMode::Strong;
    out.embedding.images.push_back(bottom);
    for (int j = 0; j < r; ++j) out.embedding.images.push_back(out.Y[out.i2][j]);
    out.embedding.images.push_back(top);

    if (!verify_extraction(out.embedding, coloring, out.color))
        throw std::logic_error("diamond extraction: constructed copy fails verification");
    return out;
}

bool verify_extraction(const Embedding& embedding, const ChainColoring& coloring, int color) {
    if (embedding.images.size() < 4) return false;
    const int r = static_cast<int>(embedding.images.size()) - 2;
    TargetPoset diamond = make_diamond(r);
    if (!is_valid_embedding(diamond, embedding.images, EmbeddingMode::Strong)) return false;
    if (coloring.t != 1) return false;
    for (SubsetMask s : embedding.images) {
        if (s >= coloring.colors.size()) return false;
        if (coloring.color_of(s) != color) return false;
    }
    return true;
}

ChainColoring uniform_random_coloring(int host_n, int t, int k, std::uint64_t seed) {
    if (k < 1) throw ParameterError("uniform_random_coloring: k >= 1 required");
    BooleanLattice host(host_n);
    BigInt hc = chain_count_formula(host_n, t);
    if (hc > 50'000'000ULL) throw InfeasibleError("uniform_random_coloring: too many chains");
    ChainColoring col;
    col.host_n = host_n;
    col.t = t;
    col.k = k;
    col.colors.resize(static_cast<std::size_t>(hc));
    std::mt19937_64 rng(seed);
    for (auto& c : col.colors)
        c = static_cast<std::uint8_t>(1 + rng() % static_cast<std::uint64_t>(k));
    return col;
}

}  // namespace ramsey
