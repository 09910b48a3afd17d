#include "ramsey/embedding.hpp"

#include <algorithm>

#include "ramsey/coloring.hpp"

namespace ramsey {

const char* to_string(EmbeddingMode mode) {
    return mode == EmbeddingMode::Weak ? "weak" : "strong";
}

EmbeddingMode embedding_mode_from_string(const std::string& s) {
    if (s == "weak") return EmbeddingMode::Weak;
    if (s == "strong") return EmbeddingMode::Strong;
    throw ParameterError("unknown embedding mode '" + s + "'");
}

bool is_valid_embedding(const TargetPoset& target, const std::vector<SubsetMask>& images,
                        EmbeddingMode mode) {
    const int p = target.size;
    if (static_cast<int>(images.size()) != p) return false;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            if (images[i] == images[j]) return false;
            if (target.leq(i, j) && !subset_of(images[i], images[j])) return false;
            if (mode == EmbeddingMode::Strong && !target.leq(i, j) && !target.leq(j, i) &&
                subset_of(images[i], images[j]))
                return false;
        }
    return true;
}

namespace {

// Greedy most-constrained-first linear extension: repeatedly pick, among
// elements whose strict predecessors are all placed, the one with the most
// comparabilities to placed elements; ties by smallest index.
std::vector<int> search_order(const TargetPoset& p) {
    const int n = p.size;
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1, bestScore = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool ready = true;
            for (int u = 0; u < n && ready; ++u)
                if (!placed[u] && p.less(u, v)) ready = false;
            if (!ready) continue;
            int score = 0;
            for (int u = 0; u < n; ++u)
                if (placed[u] && p.comparable(u, v)) ++score;
            if (score > bestScore) {
                bestScore = score;
                best = v;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct CopySearcher {
    const BooleanLattice& host;
    const TargetPoset& target;
    EmbeddingMode mode;
    const std::function<bool(SubsetMask)>* filter = nullptr;
    // chain-color constraint (t >= 2): every fully-placed target chain must map
    // to a host chain of the required color
    const ChainIndex* chain_index = nullptr;
    const ChainColoring* coloring = nullptr;
    int required_color = 0;
    // optional pinned assignment: target element pin_element -> pin_mask
    int pin_element = -1;
    SubsetMask pin_mask = 0;

    std::uint64_t node_cap = 1'000'000'000ULL;
    std::uint64_t nodes = 0;
    bool count_all = false;
    BigInt solution_count = 0;

    std::vector<int> order;
    std::vector<int> pos_in_order;  // target element -> depth
    std::vector<SubsetMask> image;
    std::vector<bool> assigned;
    std::vector<std::vector<std::vector<int>>> chains_of;  // per element: chains containing it
    std::vector<SubsetMask> scratch;

    explicit CopySearcher(const BooleanLattice& h, const TargetPoset& tgt, EmbeddingMode md)
        : host(h), target(tgt), mode(md) {}

    void prepare() {
        order = search_order(target);
        pos_in_order.assign(target.size, 0);
        for (int d = 0; d < target.size; ++d) pos_in_order[order[d]] = d;
        image.assign(target.size, 0);
        assigned.assign(target.size, false);
        if (chain_index) {
            const int t = chain_index->t();
            chains_of.assign(target.size, {});
            for (const auto& ch : target.t_chains(t))
                for (int v : ch) chains_of[v].push_back(ch);
            scratch.resize(t);
        }
    }

    bool consistent(int v, SubsetMask m) {
        for (int u = 0; u < target.size; ++u) {
            if (!assigned[u]) continue;
            if (image[u] == m) return false;
            if (target.leq(u, v) && !subset_of(image[u], m)) return false;
            if (target.leq(v, u) && !subset_of(m, image[u])) return false;
            if (mode == EmbeddingMode::Strong && !target.comparable(u, v) &&
                comparable_masks(image[u], m))
                return false;
        }
        return true;
    }

    bool chain_colors_ok(int v) {
        if (!chain_index) return true;
        for (const auto& ch : chains_of[v]) {
            bool complete = true;
            for (int u : ch)
                if (!assigned[u]) {
                    complete = false;
                    break;
                }
            if (!complete) continue;
            const int t = chain_index->t();
            for (int j = 0; j < t; ++j) scratch[j] = image[ch[j]];
            std::sort(scratch.begin(), scratch.end());
            std::uint64_t id = chain_index->id_of(scratch.data());
            if (coloring->color_of(id) != required_color) return false;
        }
        return true;
    }

    // Visits candidates for target element v in ascending mask order: supersets
    // of the union of placed predecessors' images.
    bool search(int depth) {
        if (depth == target.size) {
            if (count_all) {
                ++solution_count;
                return false;
            }
            return true;
        }
        const int v = order[depth];
        SubsetMask base = 0;
        for (int u = 0; u < target.size; ++u)
            if (assigned[u] && target.less(u, v)) base |= image[u];
        const SubsetMask full = host.full_set();
        if (!subset_of(base, full)) return false;

        auto try_mask = [&](SubsetMask m) -> int {
            // 1 = solved, 0 = keep going, throws on node cap
            if (++nodes > node_cap)
                throw InfeasibleError("copy search exceeded the node cap");
            if (filter && *filter && !(*filter)(m)) return 0;
            if (!consistent(v, m)) return 0;
            image[v] = m;
            assigned[v] = true;
            bool ok = chain_colors_ok(v) && search(depth + 1);
            assigned[v] = false;
            return ok ? 1 : 0;
        };

        if (pin_element == v) {
            if (!subset_of(base, pin_mask)) return false;
            return try_mask(pin_mask) == 1;
        }
        // (m + 1) | base steps through supersets of base in ascending mask order
        for (SubsetMask m = base;; m = (m + 1) | base) {
            if (try_mask(m) == 1) return true;
            if (m == full) break;
        }
        return false;
    }

    std::optional<Embedding> run() {
        prepare();
        if (target.size > static_cast<int>(host.element_count())) return std::nullopt;
        if (search(0)) {
            Embedding e;
            e.images = image;
            e.mode = mode;
            return e;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Embedding> find_copy(const BooleanLattice& host, const TargetPoset& target,
                                   EmbeddingMode mode,
                                   const std::function<bool(SubsetMask)>& filter,
                                   std::uint64_t node_cap) {
    CopySearcher s(host, target, mode);
    s.filter = &filter;
    s.node_cap = node_cap;
    return s.run();
}

std::optional<Embedding> find_copy_requiring(const BooleanLattice& host,
                                             const TargetPoset& target, EmbeddingMode mode,
                                             SubsetMask required,
                                             const std::function<bool(SubsetMask)>& filter,
                                             std::uint64_t node_cap) {
    for (int v = 0; v < target.size; ++v) {
        CopySearcher s(host, target, mode);
        s.filter = &filter;
        s.node_cap = node_cap;
        s.pin_element = v;
        s.pin_mask = required;
        if (auto e = s.run()) return e;
    }
    return std::nullopt;
}

BigInt enumerate_strong_boolean_embeddings(int m, int N) {
    if (m < 0 || N < 0 || m > N)
        throw ParameterError("enumerate_strong_boolean_embeddings: need 0 <= m <= N");
    if (m > 3 || N > 6)
        throw InfeasibleError("enumerate_strong_boolean_embeddings: exhaustive cap is m <= 3, N <= 6");
    BooleanLattice host(N);
    TargetPoset cube = make_boolean(m);
    CopySearcher s(host, cube, EmbeddingMode::Strong);
    s.count_all = true;
    s.node_cap = 4'000'000'000ULL;
    s.run();
    return s.solution_count;
}

BigInt embedding_count_upper_bound(int m, int N) {
    if (m < 0 || N < m) throw ParameterError("embedding_count_upper_bound: need 0 <= m <= N");
    BigInt exponent = 2 * binomial(m, m / 2) * (N - m);
    return pow2(exponent.convert_to<unsigned long>());
}

BigInt count_antichains(int m) {
    if (m < 0) throw ParameterError("count_antichains: m must be >= 0");
    if (m > 6) throw InfeasibleError("count_antichains: exhaustive cap is m <= 6");
    const int M = 1 << m;
    // incomparable-with sets over element indices (= masks of B_m)
    std::vector<std::uint64_t> incomp(M, 0);
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b)
            if (a != b && !comparable_masks(static_cast<SubsetMask>(a), static_cast<SubsetMask>(b)))
                incomp[a] |= std::uint64_t{1} << b;
    // every DFS node is a distinct antichain; count them all (empty included)
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, std::uint64_t cands) -> void {
        ++total;
        std::uint64_t rest = cands;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            self(self, rest & incomp[c]);
        }
    };
    std::uint64_t all = (M == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << M) - 1);
    rec(rec, all);
    return BigInt(total);
}

LevelBoundResult level_of_embedding_bound_e(const TargetPoset& target, int probe_cap) {
    if (probe_cap < 1 || probe_cap > 12)
        throw ParameterError("level_of_embedding_bound_e: probe_cap outside [1, 12]");
    BooleanLattice host(probe_cap);
    LevelBoundResult out;
    for (int m = 1; m <= probe_cap + 2; ++m) {
        for (int s = 0; s + m - 1 <= probe_cap; ++s) {
            std::function<bool(SubsetMask)> window = [&](SubsetMask x) {
                int c = cardinality(x);
                return c >= s && c <= s + m - 1;
            };
            if (find_copy(host, target, EmbeddingMode::Weak, window)) {
                out.value = m - 1;
                out.verified = target.size <= probe_cap;
                out.witness_levels = m;
                out.witness_start_level = s;
                return out;
            }
        }
    }
    // no embedding found anywhere in the probe; the probe was too small
    out.value = probe_cap + 1;
    out.verified = false;
    return out;
}

std::optional<Embedding> find_monochromatic_copy(const BooleanLattice& host,
                                                 const TargetPoset& target, EmbeddingMode mode,
                                                 const ChainColoring& coloring, int color,
                                                 const ChainIndex* index) {
    if (coloring.host_n != host.n)
        throw ParameterError("monochromatic copy: coloring host dimension mismatch");
    if (color < 1 || color > coloring.k)
        throw ParameterError("monochromatic copy: color out of range");
    if (coloring.t == 1) {
        std::function<bool(SubsetMask)> filter = [&](SubsetMask s) {
            return coloring.color_of(s) == color;
        };
        return find_copy(host, target, mode, filter);
    }
    CopySearcher s(host, target, mode);
    std::optional<ChainIndex> local;
    const ChainIndex* idx = index;
    if (!idx) {
        local.emplace(host, coloring.t);
        idx = &*local;
    }
    if (idx->host_n() != host.n || idx->t() != coloring.t)
        throw ParameterError("monochromatic copy: chain index mismatch");
    s.chain_index = idx;
    s.coloring = &coloring;
    s.required_color = color;
    return s.run();
}

bool monochromatic_copy_exists(const BooleanLattice& host, const TargetPoset& target,
                               EmbeddingMode mode, const ChainColoring& coloring, int color,
                               const ChainIndex* index) {
    return find_monochromatic_copy(host, target, mode, coloring, color, index).has_value();
}

}  // namespace ramsey
