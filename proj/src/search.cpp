#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <thread>

#include "ramsey/embedding.hpp"

namespace ramsey {

namespace {

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

std::uint64_t SymmetryGroup::order() const {
    std::uint64_t f = factorial_u64(host_n);
    return with_reversal && host_n > 0 ? 2 * f : f;
}

std::string SymmetryGroup::descriptor() const {
    if (host_n <= 0) return "trivial";
    std::string d = "S" + std::to_string(host_n);
    if (with_reversal) d += "xR";
    return d;
}

SymmetryGroup canonical_symmetry_group(const RamseyInstance& instance, int host_n) {
    SymmetryGroup g;
    g.host_n = host_n;
    // Complementation reverses containment, so it is admissible only when the
    // target list is invariant under replacing every P_i by its dual.
    g.with_reversal = host_n > 0 && target_list_dual_invariant(instance.targets);
    return g;
}

const char* to_string(RamseyStatus s) {
    switch (s) {
        case RamseyStatus::Ramsey: return "ramsey";
        case RamseyStatus::NotRamsey: return "not-ramsey";
        default: return "inconclusive";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Bits {
    static int words_for(std::uint64_t n) { return static_cast<int>((n + 63) / 64); }
};

SubsetMask apply_ground(SubsetMask s, const std::vector<int>& perm, SubsetMask full, bool flip) {
    SubsetMask t = 0;
    SubsetMask rest = s;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        t |= SubsetMask{1} << perm[b];
    }
    return flip ? static_cast<SubsetMask>(full ^ t) : t;
}

// Inverse chain-id permutations for every non-identity group element.
std::vector<std::vector<std::uint32_t>> build_inverse_id_maps(const SymmetryGroup& group,
                                                              const BooleanLattice& host,
                                                              const ChainIndex* index,
                                                              std::uint64_t chain_count, int t) {
    std::vector<std::vector<std::uint32_t>> out;
    if (group.host_n == 0) return out;
    std::vector<int> perm(group.host_n);
    std::iota(perm.begin(), perm.end(), 0);
    const SubsetMask full = host.full_set();
    std::vector<SubsetMask> scratch(static_cast<size_t>(t));
    do {
        for (int flip = 0; flip <= (group.with_reversal ? 1 : 0); ++flip) {
            bool identity = !flip;
            if (identity)
                for (int i = 0; i < group.host_n && identity; ++i)
                    if (perm[i] != i) identity = false;
            if (identity) continue;
            std::vector<std::uint32_t> inv(chain_count);
            for (std::uint64_t id = 0; id < chain_count; ++id) {
                std::uint64_t image;
                if (t == 1) {
                    image = apply_ground(static_cast<SubsetMask>(id), perm, full, flip != 0);
                } else {
                    const SubsetMask* c = index->chain(id);
                    for (int j = 0; j < t; ++j) scratch[j] = apply_ground(c[j], perm, full, flip != 0);
                    std::sort(scratch.begin(), scratch.end());
                    image = index->id_of(scratch.data());
                }
                inv[image] = static_cast<std::uint32_t>(id);  // inv[g(id)] = id
            }
            out.push_back(std::move(inv));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

enum class DetectorKind { Butterfly22Weak, GenericPinned, GenericFullScan };

struct Engine {
    const RamseyInstance& inst;
    int host_n;
    BooleanLattice host;
    std::unique_ptr<ChainIndex> index;
    std::uint64_t H;
    int k;
    int words;

    std::vector<std::uint8_t> colors;
    std::vector<std::vector<std::uint64_t>> cls;  // [color] -> chain-id bitset
    std::vector<int> used_count;

    // color interchange classes (targets with equal labels commute)
    std::vector<int> color_group;

    // detection
    std::vector<DetectorKind> det;
    std::vector<std::uint64_t> sub_of, sup_of;  // t=1: per mask, comparable-id bitsets
    ChainColoring scratch_coloring;             // t>=2 full-scan view

    // symmetry (lex-leader under the inverse id maps)
    bool use_symmetry;
    std::vector<std::vector<std::uint32_t>> inv_maps;
    std::vector<std::uint32_t> active;
    std::size_t active_size = 0;
    std::vector<std::uint32_t> pos;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pos_undo;

    // budget
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    double max_seconds;
    Clock::time_point t0;
    bool budget_hit = false;

    std::optional<std::vector<std::uint8_t>> good;

    // prefix-task collection mode (parallel split)
    std::uint64_t task_depth = 0;
    std::vector<std::vector<std::uint8_t>>* task_sink = nullptr;

    Engine(const RamseyInstance& instance, int n, const SymmetryGroup& group, bool symmetry,
           const SearchBudget& budget)
        : inst(instance), host_n(n), host(n), use_symmetry(symmetry) {
        k = inst.k;
        if (inst.t >= 2) index = std::make_unique<ChainIndex>(host, inst.t);
        BigInt hc = chain_count_formula(host_n, inst.t);
        if (hc > 1'000'000ULL)
            throw InfeasibleError("search over " + hc.str() + " chains is beyond desk scale");
        H = static_cast<std::uint64_t>(hc);
        words = Bits::words_for(H);
        colors.assign(H, 0);
        cls.assign(k + 1, std::vector<std::uint64_t>(words, 0));
        used_count.assign(k + 1, 0);

        color_group.assign(k + 1, 0);
        for (int c = 1; c <= k; ++c)
            for (int c2 = 1; c2 < c; ++c2)
                if (inst.targets[c2 - 1].label == inst.targets[c - 1].label &&
                    !inst.targets[c - 1].label.empty()) {
                    color_group[c] = c2;  // representative: smallest color with same label
                    break;
                }
        for (int c = 1; c <= k; ++c)
            if (color_group[c] == 0) color_group[c] = c;

        det.assign(k + 1, DetectorKind::GenericFullScan);
        bool need_cmp_bitsets = false;
        for (int c = 1; c <= k; ++c) {
            if (inst.t == 1) {
                if (inst.mode == EmbeddingMode::Weak && inst.targets[c - 1].label == "butterfly:2:2" &&
                    H <= 64) {
                    det[c] = DetectorKind::Butterfly22Weak;
                    need_cmp_bitsets = true;
                } else {
                    det[c] = DetectorKind::GenericPinned;
                }
            }
        }
        if (need_cmp_bitsets) {
            sub_of.assign(H, 0);
            sup_of.assign(H, 0);
            for (std::uint64_t a = 0; a < H; ++a)
                for (std::uint64_t b = 0; b < H; ++b)
                    if (subset_of(static_cast<SubsetMask>(a), static_cast<SubsetMask>(b))) {
                        sub_of[b] |= std::uint64_t{1} << a;
                        sup_of[a] |= std::uint64_t{1} << b;
                    }
        }
        if (inst.t >= 2) {
            scratch_coloring.host_n = host_n;
            scratch_coloring.t = inst.t;
            scratch_coloring.k = k;
            scratch_coloring.colors.assign(H, 0);
        }

        if (use_symmetry) {
            inv_maps = build_inverse_id_maps(group, host, index.get(), H, inst.t);
            active.resize(inv_maps.size());
            std::iota(active.begin(), active.end(), 0);
            active_size = active.size();
            pos.assign(inv_maps.size(), 0);
        }

        max_nodes = budget.max_nodes;
        max_seconds = budget.max_seconds;
        t0 = Clock::now();
    }

    bool over_budget() {
        if (nodes > max_nodes) return true;
        if (max_seconds > 0 && (nodes & 8191) == 0) {
            double s = std::chrono::duration<double>(Clock::now() - t0).count();
            if (s > max_seconds) return true;
        }
        return false;
    }

    bool color_allowed(int c) const {
        if (used_count[c] > 0) return true;
        // first unused color of its interchange class only
        for (int c2 = color_group[c]; c2 < c; ++c2)
            if (color_group[c2] == color_group[c] && used_count[c2] == 0) return false;
        return true;
    }

    void assign(std::uint64_t L, int c) {
        colors[L] = static_cast<std::uint8_t>(c);
        cls[c][L >> 6] |= std::uint64_t{1} << (L & 63);
        ++used_count[c];
    }

    void unassign(std::uint64_t L, int c) {
        colors[L] = 0;
        cls[c][L >> 6] &= ~(std::uint64_t{1} << (L & 63));
        --used_count[c];
    }

    bool butterfly22_creates(std::uint64_t L, int c) const {
        const std::uint64_t C = cls[c][0] | (std::uint64_t{1} << L);
        const std::uint64_t others = C & ~(std::uint64_t{1} << L);
        // L as a top: another top T, two class elements below both
        std::uint64_t rest = others;
        while (rest) {
            int T = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t commonSubs =
                sub_of[L] & sub_of[T] & C & ~(std::uint64_t{1} << L) & ~(std::uint64_t{1} << T);
            if (std::popcount(commonSubs) >= 2) return true;
        }
        // L as a bottom: another bottom B, two class elements above both
        rest = others;
        while (rest) {
            int B = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t commonSups =
                sup_of[L] & sup_of[B] & C & ~(std::uint64_t{1} << L) & ~(std::uint64_t{1} << B);
            if (std::popcount(commonSups) >= 2) return true;
        }
        return false;
    }

    bool generic_pinned_creates(std::uint64_t L, int c) {
        const SubsetMask Lmask = static_cast<SubsetMask>(L);
        const auto& target = inst.targets[c - 1];
        std::function<bool(SubsetMask)> filter = [&](SubsetMask m) {
            return m == Lmask || colors[m] == c;
        };
        for (int v = 0; v < target.size; ++v) {
            auto found = find_copy_pinned_(target, v, Lmask, filter);
            if (found) return true;
        }
        return false;
    }

    // thin local pinned search; mirrors find_copy's canonical order
    std::optional<Embedding> find_copy_pinned_(const TargetPoset& target, int pin_v,
                                               SubsetMask pin_mask,
                                               const std::function<bool(SubsetMask)>& filter);

    bool fullscan_creates(std::uint64_t L, int c) {
        std::copy(colors.begin(), colors.end(), scratch_coloring.colors.begin());
        scratch_coloring.colors[L] = static_cast<std::uint8_t>(c);
        return monochromatic_copy_exists(host, inst.targets[c - 1], inst.mode, scratch_coloring,
                                         c, index.get());
    }

    bool creates_mono(std::uint64_t L, int c) {
        switch (det[c]) {
            case DetectorKind::Butterfly22Weak: return butterfly22_creates(L, c);
            case DetectorKind::GenericPinned: return generic_pinned_creates(L, c);
            default: return fullscan_creates(L, c);
        }
    }

    // After colors[L] was assigned: true when some group element certifies a
    // lexicographically smaller equivalent prefix.
    bool lex_prunes(std::uint64_t L) {
        std::size_t idx = 0;
        while (idx < active_size) {
            const std::uint32_t g = active[idx];
            const auto& inv = inv_maps[g];
            std::uint32_t d = pos[g];
            int verdict = 0;
            while (d <= L) {
                const std::uint32_t p = inv[d];
                if (p > L) break;  // image entry not colored yet
                const int a = colors[p];  // (g.chi)(d)
                const int b = colors[d];
                if (a != b) {
                    verdict = a < b ? -1 : 1;
                    break;
                }
                ++d;
            }
            if (verdict < 0) return true;
            if (verdict > 0) {
                std::swap(active[idx], active[active_size - 1]);
                --active_size;
                continue;
            }
            if (d != pos[g]) {
                pos_undo.emplace_back(g, pos[g]);
                pos[g] = d;
            }
            ++idx;
        }
        return false;
    }

    void lex_restore(std::size_t saved_active, std::size_t saved_undo) {
        while (pos_undo.size() > saved_undo) {
            auto [g, old] = pos_undo.back();
            pos_undo.pop_back();
            pos[g] = old;
        }
        active_size = saved_active;
    }

    // DFS over chain ids in canonical order, colors ascending. Returns true to
    // stop the search (good found or budget exhausted).
    bool dfs(std::uint64_t L) {
        if (task_sink && L == task_depth) {
            task_sink->push_back(
                std::vector<std::uint8_t>(colors.begin(), colors.begin() + L));
            return false;
        }
        if (L == H) {
            good = colors;
            return true;
        }
        for (int c = 1; c <= k; ++c) {
            if (!color_allowed(c)) continue;
            ++nodes;
            if (over_budget()) {
                budget_hit = true;
                return true;
            }
            if (creates_mono(L, c)) continue;
            assign(L, c);
            const std::size_t sa = active_size;
            const std::size_t su = pos_undo.size();
            bool pruned = use_symmetry && lex_prunes(L);
            if (!pruned && dfs(L + 1)) {
                lex_restore(sa, su);
                unassign(L, c);
                return true;
            }
            lex_restore(sa, su);
            unassign(L, c);
        }
        return false;
    }

    // Rebuild state along a prefix (used by parallel workers).
    void replay(const std::vector<std::uint8_t>& prefix) {
        for (std::uint64_t L = 0; L < prefix.size(); ++L) {
            const int c = prefix[L];
            assign(L, c);
            if (use_symmetry) {
                bool pruned = lex_prunes(L);
                assert(!pruned);
                (void)pruned;
            }
        }
    }
};

std::optional<Embedding> Engine::find_copy_pinned_(const TargetPoset& target, int pin_v,
                                                   SubsetMask pin_mask,
                                                   const std::function<bool(SubsetMask)>& filter) {
    // ad-hoc pinned backtracking; small targets only
    const int p = target.size;
    std::vector<int> order;
    {
        std::vector<bool> placed(p, false);
        for (int step = 0; step < p; ++step) {
            int best = -1, bestScore = -1;
            for (int v = 0; v < p; ++v) {
                if (placed[v]) continue;
                bool ready = true;
                for (int u = 0; u < p && ready; ++u)
                    if (!placed[u] && target.less(u, v)) ready = false;
                if (!ready) continue;
                int score = 0;
                for (int u = 0; u < p; ++u)
                    if (placed[u] && target.comparable(u, v)) ++score;
                if (score > bestScore) {
                    bestScore = score;
                    best = v;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }
    std::vector<SubsetMask> image(p, 0);
    std::vector<bool> assigned(p, false);
    const SubsetMask full = host.full_set();
    auto consistent = [&](int v, SubsetMask m) {
        for (int u = 0; u < p; ++u) {
            if (!assigned[u]) continue;
            if (image[u] == m) return false;
            if (target.leq(u, v) && !subset_of(image[u], m)) return false;
            if (target.leq(v, u) && !subset_of(m, image[u])) return false;
            if (inst.mode == EmbeddingMode::Strong && !target.comparable(u, v) &&
                comparable_masks(image[u], m))
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == p) return true;
        const int v = order[depth];
        SubsetMask base = 0;
        for (int u = 0; u < p; ++u)
            if (assigned[u] && target.less(u, v)) base |= image[u];
        auto attempt = [&](SubsetMask m) {
            if (!filter(m)) return false;
            if (!consistent(v, m)) return false;
            image[v] = m;
            assigned[v] = true;
            if (self(self, depth + 1)) return true;
            assigned[v] = false;
            return false;
        };
        if (v == pin_v) {
            if (!subset_of(base, pin_mask)) return false;
            if (attempt(pin_mask)) return true;
            assigned[v] = false;
            return false;
        }
        for (SubsetMask m = base;; m = (m + 1) | base) {
            if (attempt(m)) return true;
            if (m == full) break;
        }
        return false;
    };
    if (rec(rec, 0)) {
        Embedding e;
        e.images = image;
        e.mode = inst.mode;
        return e;
    }
    return std::nullopt;
}

ChainColoring coloring_from_raw(const RamseyInstance& inst, int host_n,
                                const std::vector<std::uint8_t>& raw) {
    ChainColoring col;
    col.host_n = host_n;
    col.t = inst.t;
    col.k = inst.k;
    col.family = HostFamily::Boolean;
    col.colors = raw;
    col.validate();
    return col;
}

// Targets with no t-chain at all make every embedding vacuously monochromatic.
bool vacuous_ramsey(const RamseyInstance& inst, const BooleanLattice& host) {
    for (int c = 1; c <= inst.k; ++c) {
        const auto& target = inst.targets[c - 1];
        if (inst.t >= 2 && target.count_t_chains(inst.t) == 0 &&
            find_copy(host, target, inst.mode))
            return true;
    }
    return false;
}

}  // namespace

RamseyAtResult is_ramsey_at(const RamseyInstance& instance, int host_n,
                            const SearchOptions& options) {
    instance.validate();
    if (instance.family != HostFamily::Boolean)
        throw ParameterError("is_ramsey_at: only the Boolean host family is implemented");
    if (host_n < 0) throw ParameterError("is_ramsey_at: negative host dimension");

    const auto t_start = Clock::now();
    SymmetryGroup group = canonical_symmetry_group(instance, host_n);
    // ground groups beyond S_7 are not worth expanding; fall back to plain search
    const bool symmetry = options.use_symmetry && host_n <= 7 && host_n > 0;

    RamseyAtResult result;
    result.stats.group = symmetry ? group.descriptor() : "none";

    BooleanLattice host(host_n);
    if (vacuous_ramsey(instance, host)) {
        result.status = RamseyStatus::Ramsey;
        result.stats.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t_start).count());
        return result;
    }

    Engine engine(instance, host_n, group, symmetry, options.budget);

    const int jobs = std::max(1, options.jobs);
    bool stopped;
    std::optional<std::vector<std::uint8_t>> best_good;
    std::uint64_t total_nodes = 0;
    bool any_budget_hit = false;

    if (jobs == 1 || engine.H < 4) {
        stopped = engine.dfs(0);
        (void)stopped;
        best_good = engine.good;
        total_nodes = engine.nodes;
        any_budget_hit = engine.budget_hit;
    } else {
        // split into prefix tasks, workers own disjoint subtrees
        std::vector<std::vector<std::uint8_t>> tasks;
        bool split_truncated = false;
        std::uint64_t depth = 1;
        const std::uint64_t want = static_cast<std::uint64_t>(jobs) * 4;
        while (depth < engine.H) {
            tasks.clear();
            Engine splitter(instance, host_n, group, symmetry, options.budget);
            splitter.task_depth = depth;
            splitter.task_sink = &tasks;
            splitter.dfs(0);
            total_nodes += splitter.nodes;
            split_truncated = splitter.budget_hit;
            if (split_truncated || tasks.size() >= want || depth + 1 >= engine.H) break;
            ++depth;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> found_at{tasks.size()};
        std::vector<std::optional<std::vector<std::uint8_t>>> goods(tasks.size());
        std::vector<std::uint8_t> task_budget_hit(tasks.size(), 0);
        std::atomic<std::uint64_t> nodes_acc{0};
        const std::uint64_t per_worker_nodes = std::max<std::uint64_t>(
            1, options.budget.max_nodes / static_cast<std::uint64_t>(jobs));
        auto worker = [&]() {
            Engine local(instance, host_n, group, symmetry, options.budget);
            local.max_nodes = per_worker_nodes;
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                if (i > found_at.load()) continue;  // a lex-earlier good already exists
                local.nodes = 0;
                local.budget_hit = false;
                local.good.reset();
                std::fill(local.colors.begin(), local.colors.end(), 0);
                for (auto& w : local.cls) std::fill(w.begin(), w.end(), 0);
                std::fill(local.used_count.begin(), local.used_count.end(), 0);
                if (symmetry) {
                    local.active_size = local.active.size();
                    std::fill(local.pos.begin(), local.pos.end(), 0);
                    local.pos_undo.clear();
                }
                local.replay(tasks[i]);
                local.dfs(static_cast<std::uint64_t>(tasks[i].size()));
                nodes_acc.fetch_add(local.nodes);
                if (local.budget_hit) task_budget_hit[i] = 1;
                if (local.good) {
                    goods[i] = local.good;
                    std::size_t cur = found_at.load();
                    while (i < cur && !found_at.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        total_nodes += nodes_acc.load();
        // the earliest found good is the global lexicographic minimum provided no
        // lex-earlier subtree was cut short by the budget
        std::size_t first_good = tasks.size();
        for (std::size_t i = 0; i < tasks.size(); ++i)
            if (goods[i]) {
                first_good = i;
                break;
            }
        if (first_good < tasks.size()) {
            best_good = goods[first_good];
            for (std::size_t i = 0; i < first_good; ++i)
                if (task_budget_hit[i]) any_budget_hit = true;  // lex-least not certified
        } else {
            for (std::size_t i = 0; i < tasks.size(); ++i)
                if (task_budget_hit[i]) any_budget_hit = true;
        }
        if (split_truncated) any_budget_hit = true;
    }

    result.stats.nodes = total_nodes;
    result.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t_start).count());

    if (best_good) {
        ChainColoring col = coloring_from_raw(instance, host_n, *best_good);
        // defense in depth: never hand out an unverified witness
        auto check = verify_coloring(instance, host_n, col);
        if (!check.good)
            throw std::logic_error("search produced a coloring that fails re-verification");
        result.status = RamseyStatus::NotRamsey;
        result.good_coloring = std::move(col);
        result.stats.budget_exhausted = any_budget_hit;
        return result;
    }
    if (any_budget_hit) {
        result.status = RamseyStatus::Inconclusive;
        result.stats.budget_exhausted = true;
        return result;
    }
    result.status = RamseyStatus::Ramsey;
    return result;
}

std::optional<ChainColoring> exhaustive_all_colorings_good(const RamseyInstance& instance,
                                                           int host_n) {
    instance.validate();
    if (instance.family != HostFamily::Boolean)
        throw ParameterError("exhaustive check: only the Boolean host family is implemented");
    BigInt hc = chain_count_formula(host_n, instance.t);
    const std::uint64_t H = static_cast<std::uint64_t>(hc);
    double log_space = static_cast<double>(H) * std::log2(static_cast<double>(instance.k));
    if (log_space > 24.0)
        throw InfeasibleError("exhaustive check: k^H exceeds 2^24 colorings");

    BooleanLattice host(host_n);
    std::unique_ptr<ChainIndex> index;
    if (instance.t >= 2) index = std::make_unique<ChainIndex>(host, instance.t);

    ChainColoring col;
    col.host_n = host_n;
    col.t = instance.t;
    col.k = instance.k;
    col.colors.assign(H, 1);
    while (true) {
        bool good = true;
        for (int c = 1; c <= instance.k && good; ++c)
            if (monochromatic_copy_exists(host, instance.targets[c - 1], instance.mode, col, c,
                                          index.get()))
                good = false;
        if (good) return col;
        // odometer increment in lexicographic order (last id least significant...
        // we need lexicographic over (colors[0], colors[1], ...): increment from the end
        std::int64_t i = static_cast<std::int64_t>(H) - 1;
        while (i >= 0 && col.colors[i] == instance.k) {
            col.colors[i] = 1;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++col.colors[i];
    }
}

RamseyNumberResult compute_ramsey_number(const RamseyInstance& instance, int n_max,
                                         const SearchOptions& options) {
    instance.validate();
    if (n_max < 1) throw ParameterError("compute_ramsey_number: n_max must be >= 1");
    RamseyNumberResult out;
    for (int n = 1; n <= n_max; ++n) {
        out.scanned_up_to = n;
        RamseyAtResult r = is_ramsey_at(instance, n, options);
        if (r.status == RamseyStatus::NotRamsey) {
            out.lower_witness = std::move(r.good_coloring);
            out.lower_witness_n = n;
            continue;
        }
        if (r.status == RamseyStatus::Ramsey) {
            out.found = true;
            out.value = n;
            out.exhaustion_stats = r.stats;
            return out;
        }
        out.inconclusive = true;
        out.exhaustion_stats = r.stats;
        return out;
    }
    return out;
}

}  // namespace ramsey
