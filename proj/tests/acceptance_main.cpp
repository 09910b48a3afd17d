// Acceptance suite: one line per criterion, exit code = number of failures.
// Run it from the build tree: ./acceptance_tests

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ramsey/certificate.hpp"
#include "ramsey/chains.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/diamond_extract.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/lubell.hpp"
#include "ramsey/prob_bounds.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& body) {
        ++index;
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%2d] %-58s %s (%.2fs)%s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL",
                    secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

RamseyInstance pair_instance(const TargetPoset& p, EmbeddingMode mode) {
    RamseyInstance inst;
    inst.t = 1;
    inst.k = 2;
    inst.mode = mode;
    inst.targets = {p, p};
    return inst;
}

bool certificate_roundtrip_ok(const RamseyInstance& inst, int host_n, const ChainColoring& col) {
    Certificate cert = make_good_coloring_certificate(inst, host_n, col);
    std::ostringstream out;
    emit_certificate(cert, out);
    std::istringstream in(out.str());
    Certificate back = load_certificate(in);  // re-verifies
    return back.coloring.colors == col.colors;
}

std::vector<SubsetMask> random_antichain(int N, std::mt19937_64& rng) {
    std::vector<SubsetMask> masks(std::size_t{1} << N);
    for (size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<SubsetMask>(i);
    std::shuffle(masks.begin(), masks.end(), rng);
    std::vector<SubsetMask> out;
    const size_t want = rng() % masks.size() + 1;
    for (SubsetMask m : masks) {
        bool ok = true;
        for (SubsetMask x : out)
            if (comparable_masks(x, m)) ok = false;
        if (ok) out.push_back(m);
        if (out.size() == want) break;
    }
    return out;
}

}  // namespace

int main() {
    Harness h;

    h.run("chain-count formula equals exhaustive enumeration (n <= 8)", [](std::string& detail) {
        for (int n = 0; n <= 8; ++n) {
            BooleanLattice host(n);
            for (int t = 1; t <= n + 1; ++t) {
                if (BigInt(count_t_chains_exhaustive(host, t)) != chain_count_formula(n, t)) {
                    detail = "mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t);
                    return false;
                }
            }
        }
        return true;
    });

    h.run("strong diamond Ramsey number = 4, dual certificates + plain check",
          [](std::string& detail) {
              auto inst = pair_instance(make_diamond(2), EmbeddingMode::Strong);
              auto at3 = is_ramsey_at(inst, 3);
              if (at3.status != RamseyStatus::NotRamsey) {
                  detail = "B_3 should admit a good coloring";
                  return false;
              }
              if (!certificate_roundtrip_ok(inst, 3, *at3.good_coloring)) {
                  detail = "lower certificate failed round-trip re-verification";
                  return false;
              }
              auto at4 = is_ramsey_at(inst, 4);
              if (at4.status != RamseyStatus::Ramsey) {
                  detail = "symmetry-reduced exhaustion at B_4 did not conclude ramsey";
                  return false;
              }
              // literal enumeration of all 2^16 colorings
              if (exhaustive_all_colorings_good(inst, 4).has_value()) {
                  detail = "plain-exhaustive check found a good coloring at B_4";
                  return false;
              }
              auto full3 = exhaustive_all_colorings_good(inst, 3);
              if (!full3 || full3->colors != at3.good_coloring->colors) {
                  detail = "plain and reduced searches disagree on the B_3 witness";
                  return false;
              }
              return true;
          });

    h.run("weak 2-matching Ramsey number = 4, dual certificates", [](std::string& detail) {
        auto inst = pair_instance(make_matching(2), EmbeddingMode::Weak);
        auto at3 = is_ramsey_at(inst, 3);
        if (at3.status != RamseyStatus::NotRamsey || !certificate_roundtrip_ok(inst, 3, *at3.good_coloring)) {
            detail = "lower side failed";
            return false;
        }
        auto at4 = is_ramsey_at(inst, 4);
        if (at4.status != RamseyStatus::Ramsey) {
            detail = "exhaustion at B_4 did not conclude ramsey";
            return false;
        }
        auto res = compute_ramsey_number(inst, 5);
        if (!res.found || res.value != 4) {
            detail = "scan did not settle on 4";
            return false;
        }
        return true;
    });

    h.run("weak butterfly Ramsey number = 5 (budgeted exhaustion at B_5)",
          [](std::string& detail) {
              auto inst = pair_instance(make_butterfly(2, 2), EmbeddingMode::Weak);
              auto at4 = is_ramsey_at(inst, 4);
              if (at4.status != RamseyStatus::NotRamsey ||
                  !certificate_roundtrip_ok(inst, 4, *at4.good_coloring)) {
                  detail = "lower certificate at B_4 failed";
                  return false;
              }
              // the B_4 witness must match the literal full enumeration
              auto full4 = exhaustive_all_colorings_good(inst, 4);
              if (!full4 || full4->colors != at4.good_coloring->colors) {
                  detail = "B_4 witness disagrees with the literal enumeration";
                  return false;
              }
              SearchOptions opt;
              opt.budget.max_nodes = 10'000'000'000ULL;
              auto at5 = is_ramsey_at(inst, 5, opt);
              if (at5.status == RamseyStatus::NotRamsey) {
                  detail = "found a good coloring at B_5, contradicting the known value";
                  return false;
              }
              if (at5.status == RamseyStatus::Inconclusive) {
                  // acceptable only with the budget report
                  detail = "INCONCLUSIVE under budget: nodes=" + std::to_string(at5.stats.nodes);
                  return true;
              }
              // independent plain-DFS exhaustion (no symmetry machinery at all)
              SearchOptions plain;
              plain.use_symmetry = false;
              plain.budget.max_nodes = 10'000'000'000ULL;
              auto plain5 = is_ramsey_at(inst, 5, plain);
              if (plain5.status != RamseyStatus::Ramsey) {
                  detail = "plain cross-exhaustion at B_5 disagreed";
                  return false;
              }
              detail = "exhausted with " + std::to_string(at5.stats.nodes) + " nodes (plain: " +
                       std::to_string(plain5.stats.nodes) + ")";
              return true;
          });

    h.run("Lubell exactness and the antichain inequality fuzz", [](std::string& detail) {
        for (int N = 0; N <= 12; ++N) {
            std::vector<SubsetMask> all;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << N); ++m)
                all.push_back(static_cast<SubsetMask>(m));
            if (lubell(N, all) != Rational(N + 1)) {
                detail = "lu(B_N) != N+1 at N=" + std::to_string(N);
                return false;
            }
        }
        std::mt19937_64 rng(2024);
        for (int round = 0; round < 10'000; ++round) {
            int N = 1 + static_cast<int>(rng() % 8);
            auto f = random_antichain(N, rng);
            if (!yblm_check(N, f)) {
                detail = "an antichain exceeded Lubell value 1";
                return false;
            }
        }
        return true;
    });

    h.run("exact matching-free maximum at N = 5 is 6/5", [](std::string& detail) {
        auto r = max_lubell_P_free(5, make_matching(2), exclude_poles(5));
        if (!r.exact) {
            detail = "branch-and-bound budget ran out";
            return false;
        }
        if (r.value != Rational(6, 5)) {
            std::ostringstream s;
            s << "got " << r.value;
            detail = s.str();
            return false;
        }
        return lubell(5, r.witness) == Rational(6, 5);
    });

    h.run("rational certification of the k+2 upper bound (k = 3..12)", [](std::string& detail) {
        for (int k = 3; k <= 12; ++k) {
            auto cond = ramsey_upper_by_lubell(k, k + 2, matching2_lubell_max(k + 2),
                                               exclude_poles(k + 2));
            if (!cond.certified || cond.lhs != Rational(k) + Rational(k, k + 2) ||
                cond.rhs != Rational(k + 1)) {
                detail = "failed at k=" + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    h.run("construction validity across the parameter grids", [](std::string& detail) {
        for (int k = 2; k <= 5; ++k)
            for (int s = 2; s <= 3; ++s) {
                auto col = matching_lower_coloring(k, s);
                RamseyInstance inst;
                inst.t = 1;
                inst.k = k;
                inst.mode = EmbeddingMode::Weak;
                inst.targets.assign(k, make_matching(s));
                if (!verify_coloring(inst, col.host_n, col).good) {
                    detail = "matching coloring bad at k=" + std::to_string(k) +
                             " s=" + std::to_string(s);
                    return false;
                }
            }
        for (int k = 1; k <= 4; ++k)
            for (int r = 2; r <= 3; ++r) {
                auto col = diamond_lower_coloring(k, r);
                RamseyInstance inst;
                inst.t = 1;
                inst.k = k;
                inst.mode = EmbeddingMode::Strong;
                inst.targets.assign(k, make_diamond(r));
                if (!verify_coloring(inst, col.host_n, col).good) {
                    detail = "diamond coloring bad at k=" + std::to_string(k) +
                             " r=" + std::to_string(r);
                    return false;
                }
            }
        {
            auto col = level_block_coloring({2, 2});
            RamseyInstance inst;
            inst.t = 1;
            inst.k = 2;
            inst.mode = EmbeddingMode::Weak;
            inst.targets.assign(2, make_chain(3));
            if (!verify_coloring(inst, 3, col).good) {
                detail = "level-block coloring bad for the 3-chain pair";
                return false;
            }
        }
        return true;
    });

    h.run("diamond extractor fuzz: 1000 colorings per (k, r)", [](std::string& detail) {
        for (auto [k, r] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
            const int N = 3 * k * r - 2 * r - k + 1;
            for (std::uint64_t seed = 0; seed < 1000; ++seed) {
                auto col = uniform_random_coloring(N, 1, k, seed);
                auto res = extract_monochromatic_diamond(k, r, col);
                if (!verify_extraction(res.embedding, col, res.color)) {
                    detail = "verification failed at k=" + std::to_string(k) +
                             " r=" + std::to_string(r) + " seed=" + std::to_string(seed);
                    return false;
                }
            }
        }
        return true;
    });

    h.run("calculators reproduce the closed forms", [](std::string& detail) {
        for (long k = 1; k <= 100; ++k) {
            auto b = diamond_bounds(k, 2);
            if (b.lower != 2 * k || b.upper != 5 * k - 3) {
                detail = "diamond bounds off at k=" + std::to_string(k);
                return false;
            }
        }
        for (int m = 2; m <= 6; ++m) {
            RecurrenceTable seeds;
            seeds.entries[2] = m == 2 ? BigInt(4) : BigInt(m) * m - m + 2;
            auto rows = recurrence_comparison(10, m, seeds);
            if (rows.size() != 10) {
                detail = "short table at m=" + std::to_string(m);
                return false;
            }
        }
        auto sl = strong_lower_bound(3, 2, {2, 2, 2});
        if (!sl.exact || sl.value != Rational(3)) {
            detail = "strong lower bound != 3 on the hand-checked case";
            return false;
        }
        return true;
    });

    h.run("interval tie-safety and the single threshold crossing", [](std::string& detail) {
        auto params = LLLParameters::from_counts(
            2, {10, 10}, {BigInt(binomial(10, 2)), BigInt(binomial(10, 2))});
        LLLVerdict prev = LLLVerdict::Guaranteed;
        int flips = 0;
        for (long n = 1; n <= 100; ++n) {
            auto res = lll_threshold_check(params, BigInt(n));
            if (res.verdict == LLLVerdict::IndeterminateAtPrecision) {
                detail = "indeterminate at n=" + std::to_string(n);
                return false;
            }
            if (n > 1 && res.verdict != prev) ++flips;
            prev = res.verdict;
        }
        if (flips != 1 || prev != LLLVerdict::NotGuaranteed) {
            detail = "verdict did not flip exactly once";
            return false;
        }
        // a second parameter set, same single-crossing property
        auto p2 = LLLParameters::from_counts(3, {4, 4, 6},
                                             {BigInt(3), BigInt(4), BigInt(binomial(6, 2))});
        prev = LLLVerdict::Guaranteed;
        flips = 0;
        for (long n = 1; n <= 60; ++n) {
            auto res = lll_threshold_check(p2, BigInt(n));
            if (res.verdict == LLLVerdict::IndeterminateAtPrecision) {
                detail = "indeterminate at n=" + std::to_string(n) + " (set 2)";
                return false;
            }
            if (n > 1 && res.verdict != prev) ++flips;
            prev = res.verdict;
        }
        if (flips != 1) {
            detail = "second sweep did not flip exactly once";
            return false;
        }
        return true;
    });

    std::printf("ACCEPTANCE: %d/%d PASS\n", h.index - h.failures, h.index);
    return h.failures;
}
