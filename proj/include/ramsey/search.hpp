#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Ground-set permutations S_n, optionally extended by the order-reversing
// complementation involution when the target list is dual-invariant.
struct SymmetryGroup {
    int host_n = 0;
    bool with_reversal = false;

    std::uint64_t order() const;
    std::string descriptor() const;  // "trivial", "S4", "S4xR"
};

SymmetryGroup canonical_symmetry_group(const RamseyInstance& instance, int host_n);

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000'000ULL;
    double max_seconds = 0.0;  // 0 = no wall-clock limit
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t elapsed_ms = 0;
    std::string group = "trivial";
    bool budget_exhausted = false;
};

enum class RamseyStatus { Ramsey, NotRamsey, Inconclusive };

const char* to_string(RamseyStatus s);

struct RamseyAtResult {
    RamseyStatus status = RamseyStatus::Inconclusive;
    std::optional<ChainColoring> good_coloring;  // present when NotRamsey
    SearchStats stats;
};

struct SearchOptions {
    SearchBudget budget;
    bool use_symmetry = true;
    int jobs = 1;
};

// Exhaustive backtracking over chain colorings in canonical id order with
// incremental monochromatic-copy pruning. Ramsey iff every coloring (up to the
// symmetry policy) contains a required copy; NotRamsey returns the
// lexicographically least good coloring.
RamseyAtResult is_ramsey_at(const RamseyInstance& instance, int host_n,
                            const SearchOptions& options = {});

// Literal full enumeration of all k^H colorings, verifying each; usable only
// for tiny instances. Returns the lexicographically least good coloring, if any.
std::optional<ChainColoring> exhaustive_all_colorings_good(const RamseyInstance& instance,
                                                           int host_n);

struct RamseyNumberResult {
    bool found = false;
    int value = 0;                                // smallest ramsey dimension when found
    int scanned_up_to = 0;                        // largest dimension examined
    std::optional<ChainColoring> lower_witness;   // good coloring at value-1 (or at
                                                  // scanned_up_to when !found)
    int lower_witness_n = 0;
    SearchStats exhaustion_stats;                 // stats at the ramsey dimension
    bool inconclusive = false;                    // budget ran out mid-scan
};

// Scan host_n = 1..n_max with is_ramsey_at; certificates for both endpoints.
RamseyNumberResult compute_ramsey_number(const RamseyInstance& instance, int n_max,
                                         const SearchOptions& options = {});

}  // namespace ramsey
