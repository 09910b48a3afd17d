#pragma once

#include <iosfwd>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Serialized witness: a good coloring (lower-bound side) or an exhaustion
// record (upper-bound side), with enough metadata to re-verify independently.
struct Certificate {
    enum class Kind { GoodColoring, Exhaustion };

    Kind kind = Kind::GoodColoring;
    RamseyInstance instance;
    int host_n = 0;

    ChainColoring coloring;  // GoodColoring payload

    // Exhaustion payload
    std::uint64_t nodes = 0;
    std::string group;
    std::uint64_t elapsed_ms = 0;
};

Certificate make_good_coloring_certificate(const RamseyInstance& instance, int host_n,
                                           ChainColoring coloring);
Certificate make_exhaustion_certificate(const RamseyInstance& instance, int host_n,
                                        const SearchStats& stats);

// Text format, versioned: "poset-ramsey-cert v1" header, then key:value lines.
// Good-coloring certificates are re-verified before emission.
void emit_certificate(const Certificate& cert, std::ostream& out);
void emit_certificate_file(const Certificate& cert, const std::string& path);

// Parses and, for good colorings, re-verifies; throws ParseError on malformed
// input and VerificationError when the coloring is not good.
Certificate load_certificate(std::istream& in);
Certificate load_certificate_file(const std::string& path);

// Parse without the goodness re-check (shape is still validated); callers that
// want the failure witness run verify_coloring themselves.
Certificate parse_certificate(std::istream& in);

}  // namespace ramsey
