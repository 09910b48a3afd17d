#include "ramsey/coloring.hpp"

namespace ramsey {

const char* to_string(HostFamily family) {
    return family == HostFamily::Boolean ? "boolean" : "chain";
}

std::uint64_t ChainColoring::expected_chain_count() const {
    if (family == HostFamily::Boolean) {
        BigInt c = chain_count_formula(host_n, t);
        if (c > 1'000'000'000ULL)
            throw InfeasibleError("coloring over " + c.str() + " chains is beyond desk scale");
        return static_cast<std::uint64_t>(c);
    }
    BigInt c = binomial(host_n, t);
    return static_cast<std::uint64_t>(c);
}

void ChainColoring::validate() const {
    if (host_n < 0) throw ParameterError("ChainColoring: negative host dimension");
    if (t < 1) throw ParameterError("ChainColoring: t must be >= 1");
    if (k < 1) throw ParameterError("ChainColoring: k must be >= 1");
    if (colors.size() != expected_chain_count())
        throw ParameterError("ChainColoring: colors array has length " +
                             std::to_string(colors.size()) + ", expected " +
                             std::to_string(expected_chain_count()));
    for (auto c : colors)
        if (c < 1 || c > k)
            throw ParameterError("ChainColoring: color " + std::to_string(int(c)) +
                                 " outside [1, " + std::to_string(k) + "]");
}

void RamseyInstance::validate() const {
    if (k < 1 || static_cast<int>(targets.size()) != k)
        throw ParameterError("RamseyInstance: k must equal the number of targets and be >= 1");
    if (t < 1) throw ParameterError("RamseyInstance: t must be >= 1");
    if (family == HostFamily::Chain && t < 2)
        throw ParameterError("RamseyInstance: the chain host family requires t >= 2");
}

ColoringVerdict verify_coloring(const RamseyInstance& instance, int host_n,
                                const ChainColoring& coloring) {
    instance.validate();
    if (instance.family != HostFamily::Boolean)
        throw ParameterError("verify_coloring: only the Boolean host family is implemented");
    if (coloring.host_n != host_n || coloring.t != instance.t || coloring.k != instance.k)
        throw ParameterError("verify_coloring: coloring shape does not match the instance");
    coloring.validate();

    BooleanLattice host(host_n);
    std::optional<ChainIndex> index;
    if (instance.t >= 2) index.emplace(host, instance.t);
    ColoringVerdict v;
    for (int color = 1; color <= instance.k; ++color) {
        auto copy = find_monochromatic_copy(host, instance.targets[color - 1], instance.mode,
                                            coloring, color, index ? &*index : nullptr);
        if (copy) {
            v.good = false;
            v.bad_color = color;
            v.witness = *copy;
            return v;
        }
    }
    v.good = true;
    return v;
}

}  // namespace ramsey
