#include "ramsey/target_poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ramsey {

namespace {

void validate_order(const TargetPoset& p) {
    const int n = p.size;
    for (int i = 0; i < n; ++i) {
        if (!p.leq(i, i)) throw ParameterError("TargetPoset: relation not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i))
                throw ParameterError("TargetPoset: relation not antisymmetric");
            if (!p.leq(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (p.leq(j, k) && !p.leq(i, k))
                    throw ParameterError("TargetPoset: relation not transitive");
        }
    }
}

void require_positive(long v, const char* what) {
    if (v <= 0) throw ParameterError(std::string("target family parameter ") + what +
                                     " must be positive, got " + std::to_string(v));
}

}  // namespace

TargetPoset::TargetPoset(int p, std::vector<std::uint64_t> rows, std::string name)
    : size(p), leq_rows(std::move(rows)), label(std::move(name)) {
    if (p < 1 || p > kMaxSize)
        throw ParameterError("TargetPoset: size " + std::to_string(p) + " outside [1, 64]");
    if (static_cast<int>(leq_rows.size()) != p)
        throw ParameterError("TargetPoset: row count mismatch");
    validate_order(*this);
}

TargetPoset TargetPoset::dual() const {
    std::vector<std::uint64_t> rows(size, 0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (leq(j, i)) rows[i] |= std::uint64_t{1} << j;
    std::string name = label;
    // butterfly:r:s dualizes to butterfly:s:r; the other named families are self-dual.
    if (label.rfind("butterfly:", 0) == 0) {
        std::istringstream in(label.substr(10));
        int r = 0, s = 0;
        char colon = 0;
        if (in >> r >> colon >> s)
            name = "butterfly:" + std::to_string(s) + ":" + std::to_string(r);
    }
    TargetPoset d;
    d.size = size;
    d.leq_rows = std::move(rows);
    d.label = std::move(name);
    return d;
}

std::uint64_t TargetPoset::count_t_chains(int t) const {
    return static_cast<std::uint64_t>(t_chains(t).size());
}

std::vector<std::vector<int>> TargetPoset::t_chains(int t) const {
    // A chain is totally ordered, so extending strictly upward emits each
    // member set exactly once, listed low-to-high.
    std::vector<std::vector<int>> out;
    if (t < 1 || t > size) return out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        if (static_cast<int>(stack.size()) == t) {
            out.push_back(stack);
            return;
        }
        for (int v = 0; v < size; ++v) {
            if (last >= 0 && !less(last, v)) continue;
            stack.push_back(v);
            self(self, v);
            stack.pop_back();
        }
    };
    rec(rec, -1);
    return out;
}

bool TargetPoset::every_element_in_a_t_chain(int t) const {
    auto chains = t_chains(t);
    std::uint64_t seen = 0;
    for (const auto& c : chains)
        for (int v : c) seen |= std::uint64_t{1} << v;
    for (int v = 0; v < size; ++v)
        if (!(seen >> v & 1u)) return false;
    return true;
}

TargetPoset make_chain(int n) {
    require_positive(n, "n");
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rows[i] |= std::uint64_t{1} << j;
    return TargetPoset(n, std::move(rows), "chain:" + std::to_string(n));
}

TargetPoset make_antichain(int n) {
    require_positive(n, "n");
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    return TargetPoset(n, std::move(rows), "antichain:" + std::to_string(n));
}

TargetPoset make_matching(int s) {
    require_positive(s, "s");
    // x_i = i, y_i = s + i, x_i < y_i only
    std::vector<std::uint64_t> rows(2 * s, 0);
    for (int i = 0; i < 2 * s; ++i) rows[i] = std::uint64_t{1} << i;
    for (int i = 0; i < s; ++i) rows[i] |= std::uint64_t{1} << (s + i);
    return TargetPoset(2 * s, std::move(rows), "matching:" + std::to_string(s));
}

TargetPoset make_butterfly(int r, int s) {
    require_positive(r, "r");
    require_positive(s, "s");
    // bottoms 0..r-1 all below tops r..r+s-1
    std::vector<std::uint64_t> rows(r + s, 0);
    for (int i = 0; i < r + s; ++i) rows[i] = std::uint64_t{1} << i;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) rows[i] |= std::uint64_t{1} << (r + j);
    return TargetPoset(r + s, std::move(rows),
                       "butterfly:" + std::to_string(r) + ":" + std::to_string(s));
}

TargetPoset make_diamond(int r) {
    require_positive(r, "r");
    // 0 = bottom, 1..r = incomparable middles, r+1 = top
    const int p = r + 2;
    std::vector<std::uint64_t> rows(p, 0);
    for (int i = 0; i < p; ++i) rows[i] = std::uint64_t{1} << i;
    for (int j = 1; j <= r + 1; ++j) rows[0] |= std::uint64_t{1} << j;
    for (int i = 1; i <= r; ++i) rows[i] |= std::uint64_t{1} << (r + 1);
    return TargetPoset(p, std::move(rows), "diamond:" + std::to_string(r));
}

TargetPoset make_boolean(int m) {
    if (m < 0 || m > 6)
        throw ParameterError("boolean target dimension must be in [0, 6], got " +
                             std::to_string(m));
    const int p = 1 << m;
    std::vector<std::uint64_t> rows(p, 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if ((i & j) == i) rows[i] |= std::uint64_t{1} << j;
    return TargetPoset(p, std::move(rows), "boolean:" + std::to_string(m));
}

TargetPoset make_target(const std::string& desc) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : desc) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    auto arg = [&](size_t i) -> int {
        if (i >= parts.size() || parts[i].empty())
            throw ParameterError("target '" + desc + "': missing parameter");
        try {
            size_t pos = 0;
            int v = std::stoi(parts[i], &pos);
            if (pos != parts[i].size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParameterError("target '" + desc + "': bad integer '" + parts[i] + "'");
        }
    };
    auto expect_arity = [&](size_t n) {
        if (parts.size() != n + 1)
            throw ParameterError("target '" + desc + "': wrong number of parameters");
    };
    const std::string& fam = parts[0];
    if (fam == "chain") { expect_arity(1); return make_chain(arg(1)); }
    if (fam == "antichain") { expect_arity(1); return make_antichain(arg(1)); }
    if (fam == "matching") { expect_arity(1); return make_matching(arg(1)); }
    if (fam == "butterfly") { expect_arity(2); return make_butterfly(arg(1), arg(2)); }
    if (fam == "diamond") { expect_arity(1); return make_diamond(arg(1)); }
    if (fam == "boolean") { expect_arity(1); return make_boolean(arg(1)); }
    throw ParameterError("unknown target family '" + fam + "'");
}

std::vector<TargetPoset> parse_target_list(const std::string& list) {
    std::vector<TargetPoset> out;
    std::string cur;
    std::istringstream in(list);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) throw ParameterError("empty entry in target list '" + list + "'");
        out.push_back(make_target(cur));
    }
    if (out.empty()) throw ParameterError("empty target list");
    return out;
}

std::string format_target_list(const std::vector<TargetPoset>& targets) {
    std::string out;
    for (size_t i = 0; i < targets.size(); ++i) {
        if (i) out += ",";
        out += targets[i].label;
    }
    return out;
}

namespace {

bool iso_extend(const TargetPoset& a, const TargetPoset& b, std::vector<int>& map,
                std::uint64_t used, int next) {
    if (next == a.size) return true;
    for (int cand = 0; cand < b.size; ++cand) {
        if (used >> cand & 1u) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            if (a.leq(prev, next) != b.leq(map[prev], cand)) ok = false;
            if (a.leq(next, prev) != b.leq(cand, map[prev])) ok = false;
        }
        if (!ok) continue;
        map[next] = cand;
        if (iso_extend(a, b, map, used | (std::uint64_t{1} << cand), next + 1)) return true;
    }
    return false;
}

}  // namespace

bool posets_isomorphic(const TargetPoset& a, const TargetPoset& b) {
    if (a.size != b.size) return false;
    // degree-sequence screen
    auto profile = [](const TargetPoset& p) {
        std::vector<std::pair<int, int>> d(p.size);
        for (int i = 0; i < p.size; ++i) {
            int below = 0, above = 0;
            for (int j = 0; j < p.size; ++j) {
                if (p.less(j, i)) ++below;
                if (p.less(i, j)) ++above;
            }
            d[i] = {below, above};
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (profile(a) != profile(b)) return false;
    std::vector<int> map(a.size, -1);
    return iso_extend(a, b, map, 0, 0);
}

bool target_list_dual_invariant(const std::vector<TargetPoset>& targets) {
    // The dualized multiset must equal the original, matching by isomorphism.
    std::vector<bool> taken(targets.size(), false);
    for (const auto& p : targets) {
        TargetPoset d = p.dual();
        bool matched = false;
        for (size_t j = 0; j < targets.size(); ++j) {
            if (taken[j]) continue;
            if (posets_isomorphic(d, targets[j])) {
                taken[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace ramsey
