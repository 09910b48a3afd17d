#include "ramsey/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey/certificate.hpp"
#include "ramsey/chains.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/diamond_extract.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/lubell.hpp"
#include "ramsey/prob_bounds.hpp"
#include "ramsey/search.hpp"

namespace ramsey::cli {

namespace {

std::string rat(const Rational& r) {
    std::ostringstream s;
    s << r;
    return s.str();
}

std::vector<SubsetMask> parse_mask_list(const std::string& text) {
    std::vector<SubsetMask> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw ParameterError("bad mask '" + item + "'");
        out.push_back(static_cast<SubsetMask>(v));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw ParameterError("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<SubsetMask> resolve_excluded(const std::string& spec, int N) {
    if (spec.empty() || spec == "none") return {};
    if (spec == "poles") return exclude_poles(N);
    if (spec == "poles+fringes") return exclude_poles_and_fringes(N);
    return parse_mask_list(spec);
}

void print_embedding(std::ostream& out, const Embedding& e) {
    for (size_t i = 0; i < e.images.size(); ++i)
        out << "  image[" << i << "] = " << e.images[i] << " "
            << mask_to_set_notation(e.images[i]) << "\n";
}

int run_verify(const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Certificate cert = parse_certificate(in);
    if (cert.kind == Certificate::Kind::Exhaustion) {
        out << "exhaustion record: host_n=" << cert.host_n << " nodes=" << cert.nodes
            << " group=" << cert.group << "\n";
        out << "verified (shape only; exhaustion statistics are not independently re-checkable)\n";
        return 0;
    }
    auto verdict = verify_coloring(cert.instance, cert.host_n, cert.coloring);
    if (verdict.good) {
        out << "verified: good coloring of B_" << cert.host_n << " for "
            << format_target_list(cert.instance.targets) << " (" << to_string(cert.instance.mode)
            << ", t=" << cert.instance.t << ")\n";
        return 0;
    }
    out << "FALSIFIED: color " << verdict.bad_color << " contains a monochromatic copy of "
        << cert.instance.targets[verdict.bad_color - 1].label << "\n";
    print_embedding(out, verdict.witness);
    return 1;
}

struct SearchArgs {
    int k = 2;
    int t = 1;
    std::string mode = "weak";
    std::string targets;
    int n_max = 6;
    std::uint64_t budget_nodes = 10'000'000'000ULL;
    double budget_secs = 0.0;
    std::string emit_cert;
    int jobs = 1;
    bool plain = false;
};

int run_search(const SearchArgs& a, std::ostream& out) {
    RamseyInstance inst;
    inst.t = a.t;
    inst.k = a.k;
    inst.mode = embedding_mode_from_string(a.mode);
    inst.targets = parse_target_list(a.targets);
    inst.validate();

    SearchOptions opt;
    opt.budget.max_nodes = a.budget_nodes;
    opt.budget.max_seconds = a.budget_secs;
    opt.use_symmetry = !a.plain;
    opt.jobs = a.jobs;

    RamseyNumberResult r = compute_ramsey_number(inst, a.n_max, opt);
    if (r.found) {
        out << "R = " << r.value << "\n";
        out << "upper: exhaustion at B_" << r.value << " (nodes=" << r.exhaustion_stats.nodes
            << ", group=" << r.exhaustion_stats.group << ")\n";
        if (r.lower_witness)
            out << "lower: good coloring at B_" << r.lower_witness_n << "\n";
        else
            out << "lower: none needed (ramsey already at B_1)\n";
        if (!a.emit_cert.empty()) {
            if (r.lower_witness) {
                Certificate lower = make_good_coloring_certificate(inst, r.lower_witness_n,
                                                                   *r.lower_witness);
                emit_certificate_file(lower, a.emit_cert + ".lower.cert");
                out << "cert: " << a.emit_cert << ".lower.cert\n";
            }
            Certificate upper = make_exhaustion_certificate(inst, r.value, r.exhaustion_stats);
            emit_certificate_file(upper, a.emit_cert + ".upper.cert");
            out << "cert: " << a.emit_cert << ".upper.cert\n";
        }
        return 0;
    }
    if (r.inconclusive) {
        out << "inconclusive: budget exhausted at B_" << r.scanned_up_to
            << " (nodes=" << r.exhaustion_stats.nodes << ")\n";
        if (r.lower_witness) out << "lower: good coloring at B_" << r.lower_witness_n << "\n";
        return 3;
    }
    out << "R > " << r.scanned_up_to << " (no ramsey dimension up to n-max)\n";
    if (r.lower_witness) {
        out << "lower: good coloring at B_" << r.lower_witness_n << "\n";
        if (!a.emit_cert.empty()) {
            Certificate lower =
                make_good_coloring_certificate(inst, r.lower_witness_n, *r.lower_witness);
            emit_certificate_file(lower, a.emit_cert + ".lower.cert");
            out << "cert: " << a.emit_cert << ".lower.cert\n";
        }
    }
    return 0;
}

int emit_construction(const RamseyInstance& inst, const ChainColoring& col,
                      const std::string& out_path, std::ostream& out) {
    auto verdict = verify_coloring(inst, col.host_n, col);
    if (!verdict.good) {
        out << "bad: color " << verdict.bad_color << " contains a monochromatic copy\n";
        print_embedding(out, verdict.witness);
        return 1;
    }
    out << "good coloring of B_" << col.host_n << " for " << format_target_list(inst.targets)
        << " (" << to_string(inst.mode) << ", t=" << inst.t << ")\n";
    if (!out_path.empty()) {
        Certificate cert = make_good_coloring_certificate(inst, col.host_n, col);
        emit_certificate_file(cert, out_path);
        out << "cert: " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"poset Ramsey numbers over Boolean lattices: exact search, "
                 "certificates, Lubell bounds, and closed-form calculators"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "table output format: text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    // chains
    auto* sc_chains = app.add_subcommand("chains", "count (and list) t-chains of B_n");
    int ch_n = 0, ch_t = 1;
    bool ch_enum = false;
    sc_chains->add_option("n", ch_n, "host dimension")->required();
    sc_chains->add_option("t", ch_t, "chain size")->required();
    sc_chains->add_flag("--enumerate", ch_enum, "list every chain in canonical id order");

    // lubell
    auto* sc_lubell = app.add_subcommand("lubell", "Lubell-function machinery");
    sc_lubell->require_subcommand(1);
    auto* lb_eval = sc_lubell->add_subcommand("eval", "evaluate lu_N of a family");
    int lb_n = 0;
    std::string lb_family;
    lb_eval->add_option("--n", lb_n, "host dimension")->required();
    lb_eval->add_option("--family", lb_family, "comma-separated masks (base 10)")->required();
    auto* lb_max = sc_lubell->add_subcommand("max", "maximize lu_N over P-free families");
    int lbm_n = 0;
    std::string lbm_target, lbm_exclude = "poles";
    std::uint64_t lbm_budget = 2'000'000'000ULL;
    lb_max->add_option("--n", lbm_n, "host dimension")->required();
    lb_max->add_option("--target", lbm_target, "forbidden poset, e.g. matching:2")->required();
    lb_max->add_option("--exclude", lbm_exclude,
                       "excluded set: none | poles | poles+fringes | mask list");
    lb_max->add_option("--budget-nodes", lbm_budget, "branch-and-bound node budget");
    auto* lb_cond = sc_lubell->add_subcommand("condition", "check k*L < N+1-lu(Q)");
    int lbc_k = 2, lbc_n = 0;
    std::string lbc_target, lbc_exclude = "poles", lbc_source = "computed";
    lb_cond->add_option("--k", lbc_k, "number of colors")->required();
    lb_cond->add_option("--n", lbc_n, "host dimension")->required();
    lb_cond->add_option("--target", lbc_target, "forbidden poset")->required();
    lb_cond->add_option("--exclude", lbc_exclude, "excluded set");
    lb_cond->add_option("--L-source", lbc_source,
                        "computed | matching2-closed-form | matching-band-upper:S")
        ;

    // search
    auto* sc_search = app.add_subcommand("search", "compute a Ramsey number by exhaustive search");
    SearchArgs sa;
    sc_search->add_option("--k", sa.k, "number of colors")->required();
    sc_search->add_option("--t", sa.t, "chain size");
    sc_search->add_option("--mode", sa.mode, "weak | strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    sc_search->add_option("--targets", sa.targets, "comma-separated target list")->required();
    sc_search->add_option("--n-max", sa.n_max, "largest host dimension to scan");
    sc_search->add_option("--budget-nodes", sa.budget_nodes, "search node budget");
    sc_search->add_option("--budget-secs", sa.budget_secs, "wall-clock budget in seconds");
    sc_search->add_option("--emit-cert", sa.emit_cert, "write certificates to PATH.{lower,upper}.cert");
    sc_search->add_option("--jobs", sa.jobs, "worker count for the search");
    sc_search->add_flag("--plain", sa.plain, "disable symmetry reduction (plain exhaustive)");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "re-verify a certificate file");
    std::string vf_path;
    sc_verify->add_option("cert", vf_path, "certificate path")->required();

    // construct
    auto* sc_con = app.add_subcommand("construct", "emit the explicit lower-bound colorings");
    sc_con->require_subcommand(1);
    auto* con_block = sc_con->add_subcommand("level-block", "consecutive level blocks");
    std::string cb_e, cb_targets, cb_mode = "weak", cb_out;
    con_block->add_option("--e", cb_e, "comma-separated block heights e_1..e_k")->required();
    con_block->add_option("--targets", cb_targets, "targets to verify against")->required();
    con_block->add_option("--mode", cb_mode, "weak | strong");
    con_block->add_option("--out", cb_out, "certificate output path");
    auto* con_match = sc_con->add_subcommand("matching", "level coloring avoiding matchings");
    int cm_k = 2, cm_s = 2;
    std::string cm_out;
    con_match->add_option("--k", cm_k, "number of colors")->required();
    con_match->add_option("--s", cm_s, "matching size")->required();
    con_match->add_option("--out", cm_out, "certificate output path");
    auto* con_dia = sc_con->add_subcommand("diamond", "paired-level coloring avoiding diamonds");
    int cd_k = 2, cd_r = 2;
    std::string cd_out;
    con_dia->add_option("--k", cd_k, "number of colors")->required();
    con_dia->add_option("--r", cd_r, "diamond width")->required();
    con_dia->add_option("--out", cd_out, "certificate output path");
    auto* con_lll = sc_con->add_subcommand("lll", "biased random t-chain coloring");
    int cl_t = 2, cl_host = 3;
    std::uint64_t cl_seed = 1;
    std::string cl_targets, cl_out;
    con_lll->add_option("--t", cl_t, "chain size")->required();
    con_lll->add_option("--targets", cl_targets, "target list (sets the bias parameters)")
        ->required();
    con_lll->add_option("--host-n", cl_host, "host dimension")->required();
    con_lll->add_option("--seed", cl_seed, "sampler seed");
    con_lll->add_option("--out", cl_out, "certificate output path (only written when good)");

    // bounds
    auto* sc_bounds = app.add_subcommand("bounds", "closed-form calculators");
    sc_bounds->require_subcommand(1);
    auto* bd_lll = sc_bounds->add_subcommand("lll", "threshold check for the biased coloring");
    int bl_t = 2;
    std::string bl_targets;
    std::uint64_t bl_host_size = 0;
    int bl_host_n = -1;
    bd_lll->add_option("--t", bl_t, "chain size")->required();
    bd_lll->add_option("--targets", bl_targets, "target list")->required();
    bd_lll->add_option("--host-size", bl_host_size, "host element count n");
    bd_lll->add_option("--host-n", bl_host_n, "Boolean host dimension (n = 2^host-n)");
    auto* bd_sl = sc_bounds->add_subcommand("strong-lower", "lower bound for Boolean targets");
    int bs_k = 3, bs_t = 2;
    std::string bs_dims;
    bd_sl->add_option("--k", bs_k, "number of colors")->required();
    bd_sl->add_option("--t", bs_t, "chain size")->required();
    bd_sl->add_option("--dims", bs_dims, "comma-separated dimensions m_1..m_k")->required();
    auto* bd_rec = sc_bounds->add_subcommand("recurrence", "halving vs classic recurrence table");
    int br_kmax = 10, br_m = 2;
    std::string br_base;
    bd_rec->add_option("--k-max", br_kmax, "table rows up to this k")->required();
    bd_rec->add_option("--m", br_m, "Boolean target dimension")->required();
    bd_rec->add_option("--base", br_base, "seed entries, e.g. 2=4,3=8")->required();
    auto* bd_dia = sc_bounds->add_subcommand("diamond", "diamond Ramsey bounds");
    long bdk = 2, bdr = 2;
    int bd_kmax = 0;
    bd_dia->add_option("--k", bdk, "number of colors")->required();
    bd_dia->add_option("--r", bdr, "diamond width")->required();
    bd_dia->add_option("--k-max", bd_kmax, "sweep k from the given --k up to this value");
    auto* bd_ct = sc_bounds->add_subcommand("ct", "embedded-fraction upper bound");
    int ct_m = 1, ct_n = 2, ct_N = 2, ct_t = 2;
    bd_ct->add_option("--m", ct_m, "small dimension")->required();
    bd_ct->add_option("--n", ct_n, "large dimension")->required();
    bd_ct->add_option("--host-n", ct_N, "host dimension N")->required();
    bd_ct->add_option("--t", ct_t, "chain size")->required();

    // extract-diamond
    auto* sc_ext = app.add_subcommand("extract-diamond",
                                      "walk a coloring into a monochromatic induced diamond");
    int ed_k = 2, ed_r = 2;
    std::string ed_cert;
    std::uint64_t ed_seed = 0;
    bool ed_have_seed = false;
    sc_ext->add_option("--k", ed_k, "number of colors")->required();
    sc_ext->add_option("--r", ed_r, "diamond width")->required();
    sc_ext->add_option("--cert", ed_cert, "read the coloring from a certificate");
    auto* seed_opt = sc_ext->add_option("--seed", ed_seed, "generate a seeded uniform coloring");
    sc_ext->callback([&] { ed_have_seed = seed_opt->count() > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (sc_chains->parsed()) {
            BigInt count = chain_count_formula(ch_n, ch_t);
            out << count.str() << "\n";
            if (ch_enum) {
                BooleanLattice host(ch_n);
                auto chains = enumerate_t_chains(host, ch_t);
                for (const auto& c : chains) {
                    out << c.id << ":";
                    for (size_t j = 0; j < c.sets.size(); ++j)
                        out << (j ? " < " : " ") << mask_to_set_notation(c.sets[j]);
                    out << "\n";
                }
            }
            return 0;
        }
        if (sc_lubell->parsed()) {
            if (lb_eval->parsed()) {
                out << "lu = " << rat(lubell(lb_n, parse_mask_list(lb_family))) << "\n";
                return 0;
            }
            if (lb_max->parsed()) {
                auto res = max_lubell_P_free(lbm_n, make_target(lbm_target),
                                             resolve_excluded(lbm_exclude, lbm_n), lbm_budget);
                out << "L = " << rat(res.value) << (res.exact ? "" : " (best found)") << "\n";
                if (!res.exact) out << "upper bound = " << rat(res.upper_bound) << "\n";
                out << "witness =";
                for (SubsetMask s : res.witness) out << " " << mask_to_set_notation(s);
                out << "\n";
                out << "nodes = " << res.nodes << "\n";
                return res.exact ? 0 : 3;
            }
            if (lb_cond->parsed()) {
                auto excluded = resolve_excluded(lbc_exclude, lbc_n);
                Rational L;
                if (lbc_source == "computed") {
                    auto res = max_lubell_P_free(lbc_n, make_target(lbc_target), excluded);
                    if (!res.exact) {
                        err << "error: branch-and-bound budget exhausted; L is not exact\n";
                        return 3;
                    }
                    L = res.value;
                } else if (lbc_source == "matching2-closed-form") {
                    L = matching2_lubell_max(lbc_n);
                } else if (lbc_source.rfind("matching-band-upper:", 0) == 0) {
                    int s = std::stoi(lbc_source.substr(20));
                    L = matching_band_upper(lbc_n, s);
                } else {
                    throw ParameterError("unknown --L-source '" + lbc_source + "'");
                }
                auto cond = ramsey_upper_by_lubell(lbc_k, lbc_n, L, excluded);
                out << "L = " << rat(L) << "\n";
                out << "lhs = " << rat(cond.lhs) << "\n";
                out << "rhs = " << rat(cond.rhs) << "\n";
                out << (cond.certified ? "certified: R <= " + std::to_string(lbc_n)
                                       : "condition-fails")
                    << "\n";
                return cond.certified ? 0 : 1;
            }
        }
        if (sc_search->parsed()) return run_search(sa, out);
        if (sc_verify->parsed()) return run_verify(vf_path, out);
        if (sc_con->parsed()) {
            if (con_block->parsed()) {
                auto e = parse_int_list(cb_e);
                ChainColoring col = level_block_coloring(e);
                RamseyInstance inst;
                inst.t = 1;
                inst.k = static_cast<int>(e.size());
                inst.mode = embedding_mode_from_string(cb_mode);
                inst.targets = parse_target_list(cb_targets);
                return emit_construction(inst, col, cb_out, out);
            }
            if (con_match->parsed()) {
                ChainColoring col = matching_lower_coloring(cm_k, cm_s);
                RamseyInstance inst;
                inst.t = 1;
                inst.k = cm_k;
                inst.mode = EmbeddingMode::Weak;
                inst.targets.assign(cm_k, make_matching(cm_s));
                return emit_construction(inst, col, cm_out, out);
            }
            if (con_dia->parsed()) {
                ChainColoring col = diamond_lower_coloring(cd_k, cd_r);
                RamseyInstance inst;
                inst.t = 1;
                inst.k = cd_k;
                inst.mode = EmbeddingMode::Strong;
                inst.targets.assign(cd_k, make_diamond(cd_r));
                return emit_construction(inst, col, cd_out, out);
            }
            if (con_lll->parsed()) {
                auto targets = parse_target_list(cl_targets);
                auto params = LLLParameters::from_targets(cl_t, targets);
                ChainColoring col = lll_random_coloring(params, cl_host, cl_seed);
                RamseyInstance inst;
                inst.t = cl_t;
                inst.k = static_cast<int>(targets.size());
                inst.mode = EmbeddingMode::Weak;
                inst.targets = targets;
                return emit_construction(inst, col, cl_out, out);
            }
        }
        if (sc_bounds->parsed()) {
            if (bd_lll->parsed()) {
                auto targets = parse_target_list(bl_targets);
                auto params = LLLParameters::from_targets(bl_t, targets);
                BigInt n;
                if (bl_host_n >= 0)
                    n = pow2(static_cast<unsigned long>(bl_host_n));
                else if (bl_host_size > 0)
                    n = bl_host_size;
                else
                    throw ParameterError("bounds lll: give --host-size or --host-n");
                auto res = lll_threshold_check(params, n);
                out << "verdict = " << to_string(res.verdict) << "\n";
                if (res.trivial_regime)
                    out << "note: n < n_k, the all-k coloring is already good\n";
                out << "margin1 = " << res.margin1 << "\n";
                out << "margin2 = " << res.margin2 << "\n";
                if (res.verdict == LLLVerdict::Guaranteed) return 0;
                return res.verdict == LLLVerdict::NotGuaranteed ? 1 : 3;
            }
            if (bd_sl->parsed()) {
                auto res = strong_lower_bound(bs_k, bs_t, parse_int_list(bs_dims));
                if (res.arm1_exact)
                    out << "arm1 = " << rat(res.arm1) << "\n";
                else
                    out << "arm1 ~= " << res.arm1_approx << "\n";
                out << "arm2 = " << rat(res.arm2) << "\n";
                if (res.exact)
                    out << "N* = " << rat(res.value) << "\n";
                else
                    out << "N* ~= " << res.value_approx << "\n";
                out << "attained = "
                    << (res.attained == 3 ? "both" : res.attained == 1 ? "arm1" : "arm2") << "\n";
                return 0;
            }
            if (bd_rec->parsed()) {
                RecurrenceTable seeds;
                std::istringstream in(br_base);
                std::string item;
                while (std::getline(in, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw ParameterError("bad --base entry '" + item + "'");
                    seeds.entries[std::stoi(item.substr(0, eq))] = BigInt(item.substr(eq + 1));
                }
                auto rows = recurrence_comparison(br_kmax, br_m, seeds);
                if (format == "csv") {
                    out << "k,halving,walzer,best\n";
                    for (const auto& r : rows)
                        out << r.k << "," << (r.halving ? r.halving->str() : "")
                            << "," << (r.walzer ? r.walzer->str() : "") << "," << r.best.str()
                            << "\n";
                } else {
                    out << "k halving walzer best\n";
                    for (const auto& r : rows)
                        out << r.k << " " << (r.halving ? r.halving->str() : "-") << " "
                            << (r.walzer ? r.walzer->str() : "-") << " " << r.best.str() << "\n";
                }
                return 0;
            }
            if (bd_dia->parsed()) {
                const long k_hi = bd_kmax > 0 ? bd_kmax : bdk;
                if (format == "csv") out << "k,r,lower,upper\n";
                for (long k = bdk; k <= k_hi; ++k) {
                    auto b = diamond_bounds(k, bdr);
                    if (format == "csv")
                        out << k << "," << bdr << "," << b.lower.str() << "," << b.upper.str()
                            << "\n";
                    else
                        out << "k=" << k << " r=" << bdr << " lower=" << b.lower.str()
                            << " upper=" << b.upper.str() << "\n";
                }
                return 0;
            }
            if (bd_ct->parsed()) {
                auto res = c_t_upper_bound(ct_m, ct_n, ct_N, ct_t);
                if (res.vacuous) {
                    out << "vacuous (denominator <= 0)\n";
                    return 0;
                }
                out << "c_t bound = " << rat(res.value) << "\n";
                out << "exact-counts = " << (res.exact_counts ? "yes" : "no (closed-form e used)")
                    << "\n";
                if (res.exceeds_one) out << "note: exceeds 1, not meaningful as a probability\n";
                if (!res.lemma_hypotheses)
                    out << "note: outside the stated hypotheses (t >= 3, m,n >= 2)\n";
                return 0;
            }
        }
        if (sc_ext->parsed()) {
            ChainColoring col;
            if (!ed_cert.empty()) {
                std::ifstream in(ed_cert);
                if (!in) throw ParseError("cannot open '" + ed_cert + "'");
                Certificate cert = parse_certificate(in);
                if (cert.kind != Certificate::Kind::GoodColoring)
                    throw ParameterError("extract-diamond: certificate carries no coloring");
                col = cert.coloring;
            } else if (ed_have_seed) {
                const int N = 3 * ed_k * ed_r - 2 * ed_r - ed_k + 1;
                col = uniform_random_coloring(N, 1, ed_k, ed_seed);
            } else {
                throw ParameterError("extract-diamond: give --cert or --seed");
            }
            auto res = extract_monochromatic_diamond(ed_k, ed_r, col);
            out << "color = " << res.color << "\n";
            out << "bottom = " << res.embedding.images.front() << " "
                << mask_to_set_notation(res.embedding.images.front()) << "\n";
            for (int j = 1; j <= ed_r; ++j)
                out << "middle = " << res.embedding.images[j] << " "
                    << mask_to_set_notation(res.embedding.images[j]) << "\n";
            out << "top = " << res.embedding.images.back() << " "
                << mask_to_set_notation(res.embedding.images.back()) << "\n";
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ramsey::cli
