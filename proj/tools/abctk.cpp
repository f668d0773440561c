// abctk: search for abc triples, generate the classical infinite families,
// machine-check the divisibility lemmas behind them, and keep everything in
// an append-only JSONL store.

#include <omp.h>

#include <cstdio>
#include <iostream>
#include <optional>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abc/bigfloat.hpp"
#include "abc/cfsearch.hpp"
#include "abc/ecsearch.hpp"
#include "abc/exhaustive.hpp"
#include "abc/families.hpp"
#include "abc/jinv.hpp"
#include "abc/lllsearch.hpp"
#include "abc/nvar.hpp"
#include "abc/polyabc.hpp"
#include "abc/stsearch.hpp"
#include "abc/store.hpp"
#include "abc/transfer.hpp"

using namespace abc;

namespace {

struct Global {
    std::string store_path = "./abc_store.jsonl";
    int threads = 0;
    size_t digit_budget_bits = 100'000'000;
    std::string emit = "exact";

    arith::FactorConfig factor_config() const {
        arith::FactorConfig cfg;
        if (emit == "bound") {
            cfg.trial_limit = 10'000;
            cfg.rho_iterations = 0;
        }
        return cfg;
    }
    families::Budget budget() const { return families::Budget{digit_budget_bits}; }
};

Int parse_int(const std::string& s) { return int_from(s); }

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
    return out;
}

Rat parse_rat(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

AbcTriple parse_triple(const std::string& s) {
    auto parts = parse_int_list(s);
    if (parts.size() != 3) throw DomainError("expected a,b,c");
    return triple_from_parts(parts[0], parts[1], parts[2]);
}

void emit_reports(const Global& g, const std::vector<TripleReport>& reports) {
    store::Store st(g.store_path);
    for (const auto& rep : reports) {
        store::TripleRecord rec = store::record_from_report(rep);
        std::cout << store::serialize(rec) << '\n';
        st.append(rec);
    }
}

void emit_report(const Global& g, const TripleReport& rep) {
    emit_reports(g, {rep});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abc triple toolkit"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--store", g.store_path, "JSONL result store")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0 = library default)");
    app.add_option("--digit-budget", g.digit_budget_bits, "bit budget for family members")
        ->capture_default_str();
    app.add_option("--emit", g.emit, "exact | bound factorization effort")
        ->check(CLI::IsMember({"exact", "bound"}))
        ->capture_default_str();

    // ---- search ----
    auto* search = app.add_subcommand("search", "hunt for abc triples");
    search->require_subcommand(1);

    auto* sx = search->add_subcommand("exhaustive", "every hit with c <= limit");
    uint64_t sx_limit = 1000;
    std::string sx_mod;
    uint64_t sx_exact_c = 0;
    sx->add_option("--limit", sx_limit, "bound on c")->capture_default_str();
    sx->add_option("--mod", sx_mod, "keep triples with abc divisible by this");
    sx->add_option("--c-exact", sx_exact_c, "restrict to one exact value of c");

    auto* scf = search->add_subcommand("cf", "continued fraction of m^(1/k)");
    std::string scf_m = "109";
    unsigned long scf_k = 5;
    size_t scf_depth = 10;
    std::string scf_threshold = "100";
    scf->add_option("--m", scf_m)->capture_default_str();
    scf->add_option("--k", scf_k)->capture_default_str();
    scf->add_option("--depth", scf_depth)->capture_default_str();
    scf->add_option("--threshold", scf_threshold, "large-quotient cutoff")->capture_default_str();

    auto* sll = search->add_subcommand("lll", "reduced kernel of u r + v s + w t = 0");
    std::string sll_radicals;
    long sll_window = 5;
    sll->add_option("--radicals", sll_radicals, "r,s,t")->required();
    sll->add_option("--window", sll_window)->capture_default_str();

    auto* sec = search->add_subcommand("ec", "multiples of a point on y^3 = x^3 + k");
    std::string sec_seed;
    std::string sec_k;
    unsigned long sec_mult = 5;
    sec->add_option("--seed", sec_seed, "x,y as rationals (e.g. 19/93,289/93)")->required();
    sec->add_option("--k", sec_k, "override k (default y0^3 - x0^3)");
    sec->add_option("--max-mult", sec_mult)->capture_default_str();

    auto* sst = search->add_subcommand("st", "friable pigeonhole pairs modulo 2^k");
    unsigned sst_r = 4;
    std::string sst_bound = "1000000";
    unsigned sst_k = 12;
    sst->add_option("--primes", sst_r, "number of odd primes")->capture_default_str();
    sst->add_option("--bound", sst_bound)->capture_default_str();
    sst->add_option("--pow2", sst_k)->capture_default_str();

    // ---- gen family ----
    auto* gen = app.add_subcommand("gen", "generate family members");
    auto* fam = gen->add_subcommand("family", "closed-form infinite families");
    std::string fam_name;
    unsigned long fam_index = 1, fam_q = 0, fam_p = 0;
    fam->add_option("--name", fam_name,
                    "granville|bmt|js|qpn|lcm|mod6|pomerance|double-transfer")
        ->required();
    fam->add_option("--index", fam_index)->capture_default_str();
    fam->add_option("--q", fam_q, "qpn only");
    fam->add_option("--p", fam_p, "qpn only");

    // ---- transfer ----
    auto* tr = app.add_subcommand("transfer", "polynomial-identity transfers");
    std::string tr_identity = "square";
    std::string tr_triple;
    unsigned tr_iterate = 1;
    unsigned long tr_n = 3, tr_k = 1;
    tr->add_option("--identity", tr_identity,
                   "square|square_diff|cube_sum|cubic_split|quartic_split|quintic_split|binomial")
        ->capture_default_str();
    tr->add_option("--triple", tr_triple, "a,b,c")->required();
    tr->add_option("--iterate", tr_iterate)->capture_default_str();
    tr->add_option("--n", tr_n, "binomial only");
    tr->add_option("--kk", tr_k, "binomial split index");

    // ---- jinv ----
    auto* jv = app.add_subcommand("jinv", "class-number-1 singular moduli differences");
    unsigned jv_prec = 60;
    jv->add_option("--precision", jv_prec, "decimal digits")->capture_default_str();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check lemmas or validate a triple");
    std::string ver_lemma, ver_triple;
    unsigned long ver_index = 1;
    ver->add_option("--lemma", ver_lemma, "euler|787|js|lcm|mod6");
    ver->add_option("--index", ver_index, "lemma parameter")->capture_default_str();
    ver->add_option("--triple", ver_triple, "a,b,c to validate and report");

    // ---- poly check ----
    auto* pl = app.add_subcommand("poly", "polynomial abc (Mason-Stothers)");
    auto* plc = pl->add_subcommand("check", "check max deg <= deg R(abc) - 1");
    std::string pl_a, pl_b;
    plc->add_option("--a", pl_a, "coefficients, ascending, comma-separated")->required();
    plc->add_option("--b", pl_b)->required();

    // ---- nvar ----
    auto* nv = app.add_subcommand("nvar", "n-term zero-sum tuples from a triple");
    unsigned long nv_n = 4;
    std::string nv_triple;
    nv->add_option("--n", nv_n)->capture_default_str();
    nv->add_option("--triple", nv_triple, "a,b,c")->required();

    // ---- count ----
    auto* ct = app.add_subcommand("count", "integers below 2M with small radical");
    uint64_t ct_bound = 1000;
    double ct_alpha = 0.5;
    ct->add_option("--bound", ct_bound, "M")->capture_default_str();
    ct->add_option("--alpha", ct_alpha)->capture_default_str();

    // ---- rank ----
    auto* rk = app.add_subcommand("rank", "rank the store");
    std::string rk_by = "quality";
    size_t rk_top = 10;
    rk->add_option("--by", rk_by)->check(CLI::IsMember({"quality", "merit"}))
        ->capture_default_str();
    rk->add_option("--top", rk_top)->capture_default_str();

    // global flags remain valid after any subcommand
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
        a->fallthrough(true);
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; }))
            allow_globals(sub);
    };
    allow_globals(&app);

    CLI11_PARSE(app, argc, argv);
    if (g.threads > 0) omp_set_num_threads(g.threads);
    const arith::FactorConfig cfg = g.factor_config();

    try {
        if (sx->parsed()) {
            std::vector<AbcTriple> triples;
            if (sx_exact_c > 0)
                triples = exhaustive::census_exact_c(sx_exact_c);
            else
                triples = exhaustive::abchome_search(static_cast<uint32_t>(sx_limit));
            if (!sx_mod.empty()) triples = exhaustive::congruence_filter(triples, parse_int(sx_mod));
            std::vector<TripleReport> reports;
            reports.reserve(triples.size());
            for (const auto& t : triples) reports.push_back(make_report(t, "exhaustive", cfg));
            emit_reports(g, reports);
        } else if (scf->parsed()) {
            cf::CFState st = cf::cf_expand(parse_int(scf_m), scf_k, scf_depth);
            std::cout << "# partial quotients:";
            for (const Int& a : st.partial_quotients) std::cout << ' ' << a;
            std::cout << '\n';
            emit_reports(g, cf::cf_candidates(st, parse_int(scf_threshold), cfg));
        } else if (sll->parsed()) {
            auto rst = parse_int_list(sll_radicals);
            if (rst.size() != 3) throw DomainError("--radicals wants r,s,t");
            emit_reports(g, lll::lll_candidates(rst[0], rst[1], rst[2], sll_window, cfg));
        } else if (sec->parsed()) {
            auto xy = [&] {
                std::vector<Rat> out;
                std::stringstream ss(sec_seed);
                std::string tok;
                while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
                return out;
            }();
            if (xy.size() != 2) throw DomainError("--seed wants x,y");
            std::optional<Int> k;
            if (!sec_k.empty()) k = parse_int(sec_k);
            emit_reports(g, ec::ec_candidates(xy[0], xy[1], k, sec_mult, cfg));
        } else if (sst->parsed()) {
            auto res = st::st_search(sst_r, parse_int(sst_bound), sst_k, cfg);
            std::fprintf(stderr, "# %zu friable, %zu pairs\n", res.friable_count, res.pair_count);
            emit_reports(g, res.hits);
        } else if (fam->parsed()) {
            if (fam_name == "granville")
                emit_report(g, families::family_granville(fam_index, cfg, g.budget()));
            else if (fam_name == "bmt")
                emit_report(g, families::family_bmt(fam_index, cfg, g.budget()));
            else if (fam_name == "js")
                emit_report(g, families::family_js(fam_index, cfg, g.budget()));
            else if (fam_name == "qpn")
                emit_report(g, families::family_qpn(fam_q, fam_p, fam_index, cfg, g.budget()));
            else if (fam_name == "lcm")
                emit_report(g, families::family_lcm(fam_index, cfg, g.budget()));
            else if (fam_name == "mod6")
                emit_report(g, families::family_mod6(fam_index, cfg, g.budget()));
            else if (fam_name == "pomerance")
                emit_report(g, families::family_pomerance(fam_index, cfg, g.budget()));
            else if (fam_name == "double-transfer") {
                auto steps = transfer::double_transfer_family(fam_index + 1, cfg,
                                                              g.digit_budget_bits / 3);
                std::vector<TripleReport> reports;
                for (auto& s : steps) reports.push_back(std::move(s.report));
                emit_reports(g, reports);
            } else {
                throw DomainError("unknown family " + fam_name);
            }
        } else if (tr->parsed()) {
            AbcTriple t = parse_triple(tr_triple);
            std::vector<TripleReport> reports;
            for (unsigned i = 0; i < tr_iterate; ++i) {
                TripleReport rep = [&] {
                    using transfer::IdentityTag;
                    if (tr_identity == "square") return transfer::transfer_square(t, cfg);
                    if (tr_identity == "binomial")
                        return transfer::transfer_binomial(t, tr_n, tr_k, cfg);
                    if (tr_identity == "square_diff")
                        return transfer::transfer_identity(t, IdentityTag::square_diff, cfg);
                    if (tr_identity == "cube_sum")
                        return transfer::transfer_identity(t, IdentityTag::cube_sum, cfg);
                    if (tr_identity == "cubic_split")
                        return transfer::transfer_identity(t, IdentityTag::cubic_split, cfg);
                    if (tr_identity == "quartic_split")
                        return transfer::transfer_identity(t, IdentityTag::quartic_split, cfg);
                    if (tr_identity == "quintic_split")
                        return transfer::transfer_identity(t, IdentityTag::quintic_split, cfg);
                    throw DomainError("unknown identity " + tr_identity);
                }();
                t = rep.triple;
                reports.push_back(std::move(rep));
            }
            emit_reports(g, reports);
        } else if (jv->parsed()) {
            for (const auto& m : jinv::compute_all(jv_prec)) {
                std::string cube =
                    m.cube_root ? " = (" + to_string(*m.cube_root) + ")^3" : "";
                std::printf("# j(-%u) = %s%s\n", m.d, to_string(m.j_value).c_str(), cube.c_str());
            }
            emit_reports(g, jinv::jinv_pairs(jv_prec, cfg));
        } else if (ver->parsed()) {
            if (!ver_lemma.empty()) {
                bool ok = false;
                if (ver_lemma == "euler")
                    ok = families::verify_lemma_euler(ver_index);
                else if (ver_lemma == "787")
                    ok = families::verify_lemma_787(ver_index);
                else if (ver_lemma == "js")
                    ok = families::verify_lemma_js(ver_index);
                else if (ver_lemma == "lcm")
                    ok = families::verify_lemma_lcm(ver_index);
                else if (ver_lemma == "mod6")
                    ok = families::verify_lemma_mod6(ver_index);
                else
                    throw DomainError("unknown lemma " + ver_lemma);
                std::printf("%s lemma %s at %lu\n", ok ? "PASS" : "FAIL", ver_lemma.c_str(),
                            ver_index);
                return ok ? 0 : 1;
            }
            if (!ver_triple.empty()) {
                emit_report(g, make_report(parse_triple(ver_triple), "verify", cfg));
            }
        } else if (plc->parsed()) {
            poly::Poly a = poly::Poly::from_string(pl_a);
            poly::Poly b = poly::Poly::from_string(pl_b);
            auto v = poly::mason_stothers_check(a, b, a + b);
            std::printf("max deg = %ld, deg R(abc) = %ld, bound %s\n", v.max_degree,
                        v.radical_degree, v.holds ? "holds" : "violated");
            return v.holds ? 0 : 1;
        } else if (nv->parsed()) {
            auto tuple = nvar::bb_tuple(parse_triple(nv_triple), nv_n);
            std::cout << "# tuple:";
            for (const Int& v : tuple) std::cout << ' ' << v;
            std::cout << '\n';
            auto rep = nvar::nvar_validate(tuple, cfg);
            std::printf("coprime=%d radical=%s ratio=%.12g (2n-5 = %lu)\n",
                        int(rep.relatively_prime), to_string(rep.radical).c_str(),
                        rep.exponent_ratio, 2 * nv_n - 5);
        } else if (ct->parsed()) {
            std::printf("%llu\n", static_cast<unsigned long long>(
                                      st::count_radical_bounded(ct_bound, ct_alpha)));
        } else if (rk->parsed()) {
            store::Store st(g.store_path);
            for (const auto& rec : st.rank(rk_by, rk_top))
                std::cout << store::serialize(rec) << '\n';
        }
    } catch (const StoreCorrupt& e) {
        std::fprintf(stderr, "store corrupt: %s\n", e.what());
        return 3;
    } catch (const ResourceLimit& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
