#include "abc/transfer.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "abc/bigfloat.hpp"

namespace abc::transfer {

namespace {

// A summand is coeff * prod (x*a + y*b)^e over a list of linear forms.
struct LinearForm {
    long x, y;
    unsigned long e;
};
struct Term {
    long coeff;
    std::vector<LinearForm> forms;

    Int eval(const Int& a, const Int& b) const {
        Int v = coeff;
        for (const auto& f : forms) v *= pow(Int(f.x * a + f.y * b), f.e);
        return v;
    }
};
struct Identity {
    IdentityTag tag;
    std::string name;
    Term lhs1, lhs2, total;
};

const std::vector<Identity>& catalog() {
    static const std::vector<Identity> k = [] {
        std::vector<Identity> v;
        // c = a + b is the form (1,1)
        v.push_back({IdentityTag::square_diff,
                     "(b-a)^2+4ab=c^2",
                     {1, {{-1, 1, 2}}},
                     {4, {{1, 0, 1}, {0, 1, 1}}},
                     {1, {{1, 1, 2}}}});
        v.push_back({IdentityTag::cube_sum,
                     "a^3+b^3=c(b^2-ab+a^2)",
                     {1, {{1, 0, 3}}},
                     {1, {{0, 1, 3}}},
                     {1, {{1, 1, 1}, {0, 0, 0}}}});
        v.push_back({IdentityTag::cubic_split,
                     "a^2(a+3b)+b^2(3a+b)=c^3",
                     {1, {{1, 0, 2}, {1, 3, 1}}},
                     {1, {{0, 1, 2}, {3, 1, 1}}},
                     {1, {{1, 1, 3}}}});
        v.push_back({IdentityTag::quartic_split,
                     "a^3(a+2b)+c^3(b-a)=b^3(2a+b)",
                     {1, {{1, 0, 3}, {1, 2, 1}}},
                     {1, {{1, 1, 3}, {-1, 1, 1}}},
                     {1, {{0, 1, 3}, {2, 1, 1}}}});
        v.push_back({IdentityTag::quintic_split,
                     "27c^5(b-a)+a^3(3a+5b)^2(3a+2b)=b^3(5a+3b)^2(2a+3b)",
                     {27, {{1, 1, 5}, {-1, 1, 1}}},
                     {1, {{1, 0, 3}, {3, 5, 2}, {3, 2, 1}}},
                     {1, {{0, 1, 3}, {5, 3, 2}, {2, 3, 1}}}});
        return v;
    }();
    return k;
}

// cube_sum's total is c*(b^2-ab+a^2), which is not a product of linear forms;
// evaluate it directly instead of through Term.
Int eval_total(const Identity& id, const Int& a, const Int& b) {
    if (id.tag == IdentityTag::cube_sum) return (a + b) * (b * b - a * b + a * a);
    return id.total.eval(a, b);
}

// Validated once per run by random substitution, guarding the catalog against
// transcription slips.
void validate_catalog_once() {
    static const bool done = [] {
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(20240601ul);
        for (const auto& id : catalog()) {
            for (int i = 0; i < 32; ++i) {
                Int a = rng.get_z_range(10000) + 1;
                Int b = a + rng.get_z_range(10000) + 1;  // b > a keeps all terms positive
                Int l = id.lhs1.eval(a, b) + id.lhs2.eval(a, b);
                Int r = eval_total(id, a, b);
                if (l != r)
                    throw Error("transfer identity catalog failed validation: " + id.name);
            }
        }
        return true;
    }();
    (void)done;
}

TripleReport report_from_terms(const Int& u, const Int& v, const Int& total, std::string method,
                               const arith::FactorConfig& cfg) {
    if (u <= 0 || v <= 0 || total <= 0)
        throw DegenerateInput("transfer: non-positive summand");
    Int g = gcd(gcd(u, v), total);
    return make_report(triple_from_parts(std::min(u, v) / g, std::max(u, v) / g, total / g),
                       std::move(method), cfg);
}

}  // namespace

const std::vector<IdentityTag>& identity_catalog() {
    static const std::vector<IdentityTag> tags = [] {
        std::vector<IdentityTag> v;
        for (const auto& id : catalog()) v.push_back(id.tag);
        return v;
    }();
    return tags;
}

std::string identity_name(IdentityTag tag) {
    for (const auto& id : catalog())
        if (id.tag == tag) return id.name;
    throw DomainError("unknown identity tag");
}

TripleReport transfer_square(const AbcTriple& t, const arith::FactorConfig& cfg) {
    if (t.a == t.b) throw DegenerateInput("transfer_square: needs a < b");
    Int u = t.a * t.a;
    Int v = t.c * (t.b - t.a);
    Int w = t.b * t.b;
    TripleReport rep = report_from_terms(u, v, w, "transfer-square", cfg);
    if (rep.radical) {
        // hits transfer to hits, with quality above 2q/(q+1)
        double qin = quality(t, cfg);
        if (qin > 1 && (!rep.is_hit || *rep.quality <= 2 * qin / (qin + 1)))
            throw Error("transfer_square: quality bound 2q/(q+1) violated");
    }
    return rep;
}

TripleReport transfer_identity(const AbcTriple& t, IdentityTag tag,
                               const arith::FactorConfig& cfg) {
    validate_catalog_once();
    for (const auto& id : catalog()) {
        if (id.tag != tag) continue;
        Int u = id.lhs1.eval(t.a, t.b);
        Int v = id.lhs2.eval(t.a, t.b);
        Int total = eval_total(id, t.a, t.b);
        if (u + v != total) throw Error("transfer_identity: identity failed on input");
        return report_from_terms(u, v, total, "transfer:" + id.name, cfg);
    }
    throw DomainError("unknown identity tag");
}

TripleReport transfer_binomial(const AbcTriple& t, unsigned long n, unsigned long k,
                               const arith::FactorConfig& cfg) {
    if (n < 2 || k < 1 || k > n - 1)
        throw DomainError("transfer_binomial: need n >= 2 and 1 <= k <= n-1");
    const Int& a = t.a;
    const Int& b = t.b;
    Int first = 0;
    for (unsigned long j = 0; j <= k; ++j) {
        Int bin;
        mpz_bin_uiui(bin.get_mpz_t(), n, j);
        first += bin * pow(a, k - j) * pow(b, j);
    }
    first *= pow(a, n - k);
    Int second = 0;
    for (unsigned long j = 0; j + k + 1 <= n; ++j) {
        Int bin;
        mpz_bin_uiui(bin.get_mpz_t(), n, j);
        second += bin * pow(a, j) * pow(b, n - k - 1 - j);
    }
    second *= pow(b, k + 1);
    Int total = pow(t.c, n);
    if (first + second != total) throw Error("transfer_binomial: split identity failed");
    return report_from_terms(first, second, total,
                             "binomial(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                             cfg);
}

std::vector<FamilyStep> double_transfer_family(size_t count, const arith::FactorConfig& cfg,
                                               size_t digit_budget) {
    if (count < 1) throw DomainError("double_transfer_family: count must be >= 1");
    std::vector<FamilyStep> out;
    Int c = 9;
    Int bound = 6;  // exact radical of (c_0 - 1) c_0
    for (size_t n = 0; n < count; ++n) {
        if (mpz_sizeinbase(c.get_mpz_t(), 10) > digit_budget)
            throw ResourceLimit("double_transfer_family: digit budget exceeded at n=" +
                                std::to_string(n));
        FamilyStep step;
        step.index = n;
        step.c = c;
        step.radical_bound = bound;
        // exact factorization only while members are small; the certified
        // bound already carries the ratio proof, so stalling rho on
        // hundred-digit cofactors buys nothing
        arith::FactorConfig step_cfg = cfg;
        if (bit_length(c) > 256) step_cfg.attempt_bits_cap = 0;
        step.report =
            make_report(triple_from_parts(1, c - 1, c), "double-transfer", step_cfg, bound);
        const Int& proven = step.report.radical ? *step.report.radical : bound;
        step.ratio_floor = std::exp(ln(c) - ln(proven));

        // c_n / R >= 3 * 2^(n-1), exact in integers: 2 c_n >= 3 * 2^n * R
        Int scale = Int(3) << n;
        if (2 * c < scale * proven)
            throw Error("double_transfer_family: ratio floor 3*2^(n-1) violated at n=" +
                        std::to_string(n));
        // quality floor 1 + lnln c / (2 ln c)
        const double lc = ln(c);
        const double q_floor = 1 + std::log(lc) / (2 * lc);
        const double q_have = step.report.quality ? *step.report.quality
                                                  : *step.report.quality_lower_bound;
        if (q_have <= q_floor)
            throw Error("double_transfer_family: quality floor violated at n=" +
                        std::to_string(n));
        out.push_back(std::move(step));

        // advance: c' = c^2 (c-2)^2, and the certified bound picks up the
        // factors (V/2)(c-2) with V = (c-1)^2 - 2
        Int V = (c - 1) * (c - 1) - 2;
        bound = bound * (V / 2) * (c - 2);
        c = c * c * (c - 2) * (c - 2);
    }
    return out;
}

}  // namespace abc::transfer
