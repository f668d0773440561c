#include "abc/jinv.hpp"

#include <algorithm>
#include <cmath>

#include "abc/bigfloat.hpp"

namespace abc::jinv {

namespace {

bool known_discriminant(unsigned d) {
    return std::find(kDiscriminants.begin(), kDiscriminants.end(), d) != kDiscriminants.end();
}

std::vector<unsigned long> sigma3_table(unsigned long nmax) {
    std::vector<unsigned long> s(nmax + 1, 0);
    for (unsigned long dvs = 1; dvs <= nmax; ++dvs) {
        const unsigned long cube = dvs * dvs * dvs;
        for (unsigned long n = dvs; n <= nmax; n += dvs) s[n] += cube;
    }
    return s;
}

}  // namespace

SingularModulus compute_j(unsigned d, unsigned precision_digits) {
    if (!known_discriminant(d)) throw DomainError("compute_j: -d is not on the class-number-1 list");
    if (precision_digits < 50) throw DomainError("compute_j: need at least 50 digits");

    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(std::ceil(precision_digits * 3.3219)) + 96;
    const double pi_sqrt_d = 3.14159265358979 * std::sqrt(double(d));
    const unsigned long nmax =
        static_cast<unsigned long>(std::ceil((double(bits) * 0.6932) / pi_sqrt_d)) + 8;

    // q = exp(-pi sqrt(d)), negated when tau = (1 + i sqrt(d))/2
    BigFloat q = (BigFloat::pi(bits) * BigFloat::of(Int(d), bits).sqrt()).neg().exp();
    SingularModulus out;
    out.d = d;
    out.precision_digits = precision_digits;
    if (d % 4 == 0) {
        out.tau = "i*sqrt(" + std::to_string(d) + ")/2";
    } else {
        out.tau = "(1+i*sqrt(" + std::to_string(d) + "))/2";
        q = q.neg();
    }

    const auto sigma3 = sigma3_table(nmax);
    BigFloat e4 = BigFloat::of(1ul, bits);
    BigFloat prod = BigFloat::of(1ul, bits);
    BigFloat qn = BigFloat::of(1ul, bits);
    for (unsigned long n = 1; n <= nmax; ++n) {
        qn *= q;
        e4 += BigFloat::of(240ul, bits) * BigFloat::of(Int(sigma3[n]), bits) * qn;
        prod *= BigFloat::of(1ul, bits) - qn;
    }
    BigFloat delta = q * prod.pow_ui(24);
    BigFloat j = e4.pow_ui(3) / delta;

    out.j_value = j.round_to_int();
    BigFloat err = (j - BigFloat::of(out.j_value, bits)).abs();
    if (err.cmp(BigFloat::of(0.25, bits)) >= 0)
        throw PrecisionInsufficient("compute_j: rounding margin not met at " +
                                    std::to_string(precision_digits) + " digits for d=" +
                                    std::to_string(d));

    auto [root, exact] = arith::integer_root(abs(out.j_value), 3);
    if (exact) out.cube_root = out.j_value < 0 ? Int(-root) : root;
    return out;
}

std::vector<SingularModulus> compute_all(unsigned precision_digits) {
    std::vector<SingularModulus> out;
    out.reserve(kDiscriminants.size());
    for (unsigned d : kDiscriminants) out.push_back(compute_j(d, precision_digits));
    return out;
}

std::vector<TripleReport> jinv_pairs(unsigned precision_digits, const arith::FactorConfig& cfg) {
    const auto moduli = compute_all(precision_digits);
    std::vector<TripleReport> out;
    for (size_t i = 0; i < moduli.size(); ++i) {
        for (size_t j = i + 1; j < moduli.size(); ++j) {
            const Int& j1 = moduli[i].j_value;
            const Int& j2 = moduli[j].j_value;
            if (j1 == 0 || j2 == 0) continue;
            Int vals[3] = {abs(j1), abs(j2), abs(j1 - j2)};
            std::sort(vals, vals + 3);
            if (vals[0] + vals[1] != vals[2])
                throw Error("jinv_pairs: sign structure failed");  // cannot happen
            Int g = gcd(gcd(vals[0], vals[1]), vals[2]);
            AbcTriple t = triple_from_parts(vals[0] / g, vals[1] / g, vals[2] / g);
            out.push_back(make_report(t,
                                      "jinv(" + std::to_string(moduli[i].d) + "," +
                                          std::to_string(moduli[j].d) + ")",
                                      cfg));
        }
    }
    return out;
}

}  // namespace abc::jinv
