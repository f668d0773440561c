#include "abc/triple.hpp"

#include <cmath>

#include "abc/bigfloat.hpp"

namespace abc {

AbcTriple make_triple(const Int& x, const Int& y) {
    if (x < 1 || y < 1) throw DomainError("make_triple: arguments must be positive");
    Int g = gcd(x, y);
    if (g != 1) throw NotCoprime(g, "make_triple: gcd(" + to_string(x) + ", " + to_string(y) +
                                        ") = " + to_string(g));
    AbcTriple t;
    t.a = std::min(x, y);
    t.b = std::max(x, y);
    t.c = x + y;
    return t;
}

AbcTriple triple_from_parts(const Int& a, const Int& b, const Int& c) {
    if (a + b != c) throw DomainError("triple_from_parts: a + b != c");
    return make_triple(a, b);
}

namespace {

Int triple_radical(const AbcTriple& t, const arith::FactorConfig& cfg) {
    // pairwise coprime, so R(abc) = R(a) R(b) R(c)
    return arith::radical(t.a, cfg) * arith::radical(t.b, cfg) * arith::radical(t.c, cfg);
}

}  // namespace

double quality(const AbcTriple& t, const arith::FactorConfig& cfg) {
    Int R = triple_radical(t, cfg);
    return ln(t.c) / ln(R);
}

double quality_lower_bound(const AbcTriple& t, const Int& radical_upper_bound) {
    if (radical_upper_bound < 2)
        throw DomainError("quality_lower_bound: bound must be >= 2");
    return ln(t.c) / ln(radical_upper_bound);
}

double merit(const AbcTriple& t, const arith::FactorConfig& cfg) {
    Int R = triple_radical(t, cfg);
    if (R < 3) throw DomainError("merit: requires R(abc) >= 3");
    const double lr = ln(R);
    const double q = ln(t.c) / lr;
    return (q - 1) * (q - 1) * lr * std::log(lr);
}

VectorQuality vector_quality(const AbcTriple& t, const arith::FactorConfig& cfg) {
    const double lc = ln(t.c);
    auto comp = [&](const Int& n) {
        if (n == 1) return 0.0;
        return ln(arith::radical(n, cfg)) / lc;
    };
    return VectorQuality{comp(t.a), comp(t.b), comp(t.c)};
}

bool conjecture_exception(const AbcTriple& t, int version, double eps,
                          const arith::FactorConfig& cfg) {
    if (eps <= 0) throw DomainError("conjecture_exception: eps must be positive");
    const double lc = ln(t.c);
    const double lr = ln(triple_radical(t, cfg));
    switch (version) {
        case 1: return lr < (1 - eps) * lc;
        case 2: return lc > (1 + eps) * lr;
        case 5: return lc / lr > 1 + eps;
        default: throw DomainError("conjecture_exception: version must be 1, 2 or 5");
    }
}

double BoundEval::rhs() const { return std::exp(rhs_log); }

BoundEval baker_bound(const AbcTriple& t, double eps, double K1,
                      const arith::FactorConfig& cfg) {
    if (eps <= 0) throw DomainError("baker_bound: eps must be positive");
    const unsigned long w = std::min({arith::omega(t.a * t.b, cfg), arith::omega(t.a * t.c, cfg),
                                      arith::omega(t.b * t.c, cfg)});
    const double lr = ln(triple_radical(t, cfg));
    const double rhs_log = -K1 * static_cast<double>(w) * std::log(eps) + (1 + eps) * lr;
    return BoundEval{t.c, rhs_log, ln(t.c) < rhs_log};
}

BoundEval granville_bound(const AbcTriple& t, double K3, const arith::FactorConfig& cfg) {
    if (K3 <= 0) throw DomainError("granville_bound: K3 must be positive");
    const unsigned long W = arith::big_omega(t.a, cfg) + arith::big_omega(t.b, cfg) +
                            arith::big_omega(t.c, cfg);
    const double rhs_log = static_cast<double>(W) * std::log(K3) + ln(triple_radical(t, cfg));
    return BoundEval{t.c, rhs_log, ln(t.c) < rhs_log};
}

BoundEval rst_bound(const AbcTriple& t, double K4, const arith::FactorConfig& cfg) {
    const double lr = ln(triple_radical(t, cfg));
    if (!(lr > 1)) throw DomainError("rst_bound: lnlnln R(abc) undefined, radical too small");
    const double llr = std::log(lr);
    const double lllr = std::log(llr);
    const double rhs_log =
        lr + 4 * std::sqrt(3 * lr / llr) * (1 + lllr / (2 * llr) + K4 / llr);
    return BoundEval{t.c, rhs_log, ln(t.c) < rhs_log};
}

double st_quality_floor(const AbcTriple& t, double delta) {
    const double lc = ln(t.c);
    const double llc = std::log(lc);
    if (llc <= 0) throw DomainError("st_quality_floor: c too small for iterated logs");
    return 1 + (4 - delta) / (std::sqrt(lc) * llc);
}

TripleReport assemble_report(const AbcTriple& t, std::string method, TripleFactors factors,
                             const std::optional<Int>& radical_bound_hint) {
    TripleReport r;
    r.triple = t;
    r.method = std::move(method);
    r.factors = std::move(factors);
    if (r.factors.complete()) {
        Int R = r.factors.a.found.radical() * r.factors.b.found.radical() *
                r.factors.c.found.radical();
        r.radical = R;
        const double lr = ln(R);
        const double lc = ln(t.c);
        r.quality = lc / lr;
        if (R >= 3) r.merit = (*r.quality - 1) * (*r.quality - 1) * lr * std::log(lr);
        r.is_hit = R < t.c;
    } else {
        Int bound = r.factors.a.radical_upper_bound() * r.factors.b.radical_upper_bound() *
                    r.factors.c.radical_upper_bound();
        if (radical_bound_hint && *radical_bound_hint < bound) bound = *radical_bound_hint;
        r.radical_bound = bound;
        r.quality_lower_bound = quality_lower_bound(t, bound);
        r.is_hit = bound < t.c;
    }
    return r;
}

TripleReport make_report(const AbcTriple& t, std::string method, const arith::FactorConfig& cfg,
                         const std::optional<Int>& radical_bound_hint) {
    TripleFactors f;
    f.a = arith::try_factorize(t.a, cfg);
    f.b = arith::try_factorize(t.b, cfg);
    f.c = arith::try_factorize(t.c, cfg);
    return assemble_report(t, std::move(method), std::move(f), radical_bound_hint);
}

}  // namespace abc
