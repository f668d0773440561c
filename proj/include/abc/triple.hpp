#pragma once

#include <optional>
#include <string>

#include "abc/arith.hpp"
#include "abc/errors.hpp"
#include "abc/numbers.hpp"

namespace abc {

// Coprime positive integers with a <= b and a + b = c.
struct AbcTriple {
    Int a, b, c;

    bool operator==(const AbcTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const AbcTriple& o) const {
        if (c != o.c) return c < o.c;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

AbcTriple make_triple(const Int& x, const Int& y);                          // throws NotCoprime
AbcTriple triple_from_parts(const Int& a, const Int& b, const Int& c);      // validates a+b=c too

struct TripleFactors {
    arith::PartialFactorization a, b, c;
    bool complete() const { return a.complete() && b.complete() && c.complete(); }
};

struct TripleReport {
    AbcTriple triple;
    std::optional<Int> radical;              // exact R(abc)
    std::optional<Int> radical_bound;        // proven upper bound when inexact
    std::optional<double> quality;
    std::optional<double> quality_lower_bound;
    std::optional<double> merit;
    bool is_hit = false;                     // proven: (radical or bound) < c
    std::string method;
    TripleFactors factors;

    const Int& radical_or_bound() const { return radical ? *radical : *radical_bound; }
};

// (ln R(a)/ln c, ln R(b)/ln c, ln R(c)/ln c); a component is 0 when the entry is 1.
// The triple is a hit iff the components sum to less than 1.
struct VectorQuality {
    double alpha, beta, gamma;
    double sum() const { return alpha + beta + gamma; }
};

double quality(const AbcTriple& t, const arith::FactorConfig& cfg = {});
double quality_lower_bound(const AbcTriple& t, const Int& radical_upper_bound);
double merit(const AbcTriple& t, const arith::FactorConfig& cfg = {});  // needs R(abc) >= 3
VectorQuality vector_quality(const AbcTriple& t, const arith::FactorConfig& cfg = {});

// True iff the triple is an epsilon-exception under the named conjecture version:
//   1: R(abc) < c^(1-eps)     2: c > R(abc)^(1+eps)     5: q(a,b,c) > 1 + eps
bool conjecture_exception(const AbcTriple& t, int version, double eps,
                          const arith::FactorConfig& cfg = {});

struct BoundEval {
    Int lhs;         // c
    double rhs_log;  // ln of the right-hand side
    bool holds;      // lhs < rhs
    double rhs() const;
};

// c < eps^(-K1 min{w(ab),w(ac),w(bc)}) R(abc)^(1+eps)
BoundEval baker_bound(const AbcTriple& t, double eps, double K1,
                      const arith::FactorConfig& cfg = {});
// c < K3^Omega(abc) R(abc)
BoundEval granville_bound(const AbcTriple& t, double K3, const arith::FactorConfig& cfg = {});
// c < R exp(4 sqrt(3 ln R/lnln R) (1 + lnlnln R/(2 lnln R) + K4/lnln R))
BoundEval rst_bound(const AbcTriple& t, double K4, const arith::FactorConfig& cfg = {});
// 1 + (4-delta)/(sqrt(ln c) lnln c)
double st_quality_floor(const AbcTriple& t, double delta);

// Factorizes a, b, c and fills in radical/quality/merit where the factorizations
// complete; otherwise falls back to a proven radical bound (optionally tightened
// by the caller) with a quality lower bound.
TripleReport make_report(const AbcTriple& t, std::string method,
                         const arith::FactorConfig& cfg = {},
                         const std::optional<Int>& radical_bound_hint = std::nullopt);

// Same assembly from factorizations the caller already has (families know the
// shape of their members without generic factoring).
TripleReport assemble_report(const AbcTriple& t, std::string method, TripleFactors factors,
                             const std::optional<Int>& radical_bound_hint = std::nullopt);

}  // namespace abc
