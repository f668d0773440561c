#include "abc/ecsearch.hpp"

#include <algorithm>

namespace abc::ec {

namespace {

Rat canon(Rat q) {
    q.canonicalize();
    return q;
}

}  // namespace

bool on_cubic(const RationalPoint& P, const Int& k) {
    if (P.infinity) return true;
    return P.y * P.y * P.y == P.x * P.x * P.x + k;
}

bool on_weierstrass(const WeierstrassPoint& P, const Int& k) {
    if (P.infinity) return true;
    return P.Y * P.Y == P.X * P.X * P.X - Rat(432) * k * k;
}

WeierstrassPoint to_weierstrass(const RationalPoint& P, const Int& k) {
    if (P.infinity) return WeierstrassPoint{{}, {}, true};
    if (P.x == P.y) throw MapsToInfinity("to_weierstrass: y = x has no affine image");
    Rat den = P.y - P.x;
    WeierstrassPoint W;
    W.X = canon(Rat(12 * k) / den);
    W.Y = canon(Rat(36 * k) * (P.y + P.x) / den);
    return W;
}

RationalPoint from_weierstrass(const WeierstrassPoint& P, const Int& k) {
    if (P.infinity) return RationalPoint{{}, {}, true};
    if (P.X == 0) throw DomainError("from_weierstrass: X = 0 is not in the image");
    RationalPoint R;
    R.x = canon((P.Y - Rat(36 * k)) / (Rat(6) * P.X));
    R.y = canon((P.Y + Rat(36 * k)) / (Rat(6) * P.X));
    return R;
}

WeierstrassPoint ec_add(const WeierstrassPoint& P, const WeierstrassPoint& Q, const Int& k) {
    if (!on_weierstrass(P, k) || !on_weierstrass(Q, k))
        throw DomainError("ec_add: point not on Y^2 = X^3 - 432k^2");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rat lambda;
    if (P.X == Q.X) {
        if (P.Y != Q.Y || P.Y == 0) return WeierstrassPoint{{}, {}, true};  // P + (-P)
        lambda = canon(Rat(3) * P.X * P.X / (Rat(2) * P.Y));                // doubling
    } else {
        lambda = canon((Q.Y - P.Y) / (Q.X - P.X));
    }
    WeierstrassPoint R;
    R.X = canon(lambda * lambda - P.X - Q.X);
    R.Y = canon(lambda * (P.X - R.X) - P.Y);
    return R;
}

std::vector<TripleReport> ec_candidates(const Rat& x0, const Rat& y0,
                                        const std::optional<Int>& k_override,
                                        unsigned long max_mult,
                                        const arith::FactorConfig& cfg) {
    if (max_mult < 1) throw DomainError("ec_candidates: max_mult must be >= 1");
    Rat x = canon(x0), y = canon(y0);
    Int k;
    if (k_override) {
        k = *k_override;
    } else {
        Rat kq = canon(y * y * y - x * x * x);
        if (kq.get_den() != 1) throw SeedNotOnCurve("ec_candidates: y0^3 - x0^3 not integral");
        k = kq.get_num();
    }
    if (k < 1) throw DomainError("ec_candidates: k must be >= 1");
    RationalPoint seed{x, y};
    if (!on_cubic(seed, k)) throw SeedNotOnCurve("ec_candidates: seed not on y^3 = x^3 + k");

    const WeierstrassPoint base = to_weierstrass(seed, k);
    WeierstrassPoint cur = base;
    std::vector<TripleReport> out;
    for (unsigned long n = 1; n <= max_mult; ++n) {
        if (cur.infinity) break;  // seed was torsion
        RationalPoint Pn = from_weierstrass(cur, k);
        cur = ec_add(cur, base, k);

        // write (x, y) = (p/d, q/d) over the common denominator
        Int dx = Pn.x.get_den(), dy = Pn.y.get_den();
        Int d = lcm(dx, dy);
        Int p = Pn.x.get_num() * (d / dx);
        Int q = Pn.y.get_num() * (d / dy);
        if (p <= 0 || q <= 0) continue;

        Int t1 = p * p * p;
        Int t2 = k * d * d * d;
        Int t3 = q * q * q;
        if (t1 + t2 != t3) throw Error("ec_candidates: point left the curve");  // cannot happen
        Int g = gcd(gcd(t1, t2), t3);
        AbcTriple tr = triple_from_parts(std::min(t1, t2) / g, std::max(t1, t2) / g, t3 / g);
        // R(p^3 k d^3 q^3) <= k d p q, a proven bound when factoring stalls
        out.push_back(make_report(tr, "ec(n=" + std::to_string(n) + ")", cfg, Int(k * d * p * q)));
    }
    return out;
}

}  // namespace abc::ec
