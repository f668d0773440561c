#pragma once

#include <optional>
#include <vector>

#include "abc/triple.hpp"

namespace abc::ec {

// Point on y^3 = x^3 + k, exact rationals in lowest terms.
struct RationalPoint {
    Rat x, y;
    bool infinity = false;
};

// Point on Y^2 = X^3 - 432 k^2.
struct WeierstrassPoint {
    Rat X, Y;
    bool infinity = false;
};

bool on_cubic(const RationalPoint& P, const Int& k);
bool on_weierstrass(const WeierstrassPoint& P, const Int& k);

// X = 12k/(y-x), Y = 36k(y+x)/(y-x); y = x maps to the point at infinity.
WeierstrassPoint to_weierstrass(const RationalPoint& P, const Int& k);  // throws MapsToInfinity
// Inverse: x = (Y - 36k)/(6X), y = (Y + 36k)/(6X).
RationalPoint from_weierstrass(const WeierstrassPoint& P, const Int& k);

// Chord-tangent addition on Y^2 = X^3 - 432k^2; infinity is the identity.
WeierstrassPoint ec_add(const WeierstrassPoint& P, const WeierstrassPoint& Q, const Int& k);

// Walk n*P for n = 1..max_mult from a seed on y^3 = x^3 + k (k defaults to
// y0^3 - x0^3). Each multiple with positive coordinates (p/d, q/d) gives the
// candidate (p^3, k d^3, q^3), gcd-normalized and reported; hits are flagged
// by the radical (or its proven bound k d p q when factoring stalls).
std::vector<TripleReport> ec_candidates(const Rat& x0, const Rat& y0,
                                        const std::optional<Int>& k_override,
                                        unsigned long max_mult,
                                        const arith::FactorConfig& cfg = {});

}  // namespace abc::ec
