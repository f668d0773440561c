#pragma once

#include <gmpxx.h>

#include <string>

namespace abc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from(const std::string& decimal) { return Int(decimal, 10); }
inline std::string to_string(const Int& n) { return n.get_str(10); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int abs(const Int& n) {
    Int r;
    mpz_abs(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace abc
