#include "abc/nvar.hpp"

#include <algorithm>

#include "abc/bigfloat.hpp"

namespace abc::nvar {

std::vector<Int> bb_tuple(const AbcTriple& t, unsigned long n) {
    if (n < 4) throw DomainError("bb_tuple: n must be >= 4 (n = 3 is the triple itself)");
    std::vector<Int> out;
    const Int bc = t.b * t.c;
    for (unsigned long j = 1; j <= n - 2; ++j) {
        Int bin;
        mpz_bin_uiui(bin.get_mpz_t(), n + j - 4, 2 * j - 2);
        Int num = Int(2 * n - 5) * bin;
        if (!mpz_divisible_ui_p(num.get_mpz_t(), 2 * j - 1))
            throw NonIntegralCoefficient("bb_tuple: (2j-1) does not divide (2n-5) C(n+j-4, 2j-2)");
        out.push_back(num / (2 * j - 1) * pow(t.a, 2 * j - 1) * pow(bc, n - j - 2));
    }
    out.push_back(pow(t.b, 2 * n - 5));
    out.push_back(-pow(t.c, 2 * n - 5));

    Int sum = 0;
    for (const Int& v : out) sum += v;
    if (sum != 0) throw Error("bb_tuple: terms do not sum to zero");
    return out;
}

NvarReport nvar_validate(const std::vector<Int>& tuple, const arith::FactorConfig& cfg) {
    const size_t n = tuple.size();
    if (n < 3) throw DomainError("nvar_validate: need at least 3 entries");
    if (n > 20) throw DomainError("nvar_validate: subset check capped at n = 20");
    for (size_t i = 0; i < n; ++i)
        if (tuple[i] == 0) throw ZeroEntry("nvar_validate: entry " + std::to_string(i) + " is 0");

    Int total = 0;
    for (const Int& v : tuple) total += v;
    if (total != 0) throw DomainError("nvar_validate: entries do not sum to zero");

    // proper nonempty subsets; Gray code keeps each step to one add or subtract
    Int acc = 0;
    uint32_t prev = 0;
    const uint32_t full = (1u << n) - 1;
    for (uint32_t g = 1; g <= full; ++g) {
        const uint32_t mask = g ^ (g >> 1);
        const uint32_t changed = mask ^ prev;
        const int idx = __builtin_ctz(changed);
        if (mask & changed)
            acc += tuple[idx];
        else
            acc -= tuple[idx];
        prev = mask;
        if (mask == full) continue;  // the improper full subset
        if (acc == 0) {
            std::vector<size_t> witness;
            for (size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) witness.push_back(i);
            throw VanishingSubsum(witness, "nvar_validate: proper subset sums to zero");
        }
    }

    NvarReport rep;
    rep.n = n;
    Int g = abs(tuple[0]);
    for (size_t i = 1; i < n; ++i) g = gcd(g, tuple[i]);
    rep.relatively_prime = (g == 1);
    rep.radical = 1;
    // R(|a_1 ... a_n|): fold radicals, dropping repeats across entries
    std::vector<Int> primes_seen;
    for (const Int& v : tuple) {
        auto f = arith::factorize(abs(v), cfg);
        for (const auto& [p, e] : f.factors)
            if (std::find(primes_seen.begin(), primes_seen.end(), p) == primes_seen.end()) {
                primes_seen.push_back(p);
                rep.radical *= p;
            }
    }
    rep.max_abs = 0;
    for (const Int& v : tuple) rep.max_abs = std::max(rep.max_abs, abs(v));
    rep.exponent_ratio = ln(rep.max_abs) / ln(rep.radical);
    return rep;
}

}  // namespace abc::nvar
