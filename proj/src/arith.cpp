#include "abc/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace abc::arith {

Int Factorization::value() const {
    Int v = 1;
    for (const auto& [p, e] : factors) v *= pow(p, e);
    return v;
}

Int Factorization::radical() const {
    Int r = 1;
    for (const auto& [p, e] : factors) r *= p;
    return r;
}

unsigned long Factorization::big_omega() const {
    unsigned long t = 0;
    for (const auto& [p, e] : factors) t += e;
    return t;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long s) {
    Int a = base % n;
    if (a == 0) return false;
    Int x = modpow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

constexpr std::array<unsigned, 12> kDeterministicBases = {2,  3,  5,  7,  11, 13,
                                                          17, 19, 23, 29, 31, 37};

}  // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : kDeterministicBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    const bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
    if (small) {
        for (unsigned b : kDeterministicBases)
            if (miller_rabin_witness(n, b, d, s)) return false;
        return true;
    }
    // 64 rounds with the first 64 primes as bases.
    auto bases = primes_up_to(311);  // pi(311) = 64
    for (uint32_t b : bases)
        if (miller_rabin_witness(n, b, d, s)) return false;
    return true;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor, or 1 if the
// iteration budget ran out. Deterministic: fixed start, increasing increments.
Int rho_brent(const Int& n, unsigned long& budget) {
    for (unsigned long c = 1; budget > 0; ++c) {
        Int x = 2, y = 2, q = 1, g = 1, ys = 2;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i, --budget) y = (y * y + c) % n;
            if (budget == 0) return 1;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i, --budget) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                if (budget == 0) return 1;
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1 && budget > 0) {
                --budget;
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != 1 && g != n) return g;
        // cycle degenerated for this increment; retry with the next one
    }
    return 1;
}

// If n = b^e with e maximal >= 2, returns (b, e); otherwise (n, 1).
std::pair<Int, unsigned long> strip_perfect_power(const Int& n) {
    if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return {n, 1};
    const unsigned long maxk = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = maxk; k >= 2; --k) {
        auto [root, exact] = integer_root(n, k);
        if (exact) return {root, k};
    }
    return {n, 1};
}

}  // namespace

PartialFactorization try_factorize(const Int& n, const FactorConfig& cfg) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    PartialFactorization out;
    if (n == 1) return out;
    if (bit_length(n) > cfg.attempt_bits_cap) {
        out.cofactor = n;  // too large to even trial-divide; caller supplies bounds
        return out;
    }

    std::map<Int, unsigned long> found;
    Int rem = n;

    auto extract = [&](const Int& p, unsigned long mult) {
        unsigned long e = 0;
        while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
            rem /= p;
            ++e;
        }
        found[p] += e * mult;
    };

    // trial division: 2, 3, then a 2-3 wheel
    for (unsigned long p : {2ul, 3ul}) {
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) extract(p, 1);
    }
    for (unsigned long p = 5; p <= cfg.trial_limit && rem > 1; p += 6) {
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) extract(p, 1);
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p + 2)) extract(p + 2, 1);
        Int bound = Int(p) * p;
        if (bound > rem) break;
    }

    // split the remaining cofactor with rho
    unsigned long budget = cfg.rho_iterations;
    std::vector<std::pair<Int, unsigned long>> stack;
    Int stuck = 1;
    if (rem > 1) stack.emplace_back(rem, 1);
    while (!stack.empty()) {
        auto [v, mult] = stack.back();
        stack.pop_back();
        if (is_probable_prime(v)) {
            found[v] += mult;
            continue;
        }
        auto [base, e] = strip_perfect_power(v);
        if (e > 1) {
            stack.emplace_back(base, mult * e);
            continue;
        }
        Int g = rho_brent(v, budget);
        if (g == 1) {
            // budget exhausted; v stays composite
            stuck *= pow(v, mult);
            continue;
        }
        stack.emplace_back(g, mult);
        stack.emplace_back(v / g, mult);
    }

    for (auto& [p, e] : found) out.found.factors.emplace_back(p, e);
    out.cofactor = stuck;
    return out;
}

Factorization factorize(const Int& n, const FactorConfig& cfg) {
    PartialFactorization p = try_factorize(n, cfg);
    if (!p.complete())
        throw FactorizationIncomplete(p.cofactor,
                                      "factorize: composite cofactor resisted splitting");
    return std::move(p.found);
}

Int radical(const Int& n, const FactorConfig& cfg) { return factorize(n, cfg).radical(); }
unsigned long omega(const Int& n, const FactorConfig& cfg) { return factorize(n, cfg).omega(); }
unsigned long big_omega(const Int& n, const FactorConfig& cfg) {
    return factorize(n, cfg).big_omega();
}

Int lcm_range(unsigned long n) {
    if (n < 1) throw DomainError("lcm_range: n must be >= 1");
    Int l = 1;
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(n))) {
        Int pk = p;
        while (pk * p <= n) pk *= p;
        l *= pk;
    }
    return l;
}

Int modpow(const Int& base, const Int& exponent, const Int& modulus) {
    if (modulus < 2) throw DomainError("modpow: modulus must be >= 2");
    if (exponent < 0) throw DomainError("modpow: exponent must be >= 0");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

unsigned long valuation(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("valuation of 0");
    if (p < 2) throw DomainError("valuation: base must be >= 2");
    Int rem = n;
    unsigned long v = 0;
    while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
        rem /= p;
        ++v;
    }
    return v;
}

std::pair<Int, bool> integer_root(const Int& n, unsigned long k) {
    if (n < 0) throw DomainError("integer_root: n must be >= 0");
    if (k < 1) throw DomainError("integer_root: k must be >= 1");
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return {r, exact != 0};
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

uint64_t SieveTables::radical_of(uint64_t n) const {
    if (n < 1 || n > limit) throw DomainError("radical_of: n out of sieve range");
    uint64_t r = 1;
    while (n > 1) {
        const uint64_t p = smallest_prime_factor[n];
        r *= p;
        while (n % p == 0) n /= p;
    }
    return r;
}

Factorization SieveTables::factorize(uint64_t n) const {
    if (n < 1 || n > limit) throw DomainError("factorize: n out of sieve range");
    Factorization f;
    while (n > 1) {
        const uint64_t p = smallest_prime_factor[n];
        unsigned long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(Int(static_cast<unsigned long>(p)), e);
    }
    return f;
}

SieveTables build_sieves(uint64_t limit, uint64_t memory_budget_bytes) {
    if (limit < 2) throw DomainError("build_sieves: limit must be >= 2");
    if (limit > 0xFFFFFFFFull) throw ResourceLimit("build_sieves: limit exceeds 32-bit sieve");
    const uint64_t need = (limit + 1) * sizeof(uint32_t) + (limit + 1) / 8;
    if (need > memory_budget_bytes)
        throw ResourceLimit("build_sieves: sieve would exceed the memory budget");

    SieveTables t;
    t.limit = limit;
    t.smallest_prime_factor.assign(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (t.smallest_prime_factor[i] != 0) continue;
        for (uint64_t j = i; j <= limit; j += i)
            if (t.smallest_prime_factor[j] == 0)
                t.smallest_prime_factor[j] = static_cast<uint32_t>(i);
    }
    t.squarefree.assign(limit + 1, true);
    t.squarefree[0] = false;
    for (uint64_t p = 2; p * p <= limit; ++p) {
        if (!t.is_prime(p)) continue;
        for (uint64_t j = p * p; j <= limit; j += p * p) t.squarefree[j] = false;
    }
    return t;
}

namespace {

void radical_dfs(const std::vector<Int>& primes, size_t i, const Int& cur, const Int& bound,
                 std::vector<Int>& out) {
    if (i == primes.size()) {
        out.push_back(cur);
        return;
    }
    for (Int v = cur; v <= bound; v *= primes[i]) radical_dfs(primes, i + 1, v, bound, out);
}

}  // namespace

std::vector<Int> numbers_with_radical(const Int& r, const Int& bound, const FactorConfig& cfg) {
    if (r < 1 || bound < 1) throw DomainError("numbers_with_radical: r, bound must be >= 1");
    std::vector<Int> out;
    if (r > bound) return out;
    Factorization f = factorize(r, cfg);
    for (const auto& [p, e] : f.factors)
        if (e > 1) throw DomainError("numbers_with_radical: r is not squarefree");
    std::vector<Int> primes;
    for (const auto& [p, e] : f.factors) primes.push_back(p);
    // every prime appears with exponent >= 1, so start from r itself
    radical_dfs(primes, 0, r, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> friable_numbers(const std::vector<Int>& primes, const Int& bound) {
    if (bound < 1) throw DomainError("friable_numbers: bound must be >= 1");
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw DomainError("friable_numbers: repeated prime");
    std::vector<Int> out;
    radical_dfs(primes, 0, 1, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace abc::arith
