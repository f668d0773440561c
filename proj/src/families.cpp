#include "abc/families.hpp"

#include <cmath>

#include "abc/bigfloat.hpp"

namespace abc::families {

namespace {

void check_bits(const Int& bits, const Budget& budget, const char* who) {
    if (bits > static_cast<unsigned long>(budget.bits))
        throw ResourceLimit(std::string(who) + ": construction exceeds the bit budget");
}

arith::Factorization power_factors(const arith::Factorization& base, unsigned long e) {
    arith::Factorization f = base;
    for (auto& [p, k] : f.factors) k *= e;
    return f;
}

arith::PartialFactorization exact_part(arith::Factorization f) {
    arith::PartialFactorization p;
    p.found = std::move(f);
    return p;
}

// Report for (1, c-1, c) where c = base^e is fully known and R(b) <= b/divisor
// is proven; b itself is factored only when it is small enough.
TripleReport power_family_report(const Int& c, const arith::Factorization& c_factors,
                                 const Int& divisor_of_b, std::string method,
                                 const arith::FactorConfig& cfg) {
    AbcTriple t = triple_from_parts(1, c - 1, c);
    TripleFactors f;
    f.a = arith::try_factorize(1);
    f.b = arith::try_factorize(c - 1, cfg);
    f.c = exact_part(c_factors);
    Int bound = ((c - 1) / divisor_of_b) * f.c.found.radical();
    return assemble_report(t, std::move(method), std::move(f), bound);
}

}  // namespace

bool verify_lemma_euler(unsigned long p) {
    if (p == 2 || !arith::is_probable_prime(p))
        throw NotOddPrime("verify_lemma_euler: p = " + std::to_string(p));
    Int p2 = Int(p) * p;
    return arith::modpow(2, Int(p) * (p - 1), p2) == 1;
}

bool verify_lemma_787(unsigned long n) {
    // 8^(7^n) = 1 mod 7^(n+1), checked modularly so n can be large
    return arith::modpow(8, pow(Int(7), n), pow(Int(7), n + 1)) == 1;
}

bool verify_lemma_js(unsigned long n) {
    if (n < 1) throw DomainError("verify_lemma_js: n must be >= 1");
    return arith::modpow(3, Int(1) << n, Int(1) << (n + 2)) == 1;
}

bool verify_lemma_lcm(unsigned long n) {
    if (n < 1) throw DomainError("verify_lemma_lcm: n must be >= 1");
    Int L = arith::lcm_range(n);
    const unsigned long t = static_cast<unsigned long>(std::floor(std::log2(double(n))));
    Int P = 1;
    for (uint32_t p : arith::primes_up_to(static_cast<uint32_t>(n)))
        if (p >= 3) P *= p;
    Int modulus = (P * L) >> t;
    if (modulus == 1) return true;
    return arith::modpow(2, L, modulus) == 1;
}

bool verify_lemma_mod6(unsigned long k) {
    Int Q = Int(12) * k * k + Int(6) * k + 1;
    Int Q2 = Q * Q;
    if (Q2 == 1) return true;  // k = 0
    Int lhs = arith::modpow(Int(6) * k + 2, Int(6) * k + 2, Q2);
    Int rhs = arith::modpow(Int(6) * k + 1, Int(6) * k + 1, Q2);
    return lhs == rhs;
}

TripleReport family_granville(unsigned long p, const arith::FactorConfig& cfg,
                              const Budget& budget) {
    if (!verify_lemma_euler(p)) throw Error("family_granville: Euler lemma failed");
    Int e = Int(p) * (p - 1);
    check_bits(e, budget, "family_granville");
    Int c = Int(1) << e.get_ui();
    arith::Factorization cf;
    cf.factors.emplace_back(2, e.get_ui());
    TripleReport rep = power_family_report(c, cf, p, "family:granville", cfg);

    const Int& R = rep.radical_or_bound();
    if (R * p >= 2 * c) throw Error("family_granville: 2c/p bound violated");
    const double lc = ln(c);
    if (!(ln(R) < std::log(2 * std::sqrt(std::log(2.0))) + lc - 0.5 * std::log(lc)))
        throw Error("family_granville: 2 sqrt(ln2) c/sqrt(ln c) bound violated");
    return rep;
}

TripleReport family_bmt(unsigned long n, const arith::FactorConfig& cfg, const Budget& budget) {
    if (!verify_lemma_787(n)) throw Error("family_bmt: divisibility lemma failed");
    Int e = pow(Int(7), n) * 3;  // 8^(7^n) = 2^(3*7^n)
    check_bits(e, budget, "family_bmt");
    Int c = Int(1) << e.get_ui();
    arith::Factorization cf;
    cf.factors.emplace_back(2, e.get_ui());
    Int divisor = pow(Int(7), n);
    TripleReport rep = power_family_report(c, cf, divisor, "family:bmt", cfg);

    const Int& R = rep.radical_or_bound();
    // ln c = 7^n ln 8 exactly, so 2 ln8 c/ln c is the same bound as 2c/7^n
    if (R * divisor >= 2 * c) throw Error("family_bmt: 2c/7^n = 2 ln8 c/ln c bound violated");
    return rep;
}

TripleReport family_js(unsigned long n, const arith::FactorConfig& cfg, const Budget& budget) {
    if (!verify_lemma_js(n)) throw Error("family_js: divisibility lemma failed");
    check_bits(Int(1) << n, budget, "family_js");
    Int c = pow(Int(3), 1ul << n);
    arith::Factorization cf;
    cf.factors.emplace_back(3, 1ul << n);
    Int divisor = Int(1) << (n + 1);  // 2^(n+2) | b forces R(b) <= b/2^(n+1)
    TripleReport rep = power_family_report(c, cf, divisor, "family:js", cfg);

    const Int& R = rep.radical_or_bound();
    // ln c = 2^n ln 3 exactly, so (3 ln3/2) c/ln c is the same bound as 3c/2^(n+1)
    if (R * divisor >= 3 * c) throw Error("family_js: 3c/2^(n+1) = (3 ln3/2) c/ln c bound violated");
    return rep;
}

TripleReport family_qpn(unsigned long q, unsigned long p, unsigned long n,
                        const arith::FactorConfig& cfg, const Budget& budget) {
    if (p < 2 || q < 3 || n < 1) throw DomainError("family_qpn: need p >= 2, q >= 3, n >= 1");
    if ((q - 1) % p != 0) throw PreconditionViolated("family_qpn: p does not divide q - 1");
    Int e = pow(Int(p), n);
    check_bits(e * static_cast<unsigned long>(std::ceil(std::log2(double(q)))) + 1, budget,
               "family_qpn");
    Int c = pow(Int(q), e.get_ui());
    unsigned long v = arith::valuation(c - 1, p);
    if (v < n + 1) throw Error("family_qpn: p-adic valuation of q^(p^n) - 1 is below n+1");
    return power_family_report(c, power_factors(arith::factorize(q, cfg), e.get_ui()),
                               pow(Int(p), v - 1), "family:qpn", cfg);
}

TripleReport family_lcm(unsigned long n, const arith::FactorConfig& cfg, const Budget& budget) {
    if (n < 3) throw DomainError("family_lcm: n must be >= 3");
    if (!verify_lemma_lcm(n)) throw Error("family_lcm: lcm lemma failed");
    Int L = arith::lcm_range(n);
    check_bits(L, budget, "family_lcm");
    const unsigned long t = static_cast<unsigned long>(std::floor(std::log2(double(n))));
    Int c = Int(1) << L.get_ui();
    arith::Factorization cf;
    cf.factors.emplace_back(2, L.get_ui());
    Int divisor = L >> t;  // P L/2^t | b gives R(b) <= 2^t b/L
    TripleReport rep = power_family_report(c, cf, divisor, "family:lcm", cfg);

    const Int& R = rep.radical_or_bound();
    if (R * L > (Int(1) << (t + 1)) * (c - 1))
        throw Error("family_lcm: 2*2^t(2^L-1)/L bound violated");
    // ln c = L ln 2 exactly, so 2 ln2 n c/ln c is 2nc/L
    if (R * L >= 2 * n * c) throw Error("family_lcm: 2 ln2 n c/ln c bound violated");
    return rep;
}

TripleReport family_mod6(unsigned long k, const arith::FactorConfig& cfg, const Budget& budget) {
    if (k < 7 || k % 2 == 0) throw DomainError("family_mod6: k must be odd and >= 7");
    check_bits(Int(k) << k, budget, "family_mod6");
    const unsigned long n = 1ul << k;
    Int Q = (Int(n) * n - n + 1) / 3;
    Int c = Int(1) << (k * n);  // n^n = 2^(k n)
    Int a;
    mpz_ui_pow_ui(a.get_mpz_t(), n - 1, n - 1);
    Int b = c - a;
    if (!mpz_divisible_p(b.get_mpz_t(), Int(Q * Q).get_mpz_t()))
        throw Error("family_mod6: Q^2 does not divide b");

    AbcTriple t = triple_from_parts(a, b, c);
    TripleFactors f;
    f.a = exact_part(power_factors(arith::factorize(n - 1, cfg), n - 1));
    f.b = arith::try_factorize(b, cfg);
    f.c = exact_part([&] {
        arith::Factorization cf;
        cf.factors.emplace_back(2, k * n);
        return cf;
    }());
    Int bound = f.a.found.radical() * (b / Q) * 2;
    TripleReport rep = assemble_report(t, "family:mod6", std::move(f), bound);

    const Int& R = rep.radical_or_bound();
    if (R * n >= 6 * c) throw Error("family_mod6: 6c/n bound violated");
    const double lc = ln(c);
    if (!(ln(R) < std::log(8.0) + lc + std::log(std::log(lc)) - std::log(lc)))
        throw Error("family_mod6: 8c lnln c/ln c bound violated");
    return rep;
}

PomeranceStructure pomerance_structure(unsigned long j) {
    if (j < 1) throw DomainError("pomerance_structure: j must be >= 1");
    PomeranceStructure s;
    s.n = pow(Int(8), pow(Int(7), j).get_ui());
    s.n_mod6_is_2 = (s.n % 6 == 2);
    s.q_integral = ((s.n * s.n - s.n + 1) % 3 == 0);
    s.q_divisor = (s.n * s.n - s.n + 1) / 3;
    s.seven_power_divides_nm1 =
        mpz_divisible_p(Int(s.n - 1).get_mpz_t(), pow(Int(7), j + 1).get_mpz_t());
    Int Q2 = s.q_divisor * s.q_divisor;
    Int lhs = arith::modpow(s.n, s.n, Q2);
    Int rhs = arith::modpow(s.n - 1, s.n - 1, Q2);
    s.q_square_divides_b = (lhs == rhs);
    return s;
}

TripleReport family_pomerance(unsigned long j, const arith::FactorConfig& cfg,
                              const Budget& budget) {
    PomeranceStructure s = pomerance_structure(j);
    if (!s.all()) throw Error("family_pomerance: structural checks failed");
    const Int& n = s.n;
    const Int k = pow(Int(7), j) * 3;  // n = 2^k
    check_bits(n * k, budget, "family_pomerance");

    Int c = Int(1) << Int(k * n).get_ui();
    Int a;
    mpz_pow_ui(a.get_mpz_t(), Int(n - 1).get_mpz_t(), Int(n - 1).get_ui());
    Int b = c - a;

    AbcTriple t = triple_from_parts(a, b, c);
    TripleFactors f;
    f.a = exact_part(power_factors(arith::factorize(n - 1, cfg), Int(n - 1).get_ui()));
    f.b.cofactor = b;  // far beyond any factoring budget
    f.c = exact_part([&] {
        arith::Factorization cf;
        cf.factors.emplace_back(2, Int(k * n).get_ui());
        return cf;
    }());
    Int seven_j = pow(Int(7), j);
    Int bound = ((n - 1) / seven_j) * (b / s.q_divisor) * 2;
    TripleReport rep = assemble_report(t, "family:pomerance", std::move(f), bound);

    const Int& R = rep.radical_or_bound();
    if (R * seven_j * n >= 6 * c) throw Error("family_pomerance: 6c/(7^j n) bound violated");
    return rep;
}

}  // namespace abc::families
