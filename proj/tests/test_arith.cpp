#include <doctest.h>

#include <numeric>

#include "abc/arith.hpp"

using namespace abc;
using namespace abc::arith;

namespace {

// independent oracle: radical via the sieve's smallest-prime-factor walk
uint64_t sieve_radical(const SieveTables& t, uint64_t n) { return t.radical_of(n); }

Factorization fz(std::vector<std::pair<Int, unsigned long>> f) {
    Factorization out;
    out.factors = std::move(f);
    return out;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("factorize small fixtures") {
    CHECK(factorize(600).factors == fz({{2, 3}, {3, 1}, {5, 2}}).factors);
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(59049).factors == fz({{3, 10}}).factors);  // repeated division by 3
    CHECK(factorize(600).value() == 600);
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("radical fixtures") {
    CHECK(radical(600) == 30);
    CHECK(radical(1) == 1);
    CHECK(radical(36) == 6);
}

TEST_CASE("omega fixtures") {
    CHECK(omega(72) == 2);
    CHECK(big_omega(72) == 5);
    CHECK(omega(1) == 0);
    CHECK(big_omega(1) == 0);
    Int n = pow(Int(2), 12) * pow(Int(5), 3) * pow(Int(23), 3) * pow(Int(29), 3);
    CHECK(omega(n) == 4);
    CHECK(big_omega(n) == 21);
    CHECK(omega(n) <= big_omega(n));
}

TEST_CASE("gcd, lcm_range, modpow") {
    CHECK(gcd(Int(6436341), Int(6436343)) == 1);
    CHECK(lcm_range(10) == 2520);
    // oracle: fold lcm over 1..n
    for (unsigned long n : {1ul, 2ul, 7ul, 10ul, 30ul, 100ul}) {
        Int fold = 1;
        for (unsigned long i = 2; i <= n; ++i) fold = lcm(fold, Int(i));
        CHECK(lcm_range(n) == fold);
    }
    CHECK(modpow(2, 10, 1000) == 24);
    CHECK_THROWS_AS(modpow(2, 3, 1), DomainError);
}

TEST_CASE("Euler property: a^phi(p^2) = 1 mod p^2") {
    for (uint32_t p : primes_up_to(100)) {
        if (p == 2) continue;
        Int p2 = Int(p) * p;
        Int phi = Int(p) * (p - 1);
        for (unsigned long a : {2ul, 3ul, 5ul, 10ul}) {
            if (a % p == 0) continue;
            CHECK(modpow(a, phi, p2) == 1);
        }
    }
}

TEST_CASE("sieve tables") {
    CHECK(build_sieves(2).smallest_prime_factor[2] == 2);
    auto t = build_sieves(30);
    CHECK(t.smallest_prime_factor[2] == 2);
    CHECK(t.smallest_prime_factor[30] == 2);
    std::vector<uint64_t> sf;
    for (uint64_t n = 1; n <= 10; ++n)
        if (t.squarefree[n]) sf.push_back(n);
    CHECK(sf == std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10});
    for (uint64_t n = 2; n <= 30; ++n) {
        const uint64_t p = t.smallest_prime_factor[n];
        CHECK(n % p == 0);
        CHECK(t.is_prime(p));
    }
    CHECK_THROWS_AS(build_sieves(1u << 20, 1024), ResourceLimit);
}

TEST_CASE("radical via sieve matches radical via factorization up to 1e5") {
    auto t = build_sieves(100000);
    for (uint64_t n = 1; n <= 100000; n += (n < 1000 ? 1 : 97))
        CHECK(sieve_radical(t, n) == radical(n).get_ui());
    // full agreement on the dense low range
    for (uint64_t n = 1; n <= 5000; ++n) CHECK(sieve_radical(t, n) == radical(n).get_ui());
}

TEST_CASE("radical is multiplicative on coprime arguments") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(12345ul);
    int done = 0;
    while (done < 500) {
        Int a = rng.get_z_range(Int(1000000000)) + 1;
        Int b = rng.get_z_range(Int(1000000000)) + 1;
        if (gcd(a, b) != 1) continue;
        ++done;
        CHECK(radical(a * b) == radical(a) * radical(b));
    }
}

TEST_CASE("numbers_with_radical fixtures and oracle") {
    CHECK(numbers_with_radical(6, 50) ==
          std::vector<Int>{6, 12, 18, 24, 36, 48});
    CHECK(numbers_with_radical(1, 100) == std::vector<Int>{1});
    CHECK(numbers_with_radical(2, 9) == std::vector<Int>{2, 4, 8});
    CHECK_THROWS_AS(numbers_with_radical(4, 100), DomainError);  // not squarefree

    auto t = build_sieves(10000);
    for (uint64_t r = 1; r <= 100; ++r) {
        if (!t.squarefree[r]) continue;
        std::vector<Int> brute;
        for (uint64_t n = 1; n <= 10000; ++n)
            if (sieve_radical(t, n) == r) brute.push_back(n);
        CHECK(numbers_with_radical(r, 10000) == brute);
    }
}

TEST_CASE("friable_numbers fixtures and oracle") {
    CHECK(friable_numbers({Int(3)}, 30) == std::vector<Int>{1, 3, 9, 27});
    CHECK(friable_numbers({Int(3), Int(5)}, 20) == std::vector<Int>{1, 3, 5, 9, 15});
    CHECK(friable_numbers({Int(2)}, 1) == std::vector<Int>{1});
    CHECK_THROWS_AS(friable_numbers({Int(3), Int(3)}, 100), DomainError);
    auto t = build_sieves(2000);
    std::vector<Int> brute;
    for (uint64_t n = 1; n <= 2000; ++n) {
        uint64_t m = n;
        for (uint64_t p : {2ull, 3ull, 7ull})
            while (m % p == 0) m /= p;
        if (m == 1) brute.push_back(n);
    }
    CHECK(friable_numbers({Int(2), Int(3), Int(7)}, 2000) == brute);
}

TEST_CASE("integer_root") {
    CHECK(integer_root(27, 3) == std::pair<Int, bool>{3, true});
    CHECK(integer_root(28, 3) == std::pair<Int, bool>{3, false});
    CHECK(integer_root(6436343, 5) == std::pair<Int, bool>{23, true});
    CHECK(integer_root(0, 4) == std::pair<Int, bool>{0, true});
    CHECK(integer_root(1, 1) == std::pair<Int, bool>{1, true});
}

TEST_CASE("primality") {
    CHECK(is_probable_prime(Int(2)));
    CHECK(pow(Int(23), 5) == 6436343);
    CHECK(is_probable_prime((Int(1) << 61) - 1));
    CHECK(!is_probable_prime(Int(561)));   // Carmichael
    CHECK(!is_probable_prime(Int(1)));
    CHECK(is_probable_prime((Int(1) << 127) - 1));
    // above 2^64 composite
    Int p = (Int(1) << 89) - 1;
    CHECK(is_probable_prime(p));
    CHECK(!is_probable_prime(p * p));
}

TEST_CASE("valuation") {
    CHECK(valuation(Int(48), 2) == 4);
    CHECK(valuation(Int(49), 7) == 2);
    CHECK(valuation(Int(5), 3) == 0);
    CHECK_THROWS_AS(valuation(Int(5), 1), DomainError);
    CHECK_THROWS_AS(valuation(Int(0), 2), DomainError);
}

TEST_CASE("factorization incomplete carries the cofactor") {
    // two primes far beyond a starved rho budget
    Int p = 1000000000000000003;  // 1e18 + 3
    REQUIRE(is_probable_prime(p));
    Int q = 1000000000000000031;
    REQUIRE(is_probable_prime(q));
    FactorConfig starved;
    starved.trial_limit = 100;
    starved.rho_iterations = 50;
    Int n = 6 * p * q;
    auto partial = try_factorize(n, starved);
    CHECK(!partial.complete());
    CHECK(partial.cofactor == p * q);
    CHECK(partial.found.value() * partial.cofactor == n);
    CHECK(partial.radical_upper_bound() == 6 * p * q);
    CHECK_THROWS_AS(factorize(n, starved), FactorizationIncomplete);
    // the default budget cracks a semiprime of nine-digit primes
    Int p2 = 1000000007, q2 = 1000000009;
    auto full = factorize(6 * p2 * q2);
    CHECK(full.factors == fz({{2, 1}, {3, 1}, {p2, 1}, {q2, 1}}).factors);
}

TEST_CASE("perfect powers factor through their base") {
    Int p = 1000003;
    Int n = pow(p * p, 3);  // p^6
    auto f = factorize(n);
    CHECK(f.factors == fz({{p, 6}}).factors);
}

}  // TEST_SUITE
