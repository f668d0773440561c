#include <doctest.h>

#include <algorithm>

#include "abc/bigfloat.hpp"
#include "abc/exhaustive.hpp"
#include "abc/nvar.hpp"

using namespace abc;
using namespace abc::nvar;

TEST_SUITE("nvar") {

TEST_CASE("n = 4 instance on (1,8,9)") {
    auto tuple = bb_tuple(make_triple(1, 8), 4);
    std::vector<Int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{-729, 1, 216, 512});  // {a^3, 3abc, b^3, -c^3}
    Int sum = 0;
    for (const Int& v : tuple) sum += v;
    CHECK(sum == 0);
}

TEST_CASE("n = 5 instance on (1,8,9)") {
    auto tuple = bb_tuple(make_triple(1, 8), 5);
    REQUIRE(tuple.size() == 5);
    // frozen from a direct evaluation of the coefficient formula
    std::vector<Int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{-59049, 1, 360, 25920, 32768});
    Int sum = 0;
    for (const Int& v : tuple) sum += v;
    CHECK(sum == 0);
}

TEST_CASE("coefficient integrality and zero sums across n and triples") {
    auto oracle = exhaustive::oracle_enumerate(2000);
    size_t used = 0;
    for (const AbcTriple& t : oracle) {
        if (++used > 50) break;
        for (unsigned long n = 4; n <= 8; ++n) {
            auto tuple = bb_tuple(t, n);  // throws on any non-integral coefficient
            Int sum = 0;
            for (const Int& v : tuple) sum += v;
            CHECK(sum == 0);
        }
    }
    // the integrality sweep alone, out to n = 12
    for (unsigned long n = 4; n <= 12; ++n) bb_tuple(make_triple(3, 125), n);
    CHECK(used >= 31);
    CHECK_THROWS_AS(bb_tuple(make_triple(1, 8), 3), DomainError);
}

TEST_CASE("validator accepts the bb tuples") {
    AbcTriple t = make_triple(1, 8);
    auto rep = nvar_validate(bb_tuple(t, 4));
    CHECK(rep.relatively_prime);
    CHECK(rep.max_abs == 729);  // c^(2n-5)
    CHECK(rep.radical == 6);    // R(1 * 216 * 512 * 729) = R(2^a 3^b)
    CHECK(rep.exponent_ratio == doctest::Approx(ln(Int(729)) / ln(Int(6))).epsilon(1e-9));
    CHECK(rep.exponent_ratio > 3);  // beats 2n - 5 on an abc hit

    // R <= (product of primes up to 2n-5) * R(abc) for hits
    for (unsigned long n = 4; n <= 6; ++n) {
        auto r = nvar_validate(bb_tuple(t, n));
        Int primorial = 1;
        for (uint32_t p : arith::primes_up_to(2 * n - 5)) primorial *= p;
        CHECK(r.radical <= primorial * 6);
        CHECK(r.max_abs == pow(Int(9), 2 * n - 5));
    }
}

TEST_CASE("vanishing subsums are caught with a witness") {
    std::vector<Int> trivial{32, -32, 243, -243};  // (2^5, -2^5, 3^5, -3^5)
    CHECK_THROWS_AS(nvar_validate(trivial), VanishingSubsum);
    try {
        nvar_validate(trivial);
    } catch (const VanishingSubsum& e) {
        Int sum = 0;
        for (size_t i : e.witness) sum += trivial[i];
        CHECK(sum == 0);
        CHECK(!e.witness.empty());
        CHECK(e.witness.size() < trivial.size());
    }
}

TEST_CASE("zero entries and bad sums are rejected") {
    CHECK_THROWS_AS(nvar_validate({Int(0), Int(1), Int(-1)}), ZeroEntry);
    CHECK_THROWS_AS(nvar_validate({Int(1), Int(2), Int(-2)}), DomainError);
    CHECK_THROWS_AS(nvar_validate(std::vector<Int>(21, Int(1))), DomainError);
}

TEST_CASE("n = 3 reduction is the triple itself") {
    AbcTriple t = make_triple(1, 8);
    auto rep = nvar_validate({t.a, t.b, -t.c});
    CHECK(rep.relatively_prime);
    CHECK(rep.exponent_ratio == doctest::Approx(quality(t)).epsilon(1e-9));
}

}  // TEST_SUITE
