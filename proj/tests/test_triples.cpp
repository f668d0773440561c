#include <doctest.h>

#include <cmath>

#include "abc/bigfloat.hpp"
#include "abc/exhaustive.hpp"
#include "abc/triple.hpp"

using namespace abc;

namespace {

AbcTriple reyssat() { return make_triple(2, pow(Int(3), 10) * 109); }

}  // namespace

TEST_SUITE("triples") {

TEST_CASE("make_triple") {
    AbcTriple t = make_triple(8, 1);
    CHECK(t.a == 1);
    CHECK(t.b == 8);
    CHECK(t.c == 9);
    CHECK_THROWS_AS(make_triple(2, 4), NotCoprime);
    try {
        make_triple(2, 4);
    } catch (const NotCoprime& e) {
        CHECK(e.common == 2);
    }
    AbcTriple r = reyssat();
    CHECK(r.a == 2);
    CHECK(r.b == 6436341);
    CHECK(r.c == 6436343);
    CHECK(r.c == pow(Int(23), 5));
}

TEST_CASE("make_triple is symmetric") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(777ul);
    for (int i = 0; i < 200; ++i) {
        Int x = rng.get_z_range(100000) + 1;
        Int y = rng.get_z_range(100000) + 1;
        if (gcd(x, y) != 1) continue;
        CHECK(make_triple(x, y) == make_triple(y, x));
    }
}

TEST_CASE("quality fixtures") {
    CHECK(quality(make_triple(1, 8)) == doctest::Approx(1.2262943855).epsilon(1e-9));
    CHECK(quality(reyssat()) == doctest::Approx(1.6299116829).epsilon(1e-9));
    CHECK(quality(make_triple(1, 2)) == doctest::Approx(std::log(3) / std::log(6)).epsilon(1e-12));
}

TEST_CASE("quality_lower_bound") {
    AbcTriple t = make_triple(1, 8);
    CHECK(quality_lower_bound(t, 6) == doctest::Approx(quality(t)).epsilon(1e-12));
    CHECK(quality_lower_bound(t, 9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(quality_lower_bound(t, 1), DomainError);
}

TEST_CASE("merit") {
    AbcTriple t = make_triple(1, 8);
    const double q = std::log(9.0) / std::log(6.0);
    const double expected = (q - 1) * (q - 1) * std::log(6.0) * std::log(std::log(6.0));
    CHECK(merit(t) == doctest::Approx(expected).epsilon(1e-9));
    CHECK_THROWS_AS(merit(make_triple(1, 1)), DomainError);  // R = 2 too small
}

TEST_CASE("vector quality") {
    VectorQuality v = vector_quality(make_triple(1, 8));
    CHECK(v.alpha == 0.0);
    CHECK(v.beta == doctest::Approx(std::log(2) / std::log(9)).epsilon(1e-12));
    CHECK(v.gamma == doctest::Approx(std::log(3) / std::log(9)).epsilon(1e-12));
    CHECK(v.gamma == doctest::Approx(0.5).epsilon(1e-12));

    VectorQuality w = vector_quality(make_triple(1, 2));
    CHECK(w.alpha == 0.0);
    CHECK(w.beta == doctest::Approx(std::log(2) / std::log(3)).epsilon(1e-12));
    CHECK(w.gamma == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hit iff quality > 1 iff vector components sum below 1") {
    for (const AbcTriple& t : exhaustive::oracle_enumerate(500)) {
        CHECK(quality(t) > 1.0);
        CHECK(vector_quality(t).sum() < 1.0);
    }
    // non-hits point the other way
    AbcTriple t = make_triple(3, 4);  // R(84) = 42 > 7
    CHECK(quality(t) < 1.0);
    CHECK(vector_quality(t).sum() > 1.0);
}

TEST_CASE("radical multiplicative across 1000 random valid triples") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(424242ul);
    int done = 0;
    while (done < 1000) {
        Int x = rng.get_z_range(Int(1000000)) + 1;
        Int y = rng.get_z_range(Int(1000000)) + 1;
        if (gcd(x, y) != 1) continue;
        ++done;
        AbcTriple t = make_triple(x, y);
        CHECK(arith::radical(t.a) * arith::radical(t.b) * arith::radical(t.c) ==
              arith::radical(t.a * t.b * t.c));
    }
}

TEST_CASE("conjecture version predicates") {
    AbcTriple t = make_triple(1, 8);
    CHECK(conjecture_exception(t, 5, 0.2));
    CHECK(!conjecture_exception(t, 5, 0.3));
    // version 2: c > R^(1+eps); ln9 = 2.197 against (1+eps) ln6
    CHECK(conjecture_exception(t, 2, 0.2));
    CHECK(!conjecture_exception(t, 2, 0.3));
    // version 1: R < c^(1-eps); ln6 = 1.792 against (1-eps) ln9
    CHECK(conjecture_exception(t, 1, 0.15));
    CHECK(!conjecture_exception(t, 1, 0.2));
    // R(abc) >= c: never a version-1 exception
    AbcTriple u = make_triple(1, 2);  // R = 6 >= 3
    for (double eps : {0.01, 0.1, 0.5, 0.9})
        CHECK(!conjecture_exception(u, 1, eps));
    CHECK_THROWS_AS(conjecture_exception(t, 3, 0.1), DomainError);
    CHECK_THROWS_AS(conjecture_exception(t, 5, 0.0), DomainError);
}

TEST_CASE("baker bound") {
    AbcTriple t = make_triple(1, 8);
    // min over pairwise products, by brute force: w(8)=1, w(9)=1, w(72)=2
    CHECK(arith::omega(t.a * t.b) == 1);
    CHECK(arith::omega(t.a * t.c) == 1);
    CHECK(arith::omega(t.b * t.c) == 2);
    BoundEval e = baker_bound(t, 0.5, 1.0);
    // rhs = eps^(-K1*1) R^(1.5) = 2 * 6^1.5
    CHECK(e.rhs_log == doctest::Approx(std::log(2.0 * std::pow(6.0, 1.5))).epsilon(1e-9));
    CHECK(e.holds);  // 9 < 29.39
}

TEST_CASE("granville bound") {
    AbcTriple t = make_triple(1, 8);
    BoundEval e = granville_bound(t, 1.0);
    CHECK(e.rhs_log == doctest::Approx(std::log(6.0)).epsilon(1e-12));  // 1^5 * 6
    CHECK(!e.holds);                                                    // 9 > 6
    BoundEval e2 = granville_bound(t, 2.0);                             // 2^5 * 6 = 192
    CHECK(e2.rhs_log == doctest::Approx(std::log(192.0)).epsilon(1e-12));
    CHECK(e2.holds);
}

TEST_CASE("rst bound") {
    AbcTriple r = reyssat();
    BoundEval e = rst_bound(r, 0.0);
    CHECK(e.rhs_log > ln(Int(15042)));  // rhs exceeds R itself
    CHECK(e.holds);
    CHECK_THROWS_AS(rst_bound(make_triple(1, 1), 0.0), DomainError);  // R = 2
}

TEST_CASE("st quality floor") {
    AbcTriple t = make_triple(1, 8);
    const double lc = std::log(9.0);
    CHECK(st_quality_floor(t, 1.0) ==
          doctest::Approx(1 + 3.0 / (std::sqrt(lc) * std::log(lc))).epsilon(1e-12));
}

TEST_CASE("make_report exact and bound-verified paths") {
    TripleReport r = make_report(make_triple(1, 8), "test");
    CHECK(r.radical == Int(6));
    CHECK(!r.radical_bound);
    CHECK(r.is_hit);
    CHECK(*r.quality == doctest::Approx(1.22629438).epsilon(1e-7));
    CHECK(r.factors.complete());

    // starve the factorizer: bound path engages
    Int p = 1000000000000000003, q = 1000000000000000031;
    arith::FactorConfig starved{100, 10, 65536};
    AbcTriple big = make_triple(1, p * q - 1);
    TripleReport rb = make_report(big, "test", starved);
    CHECK(!rb.radical);
    CHECK(rb.radical_bound);
    CHECK(*rb.radical_bound >= p * q);
    CHECK(rb.quality_lower_bound);
}

}  // TEST_SUITE
