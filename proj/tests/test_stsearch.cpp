#include <doctest.h>

#include <cmath>

#include "abc/bigfloat.hpp"
#include "abc/exhaustive.hpp"
#include "abc/stsearch.hpp"

using namespace abc;
using namespace abc::st;

TEST_SUITE("stsearch") {

TEST_CASE("hand-traced run: powers of 3 below 100 modulo 8") {
    SearchResult res = st_search(1, 100, 3);
    CHECK(res.friable_count == 5);  // 1, 3, 9, 27, 81
    std::vector<AbcTriple> triples;
    for (const auto& r : res.hits) triples.push_back(r.triple);
    CHECK(triples == std::vector<AbcTriple>{make_triple(1, 8), make_triple(1, 80)});
}

TEST_CASE("every output is a valid triple with the friable structure") {
    SearchResult res = st_search(2, 250, 4);
    auto friable = [&](Int v) {
        for (long p : {3L, 5L})
            while (v % p == 0) v /= p;
        return v == 1;
    };
    for (const auto& r : res.hits) {
        const AbcTriple& t = r.triple;
        CHECK(t.a + t.b == t.c);
        CHECK(gcd(t.a, t.b) == 1);
        CHECK(r.is_hit);
        // c and one of a, b come from the friable pair
        CHECK(friable(t.c));
        CHECK((friable(t.a) || friable(t.b)));
    }
}

TEST_CASE("pigeonhole: more friables than residues forces a pair") {
    SearchResult res = st_search(2, 1000, 3);  // plenty of friables, 8 residues
    CHECK(res.friable_count > 8);
    CHECK(res.pair_count >= 1);
}

TEST_CASE("st quality check") {
    AbcTriple reyssat = make_triple(2, pow(Int(3), 10) * 109);
    // R = 15042: lnR = 9.6187, rhs exponent (4-3.9) sqrt(lnR)/lnln R
    const double lr = std::log(15042.0);
    const double rhs = lr + 0.1 * std::sqrt(lr) / std::log(lr);
    const bool expect = std::log(6436343.0) > rhs;
    CHECK(st_quality_check(reyssat, 3.9) == expect);
    CHECK(expect);

    // R >= c: false at any delta
    AbcTriple t = make_triple(1, 15);  // R = 30 >= 16
    for (double d : {0.5, 2.0, 3.9}) CHECK(!st_quality_check(t, d));
    CHECK_THROWS_AS(st_quality_check(make_triple(1, 8), 1.0), DomainError);  // R = 6 < 16
    CHECK_THROWS_AS(st_quality_check(t, 0.0), DomainError);
    CHECK_THROWS_AS(st_quality_check(t, 4.0), DomainError);
}

TEST_CASE("st check implies the quality floor") {
    for (const AbcTriple& t : exhaustive::oracle_enumerate(5000)) {
        Int R = arith::radical(t.a * t.b * t.c);
        if (R < 16) continue;
        for (double d : {1.0, 3.0, 3.9})
            if (st_quality_check(t, d)) CHECK(quality(t) > st_quality_floor(t, d));
    }
}

TEST_CASE("count of integers with bounded radical") {
    // brute force oracle over n < 2M
    auto brute = [](uint64_t M, double alpha) {
        uint64_t cnt = 0;
        const double thr = std::pow(double(M), alpha);
        for (uint64_t n = 1; n < 2 * M; ++n)
            if (arith::radical(n).get_d() <= thr) ++cnt;
        return cnt;
    };
    CHECK(count_radical_bounded(50, 1.0) == 69);
    CHECK(count_radical_bounded(50, 1.0) == brute(50, 1.0));
    // threshold M^alpha = 2.2 keeps exactly the powers of two and 1
    const double alpha2 = std::log(2.2) / std::log(50.0);
    CHECK(count_radical_bounded(50, alpha2) == 7);  // {1, 2, 4, 8, 16, 32, 64}
    CHECK(count_radical_bounded(200, 0.7) == brute(200, 0.7));
    // monotone in alpha
    uint64_t prev = 0;
    for (double a : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        uint64_t cur = count_radical_bounded(100, a);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("count products scale like the heuristic exponent (diagnostic)") {
    // slope of ln(count(M,a) count(M,b) count(M,g)) in ln M, fitted over a
    // doubling ladder, against the predicted a+b+g+3eps shape
    const double a = 0.3, b = 0.5, g = 0.4;
    std::vector<double> xs, ys;
    for (uint64_t M : {1u << 10, 1u << 12, 1u << 14, 1u << 16}) {
        const double prod = double(count_radical_bounded(M, a)) *
                            double(count_radical_bounded(M, b)) *
                            double(count_radical_bounded(M, g));
        xs.push_back(std::log(double(M)));
        ys.push_back(std::log(prod));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double n = double(xs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    MESSAGE("fitted slope ", slope, " vs exponent sum ", a + b + g);
    WARN(slope > a + b + g - 0.5);
    WARN(slope < a + b + g + 1.0);  // 3*eps headroom
    CHECK(slope > 0);
}

TEST_CASE("simplex volume estimate") {
    CHECK(simplex_volume_estimate({Int(3)}, 81) == doctest::Approx(4.0).epsilon(1e-9));
    const double expect = std::pow(std::log(15.0), 2) / (2 * std::log(3.0) * std::log(5.0));
    CHECK(simplex_volume_estimate({Int(3), Int(5)}, 15) == doctest::Approx(expect).epsilon(1e-9));
    // exact friable counts for comparison
    CHECK(arith::friable_numbers({Int(3)}, 81).size() == 5);
    CHECK(arith::friable_numbers({Int(3), Int(5)}, 15).size() == 5);
    // the ratio tightens as X grows (diagnostic)
    double r1 = simplex_volume_estimate({Int(3), Int(5)}, 100) /
                double(arith::friable_numbers({Int(3), Int(5)}, 100).size());
    double r2 = simplex_volume_estimate({Int(3), Int(5)}, 100000) /
                double(arith::friable_numbers({Int(3), Int(5)}, 100000).size());
    WARN(std::abs(1 - r2) < std::abs(1 - r1));
    CHECK_THROWS_AS(simplex_volume_estimate({Int(3)}, 2), DomainError);
}

}  // TEST_SUITE
