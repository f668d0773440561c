#include <doctest.h>

#include "abc/bigfloat.hpp"
#include "abc/cfsearch.hpp"

using namespace abc;
using namespace abc::cf;

TEST_SUITE("cfsearch") {

TEST_CASE("fifth root of 109") {
    CFState st = cf_expand(109, 5, 6);
    CHECK(st.partial_quotients ==
          std::vector<Int>{2, 1, 1, 4, 77733, 2});
    // third convergent is 23/9
    CHECK(st.convergents[3] == std::pair<Int, Int>{23, 9});
}

TEST_CASE("classical square roots") {
    CHECK(cf_expand(2, 2, 4).partial_quotients == std::vector<Int>{1, 2, 2, 2});
    CHECK(cf_expand(5, 2, 4).partial_quotients == std::vector<Int>{2, 4, 4, 4});
}

TEST_CASE("perfect powers are rejected") {
    CHECK_THROWS_AS(cf_expand(27, 3, 4), PerfectPower);
    CHECK_THROWS_AS(cf_expand(4, 2, 4), PerfectPower);
    CHECK_THROWS_AS(cf_expand(1, 2, 4), DomainError);
}

TEST_CASE("determinant of the state never vanishes") {
    CFState st = cf_expand(7, 3, 20);
    CHECK(st.p * st.s - st.q * st.r != 0);
}

TEST_CASE("deeper expansions extend shallower ones") {
    for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 2}, {109, 5}, {7, 3}, {10, 4}}) {
        auto shallow = cf_expand(m, k, 5).partial_quotients;
        auto deep = cf_expand(m, k, 12).partial_quotients;
        CHECK(std::equal(shallow.begin(), shallow.end(), deep.begin()));
    }
}

TEST_CASE("convergents approximate to 1/(q_j q_{j+1})") {
    // the inequality at every index certifies the whole expansion
    struct Case {
        unsigned long m, k;
        size_t depth;
    };
    for (Case c : {Case{109, 5, 8}, Case{109, 5, 25}, Case{2, 2, 25}, Case{7, 3, 25},
                   Case{99, 7, 20}}) {
        CFState st = cf_expand(c.m, c.k, c.depth);
        const mpfr_prec_t bits = 4096;
        BigFloat theta = BigFloat::of(Int(c.m), bits);
        theta = (theta.log() / BigFloat::of(c.k, bits)).exp();  // m^(1/k)
        for (size_t j = 0; j + 1 < st.convergents.size(); ++j) {
            const auto& [p, q] = st.convergents[j];
            const auto& [pn, qn] = st.convergents[j + 1];
            BigFloat err = (theta - BigFloat::of(p, bits) / BigFloat::of(q, bits)).abs();
            BigFloat lim =
                BigFloat::of(1ul, bits) / (BigFloat::of(q, bits) * BigFloat::of(qn, bits));
            CHECK(err.cmp(lim) < 0);
        }
    }
}

TEST_CASE("candidates recover Reyssat's triple") {
    CFState st = cf_expand(109, 5, 6);
    auto reports = cf_candidates(st, 1000);
    REQUIRE(reports.size() == 1);  // only a_4 = 77733 clears the threshold
    const TripleReport& r = reports[0];
    CHECK(r.triple == make_triple(2, 6436341));
    CHECK(r.is_hit);
    CHECK(*r.quality == doctest::Approx(1.62991).epsilon(1e-5));
}

TEST_CASE("candidates from sqrt(2)") {
    CFState st = cf_expand(2, 2, 5);
    auto reports = cf_candidates(st, 2);
    bool found_189 = false;
    for (const auto& r : reports) {
        CHECK(r.triple.a + r.triple.b == r.triple.c);
        if (r.triple == make_triple(1, 8)) found_189 = true;
    }
    CHECK(found_189);  // convergent 3/2: |2*4 - 9| = 1
}

TEST_CASE("thresholds gate emission") {
    CFState st = cf_expand(109, 5, 6);
    CHECK(cf_candidates(st, 100000).empty());
    CHECK(cf_candidates(st, 2).size() >= 2);
}

}  // TEST_SUITE
