#include "abc/stsearch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "abc/arith.hpp"
#include "abc/bigfloat.hpp"

namespace abc::st {

SearchResult st_search(unsigned r, const Int& X, unsigned k, const arith::FactorConfig& cfg) {
    if (r < 1 || X < 3 || k < 1) throw DomainError("st_search: need r >= 1, X >= 3, k >= 1");

    std::vector<Int> primes;  // first r odd primes; 2 stays out so 2^k lives in u - v
    for (uint32_t p : arith::primes_up_to(1u << 20)) {
        if (p == 2) continue;
        primes.push_back(p);
        if (primes.size() == r) break;
    }
    if (primes.size() < r) throw DomainError("st_search: r too large");

    SearchResult res;
    auto friables = arith::friable_numbers(primes, X);
    res.friable_count = friables.size();

    const Int modulus = Int(1) << k;
    std::map<Int, std::vector<Int>> buckets;
    for (const Int& u : friables) buckets[u % modulus].push_back(u);

    std::set<AbcTriple> seen;
    for (auto& [residue, members] : buckets) {
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                const Int& v = members[i];
                const Int& u = members[j];
                if (!mpz_divisible_p(Int(u - v).get_mpz_t(), modulus.get_mpz_t()))
                    throw Error("st_search: bucket residues out of sync");
                ++res.pair_count;
                Int g = gcd(u, v);
                AbcTriple t = triple_from_parts((u - v) / g, v / g, u / g);
                if (!seen.insert(t).second) continue;
                TripleReport rep = make_report(t, "st(k=" + std::to_string(k) + ")", cfg);
                if (rep.is_hit) res.hits.push_back(std::move(rep));
            }
        }
    }
    std::sort(res.hits.begin(), res.hits.end(),
              [](const TripleReport& x, const TripleReport& y) { return x.triple < y.triple; });
    return res;
}

bool st_quality_check(const AbcTriple& t, double delta, const arith::FactorConfig& cfg) {
    if (delta <= 0 || delta >= 4) throw DomainError("st_quality_check: need 0 < delta < 4");
    Int R = arith::radical(t.a, cfg) * arith::radical(t.b, cfg) * arith::radical(t.c, cfg);
    if (R < 16) throw DomainError("st_quality_check: radical too small for iterated logs");
    const double lr = ln(R);
    return ln(t.c) > lr + (4 - delta) * std::sqrt(lr) / std::log(lr);
}

uint64_t count_radical_bounded(uint64_t M, double alpha, uint64_t memory_budget_bytes) {
    if (M < 2) throw DomainError("count_radical_bounded: M must be >= 2");
    if (!(alpha > 0) || alpha > 1) throw DomainError("count_radical_bounded: need 0 < alpha <= 1");
    const uint64_t limit = 2 * M - 1;
    auto sieve = arith::build_sieves(limit, memory_budget_bytes);
    const double threshold = std::pow(double(M), alpha);
    uint64_t count = 1;  // n = 1 has radical 1
    for (uint64_t n = 2; n <= limit; ++n)
        if (double(sieve.radical_of(n)) <= threshold) ++count;
    return count;
}

double simplex_volume_estimate(const std::vector<Int>& primes, const Int& X) {
    if (primes.empty()) throw DomainError("simplex_volume_estimate: no primes");
    for (const Int& p : primes)
        if (p >= X) throw DomainError("simplex_volume_estimate: X must exceed every prime");
    double vol = 1.0;
    const double lx = ln(X);
    for (size_t i = 0; i < primes.size(); ++i) vol *= lx / double(i + 1);
    for (const Int& p : primes) vol /= ln(p);
    return vol;
}

}  // namespace abc::st
