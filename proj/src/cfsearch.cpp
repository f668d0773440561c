#include "abc/cfsearch.hpp"

#include <algorithm>

namespace abc::cf {

namespace {

// sign of A*theta + B for theta = m^(1/k) irrational, exact.
int sign_lin(const Int& A, const Int& B, const Int& m, unsigned long k) {
    if (A == 0) return sgn(B);
    if (A > 0 && B >= 0) return 1;
    if (A < 0 && B <= 0) return -1;
    // opposite signs: compare |A theta| against |B| via k-th powers
    Int lhs = pow(abs(A), k) * m;
    Int rhs = pow(abs(B), k);
    const int cmp = lhs > rhs ? 1 : -1;  // equality impossible, theta irrational
    return A > 0 ? cmp : -cmp;
}

}  // namespace

CFState cf_expand(const Int& m, unsigned long k, size_t depth) {
    if (m < 2 || k < 2) throw DomainError("cf_expand: need m >= 2 and k >= 2");
    if (depth < 1) throw DomainError("cf_expand: depth must be >= 1");
    if (auto [root, exact] = arith::integer_root(m, k); exact)
        throw PerfectPower("cf_expand: " + to_string(m) + " = " + to_string(root) + "^" +
                           std::to_string(k));

    CFState st;
    st.m = m;
    st.k = k;
    Int hm1 = 1, hm2 = 0;  // convergent numerators at j-1, j-2
    Int km1 = 0, km2 = 1;  // denominators

    for (size_t j = 0; j < depth; ++j) {
        // value v = (p theta + q)/(r theta + s); find floor(v) by doubling
        // then bisecting on the predicate v >= n.
        const int den_sign = sign_lin(st.r, st.s, m, k);
        auto at_least = [&](const Int& n) {
            const int num_sign = sign_lin(st.p - n * st.r, st.q - n * st.s, m, k);
            return num_sign == den_sign;
        };
        Int hi = 1;
        while (at_least(hi)) hi <<= 1;
        Int lo = hi >> 1;  // v >= lo held (or lo == 0 for the initial a_0 >= 1 case)
        while (lo + 1 < hi) {
            Int mid = (lo + hi) >> 1;
            if (at_least(mid))
                lo = mid;
            else
                hi = mid;
        }
        const Int a = lo;

        st.partial_quotients.push_back(a);
        Int h = a * hm1 + hm2;
        Int kq = a * km1 + km2;
        st.convergents.emplace_back(h, kq);
        hm2 = hm1;
        hm1 = h;
        km2 = km1;
        km1 = kq;

        // invert: v' = 1/(v - a)
        Int np = st.r, nq = st.s;
        Int nr = st.p - a * st.r, ns = st.q - a * st.s;
        st.p = np;
        st.q = nq;
        st.r = nr;
        st.s = ns;
    }
    return st;
}

std::vector<TripleReport> cf_candidates(const CFState& st, const Int& threshold,
                                        const arith::FactorConfig& cfg) {
    if (threshold < 1) throw DomainError("cf_candidates: threshold must be >= 1");
    std::vector<TripleReport> out;
    for (size_t j = 0; j + 1 < st.partial_quotients.size(); ++j) {
        if (st.partial_quotients[j + 1] < threshold) continue;
        const auto& [p, q] = st.convergents[j];
        Int big = st.m * pow(q, st.k);
        Int pk = pow(p, st.k);
        Int diff = abs(big - pk);
        if (diff == 0) continue;  // cannot happen for irrational theta
        Int g = gcd(gcd(diff, big), pk);
        Int t0 = diff / g, t1 = big / g, t2 = pk / g;
        if (t1 > t2) std::swap(t1, t2);
        if (t0 > t1) std::swap(t0, t1);
        if (t1 > t2) std::swap(t1, t2);
        out.push_back(make_report(triple_from_parts(t0, t1, t2), "cf", cfg));
    }
    return out;
}

}  // namespace abc::cf
