#include "abc/lllsearch.hpp"

#include <algorithm>
#include <set>

namespace abc::lll {

namespace {

Rat dot_zq(const IntVector& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
    return acc;
}

Rat dot_qq(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Int round_rat(const Rat& q) {
    // nearest integer, ties toward +infinity; exactness is all that matters here
    Int num = q.get_num(), den = q.get_den();
    Int two_num = 2 * num + den;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), two_num.get_mpz_t(), Int(2 * den).get_mpz_t());
    return r;
}

struct GramSchmidt {
    std::vector<std::vector<Rat>> ortho;
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> norm2;
};

GramSchmidt gram_schmidt(const std::vector<IntVector>& rows) {
    const size_t n = rows.size();
    GramSchmidt g;
    g.ortho.resize(n);
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    g.norm2.resize(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> w(rows[i].size());
        for (size_t c = 0; c < rows[i].size(); ++c) w[c] = Rat(rows[i][c]);
        for (size_t j = 0; j < i; ++j) {
            g.mu[i][j] = dot_zq(rows[i], g.ortho[j]) / g.norm2[j];
            for (size_t c = 0; c < w.size(); ++c) w[c] -= g.mu[i][j] * g.ortho[j][c];
        }
        g.ortho[i] = std::move(w);
        g.norm2[i] = dot_qq(g.ortho[i], g.ortho[i]);
        if (g.norm2[i] == 0) throw DegenerateInput("lll_reduce: linearly dependent basis");
    }
    return g;
}

}  // namespace

IntegerLatticeBasis kernel_basis(const Int& r, const Int& s, const Int& t) {
    if (r == 0 || s == 0 || t == 0) throw DegenerateInput("kernel_basis: zero coefficient");
    if (r < 0 || s < 0 || t < 0) throw DomainError("kernel_basis: coefficients must be positive");
    if (gcd(gcd(r, s), t) != 1) throw DomainError("kernel_basis: gcd(r,s,t) must be 1");

    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    // b1 spans the kernel vectors with zero third coordinate; b2 steps the
    // third coordinate by gcd(r,s), the smallest achievable stride.
    IntegerLatticeBasis b;
    b.rows.push_back({s / g, -r / g, Int(0)});
    b.rows.push_back({-t * x, -t * y, g});
    return b;
}

Int gram_determinant(const IntegerLatticeBasis& b) {
    const size_t n = b.rows.size();
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (size_t c = 0; c < b.rows[i].size(); ++c) acc += b.rows[i][c] * b.rows[j][c];
            gram[i][j] = acc;
        }
    // Bareiss elimination on the (small) Gram matrix
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rat(gram[i][j]);
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t rr = col + 1; rr < n; ++rr) {
            Rat f = m[rr][col] / m[col][col];
            for (size_t cc = col; cc < n; ++cc) m[rr][cc] -= f * m[col][cc];
        }
    }
    det.canonicalize();
    return det.get_num();  // Gram determinant of integer vectors is integral
}

LLLResult lll_reduce(const IntegerLatticeBasis& input) {
    if (input.rows.empty()) throw DegenerateInput("lll_reduce: empty basis");
    const size_t n = input.rows.size();
    LLLResult res;
    res.basis.rows = input.rows;
    res.transform.assign(n, IntVector(n, Int(0)));
    for (size_t i = 0; i < n; ++i) res.transform[i][i] = 1;

    auto& rows = res.basis.rows;
    auto& U = res.transform;
    const Rat delta(3, 4);

    size_t k = 1;
    auto g = gram_schmidt(rows);
    while (k < n) {
        for (size_t jj = k; jj-- > 0;) {
            Rat mu = g.mu[k][jj];
            Rat half(1, 2);
            if (cmp(abs(mu), half) > 0) {
                Int q = round_rat(mu);
                for (size_t c = 0; c < rows[k].size(); ++c) rows[k][c] -= q * rows[jj][c];
                for (size_t c = 0; c < n; ++c) U[k][c] -= q * U[jj][c];
                g = gram_schmidt(rows);
            }
        }
        Rat lhs = g.norm2[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
        if (cmp(lhs, rhs) >= 0) {
            ++k;
        } else {
            std::swap(rows[k], rows[k - 1]);
            std::swap(U[k], U[k - 1]);
            g = gram_schmidt(rows);
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return res;
}

std::vector<TripleReport> lll_candidates(const Int& r, const Int& s, const Int& t, long window,
                                         const arith::FactorConfig& cfg) {
    if (window < 1) throw DomainError("lll_candidates: window must be >= 1");
    auto reduced = lll_reduce(kernel_basis(r, s, t)).basis;
    const auto& b1 = reduced.rows[0];
    const auto& b2 = reduced.rows[1];
    const Int mods[3] = {r, s, t};

    std::set<AbcTriple> seen;
    std::vector<TripleReport> out;
    for (long s1 = -window; s1 <= window; ++s1) {
        for (long s2 = -window; s2 <= window; ++s2) {
            if (s1 == 0 && s2 == 0) continue;
            Int comb[3];
            bool zero = false;
            for (int i = 0; i < 3; ++i) {
                comb[i] = s1 * b1[i] + s2 * b2[i];
                if (comb[i] == 0) zero = true;
            }
            if (zero) continue;
            Int terms[3];
            for (int i = 0; i < 3; ++i) terms[i] = abs(comb[i]) * mods[i];
            std::sort(terms, terms + 3);
            // two terms of equal sign sum to the third
            if (terms[0] + terms[1] != terms[2]) continue;
            Int g = gcd(gcd(terms[0], terms[1]), terms[2]);
            AbcTriple tr = triple_from_parts(terms[0] / g, terms[1] / g, terms[2] / g);
            if (!seen.insert(tr).second) continue;
            TripleReport rep = make_report(tr, "lll", cfg);
            if (rep.is_hit) out.push_back(std::move(rep));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TripleReport& x, const TripleReport& y) { return x.triple < y.triple; });
    return out;
}

}  // namespace abc::lll
