#include "abc/polyabc.hpp"

#include <sstream>

namespace abc::poly {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::from_string(const std::string& s) {
    std::vector<Rat> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        coeffs.emplace_back(tok);
    }
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Poly::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> out = coeffs_;
    const Rat lead = coeffs_.back();
    for (auto& c : out) c /= lead;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<Rat> quot(rem.degree() - divisor.degree() + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const long shift = rem.degree() - divisor.degree();
        Rat f = rem.coeffs().back() / divisor.coeffs().back();
        quot[shift] = f;
        std::vector<Rat> sub(shift + divisor.coeffs().size(), Rat(0));
        for (size_t i = 0; i < divisor.coeffs().size(); ++i) sub[shift + i] = f * divisor.coeffs()[i];
        rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(quot)), rem};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].get_str();
        if (i == 1) out += "*x";
        if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth in check
    }
    if (a.is_zero()) throw ZeroPolynomial("gcd(0, 0)");
    return a.monic();
}

Poly poly_derivative(const Poly& f) {
    if (f.degree() < 1) return Poly();
    std::vector<Rat> out(f.degree());
    for (long i = 1; i <= f.degree(); ++i) out[i - 1] = f.coeffs()[i] * Rat(i);
    return Poly(std::move(out));
}

long poly_radical_degree(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("radical degree of the zero polynomial");
    if (f.degree() == 0) return 0;
    return f.degree() - poly_gcd(f, poly_derivative(f)).degree();
}

MasonStothersVerdict mason_stothers_check(const Poly& a, const Poly& b, const Poly& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw ZeroPolynomial("mason_stothers_check: zero entry");
    if (!(a + b == c)) throw DomainError("mason_stothers_check: a + b != c");
    if (a.degree() == 0 && b.degree() == 0 && c.degree() == 0)
        throw DegenerateConstantTriple("mason_stothers_check: all three constant");
    if (poly_gcd(a, b).degree() != 0 || poly_gcd(a, c).degree() != 0 ||
        poly_gcd(b, c).degree() != 0)
        throw NotCoprime(0, "mason_stothers_check: entries share a factor");

    MasonStothersVerdict v{};
    v.max_degree = std::max({a.degree(), b.degree(), c.degree()});
    v.radical_degree = poly_radical_degree(a) + poly_radical_degree(b) + poly_radical_degree(c);
    v.holds = v.max_degree <= v.radical_degree - 1;
    return v;
}

}  // namespace abc::poly
