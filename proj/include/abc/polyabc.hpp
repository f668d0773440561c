#pragma once

#include <string>
#include <vector>

#include "abc/errors.hpp"
#include "abc/numbers.hpp"

namespace abc::poly {

// Dense polynomial over the rationals, coefficients ascending, trimmed.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly from_string(const std::string& comma_separated);  // "1/2,0,3" = 1/2 + 3x^2

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly monic() const;
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    std::string str() const;

  private:
    std::vector<Rat> coeffs_;
    void trim();
};

Poly poly_gcd(const Poly& f, const Poly& g);  // monic
Poly poly_derivative(const Poly& f);

// deg f - deg gcd(f, f'): the number of distinct complex roots.
long poly_radical_degree(const Poly& f);  // throws ZeroPolynomial

struct MasonStothersVerdict {
    long max_degree;
    long radical_degree;  // deg R(abc) = sum of the three radical degrees
    bool holds;           // max_degree <= radical_degree - 1
};

// Requires a + b = c, pairwise coprime, not all constant. A false verdict
// would contradict the theorem, so tests treat it as failure.
MasonStothersVerdict mason_stothers_check(const Poly& a, const Poly& b, const Poly& c);

}  // namespace abc::poly
