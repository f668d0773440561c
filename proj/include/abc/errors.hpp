#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abc/numbers.hpp"

namespace abc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A cofactor resisted every splitting attempt within the configured budget.
// `cofactor` is composite; the factors found so far are still usable for bounds.
struct FactorizationIncomplete : Error {
    Int cofactor;
    FactorizationIncomplete(Int c, const std::string& what)
        : Error(what), cofactor(std::move(c)) {}
};

struct ResourceLimit : Error {
    using Error::Error;
};

struct NotCoprime : Error {
    Int common;
    NotCoprime(Int g, const std::string& what) : Error(what), common(std::move(g)) {}
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct NotOddPrime : Error {
    using Error::Error;
};

struct PerfectPower : Error {
    using Error::Error;
};

struct SeedNotOnCurve : Error {
    using Error::Error;
};

struct MapsToInfinity : Error {
    using Error::Error;
};

struct PrecisionInsufficient : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct DegenerateConstantTriple : Error {
    using Error::Error;
};

struct ZeroEntry : Error {
    using Error::Error;
};

struct NonIntegralCoefficient : Error {
    using Error::Error;
};

struct VanishingSubsum : Error {
    std::vector<size_t> witness;  // indices of a proper subset summing to zero
    VanishingSubsum(std::vector<size_t> w, const std::string& what)
        : Error(what), witness(std::move(w)) {}
};

struct StoreCorrupt : Error {
    size_t line = 0;
    StoreCorrupt(size_t ln, const std::string& what) : Error(what), line(ln) {}
};

}  // namespace abc
