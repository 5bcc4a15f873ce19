#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liouville {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct NonRationalPoles : Error {
    NonRationalPoles() : Error("denominator has roots outside the rationals") {}
    explicit NonRationalPoles(const std::string& what) : Error(what) {}
};

struct NonRationalRadicand : Error {
    NonRationalRadicand() : Error("square root of a non-rational surd sum is outside the scalar tower") {}
};

struct OddPoleOrder : Error {
    explicit OddPoleOrder(const std::string& what) : Error(what) {}
};

struct OddInfinityOrder : Error {
    explicit OddInfinityOrder(const std::string& what) : Error(what) {}
};

struct NotHeunShape : Error {
    explicit NotHeunShape(const std::string& what) : Error(what) {}
};

struct NonRationalDrift : Error {
    NonRationalDrift() : Error("sqrt(alpha)*a_hat is not a rational function of the new variable") {}
};

struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& what) : Error(what) {}
};

struct DegenerateEquation : Error {
    DegenerateEquation() : Error("xi'' = 0 is trivially solvable and outside the pole framework") {}
};

struct SurdFrequency : Error {
    explicit SurdFrequency(const std::string& what) : Error(what) {}
};

struct RhoCollapse : Error {
    explicit RhoCollapse(double t) : Error("rho <= 0 at t = " + std::to_string(t)), time(t) {}
    double time;
};

struct SingularityInInterval : Error {
    explicit SingularityInInterval(const std::string& what) : Error(what) {}
};

// position is the 0-based byte offset of the offending token.
struct SyntaxError : Error {
    SyntaxError(std::size_t pos, const std::string& expected_tokens)
        : Error("syntax error at column " + std::to_string(pos) + ": expected " + expected_tokens),
          position(pos),
          expected(expected_tokens) {}
    std::size_t position;
    std::string expected;
};

}  // namespace liouville
