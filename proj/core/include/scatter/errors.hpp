#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace scatter {

using Cplx = std::complex<double>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("complex division by exact zero") {}
};

class PoleAtNonpositiveInteger : public Error {
public:
    explicit PoleAtNonpositiveInteger(Cplx z);
    Cplx z;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class ParameterRangeError : public Error {
public:
    using Error::Error;
};

class BranchError : public Error {
public:
    using Error::Error;
};

/// Seed construction failures. `reason` distinguishes the three refusals.
class SeedError : public Error {
public:
    enum class Reason { ClassificationBoundary, EmptyRange, Unclassified, AboveGroundState };
    SeedError(Reason reason, const std::string& what) : Error(what), reason(reason) {}
    Reason reason;
};

class ZeroWronskian : public Error {
public:
    explicit ZeroWronskian(double x);
    double x;
};

class PoleHit : public Error {
public:
    explicit PoleHit(Cplx k);
    Cplx k;
};

class UncancelledPole : public Error {
public:
    explicit UncancelledPole(Cplx k);
    Cplx k;
};

class StiffRegion : public Error {
public:
    using Error::Error;
};

class NonFlatAsymptote : public Error {
public:
    using Error::Error;
};

/// Scenario-file / CLI input problems, carrying a 1-based line when known.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line;
};

}  // namespace scatter
