#pragma once

#include <stdexcept>
#include <string>

namespace evp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-core
struct DivisionByZero : Error { explicit DivisionByZero(const std::string& m = "division by zero") : Error(m) {} };
struct InexactDivision : Error { explicit InexactDivision(const std::string& m = "inexact division") : Error(m) {} };
struct ZeroFunction : Error { explicit ZeroFunction(const std::string& m = "zero function") : Error(m) {} };

// tsystem / lattice
struct InvalidIndex : Error { explicit InvalidIndex(const std::string& m = "invalid lattice index") : Error(m) {} };
struct SizeBound : Error { explicit SizeBound(const std::string& m = "size bound exceeded") : Error(m) {} };
struct ParityError : Error { explicit ParityError(const std::string& m = "|k| must be even") : Error(m) {} };
struct MZeroRequired : Error { explicit MZeroRequired(const std::string& m = "m = 0 required") : Error(m) {} };
struct MissingDependency : Error { explicit MissingDependency(const std::string& m = "missing dependency") : Error(m) {} };
struct ZeroDivisor : Error { explicit ZeroDivisor(const std::string& m = "zero divisor") : Error(m) {} };
struct NonPolynomial : Error { explicit NonPolynomial(const std::string& m = "nonpolynomial result") : Error(m) {} };
struct Unreachable : Error { explicit Unreachable(const std::string& m = "cell unreachable") : Error(m) {} };
struct FormatError : Error { explicit FormatError(const std::string& m = "bad file format") : Error(m) {} };

// painleve
struct DegenerateState : Error { explicit DegenerateState(const std::string& m = "degenerate state") : Error(m) {} };

// modnum
struct DomainError : Error { explicit DomainError(const std::string& m = "domain error") : Error(m) {} };
struct NearSingularSample : Error { explicit NearSingularSample(const std::string& m = "near-singular sample") : Error(m) {} };
struct PrecisionExhausted : Error { explicit PrecisionExhausted(const std::string& m = "precision exhausted") : Error(m) {} };

} // namespace evp
