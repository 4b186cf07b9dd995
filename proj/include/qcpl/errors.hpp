#pragma once

#include <stdexcept>
#include <string>

namespace qcpl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FullyDegenerate : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegenerateSource : Error { using Error::Error; };
struct DegenerateSimplex : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct UnsupportedManifold : Error { using Error::Error; };
struct NotOnManifold : Error { using Error::Error; };
struct DimensionUnsupported : Error { using Error::Error; };
struct InjectivityRadiusExceeded : Error { using Error::Error; };
struct OutsideTube : Error { using Error::Error; };
struct NotTangent : Error { using Error::Error; };
struct OffManifold : Error { using Error::Error; };
struct ScheduleTooCoarse : Error { using Error::Error; };
struct NoRegularValue : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct CertificationFailed : Error { using Error::Error; };
struct NumericalGuard : Error { using Error::Error; };

// Parse failure carrying the 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace qcpl
