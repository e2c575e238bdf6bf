// Error types shared across the library.
//
// domain_error covers results that are mathematically impossible for the
// given input (a matrix outside the algebra, an unrealizable spectrum);
// callers that map errors to exit codes treat these separately from
// usage-level failures such as dimension mismatches.

#pragma once

#include <stdexcept>
#include <string>

namespace wtg {

// Base for errors that are properties of the input data, not of its shape.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix is not the Laplacian of any weighted threshold graph.
class not_in_algebra : public domain_error {
public:
    explicit not_in_algebra(const std::string& detail)
        : domain_error("NotInAlgebra: " + detail) {}
};

// No weight vector over the given alphabet has the given spectrum.
class not_realizable : public domain_error {
public:
    explicit not_realizable(const std::string& detail)
        : domain_error("NotRealizable: " + detail) {}
};

// A single-value alphabet admits no affine normalization onto [-1, 1].
class normalization_undefined : public domain_error {
public:
    explicit normalization_undefined(const std::string& detail)
        : domain_error("NormalizationUndefined: " + detail) {}
};

// Input exceeds a hard size cap (brute-force isomorphism, n > 8).
class size_limit_error : public std::invalid_argument {
public:
    explicit size_limit_error(const std::string& detail)
        : std::invalid_argument(detail) {}
};

// The Jacobi sweep failed to converge; for symmetric input this signals a
// defect, not a property of the data.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& detail)
        : std::runtime_error(detail) {}
};

class dimension_mismatch : public std::invalid_argument {
public:
    explicit dimension_mismatch(const std::string& detail)
        : std::invalid_argument(detail) {}
};

} // namespace wtg
