#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgem {

using cplx = std::complex<double>;

// Default knobs shared between the library and the CLI.
inline constexpr std::uint64_t kDefaultSeed = 0xC0DE;
inline constexpr int kDefaultMaxQubits = 20;  // dense statevectors
inline constexpr int kHardMaxQubits = 24;     // absolute cap, behind a flag
inline constexpr double kDefaultEnumBudget = 1e8;  // sum of C(n,w)*3^w over scanned weights
inline constexpr double kDefaultKlOpBudget = 5e9;  // candidates * 2^n for KL sweeps

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched qubit counts between operands.
struct dimension_error : error {
    using error::error;
};

// Argument outside the mathematical domain of an operation.
struct domain_error : error {
    using error::error;
};

// An enumeration or allocation would exceed the configured budget.
struct resource_error : error {
    using error::error;
};

// Generators dependent / non-commuting, basis not orthonormal, etc.
struct invalid_code_error : error {
    using error::error;
};

// Caller violated a documented precondition (e.g. "P must be logical").
struct contract_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

// Something that should be impossible if the theory holds; a bug either way.
struct internal_error : error {
    using error::error;
};

}  // namespace qgem
