// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace tcs {

// Invalid model input: level structure, couplings, file syntax, CLI request.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Eigensolver failed to meet its convergence contract.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A spectrum that should be mirror-symmetric is not (broken resonance or
// solver failure).
class MirrorSymmetryError : public std::runtime_error {
public:
    explicit MirrorSymmetryError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent numerical routes that must agree did not.
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tcs
