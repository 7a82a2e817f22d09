// eigensolve.hpp — full eigendecomposition of dense real symmetric matrices
//
// Self-contained cyclic Jacobi solver; the rotation inner loops run through
// the kernels backend. Adequate and unconditionally stable at the matrix
// sizes this project produces (a few hundred at most).
#pragma once

#include <cstddef>
#include <vector>

#include "tcs/sym_matrix.hpp"

namespace tcs {

struct EigenDecomposition {
    std::size_t dim = 0;
    std::vector<double> values;  // ascending; ties keep the rotation-sweep order
    std::vector<double> vectors; // row-major dim x dim; column j = unit eigenvector of values[j]

    // component i of eigenvector j
    double vector_component(std::size_t i, std::size_t j) const { return vectors[i * dim + j]; }
    std::vector<double> eigenvector(std::size_t j) const;

    // max(|values|): the spectral norm of the decomposed matrix
    double spectral_norm() const;
};

struct JacobiOptions {
    // stop when the off-diagonal Frobenius mass drops below rel_off_tol * ||A||_F
    double rel_off_tol = 1e-14;
    int max_sweeps = 100;
};

// Deterministic for identical input (and identical kernel backend).
// Throws SolverError when the sweep cap is exceeded.
EigenDecomposition eigh(const SymMatrix& matrix, const JacobiOptions& options = {});

} // namespace tcs
