// kernels.hpp — double-precision inner loops with runtime SIMD dispatch
//
// Scalar reference kernels are always available and define the semantics.
// Vectorized variants (AVX2/FMA on x86-64) are picked at runtime when the
// CPU supports them; every variant is equivalence-tested against the scalar
// reference. Results may differ from scalar by rounding only (FMA and
// reassociation), never in shape or ordering.
#pragma once

#include <cstddef>
#include <vector>

namespace tcs::kernels {

struct Backend {
    const char* name;
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // plane rotation: {x[i], y[i]} <- {c*x[i] - s*y[i], s*x[i] + c*y[i]}
    void (*rot)(double* x, double* y, std::size_t n, double c, double s);
    // y = A*x for a dense row-major dim x dim matrix
    void (*gemv)(const double* a, std::size_t dim, const double* x, double* y);
};

const Backend& scalar_backend();

// nullptr when the build target or the running CPU lacks AVX2+FMA.
const Backend* avx2_backend();

// All usable backends on this machine, scalar first.
std::vector<const Backend*> available_backends();

// Active backend. Defaults to the best available; the TCS_KERNELS
// environment variable ("scalar" or "avx2") overrides the default, and
// set_active_backend() overrides both.
const Backend& active_backend();
void set_active_backend(const Backend& backend);

} // namespace tcs::kernels
