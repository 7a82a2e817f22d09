// Scalar reference kernels. These define the semantics that the SIMD
// variants must reproduce up to rounding.

#include "tcs/kernels.hpp"

namespace tcs::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void rot_scalar(double* x, double* y, std::size_t n, double c, double s)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void gemv_scalar(const double* a, std::size_t dim, const double* x, double* y)
{
    for (std::size_t i = 0; i < dim; ++i)
        y[i] = dot_scalar(a + i * dim, x, dim);
}

} // namespace

const Backend& scalar_backend()
{
    static const Backend backend{"scalar", dot_scalar, axpy_scalar, rot_scalar, gemv_scalar};
    return backend;
}

} // namespace tcs::kernels
