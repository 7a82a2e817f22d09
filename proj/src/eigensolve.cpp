#include "tcs/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tcs/errors.hpp"
#include "tcs/kernels.hpp"

namespace tcs {

std::vector<double> EigenDecomposition::eigenvector(std::size_t j) const
{
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = vectors[i * dim + j];
    return v;
}

double EigenDecomposition::spectral_norm() const
{
    if (values.empty())
        return 0.0;
    return std::max(std::abs(values.front()), std::abs(values.back()));
}

namespace {

double off_diag_mass(const std::vector<double>& a, std::size_t d)
{
    const auto& k = kernels::active_backend();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double* row = a.data() + i * d + i + 1;
        sum += k.dot(row, row, d - i - 1);
    }
    return std::sqrt(2.0 * sum);
}

} // namespace

EigenDecomposition eigh(const SymMatrix& matrix, const JacobiOptions& options)
{
    const std::size_t d = matrix.dim();
    EigenDecomposition out;
    out.dim = d;
    if (d == 0)
        return out;

    const auto& k = kernels::active_backend();
    std::vector<double> a(matrix.data(), matrix.data() + d * d);
    std::vector<double> w(d * d, 0.0); // row j accumulates eigenvector j
    for (std::size_t i = 0; i < d; ++i)
        w[i * d + i] = 1.0;

    const double norm_f = std::sqrt(k.dot(a.data(), a.data(), a.size()));
    const double thresh = options.rel_off_tol * norm_f;
    double off = off_diag_mass(a, d);
    int sweep = 0;
    while (off > thresh) {
        if (sweep++ >= options.max_sweeps) {
            std::ostringstream msg;
            msg << "Jacobi sweep cap (" << options.max_sweeps << ") exceeded on a " << d << "x" << d
                << " matrix; off-diagonal mass " << off << " vs threshold " << thresh;
            throw SolverError(msg.str());
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = a[p * d + q];
                if (apq == 0.0)
                    continue;
                const double app = a[p * d + p];
                const double aqq = a[q * d + q];
                const double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta; // tan -> 1/(2 theta) limit, avoids theta^2 overflow
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Left rotation on rows p and q; the right rotation follows
                // from symmetry: copy columns from the rotated rows and set
                // the 2x2 block analytically (a_pq is driven exactly to 0).
                k.rot(a.data() + p * d, a.data() + q * d, d, c, s);
                a[p * d + p] = app - t * apq;
                a[q * d + q] = aqq + t * apq;
                a[p * d + q] = 0.0;
                a[q * d + p] = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    if (i == p || i == q)
                        continue;
                    a[i * d + p] = a[p * d + i];
                    a[i * d + q] = a[q * d + i];
                }

                k.rot(w.data() + p * d, w.data() + q * d, d, c, s);
            }
        }
        off = off_diag_mass(a, d);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * d + x] < a[y * d + y]; });

    out.values.resize(d);
    out.vectors.resize(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        out.values[j] = a[order[j] * d + order[j]];
        for (std::size_t i = 0; i < d; ++i)
            out.vectors[i * d + j] = w[order[j] * d + i];
    }
    return out;
}

} // namespace tcs
