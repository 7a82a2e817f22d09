#include "tcs/sym_matrix.hpp"

#include <cassert>
#include <cmath>
#include <ostream>

#include "tcs/kernels.hpp"

namespace tcs {

double SymMatrix::max_abs() const
{
    double m = 0.0;
    for (double e : entries_)
        m = std::max(m, std::abs(e));
    return m;
}

double SymMatrix::frobenius_norm() const
{
    const auto& k = kernels::active_backend();
    return std::sqrt(k.dot(entries_.data(), entries_.data(), entries_.size()));
}

double SymMatrix::trace() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        t += entries_[i * dim_ + i];
    return t;
}

void SymMatrix::write_text(std::ostream& os) const
{
    os << dim_ << '\n';
    os.precision(17);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j)
            os << entries_[i * dim_ + j] << (j + 1 == dim_ ? '\n' : ' ');
    }
}

void multiply(const SymMatrix& a, std::span<const double> x, std::span<double> y)
{
    assert(x.size() == a.dim() && y.size() == a.dim());
    kernels::active_backend().gemv(a.data(), a.dim(), x.data(), y.data());
}

double expectation(const SymMatrix& a, std::span<const double> v)
{
    std::vector<double> av(a.dim());
    multiply(a, v, av);
    return kernels::active_backend().dot(v.data(), av.data(), v.size());
}

} // namespace tcs
