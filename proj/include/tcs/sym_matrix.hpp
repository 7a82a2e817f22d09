// sym_matrix.hpp — dense real symmetric matrix
//
// Symmetry is enforced structurally: set() and add() write both triangles
// from the same value, so entries(i,j) == entries(j,i) holds exactly.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace tcs {

class SymMatrix {
public:
    explicit SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, double value)
    {
        entries_[i * dim_ + j] = value;
        entries_[j * dim_ + i] = value;
    }

    void add(std::size_t i, std::size_t j, double value)
    {
        entries_[i * dim_ + j] += value;
        if (i != j)
            entries_[j * dim_ + i] = entries_[i * dim_ + j];
    }

    // row-major storage
    const double* data() const { return entries_.data(); }

    double max_abs() const;
    double frobenius_norm() const;
    double trace() const;

    // Debugging dump: dimension header followed by one row per line.
    // Not a stability contract.
    void write_text(std::ostream& os) const;

private:
    std::size_t dim_;
    std::vector<double> entries_;
};

// y = A*x, through the active kernel backend
void multiply(const SymMatrix& a, std::span<const double> x, std::span<double> y);

// v^T A v
double expectation(const SymMatrix& a, std::span<const double> v);

} // namespace tcs
