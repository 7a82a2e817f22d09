// classical_limit.hpp — matter-only Hamiltonian of the classical-field limit
//
// For M -> infinity the field behaves classically; photon matrix elements
// reduce to a constant that the renormalization absorbs, leaving a pure
// matter Hamiltonian on the full symmetric occupation basis. Renormalized
// finite-M spectra converge to its renormalized spectrum.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcs/config.hpp"
#include "tcs/sym_matrix.hpp"

namespace tcs {

struct RenormalizedSpectrum {
    std::vector<double> levels; // in [0, 1], ascending; a single point maps to {0}
    std::string source;         // e.g. "M=20" or "limit"
};

// (E - E_0) / (E_max - E_0) per entry; input must be ascending and nonempty.
// A spectrum whose spread is zero maps to the single value 0.
RenormalizedSpectrum renormalize(std::span<const double> ascending_values, std::string source = {});

// H_lim = -(1/sqrt(Na)) sum_{(k,l)} mu_kl (A_kl + A_lk) on the occupation
// basis of enumerate_occupations(n, Na). Requires a resonant configuration.
SymMatrix build_limit_hamiltonian(const Configuration& config, int n_atoms);

struct LimitComparisonRow {
    int excitations = 0;
    std::size_t dim = 0;
    double sup_distance = 0.0; // max |finite-M renormalized - limit renormalized|
};

// Convergence table for each M in m_list. Every sector must already have
// the limit dimension; a smaller sector raises ConfigError (M too small).
std::vector<LimitComparisonRow> compare_limit(const Configuration& config, int n_atoms,
                                              std::span<const int> m_list);

} // namespace tcs
