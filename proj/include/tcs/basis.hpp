// basis.hpp — fixed-excitation Hilbert-space sector for identical n-level atoms
//
// A sector collects every ket |nu; n_1..n_n> with
//     sum_k n_k = n_atoms            (atom number)
//     nu + sum_k lambda_k n_k = M    (total excitation number)
// for the totally symmetric matter representation (all atoms identical).
//
// Ket order is deterministic: occupations are enumerated in increasing
// lexicographic order reading (n_n, n_{n-1}, ..., n_2) as most-significant
// first digits; n_1 and the photon number are fixed by the two constraints.
#pragma once

#include <cstddef>
#include <optional>
#include <map>
#include <span>
#include <vector>

#include "tcs/config.hpp"

namespace tcs {

struct BasisKet {
    int photons = 0;             // nu >= 0
    std::vector<int> occupation; // n_k per level

    friend bool operator==(const BasisKet&, const BasisKet&) = default;
};

class SectorBasis {
public:
    // Enumerates the full sector. A negative M yields an empty basis; it is
    // not an error. Throws ConfigError on invalid config or n_atoms < 1.
    SectorBasis(Configuration config, int n_atoms, int excitations);

    const Configuration& config() const { return config_; }
    int n_atoms() const { return n_atoms_; }
    int excitations() const { return excitations_; }

    std::size_t size() const { return kets_.size(); }
    bool empty() const { return kets_.empty(); }
    const BasisKet& ket(std::size_t i) const { return kets_[i]; }
    const std::vector<BasisKet>& kets() const { return kets_; }

    // Position of the ket with these occupations and photon count;
    // nullopt when the ket lies outside the sector.
    std::optional<std::size_t> find(std::span<const int> occupation, int photons) const;

private:
    Configuration config_;
    int n_atoms_;
    int excitations_;
    std::vector<BasisKet> kets_;
    std::map<std::vector<int>, std::size_t> index_;
};

// Sector size by direct combinatorial count (no ket storage); matches
// SectorBasis::size() for the same arguments.
std::size_t sector_dimension(const Configuration& config, int n_atoms, int excitations);

// All occupation vectors (n_1..n_n) with sum = n_atoms, in the same
// lexicographic order the sector uses. This is the matter-only basis of the
// classical-field limit; its size is binomial(n_atoms + n - 1, n - 1).
std::vector<std::vector<int>> enumerate_occupations(int n_levels, int n_atoms);

} // namespace tcs
