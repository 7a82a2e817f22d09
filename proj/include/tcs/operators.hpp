// operators.hpp — Hamiltonian, photon parity, and observables on a sector
#pragma once

#include "tcs/basis.hpp"
#include "tcs/sym_matrix.hpp"

namespace tcs {

// Result of applying a matter operator A_kl to a single ket.
struct MatterAction {
    double amplitude = 0.0; // 0 when the source level is empty
    BasisKet image;         // meaningful only when amplitude != 0
};

// Totally symmetric representation: A_kl moves one atom from level l to
// level k with amplitude sqrt((n_k + 1) * n_l); A_kk is diagonal with
// eigenvalue n_k. Photon number is untouched.
MatterAction matter_element(int k, int l, const BasisKet& ket);

// H = H_D + H_int on the sector:
//   H[b][b]    = field_freq * nu_b + sum_k omega_k n_k(b)
//   H[a][b]    = -(mu_kl / sqrt(Na)) sqrt(nu_b + 1) sqrt((n_k+1) n_l)
// for the ket a reached from b by emitting one photon and dropping one atom
// from level l to level k, per allowed coupling (k, l). Every coupling must
// conserve the excitation number (lambda_l - lambda_k == 1); violating
// couplings are rejected with ConfigError. Throws on an empty basis.
SymMatrix build_hamiltonian(const SectorBasis& basis);

// Photon parity P = exp(i pi nu): diagonal with entries (-1)^nu. P*P = I.
SymMatrix build_parity(const SectorBasis& basis);

struct ObservableSpec {
    enum class Kind { LevelPopulation, LevelPopulationSquared, OffDiagonal };
    Kind kind = Kind::LevelPopulation;
    int i = 0; // populated level, or the upper level of the off-diagonal pair
    int j = 0; // lower level of the off-diagonal pair (i > j)

    static ObservableSpec level_population(int k) { return {Kind::LevelPopulation, k, 0}; }
    static ObservableSpec level_population_squared(int k) { return {Kind::LevelPopulationSquared, k, 0}; }
    // a A_ij + a^dag A_ji; requires lambda_i - lambda_j == 1 so the operator
    // stays inside the sector
    static ObservableSpec off_diagonal(int i, int j) { return {Kind::OffDiagonal, i, j}; }
};

// Population observables are diagonal (n_k, n_k^2). The off-diagonal
// observable has elements sqrt(nu_b) sqrt((n_i+1) n_j) between a ket and its
// photon-absorbing image, mirrored symmetrically. Specs that would map out
// of the sector are rejected with ConfigError.
SymMatrix build_observable(const SectorBasis& basis, const ObservableSpec& spec);

} // namespace tcs
