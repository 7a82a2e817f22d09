// mirror.hpp — mirror symmetry of resonant spectra about E = Omega*M
//
// Under the resonant condition the photon parity operator P maps each
// eigenstate of energy E to an eigenstate of energy 2*Omega*M - E, so the
// spectrum reflects about the center; states at the center are their own
// image and carry definite parity.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcs/basis.hpp"
#include "tcs/eigensolve.hpp"
#include "tcs/sym_matrix.hpp"

namespace tcs {

struct MirrorReport {
    double center = 0.0;
    // (index_minus, index_plus): values[minus] + values[plus] == 2*center
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    // indices with |value - center| <= tol_zero; each carries |<P>| = 1
    std::vector<std::size_t> self_mirror;
    std::vector<double> parity_expectation; // <psi|P|psi> per eigenstate
    int zero_count_numeric = 0;             // == self_mirror.size()
    // closed-form count when the configuration is one of the named three
    std::optional<int> zero_count_formula;
};

// Pairs the spectrum about `center`, verifies per eigenvector that P|v> is
// an eigenvector of the reflected energy (residual <= tol), and records
// parity expectations. tol = rel_tol * max(1, ||H||_2). Throws
// MirrorSymmetryError when an eigenvalue has no reflected partner or a
// reflected-vector residual fails (broken resonance or solver failure).
MirrorReport analyze_mirror(const EigenDecomposition& decomp, const SymMatrix& hamiltonian,
                            const SymMatrix& parity, double center, double rel_tol = 1e-8);

// Number of E = Omega*M eigenstates of the named 3-level configurations,
// exact integer arithmetic, as a function of atom number and excitation
// number. Valid for any couplings with generic nonzero strengths.
int zero_energy_count_formula(BuiltinConfig which, int n_atoms, int excitations);

// Brute-force oracle for the closed form: diagonalizes the sector and counts
// center states two independent ways (energy window and parity expectation),
// which must agree. Throws ToleranceError when the two routes disagree and
// ConfigError when the configuration is not resonant.
int zero_energy_count_numeric(const SectorBasis& basis);

struct ParityCriterion {
    std::vector<bool> is_center;  // |E - center| <= tol_zero
    std::vector<bool> holds;      // per state: is_center <=> |<P>|^2 >= 1 - 1e-8
    bool all_hold = true;
    bool center_shares_parity = true; // all center states carry one parity sign
};

// The resonance criterion: a state has E = center exactly when it is a
// parity eigenstate. Degenerate center clusters must share one sign.
ParityCriterion check_parity_criterion(const EigenDecomposition& decomp, const SymMatrix& parity,
                                       double center, double rel_tol = 1e-8);

// Plain-record serialization: one line per eigenstate with
//   index  E  E_minus_center  parity_expectation  partner
// where partner is the paired eigenstate index or SELF. Floating-point
// fields carry 12 significant digits.
std::string format_mirror_report(const MirrorReport& report, const EigenDecomposition& decomp);

} // namespace tcs
