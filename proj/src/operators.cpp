#include "tcs/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tcs/errors.hpp"

namespace tcs {

MatterAction matter_element(int k, int l, const BasisKet& ket)
{
    const int n = static_cast<int>(ket.occupation.size());
    if (k < 0 || k >= n || l < 0 || l >= n)
        throw ConfigError("matter operator level index out of range");
    MatterAction out;
    if (k == l) {
        out.amplitude = ket.occupation[static_cast<std::size_t>(k)];
        out.image = ket;
        return out;
    }
    const int nl = ket.occupation[static_cast<std::size_t>(l)];
    if (nl == 0)
        return out; // annihilates the ket
    const int nk = ket.occupation[static_cast<std::size_t>(k)];
    out.image = ket;
    out.image.occupation[static_cast<std::size_t>(l)] -= 1;
    out.image.occupation[static_cast<std::size_t>(k)] += 1;
    out.amplitude = std::sqrt(static_cast<double>((nk + 1) * nl));
    return out;
}

namespace {

// Accumulates w * (a A_ij + a^dag A_ji), i > j, into m. Used for both the
// interaction term (with w = -mu/sqrt(Na)) and the off-diagonal observable
// (with w = 1).
void add_excitation_hop(SymMatrix& m, const SectorBasis& basis, int i, int j, double w)
{
    const auto& lambda = basis.config().excitation_weight;
    if (lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] != 1)
        throw ConfigError("transition " + std::to_string(j + 1) + "<->" + std::to_string(i + 1) +
                          " does not conserve the total excitation number");
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const BasisKet& ket = basis.ket(b);
        if (ket.photons == 0)
            continue;
        const MatterAction hop = matter_element(i, j, ket); // absorb a photon, raise j -> i
        if (hop.amplitude == 0.0)
            continue;
        const auto a = basis.find(hop.image.occupation, ket.photons - 1);
        if (!a)
            throw std::logic_error("excitation-conserving hop left the sector");
        m.add(*a, b, w * std::sqrt(static_cast<double>(ket.photons)) * hop.amplitude);
    }
}

} // namespace

SymMatrix build_hamiltonian(const SectorBasis& basis)
{
    if (basis.empty())
        throw ConfigError("cannot build a Hamiltonian on an empty sector");
    const Configuration& config = basis.config();
    SymMatrix h(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const BasisKet& ket = basis.ket(b);
        double diag = config.field_freq * ket.photons;
        for (int k = 0; k < config.n_levels; ++k)
            diag += config.omega[static_cast<std::size_t>(k)] * ket.occupation[static_cast<std::size_t>(k)];
        h.set(b, b, diag);
    }
    const double root_na = std::sqrt(static_cast<double>(basis.n_atoms()));
    for (const Coupling& c : config.couplings)
        add_excitation_hop(h, basis, c.upper, c.lower, -c.strength / root_na);
    return h;
}

SymMatrix build_parity(const SectorBasis& basis)
{
    SymMatrix p(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        p.set(b, b, basis.ket(b).photons % 2 == 0 ? 1.0 : -1.0);
    return p;
}

SymMatrix build_observable(const SectorBasis& basis, const ObservableSpec& spec)
{
    const int n = basis.config().n_levels;
    SymMatrix m(basis.size());
    switch (spec.kind) {
    case ObservableSpec::Kind::LevelPopulation:
    case ObservableSpec::Kind::LevelPopulationSquared: {
        if (spec.i < 0 || spec.i >= n)
            throw ConfigError("population level index out of range");
        const bool squared = spec.kind == ObservableSpec::Kind::LevelPopulationSquared;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const double nk = basis.ket(b).occupation[static_cast<std::size_t>(spec.i)];
            m.set(b, b, squared ? nk * nk : nk);
        }
        break;
    }
    case ObservableSpec::Kind::OffDiagonal: {
        if (spec.i < 0 || spec.i >= n || spec.j < 0 || spec.j >= n || spec.i <= spec.j)
            throw ConfigError("off-diagonal observable needs levels i > j inside the configuration");
        add_excitation_hop(m, basis, spec.i, spec.j, 1.0);
        break;
    }
    }
    return m;
}

} // namespace tcs
