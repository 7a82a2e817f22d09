#include "tcs/classical_limit.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "tcs/basis.hpp"
#include "tcs/eigensolve.hpp"
#include "tcs/errors.hpp"
#include "tcs/operators.hpp"

namespace tcs {

RenormalizedSpectrum renormalize(std::span<const double> ascending_values, std::string source)
{
    if (ascending_values.empty())
        throw ConfigError("cannot renormalize an empty spectrum");
    RenormalizedSpectrum out;
    out.source = std::move(source);
    const double lo = ascending_values.front();
    const double spread = ascending_values.back() - lo;
    if (spread <= 0.0) {
        out.levels.assign(1, 0.0);
        return out;
    }
    out.levels.reserve(ascending_values.size());
    for (double e : ascending_values)
        out.levels.push_back((e - lo) / spread);
    return out;
}

SymMatrix build_limit_hamiltonian(const Configuration& config, int n_atoms)
{
    config.validate();
    if (n_atoms < 1)
        throw ConfigError("the limit Hamiltonian needs at least one atom");
    if (!config.resonant())
        throw ConfigError("the classical-field limit requires the resonant condition");
    const auto occupations = enumerate_occupations(config.n_levels, n_atoms);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < occupations.size(); ++i)
        index.emplace(occupations[i], i);

    SymMatrix h(occupations.size());
    const double root_na = std::sqrt(static_cast<double>(n_atoms));
    for (std::size_t b = 0; b < occupations.size(); ++b) {
        BasisKet ket{0, occupations[b]};
        for (const Coupling& c : config.couplings) {
            const MatterAction hop = matter_element(c.upper, c.lower, ket);
            if (hop.amplitude == 0.0)
                continue;
            const std::size_t a = index.at(hop.image.occupation);
            h.add(a, b, -(c.strength / root_na) * hop.amplitude);
        }
    }
    return h;
}

std::vector<LimitComparisonRow> compare_limit(const Configuration& config, int n_atoms,
                                              std::span<const int> m_list)
{
    const SymMatrix h_lim = build_limit_hamiltonian(config, n_atoms);
    const EigenDecomposition lim = eigh(h_lim);
    const RenormalizedSpectrum lim_norm = renormalize(lim.values, "limit");

    std::vector<LimitComparisonRow> table;
    for (int m : m_list) {
        const SectorBasis basis(config, n_atoms, m);
        if (basis.size() != h_lim.dim()) {
            std::ostringstream msg;
            msg << "sector M = " << m << " has dimension " << basis.size()
                << " but the limit space has " << h_lim.dim() << "; increase M";
            throw ConfigError(msg.str());
        }
        const EigenDecomposition finite = eigh(build_hamiltonian(basis));
        const RenormalizedSpectrum fin_norm = renormalize(finite.values);
        double sup = 0.0;
        for (std::size_t i = 0; i < fin_norm.levels.size(); ++i)
            sup = std::max(sup, std::abs(fin_norm.levels[i] - lim_norm.levels[i]));
        table.push_back({m, basis.size(), sup});
    }
    return table;
}

} // namespace tcs
