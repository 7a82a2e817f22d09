#include "tcs/basis.hpp"

#include <functional>

#include "tcs/errors.hpp"

namespace tcs {

namespace {

// Walks occupations of levels n-1..1 (0-based), highest level outermost and
// ascending, which realizes the documented lexicographic order. The callback
// receives the complete occupation vector with n_0 already filled in.
void walk_occupations(int n_levels, int n_atoms, const std::function<void(const std::vector<int>&)>& emit)
{
    std::vector<int> occ(static_cast<std::size_t>(n_levels), 0);
    std::function<void(int, int)> descend = [&](int level, int used) {
        if (level == 0) {
            occ[0] = n_atoms - used;
            emit(occ);
            return;
        }
        for (int k = 0; k <= n_atoms - used; ++k) {
            occ[static_cast<std::size_t>(level)] = k;
            descend(level - 1, used + k);
        }
        occ[static_cast<std::size_t>(level)] = 0;
    };
    descend(n_levels - 1, 0);
}

int weighted_sum(const std::vector<int>& lambda, const std::vector<int>& occ)
{
    int s = 0;
    for (std::size_t k = 0; k < occ.size(); ++k)
        s += lambda[k] * occ[k];
    return s;
}

} // namespace

SectorBasis::SectorBasis(Configuration config, int n_atoms, int excitations)
    : config_(std::move(config)), n_atoms_(n_atoms), excitations_(excitations)
{
    config_.validate();
    if (n_atoms_ < 1)
        throw ConfigError("the sector needs at least one atom");
    if (excitations_ < 0)
        return; // empty sector
    walk_occupations(config_.n_levels, n_atoms_, [&](const std::vector<int>& occ) {
        const int nu = excitations_ - weighted_sum(config_.excitation_weight, occ);
        if (nu < 0)
            return;
        index_.emplace(occ, kets_.size());
        kets_.push_back(BasisKet{nu, occ});
    });
}

std::optional<std::size_t> SectorBasis::find(std::span<const int> occupation, int photons) const
{
    const std::vector<int> key(occupation.begin(), occupation.end());
    const auto it = index_.find(key);
    if (it == index_.end())
        return std::nullopt;
    if (kets_[it->second].photons != photons)
        return std::nullopt;
    return it->second;
}

std::size_t sector_dimension(const Configuration& config, int n_atoms, int excitations)
{
    config.validate();
    if (n_atoms < 1)
        throw ConfigError("the sector needs at least one atom");
    if (excitations < 0)
        return 0;
    std::size_t count = 0;
    walk_occupations(config.n_levels, n_atoms, [&](const std::vector<int>& occ) {
        if (weighted_sum(config.excitation_weight, occ) <= excitations)
            ++count;
    });
    return count;
}

std::vector<std::vector<int>> enumerate_occupations(int n_levels, int n_atoms)
{
    std::vector<std::vector<int>> out;
    walk_occupations(n_levels, n_atoms, [&](const std::vector<int>& occ) { out.push_back(occ); });
    return out;
}

} // namespace tcs
