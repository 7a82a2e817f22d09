#include "tcs/mirror.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tcs/errors.hpp"
#include "tcs/kernels.hpp"
#include "tcs/operators.hpp"

namespace tcs {

namespace {

// dimensionless threshold for |<P>|^2 = 1 and sign comparisons
constexpr double kParityTol = 1e-8;

std::vector<double> apply_parity(const SymMatrix& parity, const std::vector<double>& v)
{
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = parity(i, i) * v[i];
    return w;
}

} // namespace

MirrorReport analyze_mirror(const EigenDecomposition& decomp, const SymMatrix& hamiltonian,
                            const SymMatrix& parity, double center, double rel_tol)
{
    const std::size_t d = decomp.dim;
    const double tol = rel_tol * std::max(1.0, decomp.spectral_norm());
    MirrorReport report;
    report.center = center;
    report.parity_expectation.resize(d);

    const auto& k = kernels::active_backend();
    std::vector<double> hv(d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<double> v = decomp.eigenvector(j);
        const std::vector<double> pv = apply_parity(parity, v);
        report.parity_expectation[j] = k.dot(v.data(), pv.data(), d);

        // P|v> must be an eigenvector at the reflected energy
        multiply(hamiltonian, pv, hv);
        k.axpy(-(2.0 * center - decomp.values[j]), pv.data(), hv.data(), d);
        const double residual = std::sqrt(k.dot(hv.data(), hv.data(), d));
        if (residual > tol) {
            std::ostringstream msg;
            msg << "reflected eigenvector residual " << residual << " exceeds " << tol
                << " at index " << j << " (E = " << decomp.values[j] << ", center = " << center
                << "): spectrum is not mirror-symmetric";
            throw MirrorSymmetryError(msg.str());
        }
    }

    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < d; ++j) {
        if (std::abs(decomp.values[j] - center) <= tol)
            report.self_mirror.push_back(j);
        else
            outside.push_back(j);
    }
    if (outside.size() % 2 != 0) {
        std::ostringstream msg;
        msg << outside.size() << " eigenvalues away from the center " << center
            << " cannot pair up: spectrum is not mirror-symmetric";
        throw MirrorSymmetryError(msg.str());
    }
    for (std::size_t r = 0; r < outside.size() / 2; ++r) {
        const std::size_t lo = outside[r];
        const std::size_t hi = outside[outside.size() - 1 - r];
        const double gap = std::abs(decomp.values[lo] + decomp.values[hi] - 2.0 * center);
        if (gap > tol) {
            std::ostringstream msg;
            msg << "eigenvalues " << decomp.values[lo] << " and " << decomp.values[hi]
                << " miss the reflection about " << center << " by " << gap
                << ": spectrum is not mirror-symmetric";
            throw MirrorSymmetryError(msg.str());
        }
        report.pairs.emplace_back(lo, hi);
    }
    report.zero_count_numeric = static_cast<int>(report.self_mirror.size());
    return report;
}

int zero_energy_count_formula(BuiltinConfig which, int n_atoms, int excitations)
{
    const int na = n_atoms;
    const int m = excitations;
    if (na < 1 || m < 0)
        throw ConfigError("counting needs n_atoms >= 1 and excitations >= 0");
    switch (which) {
    case BuiltinConfig::Xi:
        if (m % 2 == 0)
            return m <= na ? m / 2 + 1 : na / 2 + 1;
        if (m <= na)
            return 0;
        if (m < 2 * na)
            return (m - na) / 2 + (na % 2 == 0 ? 1 : 0);
        return na / 2 + 1;
    case BuiltinConfig::Lambda:
        if (m % 2 == 0)
            return m <= na ? na - m / 2 + 1 : na / 2 + 1;
        return m <= na ? m / 2 + 1 : na / 2 + 1;
    case BuiltinConfig::V:
        return m <= na ? m / 2 + 1 : na / 2 + 1;
    }
    throw ConfigError("unknown configuration");
}

int zero_energy_count_numeric(const SectorBasis& basis)
{
    if (!basis.config().resonant())
        throw ConfigError("zero-energy counting requires the resonant condition");
    if (basis.empty())
        return 0;
    const SymMatrix h = build_hamiltonian(basis);
    const SymMatrix p = build_parity(basis);
    const EigenDecomposition decomp = eigh(h);
    const double center = basis.config().field_freq * basis.excitations();
    const double tol_zero = 1e-8 * std::max(1.0, decomp.spectral_norm());

    const auto& k = kernels::active_backend();
    int by_energy = 0;
    int by_parity = 0;
    for (std::size_t j = 0; j < decomp.dim; ++j) {
        if (std::abs(decomp.values[j] - center) <= tol_zero)
            ++by_energy;
        const std::vector<double> v = decomp.eigenvector(j);
        const std::vector<double> pv = apply_parity(p, v);
        if (std::abs(k.dot(v.data(), pv.data(), decomp.dim)) >= 1.0 - kParityTol)
            ++by_parity;
    }
    if (by_energy != by_parity) {
        std::ostringstream msg;
        msg << "center-state count disagrees between the energy window (" << by_energy
            << ") and the parity expectation (" << by_parity << ") for Na = " << basis.n_atoms()
            << ", M = " << basis.excitations();
        throw ToleranceError(msg.str());
    }
    return by_energy;
}

ParityCriterion check_parity_criterion(const EigenDecomposition& decomp, const SymMatrix& parity,
                                       double center, double rel_tol)
{
    const std::size_t d = decomp.dim;
    const double tol_zero = rel_tol * std::max(1.0, decomp.spectral_norm());
    const auto& k = kernels::active_backend();
    ParityCriterion result;
    result.is_center.resize(d);
    result.holds.resize(d);
    double first_center_sign = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<double> v = decomp.eigenvector(j);
        const std::vector<double> pv = apply_parity(parity, v);
        const double expectation = k.dot(v.data(), pv.data(), d);
        const bool is_center = std::abs(decomp.values[j] - center) <= tol_zero;
        const bool parity_definite = expectation * expectation >= 1.0 - kParityTol;
        result.is_center[j] = is_center;
        result.holds[j] = (is_center == parity_definite);
        if (!result.holds[j])
            result.all_hold = false;
        if (is_center) {
            if (first_center_sign == 0.0)
                first_center_sign = expectation >= 0.0 ? 1.0 : -1.0;
            else if (expectation * first_center_sign < 0.0)
                result.center_shares_parity = false;
        }
    }
    return result;
}

std::string format_mirror_report(const MirrorReport& report, const EigenDecomposition& decomp)
{
    std::vector<std::string> partner(decomp.dim, "SELF");
    for (const auto& [lo, hi] : report.pairs) {
        partner[lo] = std::to_string(hi);
        partner[hi] = std::to_string(lo);
    }
    std::string out = "# index E E_minus_center parity partner\n";
    char buf[128];
    for (std::size_t j = 0; j < decomp.dim; ++j) {
        std::snprintf(buf, sizeof buf, "%zu %.12g %.12g %.12g %s\n", j, decomp.values[j],
                      decomp.values[j] - report.center, report.parity_expectation[j],
                      partner[j].c_str());
        out += buf;
    }
    return out;
}

} // namespace tcs
