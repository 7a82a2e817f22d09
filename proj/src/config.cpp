#include "tcs/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tcs/errors.hpp"

namespace tcs {

double Configuration::coupling_strength(int k, int l) const
{
    if (k > l)
        std::swap(k, l);
    for (const auto& c : couplings)
        if (c.lower == k && c.upper == l)
            return c.strength;
    return 0.0;
}

bool Configuration::resonant(double rel_tol) const
{
    for (int k = 0; k < n_levels; ++k) {
        const double target = excitation_weight[k] * field_freq;
        if (std::abs(omega[k] - target) > rel_tol * std::max(1.0, std::abs(target)))
            return false;
    }
    return true;
}

void Configuration::validate() const
{
    if (n_levels < 2)
        throw ConfigError("n_levels must be at least 2");
    if (static_cast<int>(omega.size()) != n_levels)
        throw ConfigError("omega must list one frequency per level");
    if (static_cast<int>(excitation_weight.size()) != n_levels)
        throw ConfigError("lambda must list one weight per level");
    if (omega[0] != 0.0)
        throw ConfigError("the lowest level frequency must be 0");
    for (int k = 1; k < n_levels; ++k)
        if (omega[k] < omega[k - 1])
            throw ConfigError("omega must be non-decreasing");
    if (excitation_weight[0] != 0)
        throw ConfigError("lambda_1 must be 0");
    for (int k = 0; k < n_levels; ++k)
        if (excitation_weight[k] < 0 || excitation_weight[k] > n_levels - 1)
            throw ConfigError("lambda values must lie in [0, n-1]");
    if (!(field_freq > 0.0))
        throw ConfigError("field_freq must be positive");
    for (std::size_t i = 0; i < couplings.size(); ++i) {
        const auto& c = couplings[i];
        if (c.lower < 0 || c.upper >= n_levels || c.lower >= c.upper)
            throw ConfigError("coupling levels must satisfy 1 <= k < l <= n");
        if (!(c.strength > 0.0))
            throw ConfigError("coupling strengths must be positive");
        for (std::size_t j = i + 1; j < couplings.size(); ++j)
            if (couplings[j].lower == c.lower && couplings[j].upper == c.upper)
                throw ConfigError("duplicate coupling");
    }
}

BuiltinConfig parse_builtin_name(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "xi")
        return BuiltinConfig::Xi;
    if (s == "lambda")
        return BuiltinConfig::Lambda;
    if (s == "v")
        return BuiltinConfig::V;
    throw ConfigError("unknown configuration name: " + std::string(name) +
                      " (expected xi, lambda, or v)");
}

std::string builtin_name(BuiltinConfig which)
{
    switch (which) {
    case BuiltinConfig::Xi: return "xi";
    case BuiltinConfig::Lambda: return "lambda";
    case BuiltinConfig::V: return "v";
    }
    return {};
}

std::vector<std::pair<int, int>> builtin_allowed_pairs(BuiltinConfig which)
{
    switch (which) {
    case BuiltinConfig::Xi: return {{0, 1}, {1, 2}};     // ladder, 1<->3 forbidden
    case BuiltinConfig::Lambda: return {{1, 2}, {0, 2}}; // 1<->2 forbidden
    case BuiltinConfig::V: return {{0, 1}, {0, 2}};      // 2<->3 forbidden
    }
    return {};
}

namespace {

std::vector<int> builtin_weights(BuiltinConfig which)
{
    switch (which) {
    case BuiltinConfig::Xi: return {0, 1, 2};
    case BuiltinConfig::Lambda: return {0, 0, 1};
    case BuiltinConfig::V: return {0, 1, 1};
    }
    return {};
}

} // namespace

Configuration make_builtin(BuiltinConfig which, std::vector<Coupling> mu, double field_freq)
{
    const auto allowed = builtin_allowed_pairs(which);
    Configuration config;
    config.n_levels = 3;
    config.excitation_weight = builtin_weights(which);
    config.field_freq = field_freq;
    config.omega.resize(3);
    for (int k = 0; k < 3; ++k)
        config.omega[k] = config.excitation_weight[k] * field_freq;

    for (auto& c : mu) {
        if (c.lower > c.upper)
            std::swap(c.lower, c.upper);
        const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](auto p) {
            return p.first == c.lower && p.second == c.upper;
        });
        if (!ok)
            throw ConfigError("coupling " + std::to_string(c.lower + 1) + "-" +
                              std::to_string(c.upper + 1) + " is forbidden in the " +
                              builtin_name(which) + " configuration");
    }
    for (auto [k, l] : allowed) {
        const auto it = std::find_if(mu.begin(), mu.end(), [&](const Coupling& c) {
            return c.lower == k && c.upper == l;
        });
        if (it == mu.end())
            throw ConfigError("missing coupling " + std::to_string(k + 1) + "-" +
                              std::to_string(l + 1) + " for the " + builtin_name(which) +
                              " configuration");
        config.couplings.push_back(*it);
    }
    std::sort(config.couplings.begin(), config.couplings.end(), [](const Coupling& a, const Coupling& b) {
        return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
    });
    config.validate();
    return config;
}

Configuration parse_config(std::istream& in)
{
    Configuration config;
    bool saw_n = false, saw_omega = false, saw_lambda = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        const auto fail = [&](const std::string& msg) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " + msg);
        };
        if (key == "n_levels") {
            if (!(ls >> config.n_levels))
                fail("expected an integer after n_levels");
            saw_n = true;
        } else if (key == "field_freq") {
            if (!(ls >> config.field_freq))
                fail("expected a number after field_freq");
        } else if (key == "omega") {
            double w;
            while (ls >> w)
                config.omega.push_back(w);
            saw_omega = true;
        } else if (key == "lambda") {
            int v;
            while (ls >> v)
                config.excitation_weight.push_back(v);
            saw_lambda = true;
        } else if (key == "coupling") {
            int k, l;
            double strength;
            if (!(ls >> k >> l >> strength))
                fail("expected: coupling <k> <l> <strength>");
            config.couplings.push_back({k - 1, l - 1, strength});
        } else {
            fail("unknown key '" + key + "'");
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing token '" + extra + "'");
    }
    if (!saw_n || !saw_omega || !saw_lambda)
        throw ConfigError("config must define n_levels, omega, and lambda");
    std::sort(config.couplings.begin(), config.couplings.end(), [](const Coupling& a, const Coupling& b) {
        return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
    });
    config.validate();
    return config;
}

Configuration load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

std::string format_config(const Configuration& config)
{
    std::ostringstream os;
    os.precision(17);
    os << "n_levels " << config.n_levels << '\n';
    os << "field_freq " << config.field_freq << '\n';
    os << "omega";
    for (double w : config.omega)
        os << ' ' << w;
    os << '\n';
    os << "lambda";
    for (int v : config.excitation_weight)
        os << ' ' << v;
    os << '\n';
    for (const auto& c : config.couplings)
        os << "coupling " << c.lower + 1 << ' ' << c.upper + 1 << ' ' << c.strength << '\n';
    return os.str();
}

} // namespace tcs
