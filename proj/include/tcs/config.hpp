// config.hpp — atomic level structure and field coupling description
//
// Level indices are 0-based throughout the C++ API. The plain-text config
// file format and the CLI use the conventional 1-based labels (levels
// 1..n); the parser converts at the boundary.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tcs {

// Allowed dipolar transition between two levels, lower < upper, strength > 0.
struct Coupling {
    int lower = 0;
    int upper = 0;
    double strength = 0.0;
};

// Model description: n atomic levels with frequencies omega_k, excitation
// weights lambda_k (photons needed to reach level k from the ground level),
// the set of allowed dipolar couplings, and the field frequency.
struct Configuration {
    int n_levels = 0;
    std::vector<double> omega;           // non-decreasing, omega[0] == 0
    std::vector<int> excitation_weight;  // lambda_k in [0, n-1], lambda_0 == 0
    std::vector<Coupling> couplings;     // sorted by (lower, upper), no duplicates
    double field_freq = 1.0;             // > 0

    // 0 when the pair is not an allowed transition
    double coupling_strength(int k, int l) const;

    // omega_k == lambda_k * field_freq for every level, within rel_tol
    bool resonant(double rel_tol = 1e-12) const;

    // throws ConfigError when any structural invariant is violated
    void validate() const;
};

enum class BuiltinConfig { Xi, Lambda, V };

// Case-insensitive: "xi", "lambda", "v". Throws ConfigError otherwise.
BuiltinConfig parse_builtin_name(std::string_view name);
std::string builtin_name(BuiltinConfig which);

// The two allowed transitions of a named 3-level configuration, 0-based,
// in a documented order: Xi {0,1},{1,2}; Lambda {1,2},{0,2}; V {0,1},{0,2}.
std::vector<std::pair<int, int>> builtin_allowed_pairs(BuiltinConfig which);

// Resonant 3-level configuration with the conventional excitation weights
// (Xi: 0,1,2; Lambda: 0,0,1; V: 0,1,1) and omega_k = lambda_k * field_freq.
// `mu` must supply strengths for exactly the two allowed pairs; supplying
// the forbidden pair or a non-positive strength is an error.
Configuration make_builtin(BuiltinConfig which, std::vector<Coupling> mu, double field_freq = 1.0);

// Plain-text key-value format, 1-based level labels:
//   n_levels 3
//   field_freq 1.0
//   omega 0 1 2
//   lambda 0 1 2
//   coupling 1 2 1.0
//   coupling 2 3 3.0
// '#' starts a comment. Keys may appear in any order; coupling repeats.
Configuration parse_config(std::istream& in);
Configuration load_config_file(const std::string& path);
std::string format_config(const Configuration& config);

} // namespace tcs
