#include <set>
#include <vector>

#include "doctest.h"
#include "tcs/basis.hpp"
#include "tcs/errors.hpp"

using namespace tcs;

namespace {

Configuration xi13()
{
    return make_builtin(BuiltinConfig::Xi, {{0, 1, 1.0}, {1, 2, 3.0}});
}

long binom(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("builtin configurations carry the resonant level structure")
{
    const Configuration xi = xi13();
    CHECK(xi.excitation_weight == std::vector<int>{0, 1, 2});
    CHECK(xi.omega == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(xi.coupling_strength(0, 2) == 0.0);
    CHECK(xi.resonant());

    const Configuration lam = make_builtin(BuiltinConfig::Lambda, {{1, 2, 1.0}, {0, 2, 3.0}});
    CHECK(lam.excitation_weight == std::vector<int>{0, 0, 1});
    CHECK(lam.omega == std::vector<double>{0.0, 0.0, 1.0});
    CHECK(lam.coupling_strength(0, 1) == 0.0);

    const Configuration v = make_builtin(BuiltinConfig::V, {{0, 1, 1.0}, {0, 2, 3.0}});
    CHECK(v.excitation_weight == std::vector<int>{0, 1, 1});
    CHECK(v.omega == std::vector<double>{0.0, 1.0, 1.0});
    CHECK(v.coupling_strength(1, 2) == 0.0);

    // field frequency scales omega with the weights
    const Configuration xi2 = make_builtin(BuiltinConfig::Xi, {{0, 1, 1.0}, {1, 2, 3.0}}, 2.5);
    CHECK(xi2.omega == std::vector<double>{0.0, 2.5, 5.0});
    CHECK(xi2.resonant());
}

TEST_CASE("builtin construction rejects bad coupling sets")
{
    CHECK_THROWS_AS(parse_builtin_name("w"), ConfigError);
    CHECK(parse_builtin_name("XI") == BuiltinConfig::Xi);
    // forbidden pair for the ladder: 1<->3
    CHECK_THROWS_AS(make_builtin(BuiltinConfig::Xi, {{0, 2, 1.0}, {1, 2, 3.0}}), ConfigError);
    // non-positive strength
    CHECK_THROWS_AS(make_builtin(BuiltinConfig::Xi, {{0, 1, 0.0}, {1, 2, 3.0}}), ConfigError);
    // missing second coupling
    CHECK_THROWS_AS(make_builtin(BuiltinConfig::Xi, {{0, 1, 1.0}}), ConfigError);
}

TEST_CASE("configuration invariants are validated")
{
    Configuration c;
    c.n_levels = 3;
    c.omega = {0.0, 1.0, 2.0};
    c.excitation_weight = {0, 1, 2};
    c.couplings = {{0, 1, 1.0}};
    c.field_freq = 1.0;
    CHECK_NOTHROW(c.validate());

    auto broken = c;
    broken.omega = {0.0, 2.0, 1.0};
    CHECK_THROWS_AS(broken.validate(), ConfigError); // decreasing omega
    broken = c;
    broken.omega = {0.5, 1.0, 2.0};
    CHECK_THROWS_AS(broken.validate(), ConfigError); // ground level not at zero
    broken = c;
    broken.excitation_weight = {0, 1, 3};
    CHECK_THROWS_AS(broken.validate(), ConfigError); // lambda above n-1
    broken = c;
    broken.field_freq = 0.0;
    CHECK_THROWS_AS(broken.validate(), ConfigError);
    broken = c;
    broken.couplings = {{0, 1, 1.0}, {0, 1, 2.0}};
    CHECK_THROWS_AS(broken.validate(), ConfigError); // duplicate pair

    auto detuned = c;
    detuned.omega = {0.0, 1.0, 1.5};
    CHECK_NOTHROW(detuned.validate()); // detuning is legal, just not resonant
    CHECK(!detuned.resonant());
}

TEST_CASE("sector enumeration: ladder, 10 atoms, 7 excitations")
{
    const SectorBasis basis(xi13(), 10, 7);

    // independent count: loop occupations of the two excited levels and
    // keep those admitting a non-negative photon number
    std::size_t expected = 0;
    for (int n3 = 0; n3 <= 3; ++n3)
        for (int n2 = 0; n2 + 2 * n3 <= 7; ++n2)
            if (n2 + n3 <= 10)
                ++expected;
    CHECK(expected == 20);
    CHECK(basis.size() == expected);
    CHECK(sector_dimension(basis.config(), 10, 7) == expected);

    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BasisKet& ket = basis.ket(i);
        CHECK(ket.photons >= 0);
        CHECK(ket.occupation[0] + ket.occupation[1] + ket.occupation[2] == 10);
        CHECK(ket.photons + ket.occupation[1] + 2 * ket.occupation[2] == 7);
        CHECK(seen.insert(ket.occupation).second); // pairwise distinct
        CHECK(basis.find(ket.occupation, ket.photons) == i);
    }
}

TEST_CASE("singleton and tiny sectors")
{
    for (auto which : {BuiltinConfig::Xi, BuiltinConfig::Lambda, BuiltinConfig::V}) {
        const SectorBasis basis(make_builtin(which, {builtin_allowed_pairs(which)[0].first == 0
                                                         ? Coupling{0, 1, 1.0}
                                                         : Coupling{1, 2, 1.0},
                                                     which == BuiltinConfig::Xi ? Coupling{1, 2, 3.0}
                                                                                : Coupling{0, 2, 3.0}},
                                            1.0),
                                1, 0);
        REQUIRE(basis.size() == 1);
        CHECK(basis.ket(0).photons == 0);
        CHECK(basis.ket(0).occupation == std::vector<int>{1, 0, 0});
    }

    const Configuration lam = make_builtin(BuiltinConfig::Lambda, {{1, 2, 1.0}, {0, 2, 3.0}});
    const SectorBasis basis(lam, 2, 0);
    REQUIRE(basis.size() == 3);
    CHECK(basis.ket(0).occupation == std::vector<int>{2, 0, 0});
    CHECK(basis.ket(1).occupation == std::vector<int>{1, 1, 0});
    CHECK(basis.ket(2).occupation == std::vector<int>{0, 2, 0});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(basis.ket(i).photons == 0);

    CHECK(sector_dimension(xi13(), 1, 1) == 2);
}

TEST_CASE("large-M sectors saturate at the occupation-multiset count")
{
    CHECK(sector_dimension(xi13(), 10, 20) == 66);
    CHECK(SectorBasis(xi13(), 10, 20).size() == 66);
    // Lambda and V saturate already at M >= Na
    const Configuration lam = make_builtin(BuiltinConfig::Lambda, {{1, 2, 1.0}, {0, 2, 3.0}});
    const Configuration v = make_builtin(BuiltinConfig::V, {{0, 1, 1.0}, {0, 2, 3.0}});
    CHECK(sector_dimension(lam, 10, 10) == 66);
    CHECK(sector_dimension(v, 10, 10) == 66);
}

TEST_CASE("dimension is monotone in M and eventually constant")
{
    for (int na : {1, 3, 6}) {
        std::size_t prev = 0;
        const Configuration xi = xi13();
        const int lambda_max = 2;
        for (int m = 0; m <= lambda_max * na + 5; ++m) {
            const std::size_t d = sector_dimension(xi, na, m);
            CHECK(d >= prev);
            if (m >= lambda_max * na)
                CHECK(d == static_cast<std::size_t>(binom(na + 2, 2)));
            prev = d;
        }
    }
}

TEST_CASE("enumeration is deterministic and matches the counting route")
{
    const Configuration lam = make_builtin(BuiltinConfig::Lambda, {{1, 2, 0.7}, {0, 2, 2.0}});
    for (int na : {1, 2, 5, 8}) {
        for (int m : {0, 1, 4, 9, 17}) {
            const SectorBasis first(lam, na, m);
            const SectorBasis second(lam, na, m);
            REQUIRE(first.size() == second.size());
            CHECK(first.size() == sector_dimension(lam, na, m));
            for (std::size_t i = 0; i < first.size(); ++i)
                CHECK(first.ket(i) == second.ket(i));
        }
    }
}

TEST_CASE("empty and invalid sectors")
{
    CHECK(SectorBasis(xi13(), 3, -1).empty());
    CHECK(sector_dimension(xi13(), 3, -1) == 0);
    CHECK_THROWS_AS(SectorBasis(xi13(), 0, 4), ConfigError);
}

TEST_CASE("general n beyond the named configurations")
{
    Configuration c;
    c.n_levels = 4;
    c.omega = {0.0, 1.0, 1.0, 2.0};
    c.excitation_weight = {0, 1, 1, 2};
    c.couplings = {{0, 1, 1.0}, {1, 3, 2.0}};
    c.field_freq = 1.0;
    const SectorBasis basis(c, 2, 3);
    CHECK(basis.size() == sector_dimension(c, 2, 3));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BasisKet& ket = basis.ket(i);
        int m = ket.photons;
        for (int k = 0; k < 4; ++k)
            m += c.excitation_weight[k] * ket.occupation[k];
        CHECK(m == 3);
    }
}
