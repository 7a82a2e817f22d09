#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "tcs/kernels.hpp"

using namespace tcs;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

// sizes straddling the vector widths, including odd tails
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 64, 67, 128};

} // namespace

TEST_CASE("scalar kernels match a direct reference")
{
    const auto& k = kernels::scalar_backend();
    std::vector<double> x{1.0, -2.0, 3.0};
    std::vector<double> y{0.5, 0.25, -1.0};
    CHECK(k.dot(x.data(), y.data(), 3) == doctest::Approx(1.0 * 0.5 - 2.0 * 0.25 - 3.0).epsilon(1e-15));

    k.axpy(2.0, x.data(), y.data(), 3);
    CHECK(y[0] == doctest::Approx(2.5));
    CHECK(y[1] == doctest::Approx(-3.75));
    CHECK(y[2] == doctest::Approx(5.0));

    // 90-degree rotation swaps the pair up to sign
    std::vector<double> a{1.0, 2.0};
    std::vector<double> b{3.0, 4.0};
    k.rot(a.data(), b.data(), 2, 0.0, 1.0);
    CHECK(a[0] == doctest::Approx(-3.0));
    CHECK(b[0] == doctest::Approx(1.0));

    const std::vector<double> m{1.0, 2.0, 3.0, 4.0}; // [[1,2],[3,4]]
    std::vector<double> in{1.0, 1.0}, out(2);
    k.gemv(m.data(), 2, in.data(), out.data());
    CHECK(out[0] == doctest::Approx(3.0));
    CHECK(out[1] == doctest::Approx(7.0));
}

TEST_CASE("every available backend is equivalent to the scalar reference")
{
    const auto backends = kernels::available_backends();
    REQUIRE(!backends.empty());
    CHECK(std::string(backends.front()->name) == "scalar");

    std::mt19937 rng(20240817);
    for (const auto* backend : backends) {
        CAPTURE(backend->name);
        for (std::size_t n : kSizes) {
            CAPTURE(n);
            const auto x = random_vec(rng, n);
            const auto y = random_vec(rng, n);

            const double d_ref = kernels::scalar_backend().dot(x.data(), y.data(), n);
            const double d = backend->dot(x.data(), y.data(), n);
            CHECK(std::abs(d - d_ref) <= 1e-13 * std::max(1.0, static_cast<double>(n)));

            auto y_ref = y;
            auto y_b = y;
            kernels::scalar_backend().axpy(0.37, x.data(), y_ref.data(), n);
            backend->axpy(0.37, x.data(), y_b.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(y_b[i] - y_ref[i]) <= 1e-14);

            const double c = std::cos(0.81), s = std::sin(0.81);
            auto xr_ref = x, yr_ref = y, xr_b = x, yr_b = y;
            kernels::scalar_backend().rot(xr_ref.data(), yr_ref.data(), n, c, s);
            backend->rot(xr_b.data(), yr_b.data(), n, c, s);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(xr_b[i] - xr_ref[i]) <= 1e-14);
                CHECK(std::abs(yr_b[i] - yr_ref[i]) <= 1e-14);
            }

            if (n > 0) {
                const auto a = random_vec(rng, n * n);
                std::vector<double> out_ref(n), out_b(n);
                kernels::scalar_backend().gemv(a.data(), n, x.data(), out_ref.data());
                backend->gemv(a.data(), n, x.data(), out_b.data());
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(std::abs(out_b[i] - out_ref[i]) <= 1e-13 * std::max(1.0, static_cast<double>(n)));
            }
        }
    }
}

TEST_CASE("rot preserves the pair norm for unit (c, s)")
{
    std::mt19937 rng(7);
    for (const auto* backend : kernels::available_backends()) {
        for (std::size_t n : {5u, 32u, 67u}) {
            auto x = random_vec(rng, n);
            auto y = random_vec(rng, n);
            const auto& k = kernels::scalar_backend();
            const double before = k.dot(x.data(), x.data(), n) + k.dot(y.data(), y.data(), n);
            const double c = std::cos(1.234), s = std::sin(1.234);
            backend->rot(x.data(), y.data(), n, c, s);
            const double after = k.dot(x.data(), x.data(), n) + k.dot(y.data(), y.data(), n);
            CHECK(after == doctest::Approx(before).epsilon(1e-13));
        }
    }
}

TEST_CASE("active backend can be pinned")
{
    const auto& original = kernels::active_backend();
    kernels::set_active_backend(kernels::scalar_backend());
    CHECK(std::string(kernels::active_backend().name) == "scalar");
    kernels::set_active_backend(original);
}
