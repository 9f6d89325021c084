#include "ordcheck/special_fns.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace ordcheck;

namespace {

// Arbitrary-precision evaluations of the closed forms at (t=1, alpha=1),
// frozen to 17 significant digits.
constexpr double kU11 = 0.58197670686932642;  // 1/(e-1)
constexpr double kV11 = 1.5819767068693264;   // e/(e-1)
constexpr double kS11 = -0.58197670686932642; // 1 - e/(e-1)
constexpr double kW11 = -0.38486300774919478; // e(2-e)/(e-1)^3
constexpr double kUp11 = -0.33869688733846589;

const double kAllAlphas[] = {0.1, 0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 5.0};
const double kConvexAlphas[] = {0.1, 0.3, 0.5, 0.8, 1.0};

} // namespace

TEST_SUITE("special_fns")
{
    TEST_CASE("frozen point values at t=1, alpha=1")
    {
        CHECK(kernel_u(1.0, 1.0) == doctest::Approx(kU11).epsilon(1e-15));
        CHECK(kernel_v(1.0, 1.0) == doctest::Approx(kV11).epsilon(1e-15));
        CHECK(kernel_s(1.0, 1.0) == doctest::Approx(kS11).epsilon(1e-15));
        CHECK(kernel_w(1.0, 1.0) == doctest::Approx(kW11).epsilon(1e-14));
        CHECK(kernel_u_prime(1.0, 1.0) == doctest::Approx(kUp11).epsilon(1e-14));
    }

    TEST_CASE("limits at zero and in the tail")
    {
        for (double a : {0.3, 1.0, 2.0}) {
            CHECK(kernel_u(0.0, a) == 1.0);
            CHECK(kernel_v(0.0, a) == 1.0);
            CHECK(kernel_s(0.0, a) == 0.0);
        }
        CHECK(kernel_u(1e-12, 0.5) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(kernel_u(1e9, 2.0) == 0.0);

        CHECK(kernel_w(0.0, 2.0) == 0.0);
        CHECK(kernel_w(0.0, 1.0) == -0.5);
        CHECK(kernel_w(0.0, 0.5) == -std::numeric_limits<double>::infinity());
        // approach matches the stated limits
        CHECK(kernel_w(1e-8, 1.0) == doctest::Approx(-0.5).epsilon(1e-8));
        CHECK(kernel_w(1e-8, 2.0) == doctest::Approx(0.0).epsilon(1e-7));
    }

    TEST_CASE("v - u = t^alpha")
    {
        std::mt19937_64 eng(7);
        std::uniform_real_distribution<double> ua(0.1, 5.0);
        std::uniform_real_distribution<double> ux(std::log(1e-4), std::log(1e2));
        for (int i = 0; i < 2000; ++i) {
            const double a = ua(eng);
            const double x = std::exp(ux(eng));
            const double t = std::pow(x, 1.0 / a);
            const double xr = std::pow(t, a); // what the kernels actually see
            const double diff = kernel_v(t, a) - kernel_u(t, a);
            // relative to the function scale max(1, x); strict relative to x
            // is additionally met once x is not tiny against ulp(1)
            CHECK(std::abs(diff - xr) <= 1e-13 * std::max(1.0, xr));
            if (xr >= 1e-2)
                CHECK(std::abs(diff - xr) <= 1e-13 * xr);
        }
    }

    TEST_CASE("u_prime matches finite differences")
    {
        for (double a : {0.3, 0.5, 1.0, 2.0}) {
            for (double x : oracles::geometric_grid(1e-2, 30.0, 200)) {
                const double t = std::pow(x, 1.0 / a);
                const double fd =
                    oracles::fd_derivative_rel([&](double tt) { return kernel_u(tt, a); }, t);
                const double up = kernel_u_prime(t, a);
                CHECK(up == doctest::Approx(fd).epsilon(1e-6));
                CHECK(up <= 0.0);
            }
        }
    }

    TEST_CASE("w equals u times derivative of s")
    {
        for (double a : {0.3, 0.5, 1.0}) {
            for (double x : oracles::geometric_grid(1e-2, 30.0, 200)) {
                const double t = std::pow(x, 1.0 / a);
                const double sd =
                    oracles::fd_derivative_rel([&](double tt) { return kernel_s(tt, a); }, t);
                const double w = kernel_w(t, a);
                CHECK(w == doctest::Approx(kernel_u(t, a) * sd).epsilon(1e-6));
            }
        }
    }

    TEST_CASE("u nonincreasing, v nondecreasing for every shape")
    {
        const auto xs = oracles::geometric_grid(1e-4, 1e2, 2048);
        for (double a : kAllAlphas) {
            double prev_u = 0.0, prev_v = 0.0;
            bool first = true;
            for (double x : xs) {
                const double t = std::pow(x, 1.0 / a);
                const double u = kernel_u(t, a);
                const double v = kernel_v(t, a);
                if (!first) {
                    CHECK(u <= prev_u + 1e-12 * std::max(std::abs(u), std::abs(prev_u)));
                    CHECK(v >= prev_v - 1e-12 * std::max(std::abs(v), std::abs(prev_v)));
                }
                prev_u = u;
                prev_v = v;
                first = false;
            }
        }
    }

    TEST_CASE("s decreasing, w nondecreasing and nonpositive for alpha <= 1")
    {
        const auto xs = oracles::geometric_grid(1e-4, 1e2, 2048);
        for (double a : kConvexAlphas) {
            double prev_s = 1.0, prev_w = -std::numeric_limits<double>::infinity();
            bool first = true;
            for (double x : xs) {
                const double t = std::pow(x, 1.0 / a);
                const double s = kernel_s(t, a);
                const double w = kernel_w(t, a);
                CHECK(w <= 0.0);
                CHECK(s <= 0.0);
                if (!first) {
                    CHECK(s <= prev_s + 1e-12 * std::max(std::abs(s), std::abs(prev_s)));
                    CHECK(w >= prev_w - 1e-12 * std::max(std::abs(w), std::abs(prev_w)));
                }
                prev_s = s;
                prev_w = w;
                first = false;
            }
        }
    }

    TEST_CASE("discrete convexity of u for alpha <= 1")
    {
        const auto xs = oracles::geometric_grid(1e-4, 1e2, 512);
        for (double a : kConvexAlphas) {
            for (double x : xs) {
                const double t = std::pow(x, 1.0 / a);
                for (double delta : {0.05, 0.5}) {
                    const double h = t * delta;
                    const double second =
                        kernel_u(t, a) + kernel_u(t + 2 * h, a) - 2.0 * kernel_u(t + h, a);
                    CHECK(second >= -1e-12 * std::max(1.0, kernel_u(t, a)));
                }
            }
        }
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS((void)kernel_u(-1.0, 1.0), std::domain_error);
        CHECK_THROWS_AS((void)kernel_u(1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS((void)kernel_v(1.0, -2.0), std::domain_error);
        CHECK_THROWS_AS((void)kernel_u_prime(0.0, 1.0), std::domain_error);
        CHECK_THROWS_AS((void)kernel_w(std::numeric_limits<double>::quiet_NaN(), 1.0),
                        std::domain_error);
    }
}
