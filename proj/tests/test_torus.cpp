#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "heatforms/torus.hpp"

using namespace heatforms;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("torus point coordinates reduce mod 1") {
    TorusPoint p(1.25, -0.25);
    CHECK(p.u == doctest::Approx(0.25));
    CHECK(p.v == doctest::Approx(0.75));
}

TEST_CASE("truncation bound and argument validation") {
    CHECK_THROWS_AS(torus_truncation(0.0), std::invalid_argument);
    CHECK(torus_truncation(10.0) >= 1);
    TorusPoint o(0, 0);
    CHECK_THROWS_AS(torus_k0(o, o, -1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(torus_k0(o, o, 0.001, 1), std::invalid_argument);  // too small
}

TEST_CASE("torus_k0 basics") {
    TorusPoint o(0, 0);
    SUBCASE("large time leaves only the constant mode") {
        CHECK(torus_k0(o, TorusPoint(0.3, 0.7), 10.0, torus_truncation(10.0)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("two truncations agree (self-consistency oracle)") {
        double a = torus_k0(o, o, 0.1, 10);
        double b = torus_k0(o, o, 0.1, 20);
        CHECK(std::abs(a - b) < 1e-12);
        // diagonal value is the square of the 1D theta sum
        double theta = 0;
        for (int m = -20; m <= 20; ++m) theta += std::exp(-4 * kPi * kPi * m * m * 0.1);
        CHECK(a == doctest::Approx(theta * theta).epsilon(1e-12));
    }
    SUBCASE("unit mass: the zero-frequency coefficient") {
        // trapezoid over the periodic grid integrates trig modes exactly
        double t = 0.05;
        int trunc = torus_truncation(t);
        int grid = 2 * trunc + 3;
        double integral = 0;
        for (int i = 0; i < grid; ++i)
            for (int j = 0; j < grid; ++j)
                integral += torus_k0(TorusPoint(double(i) / grid, double(j) / grid),
                                     TorusPoint(0.2, 0.4), t, trunc);
        integral /= grid * grid;
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("torus_k0 semigroup under numerical convolution") {
    double t1 = 0.08, t2 = 0.05;
    int trunc = torus_truncation(t2);
    int grid = 4 * trunc + 2;
    TorusPoint x(0.15, 0.65), y(0.4, 0.1);
    double conv = 0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            TorusPoint z(double(i) / grid, double(j) / grid);
            conv += torus_k0(x, z, t1, trunc) * torus_k0(z, y, t2, trunc);
        }
    }
    conv /= grid * grid;
    CHECK(std::abs(conv - torus_k0(x, y, t1 + t2, trunc)) < 1e-10);
}

TEST_CASE("torus_k0 satisfies the heat equation in time") {
    TorusPoint x(0.3, 0.2), y(0.8, 0.55);
    double t = 0.1, ht = 1e-4;
    int trunc = torus_truncation(t - ht);
    double fd = (torus_k0(x, y, t + ht, trunc) - torus_k0(x, y, t - ht, trunc)) / (2 * ht);
    // Laplacian applied termwise
    double lap = 0;
    double du = x.u - y.u, dv = x.v - y.v;
    for (int m = -trunc; m <= trunc; ++m)
        for (int n = -trunc; n <= trunc; ++n)
            lap += 4 * kPi * kPi * (m * m + n * n) *
                   std::exp(-4 * kPi * kPi * (m * m + n * n) * t) *
                   std::cos(2 * kPi * (m * du + n * dv));
    // centered-difference truncation error ~ ht^2 lambda_max^2 dominates
    CHECK(std::abs(fd + lap) / std::abs(lap) < 1e-5);
}

TEST_CASE("torus_k1") {
    SUBCASE("large time approaches the harmonic part diag(1,1)") {
        Eigen::Matrix2d k = torus_k1(TorusPoint(0.1, 0.9), TorusPoint(0.5, 0.2), 10.0,
                                     torus_truncation(10.0));
        CHECK((k - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("off-diagonal components vanish at x = y") {
        Eigen::Matrix2d k = torus_k1(TorusPoint(0.3, 0.3), TorusPoint(0.3, 0.3), 0.1, 12);
        CHECK(std::abs(k(0, 1)) < 1e-12);
        CHECK(std::abs(k(1, 0)) < 1e-12);
    }
    SUBCASE("derivative identity: d_x K_0 equals delta_y K_1") {
        // Left side termwise from the Fourier series, right side by
        // five-point differencing of the assembled K_1 components.
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double t = 0.1, h = 1e-4;
        int trunc = torus_truncation(t);
        auto k1_entry = [&](const TorusPoint& x, double yu, double yv, int a, int b) {
            return torus_k1(x, TorusPoint(yu, yv), t, trunc)(a, b);
        };
        for (int trial = 0; trial < 20; ++trial) {
            TorusPoint x(unif(rng), unif(rng)), y(unif(rng), unif(rng));
            double du = x.u - y.u, dv = x.v - y.v;
            Eigen::Vector2d grad = Eigen::Vector2d::Zero();
            for (int m = -trunc; m <= trunc; ++m)
                for (int n = -trunc; n <= trunc; ++n)
                    grad += std::exp(-4 * kPi * kPi * (m * m + n * n) * t) *
                            (-2 * kPi) * std::sin(2 * kPi * (m * du + n * dv)) *
                            Eigen::Vector2d(m, n);
            auto d5 = [&](auto f) {
                return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
            };
            for (int a = 0; a < 2; ++a) {
                double div_u = d5([&](double e) { return k1_entry(x, y.u + e, y.v, a, 0); });
                double div_v = d5([&](double e) { return k1_entry(x, y.u, y.v + e, a, 1); });
                CHECK(std::abs(grad[a] - (-(div_u + div_v))) < 1e-10);
            }
        }
    }
}

TEST_CASE("torus_k2 equals torus_k0 (star duality, flat unit torus)") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (double t : {0.05, 0.2, 1.0, 10.0}) {
        int trunc = torus_truncation(t);
        for (int trial = 0; trial < 5; ++trial) {
            TorusPoint x(unif(rng), unif(rng)), y(unif(rng), unif(rng));
            CHECK(std::abs(torus_k2(x, y, t, trunc) - torus_k0(x, y, t, trunc)) <= 1e-12);
        }
    }
    CHECK(torus_k2(TorusPoint(0, 0), TorusPoint(0.4, 0.9), 10.0,
                   torus_truncation(10.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("corollary 6 reconstruction of the 1-form kernel") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (double t : {0.05, 0.2, 1.0}) {
        int trunc = torus_truncation(t);
        for (int trial = 0; trial < 20; ++trial) {
            TorusPoint x(unif(rng), unif(rng)), y(unif(rng), unif(rng));
            auto r = torus_corollary6_check(x, y, t, trunc);
            CHECK(r.pass);
            CHECK(r.rel_residuals[0] < 1e-10);
        }
    }
    SUBCASE("coincident points") {
        auto r = torus_corollary6_check(TorusPoint(0, 0), TorusPoint(0, 0), 0.1, 12);
        CHECK(r.pass);
    }
    SUBCASE("large time: both sides collapse to C_1") {
        auto r = torus_corollary6_check(TorusPoint(0.2, 0.4), TorusPoint(0.9, 0.1),
                                        8.0, torus_truncation(8.0));
        CHECK(r.pass);
    }
}

TEST_CASE("kernel symmetry under x <-> y with transpose") {
    TorusPoint x(0.22, 0.81), y(0.65, 0.4);
    double t = 0.1;
    int trunc = torus_truncation(t);
    CHECK(std::abs(torus_k0(x, y, t, trunc) - torus_k0(y, x, t, trunc)) < 1e-12);
    Eigen::Matrix2d a = torus_k1(x, y, t, trunc);
    Eigen::Matrix2d b = torus_k1(y, x, t, trunc);
    CHECK((a - b.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("torus CSV row shape") {
    std::ostringstream out;
    write_torus_csv_row(out, TorusPoint(0.1, 0.2), TorusPoint(0.3, 0.4), 0.1, 1, 12);
    std::string line = out.str();
    CHECK(std::count(line.begin(), line.end(), ',') == 8);  // 5 coords + 4 components
}
