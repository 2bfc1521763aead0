#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "dispwave/media.hpp"

using namespace dispwave;
using media::DispersionFactor;
using media::MediumModel;
using media::ProfileFactor;

namespace {

MediumModel vacuum_model() {
    MediumModel m;
    m.window = {1e-6, 100.0};
    return m;
}

MediumModel cauchy_model(double A = 1.0, double B = 1.0) {
    MediumModel m;
    m.eps1 = DispersionFactor::cauchy(A, B);
    m.window = {1e-6, 100.0};
    return m;
}

// Dense tabulation of 1 + w^2 on [0, 12].
DispersionFactor tabulated_cauchy(std::size_t n = 1001) {
    std::vector<double> w(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 12.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        v[i] = 1.0 + w[i] * w[i];
    }
    return DispersionFactor::tabulated(w, v);
}

}  // namespace

TEST_CASE("n1 of vacuum and analytic dispersion") {
    CHECK(media::n1(vacuum_model(), 3.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(media::n1(cauchy_model(), 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("tabulated factor matches its analytic source") {
    MediumModel m;
    m.eps1 = tabulated_cauchy();
    m.window = {0.1, 10.0};
    CHECK(media::n1(m, 0.5) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-6));
}

TEST_CASE("out-of-window frequency is rejected") {
    MediumModel m;
    m.eps1 = tabulated_cauchy();
    m.window = {0.1, 10.0};
    CHECK_THROWS_AS(media::n1(m, 11.0), OutOfWindow);
    CHECK_THROWS_AS(media::n1(m, 0.0), OutOfWindow);
}

TEST_CASE("f and f' in the non-dispersive limit") {
    const auto fd = media::f_and_derivative(vacuum_model(), 3.0);
    CHECK(fd.f == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(fd.fprime == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("f and f' for eps1 = 1 + w^2 at w = 1") {
    const auto fd = media::f_and_derivative(cauchy_model(), 1.0);
    CHECK(fd.f == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(fd.fprime == doctest::Approx(std::sqrt(2.0) + 1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("tabulated dispersion reproduces f and f'") {
    MediumModel m;
    m.eps1 = tabulated_cauchy(4001);
    m.window = {0.1, 10.0};
    const auto fd = media::f_and_derivative(m, 1.0);
    const auto exact = media::f_and_derivative(cauchy_model(), 1.0);
    CHECK(fd.f == doctest::Approx(exact.f).epsilon(1e-7));

    // Oracle: finite difference of dense f samples.
    const double h = 1e-4;
    const double fp_fd = (media::f_and_derivative(m, 1.0 + h).f -
                          media::f_and_derivative(m, 1.0 - h).f) /
                         (2.0 * h);
    CHECK(fd.fprime == doctest::Approx(fp_fd).epsilon(1e-5));
    CHECK(fd.fprime == doctest::Approx(exact.fprime).epsilon(1e-5));
}

TEST_CASE("dispersion derivatives agree with central differences") {
    const auto factors = std::vector<DispersionFactor>{
        DispersionFactor::cauchy(1.0, 0.3), tabulated_cauchy(2001)};
    for (const auto& f : factors) {
        for (double w : {0.5, 1.0, 3.0, 7.0}) {
            const double h = 1e-5 * w;
            const double fd = (f.value(w + h) - f.value(w - h)) / (2.0 * h);
            CHECK(f.derivative(w) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("dispersion factors are even, f is odd") {
    const auto factors = std::vector<DispersionFactor>{
        DispersionFactor::constant(2.0), DispersionFactor::cauchy(1.0, 0.5),
        tabulated_cauchy()};
    for (const auto& f : factors)
        for (double w : {0.3, 1.7, 5.0}) CHECK(f.value(-w) == f.value(w));

    const MediumModel m = cauchy_model();
    for (double w : {0.5, 2.0}) {
        CHECK(media::f_and_derivative(m, -w).f ==
              doctest::Approx(-media::f_and_derivative(m, w).f).epsilon(1e-15));
    }
}

TEST_CASE("profile derivatives agree with central differences") {
    const auto profiles = std::vector<ProfileFactor>{
        ProfileFactor::lorentzian(1.0, 0.4, 2.0)};
    for (const auto& p : profiles) {
        for (double z : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
            const double h = 1e-4;
            const double d1 = (p.value(z + h) - p.value(z - h)) / (2.0 * h);
            const double d2 = (p.value(z + h) - 2.0 * p.value(z) + p.value(z - h)) / (h * h);
            CHECK(p.deriv(z) == doctest::Approx(d1).epsilon(1e-5));
            CHECK(p.deriv2(z) == doctest::Approx(d2).epsilon(1e-4));
        }
    }
}

TEST_CASE("tabulated profile consistent with spline derivatives") {
    std::vector<double> z(801), v(801);
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = -8.0 + 16.0 * static_cast<double>(i) / 800.0;
        v[i] = 1.0 + 0.4 / (1.0 + z[i] * z[i] / 4.0);
    }
    const auto p = ProfileFactor::tabulated(z, v);
    const auto exact = ProfileFactor::lorentzian(1.0, 0.4, 2.0);
    for (double x : {-3.0, 0.0, 2.5}) {
        CHECK(p.value(x) == doctest::Approx(exact.value(x)).epsilon(1e-5));
        CHECK(p.deriv(x) == doctest::Approx(exact.deriv(x)).epsilon(1e-4));
    }
}

TEST_CASE("validate_monotone accepts monotone dispersion laws") {
    CHECK(!media::validate_monotone(cauchy_model(), 0.1, 10.0, 100));
    CHECK(!media::validate_monotone(vacuum_model(), 0.5, 50.0, 100));

    MediumModel constant2;
    constant2.eps1 = DispersionFactor::constant(2.0);
    constant2.window = {1e-6, 100.0};
    CHECK(!media::validate_monotone(constant2, 0.1, 20.0, 50));
}

TEST_CASE("validate_monotone finds an engineered dip near w = 2") {
    // Tabulated eps1 with a dip strong enough to pull f(w) = w n1(w) down.
    std::vector<double> w(2001), v(2001);
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = 5.0 * static_cast<double>(i) / 2000.0;
        const double d = (w[i] - 2.0) / 0.1;
        v[i] = 1.0 - 0.8 * std::exp(-d * d);
    }
    MediumModel m;
    m.eps1 = media::DispersionFactor::tabulated(w, v);
    m.window = {0.5, 4.5};

    // Oracle: dense finite difference of f must change sign near 2.
    bool sign_change = false;
    double prev_f = media::f_and_derivative(m, 0.5).f;
    for (double x = 0.501; x < 4.5; x += 0.001) {
        const double e1 = m.eps1.value(x);
        const double f = x * std::sqrt(e1);  // mu1 = 1
        if (f < prev_f && x > 1.5 && x < 2.5) sign_change = true;
        prev_f = f;
    }
    CHECK(sign_change);

    const auto bad = media::validate_monotone(m, 0.5, 4.5, 400);
    REQUIRE(bad.has_value());
    CHECK(std::abs(*bad - 2.0) < 0.5);
}

TEST_CASE("monotone verdict survives 10x finer sampling") {
    const MediumModel m = cauchy_model(1.0, 0.25);
    REQUIRE(!media::validate_monotone(m, 0.1, 10.0, 100));
    CHECK(!media::validate_monotone(m, 0.1, 10.0, 1000));
}
