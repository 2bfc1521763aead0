#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "dispwave/media.hpp"
#include "dispwave/modes.hpp"
#include "dispwave/wkb.hpp"
#include "oracles.hpp"

using namespace dispwave;
using media::DispersionFactor;
using media::MediumModel;
using media::ProfileFactor;

namespace {

MediumModel make_model(ProfileFactor eps2 = ProfileFactor::constant(1.0),
                       DispersionFactor eps1 = DispersionFactor::constant(1.0)) {
    MediumModel m;
    m.eps1 = std::move(eps1);
    m.eps2 = std::move(eps2);
    m.window = {1e-6, 100.0};
    return m;
}

SampledField gaussian_packet(const AxisGrid& grid, double sigma, double k0) {
    SampledField f;
    f.label = "packet";
    f.values.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double z = grid.z(i);
        f.values[i] = std::exp(-z * z / (2.0 * sigma * sigma)) * std::polar(1.0, k0 * z);
    }
    return f;
}

double max_abs(const std::vector<std::complex<double>>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("projecting the zero field gives the zero mode function") {
    const auto m = make_model();
    const AxisGrid grid(-10.0, 10.0, 501);
    const auto table = wkb::build_phase_table(m, grid);
    SampledField zero;
    zero.values.assign(grid.n, {0.0, 0.0});
    const auto c = modes::project(m, table, FrequencyGrid(0.5, 3.0, 51), zero);
    for (const auto& v : c.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("windowed plane wave projects to a sinc ridge") {
    const auto m = make_model();
    const double L = 20.0, k0 = 2.0;
    const AxisGrid grid(-L / 2.0, L / 2.0, 2001);
    const auto table = wkb::build_phase_table(m, grid);

    SampledField e0;
    e0.values.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) e0.values[i] = std::polar(1.0, k0 * grid.z(i));

    // Peak, plus the first analytic sinc zeros at k0 +- 2 pi / L.
    const double dk = 2.0 * M_PI / L;
    const FrequencyGrid wgrid(k0 - dk, k0 + dk, 3);
    const auto c = modes::project(m, table, wgrid, e0);

    const double peak = L / std::sqrt(2.0 * M_PI);
    CHECK(std::abs(c.values[1]) == doctest::Approx(peak).epsilon(1e-6));
    CHECK(std::abs(c.values[0]) < 1e-3 * peak);
    CHECK(std::abs(c.values[2]) < 1e-3 * peak);
}

TEST_CASE("Gaussian packet projects to its Fourier transform") {
    const auto m = make_model();
    const double sigma = 1.0, k0 = 2.0;
    const AxisGrid grid(-20.0, 20.0, 2001);
    const auto table = wkb::build_phase_table(m, grid);
    const auto e0 = gaussian_packet(grid, sigma, k0);

    const FrequencyGrid wgrid(0.5, 3.5, 61);
    const auto c = modes::project(m, table, wgrid, e0);
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        const double w = wgrid.omega(j);
        const double expect = sigma * std::exp(-sigma * sigma * (w - k0) * (w - k0) / 2.0);
        CHECK(std::abs(c.values[j] - expect) < 1e-6 * sigma);
    }
}

TEST_CASE("project/reconstruct round trip recovers a band-limited packet") {
    const auto m = make_model();
    const AxisGrid grid(-20.0, 20.0, 1201);
    const auto table = wkb::build_phase_table(m, grid);
    const auto e0 = gaussian_packet(grid, 1.0, 5.0);

    const FrequencyGrid wgrid(1.0, 9.0, 161);
    const auto c = modes::project(m, table, wgrid, e0);
    const auto back = modes::reconstruct(m, table, c, 0.0);

    double err2 = 0.0, ref2 = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        err2 += std::norm(back.values[i] - e0.values[i]);
        ref2 += std::norm(e0.values[i]);
    }
    CHECK(std::sqrt(err2 / ref2) < 1e-3);
}

TEST_CASE("Kronecker mode function reconstructs a single stationary mode") {
    const auto m = make_model(ProfileFactor::lorentzian(1.0, 0.2, 3.0));
    const AxisGrid grid(-8.0, 8.0, 401);
    const auto table = wkb::build_phase_table(m, grid);

    const FrequencyGrid wgrid(1.0, 3.0, 21);
    const std::size_t j0 = 10;  // interior: trapezoid weight 1
    modes::ModeFunction c;
    c.grid = wgrid;
    c.values.assign(wgrid.n, {0.0, 0.0});
    c.values[j0] = 1.0 / wgrid.domega();

    for (double t : {0.0, 1.3}) {
        const auto e = modes::reconstruct(m, table, c, t);
        const auto expect = wkb::e_field_wkb(m, table, wgrid.omega(j0), t);
        for (std::size_t i = 0; i < grid.n; i += 20)
            CHECK(std::abs(e.values[i] - expect.values[i]) < 1e-13);
    }
}

TEST_CASE("Gram matrix is the identity at the natural spacing") {
    const auto m = make_model();
    const double L = 20.0;
    const AxisGrid grid(-L / 2.0, L / 2.0, 801);
    const auto table = wkb::build_phase_table(m, grid);
    const double dw = modes::natural_spacing(m, table, 2.0);
    CHECK(dw == doctest::Approx(2.0 * M_PI / L).epsilon(1e-14));

    const std::size_t nw = 10;
    const FrequencyGrid wgrid(1.0, 1.0 + dw * static_cast<double>(nw - 1), nw);
    const auto g = modes::discrete_gram(m, table, wgrid);
    for (std::size_t j = 0; j < nw; ++j)
        for (std::size_t k = 0; k < nw; ++k)
            CHECK(std::abs(g.at(j, k) - (j == k ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("Gram identity survives a constant dispersion factor") {
    const auto m = make_model(ProfileFactor::constant(1.0), DispersionFactor::constant(2.25));
    const double L = 20.0;
    const AxisGrid grid(-L / 2.0, L / 2.0, 801);
    const auto table = wkb::build_phase_table(m, grid);
    const double dw = modes::natural_spacing(m, table, 2.0);
    CHECK(dw == doctest::Approx(2.0 * M_PI / (L * 1.5)).epsilon(1e-14));

    const std::size_t nw = 8;
    const FrequencyGrid wgrid(1.0, 1.0 + dw * static_cast<double>(nw - 1), nw);
    const auto g = modes::discrete_gram(m, table, wgrid);
    for (std::size_t j = 0; j < nw; ++j)
        for (std::size_t k = 0; k < nw; ++k)
            CHECK(std::abs(g.at(j, k) - (j == k ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("taper keeps the Gram diagonal at unity and damps leakage") {
    const auto m = make_model();
    const double L = 20.0;
    const AxisGrid plain(-L / 2.0, L / 2.0, 801);
    const AxisGrid tapered(-L / 2.0, L / 2.0, 801, Taper{TaperKind::cosine, 0.4});
    const auto tp = wkb::build_phase_table(m, plain);
    const auto tt = wkb::build_phase_table(m, tapered);

    // Spacing 1.5x natural: off the sinc zeros, so leakage is visible.
    const double dw = 1.5 * modes::natural_spacing(m, tp, 2.0);
    const FrequencyGrid wgrid(1.0, 1.0 + dw * 7.0, 8);
    const auto gp = modes::discrete_gram(m, tp, wgrid);
    const auto gt = modes::discrete_gram(m, tt, wgrid);

    // Renormalized taper weights keep the diagonal at dw * L_eff / (2 pi)
    // with L_eff = L (1 - fraction); here 1.5 * 0.6 = 0.9.
    double leak_plain = 0.0, leak_tapered = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(std::abs(gt.at(j, j) - 0.9) < 1e-10);
        for (std::size_t k = 0; k < 8; ++k) {
            if (j == k || (j > k ? j - k : k - j) < 3) continue;  // far sidelobes only
            leak_plain = std::max(leak_plain, std::abs(gp.at(j, k)));
            leak_tapered = std::max(leak_tapered, std::abs(gt.at(j, k)));
        }
    }
    CHECK(leak_tapered < 0.5 * leak_plain);
}

TEST_CASE("tapered Gram is the identity at its own natural spacing") {
    const auto m = make_model();
    const AxisGrid grid(-100.0, 100.0, 2001, Taper{TaperKind::cosine, 0.1});
    const auto table = wkb::build_phase_table(m, grid);
    const double dw = modes::natural_spacing(m, table, 2.0);
    CHECK(dw == doctest::Approx(2.0 * M_PI / 180.0).epsilon(1e-14));

    const FrequencyGrid wgrid(2.0, 2.0 + dw * 15.0, 16);
    const auto g = modes::discrete_gram(m, table, wgrid);
    for (std::size_t j = 0; j < wgrid.n; ++j)
        for (std::size_t k = 0; k < wgrid.n; ++k)
            CHECK(std::abs(g.at(j, k) - (j == k ? 1.0 : 0.0)) < 1e-6);
}

TEST_CASE("completeness residual: zero field, covered band, missed band") {
    const auto m = make_model();
    const AxisGrid grid(-20.0, 20.0, 1201);
    const auto table = wkb::build_phase_table(m, grid);

    SampledField zero;
    zero.values.assign(grid.n, {0.0, 0.0});
    CHECK(modes::completeness_residual(m, table, FrequencyGrid(1.0, 9.0, 81), zero) == 0.0);

    const auto packet = gaussian_packet(grid, 1.0, 5.0);
    CHECK(modes::completeness_residual(m, table, FrequencyGrid(1.0, 9.0, 161), packet) < 1e-2);
    CHECK(modes::completeness_residual(m, table, FrequencyGrid(20.0, 28.0, 161), packet) > 0.5);
}

TEST_CASE("projection is linear") {
    const auto m = make_model(ProfileFactor::lorentzian(1.0, 0.3, 2.0));
    const AxisGrid grid(-10.0, 10.0, 501);
    const auto table = wkb::build_phase_table(m, grid);
    const FrequencyGrid wgrid(0.5, 4.0, 36);

    const auto e1 = gaussian_packet(grid, 1.0, 2.0);
    const auto e2 = gaussian_packet(grid, 2.0, 1.0);
    const std::complex<double> a{2.0, -1.0}, b{0.5, 3.0};
    SampledField mix;
    mix.values.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i)
        mix.values[i] = a * e1.values[i] + b * e2.values[i];

    const auto c1 = modes::project(m, table, wgrid, e1);
    const auto c2 = modes::project(m, table, wgrid, e2);
    const auto cm = modes::project(m, table, wgrid, mix);
    const double scale = std::max(max_abs(c1.values), max_abs(c2.values));
    for (std::size_t j = 0; j < wgrid.n; ++j)
        CHECK(std::abs(cm.values[j] - (a * c1.values[j] + b * c2.values[j])) <= 1e-12 * scale);
}

TEST_CASE("Parseval: mode-function power equals field power") {
    const auto m = make_model();
    const AxisGrid grid(-20.0, 20.0, 1201);
    const auto table = wkb::build_phase_table(m, grid);
    const double sigma = 1.0;
    const auto packet = gaussian_packet(grid, sigma, 5.0);

    const FrequencyGrid wgrid(1.0, 9.0, 161);
    const auto c = modes::project(m, table, wgrid, packet);
    double power = 0.0;
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        const double w = (j == 0 || j + 1 == wgrid.n) ? 0.5 : 1.0;
        power += w * std::norm(c.values[j]);
    }
    power *= wgrid.domega();
    CHECK(power == doctest::Approx(sigma * std::sqrt(M_PI)).epsilon(1e-3));
}

TEST_CASE("constant dispersion rescales the mode function covariantly") {
    // With eps1 = c1 constant, c_disp(w) = c1^{3/4} c_vac(sqrt(c1) w).
    const double c1 = 2.25, s = std::sqrt(c1);
    const auto vac = make_model();
    const auto disp = make_model(ProfileFactor::constant(1.0), DispersionFactor::constant(c1));
    const AxisGrid grid(-20.0, 20.0, 1201);
    const auto table = wkb::build_phase_table(vac, grid);   // eps2 identical
    const auto tableD = wkb::build_phase_table(disp, grid);
    const auto packet = gaussian_packet(grid, 1.0, 3.0);

    const FrequencyGrid wd(1.0, 3.0, 21);
    const FrequencyGrid wv(s * 1.0, s * 3.0, 21);
    const auto cd = modes::project(disp, tableD, wd, packet);
    const auto cv = modes::project(vac, table, wv, packet);
    const double peak = max_abs(cv.values);
    for (std::size_t j = 0; j < wd.n; ++j)
        CHECK(std::abs(cd.values[j] - std::pow(c1, 0.75) * cv.values[j]) <= 1e-10 * peak);
}

TEST_CASE("profile contrast shows up in the mode function, linearly in a") {
    const AxisGrid grid(-20.0, 20.0, 1201);
    const FrequencyGrid wgrid(3.0, 7.0, 81);
    const auto packet = gaussian_packet(grid, 1.0, 5.0);

    const auto mode_for = [&](double a) {
        const auto m = a > 0.0 ? make_model(ProfileFactor::lorentzian(1.0, a, 4.0))
                               : make_model(ProfileFactor::constant(1.0));
        const auto table = wkb::build_phase_table(m, grid);
        return modes::project(m, table, wgrid, packet);
    };
    const auto c0 = mode_for(0.0);
    const auto dev = [&](double a) {
        const auto c = mode_for(a);
        double d = 0.0;
        for (std::size_t j = 0; j < wgrid.n; ++j) d += std::norm(c.values[j] - c0.values[j]);
        return std::sqrt(d);
    };
    const double d1 = dev(0.01), d2 = dev(0.02), d4 = dev(0.04);
    CHECK(d1 > 0.0);
    CHECK(d2 / d1 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(d4 / d2 == doctest::Approx(2.0).epsilon(0.2));
}
