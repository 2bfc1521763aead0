#include "dispwave/wkb.hpp"

#include <cmath>
#include <limits>

namespace dispwave {
namespace wkb {

namespace {

// Cumulative integral of g from `a` over `cells` uniform cells, two Simpson
// subintervals per cell; returns values at the cell boundaries (cells+1 of them).
std::vector<double> cumulative_simpson(const std::function<double(double)>& g, double a,
                                       double h, std::size_t cells) {
    std::vector<double> cum(cells + 1, 0.0);
    double left = g(a);
    for (std::size_t i = 0; i < cells; ++i) {
        const double x0 = a + h * static_cast<double>(i);
        const double mid = g(x0 + 0.5 * h);
        const double right = g(x0 + h);
        cum[i + 1] = cum[i] + h / 6.0 * (left + 4.0 * mid + right);
        left = right;
    }
    return cum;
}

double slowness(const MediumModel& model, double z) {
    return std::sqrt(model.eps2.value(z) * model.mu2.value(z));  // 1/v2
}

}  // namespace

PhaseTable build_phase_table(const MediumModel& model, const AxisGrid& grid) {
    PhaseTable table;
    table.grid = grid;
    table.v2.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double s = slowness(model, grid.z(i));
        if (!(s > 0.0)) throw Error("build_phase_table: eps2*mu2 must be positive on the grid");
        table.v2[i] = 1.0 / s;
    }

    const auto g = [&](double z) { return slowness(model, z); };
    const double dz = grid.dz();

    // Fine pass: half-cell Simpson (4 function samples per grid cell);
    // coarse pass: one Simpson cell per grid cell.  Their disagreement at
    // the grid nodes is the convergence gate.
    const std::size_t half_cells = 2 * (grid.n - 1);
    const std::vector<double> fine = cumulative_simpson(g, grid.z_min, 0.5 * dz, half_cells);
    const std::vector<double> coarse = cumulative_simpson(g, grid.z_min, dz, grid.n - 1);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double uf = fine[2 * i];
        const double uc = coarse[i];
        if (std::abs(uf - uc) > 1e-8 * std::max(1.0, std::abs(uf)))
            throw GridTooCoarse("phase integral not converged at z = " + std::to_string(grid.z(i)) +
                                "; refine the axis grid");
    }

    // Shift so that u2(0) = 0.
    double u_at_zero;
    if (grid.z_min <= 0.0 && grid.z_max >= 0.0) {
        // Linear interpolation between the bracketing half-cell samples.
        const double pos = (0.0 - grid.z_min) / (0.5 * dz);
        std::size_t j = static_cast<std::size_t>(pos);
        if (j >= half_cells) j = half_cells - 1;
        const double frac = pos - static_cast<double>(j);
        u_at_zero = fine[j] * (1.0 - frac) + fine[j + 1] * frac;
    } else {
        // Grid does not straddle z = 0: integrate from 0 to z_min separately.
        const double span = std::abs(grid.z_min);
        std::size_t cells = static_cast<std::size_t>(std::ceil(span / (0.5 * dz)));
        if (cells == 0) cells = 1;
        const double h = grid.z_min / static_cast<double>(cells);  // signed step
        const std::vector<double> head = cumulative_simpson(g, 0.0, h, cells);
        u_at_zero = -head.back();  // u2(z_min) measured from 0, negated below
    }

    table.u2.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) table.u2[i] = fine[2 * i] - u_at_zero;
    return table;
}

SampledField psi_wkb(const MediumModel& model, const PhaseTable& table, double omega) {
    const auto fd = media::f_and_derivative(model, omega);
    SampledField psi;
    psi.label = "psi_wkb";
    psi.values.resize(table.grid.n);
    for (std::size_t i = 0; i < table.grid.n; ++i) {
        const double amp = std::sqrt(fd.fprime / (2.0 * M_PI * table.v2[i]));
        psi.values[i] = std::polar(amp, fd.f * table.u2[i]);
    }
    return psi;
}

SampledField e_field_wkb(const MediumModel& model, const PhaseTable& table, double omega,
                         double t) {
    SampledField e = psi_wkb(model, table, omega);
    e.label = "e_field_wkb";
    const double eps1 = model.eps1.value(omega);
    const std::complex<double> rot = std::polar(1.0, -omega * t);
    for (std::size_t i = 0; i < table.grid.n; ++i) {
        const double eps2 = model.eps2.value(table.grid.z(i));
        e.values[i] *= rot / std::sqrt(eps1 * eps2);
    }
    return e;
}

double ValidityReport::margin_at(double omega) const {
    if (max_lhs == 0.0) return std::numeric_limits<double>::infinity();
    return omega * omega / max_lhs;
}

ValidityReport validity_functional(const MediumModel& model, const AxisGrid& grid) {
    // Second derivatives of a sparse tabulated profile are spline noise;
    // refuse rather than report an unstable number.
    for (const auto* p : {&model.eps2, &model.mu2}) {
        if (p->kind() == media::ProfileFactor::Kind::tabulated && p->sample_count() < 16)
            throw DerivativeUnavailable(
                "tabulated profile has fewer than 16 samples; second derivatives are unstable");
    }

    ValidityReport report;
    report.grid = grid;
    report.lhs.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double z = grid.z(i);
        const double e = model.eps2.value(z), ep = model.eps2.deriv(z), epp = model.eps2.deriv2(z);
        const double m = model.mu2.value(z), mp = model.mu2.deriv(z), mpp = model.mu2.deriv2(z);

        // v2 = (eps2 mu2)^{-1/2} and its derivatives via g = eps2 mu2.
        const double g = e * m;
        const double gp = ep * m + e * mp;
        const double gpp = epp * m + 2.0 * ep * mp + e * mpp;
        const double v = 1.0 / std::sqrt(g);
        const double vp = -0.5 * gp * std::pow(g, -1.5);
        const double vpp = 0.75 * gp * gp * std::pow(g, -2.5) - 0.5 * gpp * std::pow(g, -1.5);

        const double term_v = (2.0 * v * vpp - vp * vp) / (2.0 * v * v);
        const double term_m = (2.0 * m * mpp - 3.0 * mp * mp) / (2.0 * m * m);
        report.lhs[i] = 0.5 * v * v * std::abs(term_v + term_m);
        if (report.lhs[i] > report.max_lhs) report.max_lhs = report.lhs[i];
    }
    return report;
}

}  // namespace wkb
}  // namespace dispwave
