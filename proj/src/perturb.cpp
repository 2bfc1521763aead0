#include "dispwave/perturb.hpp"

#include <cmath>
#include <limits>

#include "dispwave/numerics.hpp"
#include "dispwave/wkb.hpp"

namespace dispwave {
namespace perturb {

MediumModel LorentzCase::make_model(double a_value) const {
    MediumModel model;
    model.eps1 = eps1;
    model.mu1 = DispersionFactor::constant(1.0);
    model.eps2 = a_value > 0.0 ? media::ProfileFactor::lorentzian(units.eps0, a_value, gamma)
                               : media::ProfileFactor::constant(units.eps0);
    model.mu2 = media::ProfileFactor::constant(units.mu0);
    model.units = units;
    model.window = window;
    return model;
}

PlaneWaveConstants plane_wave_constants(const MediumModel& model, double omega) {
    if (!model.homogeneous())
        throw NotHomogeneous("plane_wave_constants: eps2, mu2 must be constant");
    const double eps = model.eps1.value(omega) * model.eps2.value(0.0);
    const double mu = model.mu1.value(omega) * model.mu2.value(0.0);
    const double n = media::n1(model, omega);
    const double np = media::n1_derivative(model, omega);

    PlaneWaveConstants pw;
    pw.amplitude = std::pow(mu / eps, 0.25) *
                   std::sqrt((1.0 + omega * np / n) / (2.0 * M_PI));
    pw.wavenumber = omega * std::sqrt(eps * mu);

    // k = w n1 / v2 must agree with w sqrt(eps mu).
    const double v2 = 1.0 / std::sqrt(model.eps2.value(0.0) * model.mu2.value(0.0));
    const double k_alt = omega * n / v2;
    if (std::abs(k_alt - pw.wavenumber) > 1e-12 * std::max(1.0, std::abs(pw.wavenumber)))
        throw Error("plane_wave_constants: internal wavenumber identity violated");
    return pw;
}

double medium_wavenumber(const LorentzCase& lc, double omega) {
    const double c = lc.units.c;
    return omega * std::sqrt(lc.eps1.value(omega)) / c;
}

double resonant_frequency(const LorentzCase& lc) {
    const double lo = lc.window.omega_min;
    const double hi = lc.window.omega_max;
    if (!(hi > lo)) throw OutOfRange("resonant_frequency: no declared frequency window");
    return bisect_monotone([&](double w) { return medium_wavenumber(lc, w) - lc.k; }, lo, hi,
                           1e-13 * std::max(1.0, lc.k), 0.0);
}

double mode_prefactor(const LorentzCase& lc, double omega) {
    const double e1 = lc.eps1.value(omega);
    const double e1p = lc.eps1.derivative(omega);
    const double c = lc.units.c;

    // Input amplitude A, pinned at the resonant frequency of the background.
    const MediumModel background = lc.make_model(0.0);
    const double amp = plane_wave_constants(background, resonant_frequency(lc)).amplitude;

    return amp * std::sqrt((2.0 * M_PI * lc.units.eps0 * std::pow(e1, 1.5) / c) *
                           (1.0 + omega * e1p / (2.0 * e1)));
}

double default_exclusion_radius(const LorentzCase& lc, double window_length) {
    // Three window-kernel widths (the smeared delta) or the bracket's own
    // divergence scale, whichever is wider.
    return std::max(3.0 * 2.0 * M_PI / window_length, 0.2 / lc.gamma);
}

FirstOrderModeFunction mode_function_first_order(const LorentzCase& lc,
                                                 const FrequencyGrid& wgrid,
                                                 double exclusion_radius, bool strict) {
    FirstOrderModeFunction out;
    out.grid = wgrid;
    out.smooth.assign(wgrid.n, 0.0);
    out.excluded.assign(wgrid.n, false);
    out.omega_star = resonant_frequency(lc);
    out.delta_weight = mode_prefactor(lc, out.omega_star);

    const std::vector<double> bracket = analytic_bracket(lc, wgrid);
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        const double w = wgrid.omega(j);
        const double delta = lc.k - medium_wavenumber(lc, w);
        if (std::abs(delta) < exclusion_radius) {
            if (strict) throw ResonanceProximity(w);
            out.excluded[j] = true;
            out.smooth[j] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        out.smooth[j] = bracket[j] * lc.a;
    }
    return out;
}

std::vector<double> analytic_bracket(const LorentzCase& lc, const FrequencyGrid& wgrid) {
    std::vector<double> out(wgrid.n);
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        const double w = wgrid.omega(j);
        const double bigk = medium_wavenumber(lc, w);
        const double delta = lc.k - bigk;
        out[j] = mode_prefactor(lc, w) * lc.gamma *
                 std::exp(-lc.gamma * std::abs(delta)) * (3.0 * lc.k - bigk) / (8.0 * delta);
    }
    return out;
}

ModeFunction numeric_mode_derivative(const LorentzCase& lc, const AxisGrid& zgrid,
                                     const FrequencyGrid& wgrid, double a1, double a2) {
    if (a1 == a2) throw DegenerateStep("numeric_mode_derivative: a1 and a2 must differ");

    // Windowed plane wave of Eq-39 form; amplitude pinned at the resonance.
    const MediumModel background = lc.make_model(0.0);
    const double amp = plane_wave_constants(background, resonant_frequency(lc)).amplitude;
    SampledField e0;
    e0.label = "plane_wave";
    e0.values.resize(zgrid.n);
    for (std::size_t i = 0; i < zgrid.n; ++i)
        e0.values[i] = amp * std::polar(1.0, lc.k * zgrid.z(i));

    const auto run = [&](double a_value) {
        const MediumModel model = lc.make_model(a_value);
        const wkb::PhaseTable table = wkb::build_phase_table(model, zgrid);
        return modes::project(model, table, wgrid, e0);
    };
    const ModeFunction c1 = run(a1);
    const ModeFunction c2 = run(a2);

    ModeFunction d;
    d.grid = wgrid;
    d.source = "d c/d a, a in {" + std::to_string(a1) + ", " + std::to_string(a2) + "}";
    d.values.resize(wgrid.n);
    for (std::size_t j = 0; j < wgrid.n; ++j)
        d.values[j] = (c2.values[j] - c1.values[j]) / (a2 - a1);
    return d;
}

DecayFit fit_decay(const LorentzCase& lc, const ModeFunction& derivative, double lo, double hi) {
    const std::vector<double> bracket = analytic_bracket(lc, derivative.grid);
    std::vector<double> xs, ys;
    DecayFit fit;
    for (std::size_t j = 0; j < derivative.grid.n; ++j) {
        const double w = derivative.grid.omega(j);
        const double bigk = medium_wavenumber(lc, w);
        const double delta = lc.k - bigk;
        const double gd = lc.gamma * std::abs(delta);
        if (gd < lo || gd > hi) continue;

        const double numeric = derivative.values[j].real();
        const double rel = std::abs(numeric - bracket[j]) / std::abs(bracket[j]);
        fit.max_rel_deviation = std::max(fit.max_rel_deviation, rel);

        // Divide out the algebraic prefactor, leaving exp(-gamma |delta|).
        const double algebraic =
            mode_prefactor(lc, w) * lc.gamma * (3.0 * lc.k - bigk) / (8.0 * delta);
        const double ratio = numeric / algebraic;
        if (ratio > 0.0) {
            xs.push_back(std::abs(delta));
            ys.push_back(std::log(ratio));
        }
    }
    fit.samples = xs.size();
    if (fit.samples >= 2) fit.rate = -fit_line(xs, ys).first;
    return fit;
}

}  // namespace perturb
}  // namespace dispwave
