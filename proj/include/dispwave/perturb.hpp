#pragma once

#include <vector>

#include "dispwave/grid.hpp"
#include "dispwave/media.hpp"
#include "dispwave/modes.hpp"

namespace dispwave {
namespace perturb {

using media::DispersionFactor;
using media::MediumModel;
using media::Units;
using modes::ModeFunction;

// Nonmagnetic medium (mu1 = 1, mu2 = mu0) with the Lorentzian profile
//   eps2(z) = eps0 (1 + a / (1 + z^2/gamma^2))
// probed by an initial plane wave of wavenumber k.
struct LorentzCase {
    double a = 0.0;        // inhomogeneity strength
    double gamma = 1.0;    // inhomogeneity width
    DispersionFactor eps1 = DispersionFactor::constant(1.0);
    double k = 1.0;        // input plane-wave wavenumber
    Units units;
    media::FrequencyWindow window;

    // Medium with the profile strength overridden (a = 0 gives the
    // homogeneous background).
    MediumModel make_model(double a_value) const;
    MediumModel make_model() const { return make_model(a); }
};

struct PlaneWaveConstants {
    double amplitude;   // A
    double wavenumber;  // k = w sqrt(eps mu)
};

// A and k of the exact plane-wave solution in a homogeneous medium.
PlaneWaveConstants plane_wave_constants(const MediumModel& model, double omega);

// Medium wavenumber K(w) = w sqrt(eps1(w)) / c.
double medium_wavenumber(const LorentzCase& lc, double omega);

// Prefactor of the first-order mode function,
//   Afrak(w) = A sqrt( (2 pi eps0 eps1^{3/2} / c) (1 + w eps1'/(2 eps1)) ),
// with A the input plane wave's amplitude (taken at the resonant frequency).
double mode_prefactor(const LorentzCase& lc, double omega);

// Frequency solving k = K(w) on the declared window.
double resonant_frequency(const LorentzCase& lc);

// Exclusion radius (in wavenumber units) keeping both the window-smeared
// delta peak and the bracket's divergence out of the comparison.
double default_exclusion_radius(const LorentzCase& lc, double window_length);

struct FirstOrderModeFunction {
    FrequencyGrid grid;
    std::vector<double> smooth;     // order-a part, real by symmetry
    std::vector<bool> excluded;     // samples inside the exclusion radius
    double omega_star = 0.0;        // location of the delta term
    double delta_weight = 0.0;      // Afrak(omega_star)
};

// Order-a part of the first-order mode function,
//   Afrak(w) * exp(-gamma |k - K|) (3k - K) / (8 (k - K)) * gamma * a,
// with the delta term reported separately as (omega_star, Afrak(omega_star)).
// With strict = true, any sample inside the exclusion radius throws
// ResonanceProximity; otherwise such samples are flagged and set to NaN.
FirstOrderModeFunction mode_function_first_order(const LorentzCase& lc,
                                                 const FrequencyGrid& wgrid,
                                                 double exclusion_radius, bool strict = true);

// d c(w; a) / da at the analytic order-a level (the bracket of the
// first-order formula without the factor a).
std::vector<double> analytic_bracket(const LorentzCase& lc, const FrequencyGrid& wgrid);

// Independent numerical realization: projects the windowed plane wave for
// two profile strengths and returns the finite difference
// (c(w; a2) - c(w; a1)) / (a2 - a1).  The delta term cancels in the
// difference away from its window smearing.
ModeFunction numeric_mode_derivative(const LorentzCase& lc, const AxisGrid& zgrid,
                                     const FrequencyGrid& wgrid, double a1, double a2);

struct DecayFit {
    double rate = 0.0;           // fitted exponential rate vs |k - K|
    double max_rel_deviation = 0.0;  // vs the analytic bracket on the fit window
    std::size_t samples = 0;
};

// Fits exp(-rate |k - K|) to the numeric derivative after dividing out the
// algebraic prefactor, over samples with gamma |k - K| in [lo, hi].
DecayFit fit_decay(const LorentzCase& lc, const ModeFunction& derivative, double lo, double hi);

}  // namespace perturb
}  // namespace dispwave
