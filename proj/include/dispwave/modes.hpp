#pragma once

#include <vector>

#include "dispwave/grid.hpp"
#include "dispwave/media.hpp"
#include "dispwave/wkb.hpp"

namespace dispwave {
namespace modes {

using media::MediumModel;
using wkb::PhaseTable;

// Mode-function samples c(w_j) over a frequency grid.
struct ModeFunction {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
    std::string source;
};

// Square matrix stored row-major.
struct GramMatrix {
    std::size_t n = 0;
    std::vector<std::complex<double>> entries;
    std::complex<double> at(std::size_t j, std::size_t k) const { return entries[j * n + k]; }
};

// c(w) = sqrt(eps1(w)) * integral sqrt(eps2(z)) psi_w(z)^* E0(z) dz,
// trapezoid on the axis grid; the grid's taper is applied to E0.
ModeFunction project(const MediumModel& model, const PhaseTable& table,
                     const FrequencyGrid& wgrid, const SampledField& e0);

// E(z, t) = integral c(w) E_w(z, t) dw, trapezoid on the frequency grid.
SampledField reconstruct(const MediumModel& model, const PhaseTable& table,
                         const ModeFunction& c, double t);

// Discrete realization of the orthonormality relation: G(j,k) =
// dw * dz * sum_i psi_{w_j}^*(z_i) psi_{w_k}(z_i), which identifies
// delta(w - w') with Kronecker/dw and should approximate the identity at
// the window's natural frequency spacing.  Taper weights (normalized to
// preserve the window length) suppress edge leakage.
GramMatrix discrete_gram(const MediumModel& model, const PhaseTable& table,
                         const FrequencyGrid& wgrid);

// Rayleigh spacing dw = 2 pi v2 / (L f'(w_ref)) that makes the Gram
// diagonal unity in a homogeneous medium.
double natural_spacing(const MediumModel& model, const PhaseTable& table, double omega_ref);

// || sum_j dw <psi_j, phi> psi_j - phi || / ||phi|| with phi =
// sqrt(eps2) * test_field (tapered as in project); 0 for a zero field.
double completeness_residual(const MediumModel& model, const PhaseTable& table,
                             const FrequencyGrid& wgrid, const SampledField& test_field);

}  // namespace modes
}  // namespace dispwave
