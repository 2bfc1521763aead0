#pragma once

#include <vector>

#include "dispwave/grid.hpp"
#include "dispwave/media.hpp"

namespace dispwave {
namespace wkb {

using media::MediumModel;

// Tabulated phase machinery on an axis grid:
//   v2(z) = 1 / sqrt(eps2(z) mu2(z))
//   u2(z) = integral_0^z dz' / v2(z')
// The phase origin u2(0) = 0 is fixed even when z = 0 is not a grid node.
struct PhaseTable {
    AxisGrid grid;
    std::vector<double> v2;
    std::vector<double> u2;
};

// v2 pointwise; u2 by composite Simpson on a 4x-refined grid, with a
// 2x-vs-4x agreement check (relative 1e-8) that reports GridTooCoarse.
PhaseTable build_phase_table(const MediumModel& model, const AxisGrid& grid);

// Delta-normalized WKB eigenfunction
//   psi_w(z) = sqrt(f'(w) / (2 pi v2(z))) exp(i f(w) u2(z)).
SampledField psi_wkb(const MediumModel& model, const PhaseTable& table, double omega);

// Time-harmonic field E_w(z,t) = exp(-i w t) psi_w(z) / sqrt(eps1(w) eps2(z)).
SampledField e_field_wkb(const MediumModel& model, const PhaseTable& table, double omega,
                         double t);

// Pointwise WKB validity functional
//   lhs(z) = (v2^2/2) | (2 v2 v2'' - v2'^2)/(2 v2^2)
//                     + (2 mu2 mu2'' - 3 mu2'^2)/(2 mu2^2) |,
// to be compared against w^2.
struct ValidityReport {
    AxisGrid grid;
    std::vector<double> lhs;
    double max_lhs = 0.0;

    // w^2 / max(lhs); infinity for a homogeneous medium (lhs == 0).
    double margin_at(double omega) const;
};

ValidityReport validity_functional(const MediumModel& model, const AxisGrid& grid);

}  // namespace wkb
}  // namespace dispwave
