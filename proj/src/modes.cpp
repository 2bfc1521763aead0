#include "dispwave/modes.hpp"

#include <cmath>

#include "dispwave/numerics.hpp"

namespace dispwave {
namespace modes {

namespace {

double trap_weight(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

// psi_w sampled on the table grid, computed from the phase table directly.
void fill_psi(const MediumModel& model, const PhaseTable& table, double omega,
              std::complex<double>* out) {
    const auto fd = media::f_and_derivative(model, omega);
    for (std::size_t i = 0; i < table.grid.n; ++i) {
        const double amp = std::sqrt(fd.fprime / (2.0 * M_PI * table.v2[i]));
        out[i] = std::polar(amp, fd.f * table.u2[i]);
    }
}

}  // namespace

ModeFunction project(const MediumModel& model, const PhaseTable& table,
                     const FrequencyGrid& wgrid, const SampledField& e0) {
    const AxisGrid& grid = table.grid;
    if (e0.size() != grid.n) throw Error("project: initial field must live on the axis grid");

    // Tapered, eps2-weighted initial data; shared across frequencies.
    std::vector<std::complex<double>> weighted(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        weighted[i] = std::sqrt(model.eps2.value(grid.z(i))) * grid.taper_weight(i) *
                      trap_weight(i, grid.n) * e0.values[i];
    }

    ModeFunction c;
    c.grid = wgrid;
    c.source = e0.label;
    c.values.assign(wgrid.n, {0.0, 0.0});
    const double dz = grid.dz();

    std::vector<std::complex<double>> psi(grid.n);
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        const double w = wgrid.omega(j);
        fill_psi(model, table, w, psi.data());
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t i = 0; i < grid.n; ++i) sum += std::conj(psi[i]) * weighted[i];
        c.values[j] = std::sqrt(model.eps1.value(w)) * sum * dz;
    }
    return c;
}

SampledField reconstruct(const MediumModel& model, const PhaseTable& table,
                         const ModeFunction& c, double t) {
    const AxisGrid& grid = table.grid;
    if (c.values.size() != c.grid.n) throw Error("reconstruct: mode function off its grid");

    std::vector<double> inv_sqrt_eps2(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i)
        inv_sqrt_eps2[i] = 1.0 / std::sqrt(model.eps2.value(grid.z(i)));

    SampledField e;
    e.label = "reconstructed_field";
    e.values.assign(grid.n, {0.0, 0.0});
    const double dw = c.grid.domega();

    std::vector<std::complex<double>> psi(grid.n);
    for (std::size_t j = 0; j < c.grid.n; ++j) {
        const double w = c.grid.omega(j);
        fill_psi(model, table, w, psi.data());
        const double inv_sqrt_eps1 = 1.0 / std::sqrt(model.eps1.value(w));
        const std::complex<double> coeff = c.values[j] * trap_weight(j, c.grid.n) * dw *
                                           std::polar(1.0, -w * t) * inv_sqrt_eps1;
        for (std::size_t i = 0; i < grid.n; ++i)
            e.values[i] += coeff * psi[i] * inv_sqrt_eps2[i];
    }
    return e;
}

// A cosine-tapered window is a flat window of the effective length
// L (1 - fraction) convolved with a half-cosine kernel, so its transform
// zeros -- and hence the Rayleigh spacing -- follow the effective length.
static double effective_length(const AxisGrid& grid) {
    const double frac = grid.taper.kind == TaperKind::cosine ? grid.taper.fraction : 0.0;
    return grid.length() * (1.0 - frac);
}

double natural_spacing(const MediumModel& model, const PhaseTable& table, double omega_ref) {
    const double v2 = table.v2[table.grid.n / 2];
    const double fp = media::f_and_derivative(model, omega_ref).fprime;
    return 2.0 * M_PI * v2 / (effective_length(table.grid) * fp);
}

GramMatrix discrete_gram(const MediumModel& model, const PhaseTable& table,
                         const FrequencyGrid& wgrid) {
    const AxisGrid& grid = table.grid;
    const double dz = grid.dz();

    // Taper weights renormalized to preserve the effective window length,
    // so the delta-to-Kronecker conversion keeps the diagonal at unity at
    // the natural spacing.
    std::vector<double> wt(grid.n);
    double mass = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        wt[i] = grid.taper_weight(i) * trap_weight(i, grid.n);
        mass += wt[i] * dz;
    }
    const double renorm = effective_length(grid) / mass;
    for (double& x : wt) x *= renorm;

    std::vector<std::complex<double>> psi(wgrid.n * grid.n);
    parallel_for(wgrid.n, [&](std::size_t j) {
        fill_psi(model, table, wgrid.omega(j), psi.data() + j * grid.n);
    });

    GramMatrix gram;
    gram.n = wgrid.n;
    gram.entries.assign(wgrid.n * wgrid.n, {0.0, 0.0});
    const double dw = wgrid.domega();
    parallel_for(wgrid.n, [&](std::size_t j) {
        for (std::size_t k = 0; k < wgrid.n; ++k) {
            std::complex<double> sum{0.0, 0.0};
            const std::complex<double>* pj = psi.data() + j * grid.n;
            const std::complex<double>* pk = psi.data() + k * grid.n;
            for (std::size_t i = 0; i < grid.n; ++i) sum += std::conj(pj[i]) * pk[i] * wt[i];
            gram.entries[j * wgrid.n + k] = sum * dz * dw;
        }
    });
    return gram;
}

double completeness_residual(const MediumModel& model, const PhaseTable& table,
                             const FrequencyGrid& wgrid, const SampledField& test_field) {
    const AxisGrid& grid = table.grid;
    if (test_field.size() != grid.n)
        throw Error("completeness_residual: field must live on the axis grid");

    std::vector<std::complex<double>> phi(grid.n);
    double phi_norm2 = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
        phi[i] = std::sqrt(model.eps2.value(grid.z(i))) * grid.taper_weight(i) *
                 test_field.values[i];
        phi_norm2 += std::norm(phi[i]);
    }
    if (phi_norm2 == 0.0) return 0.0;

    const double dz = grid.dz();
    const double dw = wgrid.domega();
    std::vector<std::complex<double>> projected(grid.n, {0.0, 0.0});
    std::vector<std::complex<double>> psi(grid.n);
    for (std::size_t j = 0; j < wgrid.n; ++j) {
        fill_psi(model, table, wgrid.omega(j), psi.data());
        std::complex<double> inner{0.0, 0.0};
        for (std::size_t i = 0; i < grid.n; ++i)
            inner += std::conj(psi[i]) * phi[i] * trap_weight(i, grid.n);
        inner *= dz;
        const std::complex<double> coeff = inner * trap_weight(j, wgrid.n) * dw;
        for (std::size_t i = 0; i < grid.n; ++i) projected[i] += coeff * psi[i];
    }

    double err2 = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) err2 += std::norm(projected[i] - phi[i]);
    return std::sqrt(err2 / phi_norm2);
}

}  // namespace modes
}  // namespace dispwave
