#include "dispwave/spectral.hpp"

#include <cmath>
#include <cstddef>
#include <lapacke.h>

namespace dispwave {
namespace spectral {

std::vector<double> DiscreteOperator::apply(const std::vector<double>& x) const {
    const std::size_t m = size();
    std::vector<double> y(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double v = diag[j] * x[j];
        if (j > 0) v += off[j - 1] * x[j - 1];
        if (j + 1 < m) v += off[j] * x[j + 1];
        y[j] = v;
    }
    if (boundary == Boundary::periodic && corner != 0.0) {
        y[0] += corner * x[m - 1];
        y[m - 1] += corner * x[0];
    }
    return y;
}

double DiscreteOperator::norm_estimate() const {
    const std::size_t m = size();
    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double row = std::abs(diag[j]);
        if (j > 0) row += std::abs(off[j - 1]);
        if (j + 1 < m) row += std::abs(off[j]);
        if (boundary == Boundary::periodic && (j == 0 || j == m - 1)) row += std::abs(corner);
        if (row > best) best = row;
    }
    return best;
}

DiscreteOperator discretize_h2(const MediumModel& model, const AxisGrid& grid,
                               Boundary boundary) {
    if (grid.n < 16) throw Error("discretize_h2: need at least 16 grid points");
    const double dz = grid.dz();
    const double inv_dz2 = 1.0 / (dz * dz);

    DiscreteOperator op;
    op.grid = grid;
    op.boundary = boundary;

    const std::size_t m = boundary == Boundary::dirichlet ? grid.n - 2 : grid.n - 1;
    const std::size_t first = boundary == Boundary::dirichlet ? 1 : 0;

    op.s.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double e = model.eps2.value(grid.z(first + j));
        if (!(e > 0.0)) throw Error("discretize_h2: eps2 must be positive on the grid");
        op.s[j] = 1.0 / std::sqrt(e);
    }

    // mu2^{-1} at half points around the unknown nodes.
    const auto mu_inv_half = [&](double z_half) {
        const double mu = model.mu2.value(z_half);
        if (!(mu > 0.0)) throw Error("discretize_h2: mu2 must be positive on the grid");
        return 1.0 / mu;
    };

    op.diag.resize(m);
    op.off.assign(m > 0 ? m - 1 : 0, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double zc = grid.z(first + j);
        const double ml = mu_inv_half(zc - 0.5 * dz);
        const double mr = mu_inv_half(zc + 0.5 * dz);
        op.diag[j] = op.s[j] * op.s[j] * (ml + mr) * inv_dz2;
        if (j + 1 < m) op.off[j] = -op.s[j] * op.s[j + 1] * mr * inv_dz2;
    }
    if (boundary == Boundary::periodic)
        op.corner = -op.s[0] * op.s[m - 1] * mu_inv_half(grid.z_min - 0.5 * dz) * inv_dz2;
    return op;
}

namespace {

void fix_sign(std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) return;
    for (double x : v) {
        if (std::abs(x) > 1e-8 * peak) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

std::vector<EigenPair> eigensolve(const DiscreteOperator& op, std::size_t k) {
    const std::size_t m = op.size();
    if (k < 1 || k > m) throw Error("eigensolve: k must lie in [1, matrix size]");

    std::vector<double> w(m, 0.0);
    std::vector<double> z(m * k, 0.0);

    if (op.boundary == Boundary::dirichlet) {
        std::vector<double> d = op.diag;
        std::vector<double> e(m, 0.0);
        for (std::size_t j = 0; j + 1 < m; ++j) e[j] = op.off[j];
        lapack_int found = 0;
        std::vector<lapack_int> isuppz(2 * k);
        const lapack_int info = LAPACKE_dstevr(
            LAPACK_COL_MAJOR, 'V', 'I', static_cast<lapack_int>(m), d.data(), e.data(), 0.0, 0.0,
            1, static_cast<lapack_int>(k), 0.0, &found, w.data(), z.data(),
            static_cast<lapack_int>(m), isuppz.data());
        if (info != 0 || static_cast<std::size_t>(found) < k)
            throw ConvergenceFailure("dstevr failed, info = " + std::to_string(info));
    } else {
        // Corner entry breaks the tridiagonal structure; go dense.
        std::vector<double> a(m * m, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            a[j + j * m] = op.diag[j];
            if (j + 1 < m) a[j + (j + 1) * m] = op.off[j];
        }
        a[0 + (m - 1) * m] = op.corner;
        std::vector<double> wall(m, 0.0);
        const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U',
                                               static_cast<lapack_int>(m), a.data(),
                                               static_cast<lapack_int>(m), wall.data());
        if (info != 0) throw ConvergenceFailure("dsyevd failed, info = " + std::to_string(info));
        for (std::size_t i = 0; i < k; ++i) {
            w[i] = wall[i];
            for (std::size_t j = 0; j < m; ++j) z[j + i * m] = a[j + i * m];
        }
    }

    const double dz = op.grid.dz();
    const double scale = 1.0 / std::sqrt(dz);  // unit norm -> box norm
    std::vector<EigenPair> pairs(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> v(z.begin() + static_cast<std::ptrdiff_t>(i * m),
                              z.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
        fix_sign(v);
        pairs[i].lambda = w[i];
        pairs[i].vector.label = "eigvec_" + std::to_string(i);
        pairs[i].vector.values.assign(op.grid.n, 0.0);
        const std::size_t first = op.boundary == Boundary::dirichlet ? 1 : 0;
        for (std::size_t j = 0; j < m; ++j) pairs[i].vector.values[first + j] = v[j] * scale;
        if (op.boundary == Boundary::periodic)
            pairs[i].vector.values[op.grid.n - 1] = pairs[i].vector.values[0];
    }
    return pairs;
}

double omega_from_lambda(const MediumModel& model, double lambda) {
    if (lambda < 0.0) throw OutOfRange("omega_from_lambda: negative eigenvalue");
    const double target = std::sqrt(lambda);
    const double lo = model.window.omega_min;
    const double hi = model.window.omega_max;
    if (!(hi > lo)) throw OutOfRange("omega_from_lambda: model has no declared frequency window");
    const double flo = media::f_and_derivative(model, lo).f;
    const double fhi = media::f_and_derivative(model, hi).f;
    if (target < flo || target > fhi)
        throw OutOfRange("omega_from_lambda: sqrt(lambda) = " + std::to_string(target) +
                         " outside f([window])");
    return bisect_monotone([&](double w) { return media::f_and_derivative(model, w).f - target; },
                           lo, hi, 1e-12 * std::max(1.0, target), 0.0);
}

NonDispersiveEvolution::NonDispersiveEvolution(const MediumModel& model, const AxisGrid& grid,
                                               Boundary boundary, const SampledField& e0,
                                               const SampledField& e0dot)
    : grid_(grid), boundary_(boundary) {
    if (!model.non_dispersive())
        throw Error("evolve_nondispersive requires eps1 = mu1 = 1");
    if (e0.size() != grid.n || e0dot.size() != grid.n)
        throw Error("evolve_nondispersive: initial fields must live on the axis grid");

    DiscreteOperator op = discretize_h2(model, grid, boundary);
    const std::size_t m = op.size();
    eigs_ = eigensolve(op, m);
    zero_floor_ = 1e-12 * op.norm_estimate();

    inv_sqrt_eps2_.resize(grid.n);
    std::vector<std::complex<double>> psi0(grid.n), psidot0(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double se = std::sqrt(model.eps2.value(grid.z(i)));
        inv_sqrt_eps2_[i] = 1.0 / se;
        psi0[i] = se * e0.values[i];
        psidot0[i] = se * e0dot.values[i];
    }

    const double dz = grid.dz();
    const std::size_t first = boundary == Boundary::dirichlet ? 1 : 0;
    a_.resize(m);
    b_.resize(m);
    for (std::size_t kk = 0; kk < m; ++kk) {
        std::complex<double> a{0.0, 0.0}, b{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j) {
            const double v = eigs_[kk].vector.values[first + j].real();
            a += v * psi0[first + j];
            b += v * psidot0[first + j];
        }
        a_[kk] = a * dz;
        b_[kk] = b * dz;
    }
}

SampledField NonDispersiveEvolution::field_at(double t) const {
    const std::size_t m = eigs_.size();
    const std::size_t first = boundary_ == Boundary::dirichlet ? 1 : 0;
    std::vector<std::complex<double>> psi(grid_.n, 0.0);
    for (std::size_t kk = 0; kk < m; ++kk) {
        const double lam = eigs_[kk].lambda;
        double c, s;
        if (lam <= zero_floor_) {
            c = 1.0;
            s = t;  // lim sin(sqrt(l) t)/sqrt(l)
        } else {
            const double om = std::sqrt(lam);
            c = std::cos(om * t);
            s = std::sin(om * t) / om;
        }
        const std::complex<double> coeff = a_[kk] * c + b_[kk] * s;
        for (std::size_t j = 0; j < m; ++j)
            psi[first + j] += coeff * eigs_[kk].vector.values[first + j].real();
    }
    SampledField out;
    out.label = "evolved_field";
    out.values.resize(grid_.n);
    for (std::size_t i = 0; i < grid_.n; ++i) out.values[i] = psi[i] * inv_sqrt_eps2_[i];
    if (boundary_ == Boundary::periodic) out.values[grid_.n - 1] = out.values[0];
    return out;
}

double NonDispersiveEvolution::modal_energy(double t) const {
    double total = 0.0;
    for (std::size_t kk = 0; kk < eigs_.size(); ++kk) {
        const double lam = eigs_[kk].lambda;
        std::complex<double> at, adot;
        if (lam <= zero_floor_) {
            at = a_[kk] + b_[kk] * t;
            adot = b_[kk];
        } else {
            const double om = std::sqrt(lam);
            at = a_[kk] * std::cos(om * t) + b_[kk] * std::sin(om * t) / om;
            adot = -om * a_[kk] * std::sin(om * t) + b_[kk] * std::cos(om * t);
        }
        total += lam * std::norm(at) + std::norm(adot);
    }
    return total;
}

SampledField evolve_nondispersive(const MediumModel& model, const AxisGrid& grid,
                                  Boundary boundary, const SampledField& e0,
                                  const SampledField& e0dot, double t) {
    return NonDispersiveEvolution(model, grid, boundary, e0, e0dot).field_at(t);
}

SampledField reconstruct_b(const AxisGrid& grid, const std::vector<SampledField>& e_history,
                           double dt, const SampledField& b0) {
    if (e_history.size() < 2)
        throw InsufficientHistory("reconstruct_b: need at least 2 time samples");
    if (b0.size() != grid.n) throw Error("reconstruct_b: B0 must live on the axis grid");

    const double dz = grid.dz();
    const auto curl = [&](const SampledField& e, std::size_t i) {
        if (e.size() != grid.n) throw Error("reconstruct_b: E sample off-grid");
        if (i == 0) return (e.values[1] - e.values[0]) / dz;
        if (i + 1 == grid.n) return (e.values[i] - e.values[i - 1]) / dz;
        return (e.values[i + 1] - e.values[i - 1]) / (2.0 * dz);
    };

    SampledField b = b0;
    b.label = "b_reconstructed";
    const std::size_t steps = e_history.size();
    for (std::size_t i = 0; i < grid.n; ++i) {
        std::complex<double> integral{0.0, 0.0};
        for (std::size_t s = 0; s < steps; ++s) {
            const double weight = (s == 0 || s + 1 == steps) ? 0.5 : 1.0;
            integral += weight * curl(e_history[s], i);
        }
        b.values[i] -= integral * dt;
    }
    return b;
}

}  // namespace spectral
}  // namespace dispwave
