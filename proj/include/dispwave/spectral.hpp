#pragma once

#include <vector>

#include "dispwave/grid.hpp"
#include "dispwave/media.hpp"

namespace dispwave {
namespace spectral {

using media::MediumModel;

enum class Boundary { dirichlet, periodic };

// Symmetric discretization of h2 = eps2^{-1/2} p mu2^{-1} p eps2^{-1/2}
// in flux (staggered) form: H = S T S with S = diag(eps2(z_i)^{-1/2}) and
// T the tridiagonal mu-weighted Laplacian with mu2^{-1} at half points.
//
// dirichlet: unknowns are the n-2 interior nodes, field pinned to zero at
// the ends.  periodic: unknowns are the first n-1 nodes with z_max
// identified with z_min (period L = z_max - z_min); T gains a corner entry.
struct DiscreteOperator {
    AxisGrid grid;
    Boundary boundary = Boundary::dirichlet;
    std::vector<double> diag;    // H diagonal, size = unknowns
    std::vector<double> off;     // H superdiagonal, size = unknowns - 1
    double corner = 0.0;         // H(0, m-1), periodic only
    std::vector<double> s;       // eps2^{-1/2} at the unknown nodes

    std::size_t size() const { return diag.size(); }
    // y = H x on the unknown nodes.
    std::vector<double> apply(const std::vector<double>& x) const;
    double norm_estimate() const;  // max row sum of |entries|
};

struct EigenPair {
    double lambda = 0.0;   // eigenvalue of h2, equals (w n1(w))^2
    SampledField vector;   // box-normalized on the full axis grid
};

DiscreteOperator discretize_h2(const MediumModel& model, const AxisGrid& grid,
                               Boundary boundary);

// k lowest eigenpairs.  Tridiagonal problems use LAPACK dstevr (MRRR with a
// deterministic fixed abstol); periodic problems go through dsyevd on the
// dense matrix.  Vectors are box-normalized (||v||^2 dz = 1 over distinct
// nodes) with the first nonzero component made positive.
std::vector<EigenPair> eigensolve(const DiscreteOperator& op, std::size_t k);

// Inverts f(w) = sqrt(lambda) by bisection on the declared window.
double omega_from_lambda(const MediumModel& model, double lambda);

// Spectral propagator for the non-dispersive initial-value problem:
//   E(t) = eps2^{-1/2} [cos(sqrt(h2) t) psi0 + sin(sqrt(h2) t)/sqrt(h2) psidot0]
// with psi0 = eps2^{1/2} E0.  The zero mode uses the analytic limit
// sin(sqrt(l) t)/sqrt(l) -> t.
class NonDispersiveEvolution {
  public:
    NonDispersiveEvolution(const MediumModel& model, const AxisGrid& grid, Boundary boundary,
                           const SampledField& e0, const SampledField& e0dot);

    SampledField field_at(double t) const;
    // Conserved modal quadratic form  sum_k lambda |a_k(t)|^2 + |adot_k(t)|^2.
    double modal_energy(double t) const;

  private:
    AxisGrid grid_;
    Boundary boundary_;
    double zero_floor_ = 0.0;
    std::vector<EigenPair> eigs_;
    std::vector<std::complex<double>> a_;  // modal amplitudes of psi0
    std::vector<std::complex<double>> b_;  // modal amplitudes of psidot0
    std::vector<double> inv_sqrt_eps2_;
};

SampledField evolve_nondispersive(const MediumModel& model, const AxisGrid& grid,
                                  Boundary boundary, const SampledField& e0,
                                  const SampledField& e0dot, double t);

// B_y(z, T) = B0(z) - integral_0^T dz E_x dtau, trapezoid in time and
// central differences in z (one-sided at the window edges).
SampledField reconstruct_b(const AxisGrid& grid, const std::vector<SampledField>& e_history,
                           double dt, const SampledField& b0);

}  // namespace spectral
}  // namespace dispwave
