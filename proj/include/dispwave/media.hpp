#pragma once

#include <optional>
#include <vector>

#include "dispwave/errors.hpp"
#include "dispwave/numerics.hpp"

namespace dispwave {
namespace media {

// Frequency factor eps1(w) or mu1(w) of a separable medium.  All kinds are
// even in w: tabulated data is given on w >= 0 and evaluated at |w|.
class DispersionFactor {
  public:
    enum class Kind { constant, cauchy, tabulated };

    static DispersionFactor constant(double value);
    // A + B*w^2 with A, B > 0; positive and even with monotone w*n1(w).
    static DispersionFactor cauchy(double A, double B);
    static DispersionFactor tabulated(std::vector<double> omega, std::vector<double> value);

    double value(double omega) const;
    double derivative(double omega) const;

    Kind kind() const { return kind_; }
    bool is_constant_one() const { return kind_ == Kind::constant && c0_ == 1.0; }

    // Declared domain for tabulated data; analytic kinds are unbounded.
    bool covers(double omega) const;

  private:
    DispersionFactor() = default;
    Kind kind_ = Kind::constant;
    double c0_ = 1.0;
    double A_ = 1.0, B_ = 0.0;
    std::optional<CubicSpline> spline_;
};

// Spatial factor eps2(z) or mu2(z) with first and second derivatives.
class ProfileFactor {
  public:
    enum class Kind { constant, lorentzian, tabulated };

    static ProfileFactor constant(double value);
    // base * (1 + a / (1 + z^2/gamma^2)) with a, gamma > 0.
    static ProfileFactor lorentzian(double base, double a, double gamma);
    static ProfileFactor tabulated(std::vector<double> z, std::vector<double> value);

    double value(double z) const;
    double deriv(double z) const;
    double deriv2(double z) const;

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::constant; }
    std::size_t sample_count() const;  // 0 for analytic kinds

  private:
    ProfileFactor() = default;
    Kind kind_ = Kind::constant;
    double c0_ = 1.0;
    double base_ = 1.0, a_ = 0.0, gamma_ = 1.0;
    std::optional<CubicSpline> spline_;
};

struct Units {
    double c = 1.0;
    double eps0 = 1.0;
    double mu0 = 1.0;
};

struct FrequencyWindow {
    double omega_min = 0.0;
    double omega_max = 0.0;
};

// Separable medium eps(z,w) = eps1(w) eps2(z), mu(z,w) = mu1(w) mu2(z).
struct MediumModel {
    DispersionFactor eps1 = DispersionFactor::constant(1.0);
    DispersionFactor mu1 = DispersionFactor::constant(1.0);
    ProfileFactor eps2 = ProfileFactor::constant(1.0);
    ProfileFactor mu2 = ProfileFactor::constant(1.0);
    Units units;
    FrequencyWindow window;

    bool non_dispersive() const { return eps1.is_constant_one() && mu1.is_constant_one(); }
    bool homogeneous() const { return eps2.is_constant() && mu2.is_constant(); }
    // Frequencies are admitted by modulus so that the odd extension of
    // f(w) covers negative-frequency modes.
    void require_in_window(double omega) const;
};

struct FAndDerivative {
    double f;
    double fprime;
};

// n1(w) = sqrt(eps1(w) mu1(w))
double n1(const MediumModel& model, double omega);
double n1_derivative(const MediumModel& model, double omega);

// f(w) = w n1(w) and f'(w) = n1 + w n1'; throws NonMonotone if f' <= 0.
FAndDerivative f_and_derivative(const MediumModel& model, double omega);

// Checks f' > 0 on a uniform sample of the window; returns the first
// failing frequency, or nullopt when monotone throughout.
std::optional<double> validate_monotone(const MediumModel& model, double omega_min,
                                        double omega_max, std::size_t samples);

}  // namespace media
}  // namespace dispwave
