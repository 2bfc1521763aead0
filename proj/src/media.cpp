#include "dispwave/media.hpp"

#include <cmath>

namespace dispwave {
namespace media {

DispersionFactor DispersionFactor::constant(double value) {
    if (!(value > 0.0)) throw Error("DispersionFactor::constant: value must be positive");
    DispersionFactor f;
    f.kind_ = Kind::constant;
    f.c0_ = value;
    return f;
}

DispersionFactor DispersionFactor::cauchy(double A, double B) {
    if (!(A > 0.0) || !(B > 0.0)) throw Error("DispersionFactor::cauchy: A, B must be positive");
    DispersionFactor f;
    f.kind_ = Kind::cauchy;
    f.A_ = A;
    f.B_ = B;
    return f;
}

DispersionFactor DispersionFactor::tabulated(std::vector<double> omega,
                                             std::vector<double> value) {
    for (double v : value)
        if (!(v > 0.0)) throw Error("DispersionFactor::tabulated: samples must be positive");
    if (!omega.empty() && omega.front() < 0.0)
        throw Error("DispersionFactor::tabulated: supply samples on omega >= 0 only");
    DispersionFactor f;
    f.kind_ = Kind::tabulated;
    f.spline_.emplace(std::move(omega), std::move(value));
    return f;
}

double DispersionFactor::value(double omega) const {
    const double w = std::abs(omega);
    switch (kind_) {
        case Kind::constant: return c0_;
        case Kind::cauchy: return A_ + B_ * w * w;
        case Kind::tabulated: return spline_->value(w);
    }
    return c0_;
}

double DispersionFactor::derivative(double omega) const {
    const double w = std::abs(omega);
    const double sign = omega < 0.0 ? -1.0 : 1.0;
    switch (kind_) {
        case Kind::constant: return 0.0;
        case Kind::cauchy: return sign * 2.0 * B_ * w;
        case Kind::tabulated: return sign * spline_->deriv(w);
    }
    return 0.0;
}

bool DispersionFactor::covers(double omega) const {
    if (kind_ != Kind::tabulated) return true;
    const double w = std::abs(omega);
    return w >= spline_->x_min() && w <= spline_->x_max();
}

ProfileFactor ProfileFactor::constant(double value) {
    if (!(value > 0.0)) throw Error("ProfileFactor::constant: value must be positive");
    ProfileFactor f;
    f.kind_ = Kind::constant;
    f.c0_ = value;
    return f;
}

ProfileFactor ProfileFactor::lorentzian(double base, double a, double gamma) {
    if (!(base > 0.0) || !(a > 0.0) || !(gamma > 0.0))
        throw Error("ProfileFactor::lorentzian: base, a, gamma must be positive");
    ProfileFactor f;
    f.kind_ = Kind::lorentzian;
    f.base_ = base;
    f.a_ = a;
    f.gamma_ = gamma;
    return f;
}

ProfileFactor ProfileFactor::tabulated(std::vector<double> z, std::vector<double> value) {
    for (double v : value)
        if (!(v > 0.0)) throw Error("ProfileFactor::tabulated: samples must be positive");
    ProfileFactor f;
    f.kind_ = Kind::tabulated;
    f.spline_.emplace(std::move(z), std::move(value));
    return f;
}

double ProfileFactor::value(double z) const {
    switch (kind_) {
        case Kind::constant: return c0_;
        case Kind::lorentzian: {
            const double w = 1.0 + z * z / (gamma_ * gamma_);
            return base_ * (1.0 + a_ / w);
        }
        case Kind::tabulated: return spline_->value(z);
    }
    return c0_;
}

double ProfileFactor::deriv(double z) const {
    switch (kind_) {
        case Kind::constant: return 0.0;
        case Kind::lorentzian: {
            const double g2 = gamma_ * gamma_;
            const double w = 1.0 + z * z / g2;
            return -base_ * a_ * (2.0 * z / g2) / (w * w);
        }
        case Kind::tabulated: return spline_->deriv(z);
    }
    return 0.0;
}

double ProfileFactor::deriv2(double z) const {
    switch (kind_) {
        case Kind::constant: return 0.0;
        case Kind::lorentzian: {
            const double g2 = gamma_ * gamma_;
            const double w = 1.0 + z * z / g2;
            const double wp = 2.0 * z / g2;
            const double wpp = 2.0 / g2;
            // d2/dz2 [a/w] = a (2 w'^2 / w^3 - w''/w^2)
            return base_ * a_ * (2.0 * wp * wp / (w * w * w) - wpp / (w * w));
        }
        case Kind::tabulated: return spline_->deriv2(z);
    }
    return 0.0;
}

std::size_t ProfileFactor::sample_count() const {
    return kind_ == Kind::tabulated ? spline_->size() : 0;
}

void MediumModel::require_in_window(double omega) const {
    const double w = std::abs(omega);
    const bool windowed = window.omega_max > window.omega_min;
    if (windowed && (w < window.omega_min || w > window.omega_max)) throw OutOfWindow(omega);
    if (!eps1.covers(w) || !mu1.covers(w)) throw OutOfWindow(omega);
}

double n1(const MediumModel& model, double omega) {
    model.require_in_window(omega);
    const double e = model.eps1.value(omega);
    const double m = model.mu1.value(omega);
    if (!(e > 0.0) || !(m > 0.0))
        throw Error("medium factors must stay positive on the frequency window");
    return std::sqrt(e * m);
}

double n1_derivative(const MediumModel& model, double omega) {
    const double e = model.eps1.value(omega);
    const double m = model.mu1.value(omega);
    const double ep = model.eps1.derivative(omega);
    const double mp = model.mu1.derivative(omega);
    return (ep * m + e * mp) / (2.0 * std::sqrt(e * m));
}

FAndDerivative f_and_derivative(const MediumModel& model, double omega) {
    const double n = n1(model, omega);
    const double np = n1_derivative(model, omega);
    const double f = omega * n;
    const double fp = n + omega * np;
    if (!(fp > 0.0)) throw NonMonotone(omega);
    return {f, fp};
}

std::optional<double> validate_monotone(const MediumModel& model, double omega_min,
                                        double omega_max, std::size_t samples) {
    if (samples < 2) throw Error("validate_monotone: need at least 2 samples");
    const double dw = (omega_max - omega_min) / static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double w = omega_min + dw * static_cast<double>(i);
        try {
            (void)f_and_derivative(model, w);
        } catch (const NonMonotone& err) {
            return err.omega;
        }
    }
    return std::nullopt;
}

}  // namespace media
}  // namespace dispwave
