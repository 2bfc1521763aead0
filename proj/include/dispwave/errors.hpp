#pragma once

#include <stdexcept>
#include <string>

namespace dispwave {

// Common base so callers can catch all library failures at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frequency outside the medium's declared dispersion window.
struct OutOfWindow : Error {
    double omega;
    explicit OutOfWindow(double w)
        : Error("frequency " + std::to_string(w) + " outside declared dispersion window"),
          omega(w) {}
};

// f(w) = w n1(w) failed to be strictly increasing at the reported frequency.
struct NonMonotone : Error {
    double omega;
    explicit NonMonotone(double w)
        : Error("f(omega) = omega*n1(omega) is non-increasing near omega = " + std::to_string(w)),
          omega(w) {}
};

// Phase-integral quadrature did not converge under grid refinement.
struct GridTooCoarse : Error {
    using Error::Error;
};

// Tabulated profile too sparse for stable second derivatives.
struct DerivativeUnavailable : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

// Requested frequency sample too close to the k = K(omega) resonance.
struct ResonanceProximity : Error {
    double omega;
    explicit ResonanceProximity(double w)
        : Error("sample omega = " + std::to_string(w) +
                " lies inside the exclusion radius around the k = K(omega) resonance"),
          omega(w) {}
};

struct InsufficientHistory : Error {
    using Error::Error;
};

struct DegenerateStep : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace dispwave
