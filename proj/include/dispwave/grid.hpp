#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dispwave/errors.hpp"

namespace dispwave {

enum class TaperKind { none, cosine };

// Cosine (Tukey-style) edge taper; `fraction` is the ramp length at each
// end of the window as a fraction of the total window length.
struct Taper {
    TaperKind kind = TaperKind::none;
    double fraction = 0.0;
};

// Uniform sample grid on [z_min, z_max], endpoints included.
struct AxisGrid {
    double z_min = 0.0;
    double z_max = 1.0;
    std::size_t n = 3;
    Taper taper;

    AxisGrid() = default;
    AxisGrid(double zmin, double zmax, std::size_t count, Taper tp = {})
        : z_min(zmin), z_max(zmax), n(count), taper(tp) {
        if (!(z_max > z_min)) throw Error("AxisGrid: z_max must exceed z_min");
        if (n < 3) throw Error("AxisGrid: need at least 3 samples");
        if (taper.kind == TaperKind::cosine && !(taper.fraction > 0.0 && taper.fraction < 0.5))
            throw Error("AxisGrid: cosine taper fraction must lie in (0, 0.5)");
    }

    double dz() const { return (z_max - z_min) / static_cast<double>(n - 1); }
    double length() const { return z_max - z_min; }
    double z(std::size_t i) const { return z_min + dz() * static_cast<double>(i); }

    // Taper weight at sample i (1 in the flat interior, cosine ramp at edges).
    double taper_weight(std::size_t i) const {
        if (taper.kind == TaperKind::none) return 1.0;
        const double ramp = taper.fraction * length();
        const double dl = z(i) - z_min;
        const double dr = z_max - z(i);
        double w = 1.0;
        if (dl < ramp) w *= 0.5 * (1.0 - std::cos(M_PI * dl / ramp));
        if (dr < ramp) w *= 0.5 * (1.0 - std::cos(M_PI * dr / ramp));
        return w;
    }
};

// Uniform frequency samples on [omega_min, omega_max], endpoints included.
struct FrequencyGrid {
    double omega_min = 0.0;
    double omega_max = 1.0;
    std::size_t n = 2;

    FrequencyGrid() = default;
    FrequencyGrid(double wmin, double wmax, std::size_t count)
        : omega_min(wmin), omega_max(wmax), n(count) {
        if (!(omega_max > omega_min)) throw Error("FrequencyGrid: omega_max must exceed omega_min");
        if (n < 2) throw Error("FrequencyGrid: need at least 2 samples");
    }

    double domega() const { return (omega_max - omega_min) / static_cast<double>(n - 1); }
    double omega(std::size_t j) const {
        return omega_min + domega() * static_cast<double>(j);
    }
};

// Complex samples over a grid (eigenfunctions, E-fields, mode functions).
// The associated grid travels alongside in the operations that use it.
struct SampledField {
    std::vector<std::complex<double>> values;
    std::string label;

    std::size_t size() const { return values.size(); }
};

inline double l2_norm(const SampledField& f, double dx) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s * dx);
}

}  // namespace dispwave
