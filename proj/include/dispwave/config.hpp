#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dispwave/grid.hpp"
#include "dispwave/media.hpp"
#include "dispwave/spectral.hpp"

namespace dispwave {
namespace io {

struct InitialFieldSpec {
    enum class Kind { gaussian, plane, tabulated };
    enum class E0Dot { zero, right_moving };

    Kind kind = Kind::gaussian;
    double sigma = 1.0, z0 = 0.0, k0 = 0.0;  // gaussian
    double k = 0.0;                          // plane
    std::string file;                        // tabulated (CSV: z, re, im)
    E0Dot e0dot = E0Dot::zero;
};

struct EigenSpec {
    std::size_t k = 10;
    spectral::Boundary boundary = spectral::Boundary::dirichlet;
};

struct LorentzSpec {
    double a = 0.01;
    double gamma = 1.0;
    double k = 1.0;
    std::vector<double> a_steps;
    std::optional<double> exclusion_radius;
};

struct WarnSpec {
    double margin = 100.0;       // WKB validity margin below which we warn
    double c_fraction = 1e-3;    // |c| threshold as a fraction of max |c|
};

struct ExperimentConfig {
    media::MediumModel medium;
    AxisGrid zgrid;
    std::optional<FrequencyGrid> wgrid;
    std::optional<InitialFieldSpec> initial;
    std::vector<double> times;
    std::string method = "wkb";
    EigenSpec eigen;
    std::optional<LorentzSpec> lorentz;
    WarnSpec warn;

    nlohmann::json resolved;  // normalized config actually used
};

// Parses and validates a configuration.  Throws ConfigError naming the
// offending key; the monotonicity gate on f(w) runs here, so any medium
// with non-monotone w*n1(w) is rejected before a command can use it.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Realizes the configured initial field on the axis grid.
SampledField make_initial_field(const media::MediumModel& model, const AxisGrid& grid,
                                const InitialFieldSpec& spec);
// Matching initial time derivative (zero or right-moving d'Alembert data).
SampledField make_initial_field_dot(const media::MediumModel& model, const AxisGrid& grid,
                                    const InitialFieldSpec& spec);

}  // namespace io
}  // namespace dispwave
