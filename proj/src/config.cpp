#include "dispwave/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dispwave {
namespace io {

using nlohmann::json;

namespace {

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError("missing key '" + (path.empty() ? key : path + "." + key) + "'");
    return j.at(key);
}

double num(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError("key '" + where + "' must be a number");
    return j.get<double>();
}

double num_or(const json& j, const std::string& key, const std::string& path, double dflt) {
    if (!j.is_object() || !j.contains(key)) return dflt;
    return num(j.at(key), path + "." + key);
}

std::vector<double> num_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError("key '" + where + "' must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError("key '" + where + "' must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

media::DispersionFactor parse_dispersion(const json& j, const std::string& path) {
    const std::string kind = require(j, "kind", path).get<std::string>();
    const json params = j.value("params", json::object());
    if (kind == "constant")
        return media::DispersionFactor::constant(num_or(params, "value", path + ".params", 1.0));
    if (kind == "cauchy")
        return media::DispersionFactor::cauchy(
            num(require(params, "A", path + ".params"), path + ".params.A"),
            num(require(params, "B", path + ".params"), path + ".params.B"));
    if (kind == "tabulated")
        return media::DispersionFactor::tabulated(
            num_array(require(params, "omega", path + ".params"), path + ".params.omega"),
            num_array(require(params, "values", path + ".params"), path + ".params.values"));
    throw ConfigError("key '" + path + ".kind' must be constant|cauchy|tabulated");
}

media::ProfileFactor parse_profile(const json& j, const std::string& path) {
    const std::string kind = require(j, "kind", path).get<std::string>();
    const json params = j.value("params", json::object());
    if (kind == "constant")
        return media::ProfileFactor::constant(num_or(params, "value", path + ".params", 1.0));
    if (kind == "lorentzian")
        return media::ProfileFactor::lorentzian(
            num_or(params, "base", path + ".params", 1.0),
            num(require(params, "a", path + ".params"), path + ".params.a"),
            num(require(params, "gamma", path + ".params"), path + ".params.gamma"));
    if (kind == "tabulated")
        return media::ProfileFactor::tabulated(
            num_array(require(params, "z", path + ".params"), path + ".params.z"),
            num_array(require(params, "values", path + ".params"), path + ".params.values"));
    throw ConfigError("key '" + path + ".kind' must be constant|lorentzian|tabulated");
}

json factor_json(const json& parent, const std::string& key) {
    if (parent.is_object() && parent.contains(key)) return parent.at(key);
    return json{{"kind", "constant"}, {"params", {{"value", 1.0}}}};
}

Taper parse_taper(const json& j, const std::string& path) {
    Taper t;
    if (!j.is_object() || !j.contains("taper")) return t;
    const json& tj = j.at("taper");
    const std::string kind = require(tj, "kind", path + ".taper").get<std::string>();
    if (kind == "none") return t;
    if (kind != "cosine")
        throw ConfigError("key '" + path + ".taper.kind' must be none|cosine");
    t.kind = TaperKind::cosine;
    t.fraction = num(require(tj, "fraction", path + ".taper"), path + ".taper.fraction");
    return t;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig cfg;
    const json& medium = require(j, "medium", "");

    cfg.medium.eps1 = parse_dispersion(factor_json(medium, "eps1"), "medium.eps1");
    cfg.medium.mu1 = parse_dispersion(factor_json(medium, "mu1"), "medium.mu1");
    cfg.medium.eps2 = parse_profile(
        medium.contains("eps2") ? medium.at("eps2")
                                : json{{"kind", "constant"}, {"params", {{"value", 1.0}}}},
        "medium.eps2");
    cfg.medium.mu2 = parse_profile(
        medium.contains("mu2") ? medium.at("mu2")
                               : json{{"kind", "constant"}, {"params", {{"value", 1.0}}}},
        "medium.mu2");

    const json units = medium.value("units", json::object());
    cfg.medium.units.c = num_or(units, "c", "medium.units", 1.0);
    cfg.medium.units.eps0 = num_or(units, "eps0", "medium.units", 1.0);
    cfg.medium.units.mu0 = num_or(units, "mu0", "medium.units", 1.0);

    const bool tabulated_dispersion =
        cfg.medium.eps1.kind() == media::DispersionFactor::Kind::tabulated ||
        cfg.medium.mu1.kind() == media::DispersionFactor::Kind::tabulated;
    if (medium.contains("window")) {
        const json& w = medium.at("window");
        cfg.medium.window.omega_min =
            num(require(w, "omega_min", "medium.window"), "medium.window.omega_min");
        cfg.medium.window.omega_max =
            num(require(w, "omega_max", "medium.window"), "medium.window.omega_max");
    } else if (tabulated_dispersion) {
        throw ConfigError("missing key 'medium.window' (required for tabulated dispersion)");
    } else {
        cfg.medium.window = {1e-6, 1e6};
    }
    if (!(cfg.medium.window.omega_max > cfg.medium.window.omega_min))
        throw ConfigError("key 'medium.window' must have omega_min < omega_max");

    // Monotonicity gate: a medium with non-increasing f(w) = w n1(w) is
    // unusable by every command, so reject it at load time.
    if (auto bad = media::validate_monotone(cfg.medium, cfg.medium.window.omega_min,
                                            cfg.medium.window.omega_max, 256))
        throw ConfigError("medium rejected: f(omega) = omega*n1(omega) is non-increasing near "
                          "omega = " + std::to_string(*bad));

    const json& zg = require(j, "zgrid", "");
    cfg.zgrid = AxisGrid(num(require(zg, "z_min", "zgrid"), "zgrid.z_min"),
                         num(require(zg, "z_max", "zgrid"), "zgrid.z_max"),
                         static_cast<std::size_t>(num(require(zg, "n", "zgrid"), "zgrid.n")),
                         parse_taper(zg, "zgrid"));

    if (j.contains("omega_grid")) {
        const json& wg = j.at("omega_grid");
        cfg.wgrid = FrequencyGrid(
            num(require(wg, "omega_min", "omega_grid"), "omega_grid.omega_min"),
            num(require(wg, "omega_max", "omega_grid"), "omega_grid.omega_max"),
            static_cast<std::size_t>(num(require(wg, "n", "omega_grid"), "omega_grid.n")));
    }

    if (j.contains("initial")) {
        const json& in = j.at("initial");
        InitialFieldSpec spec;
        const std::string kind = require(in, "kind", "initial").get<std::string>();
        if (kind == "gaussian") {
            spec.kind = InitialFieldSpec::Kind::gaussian;
            spec.sigma = num(require(in, "sigma", "initial"), "initial.sigma");
            spec.z0 = num_or(in, "z0", "initial", 0.0);
            spec.k0 = num_or(in, "k0", "initial", 0.0);
        } else if (kind == "plane") {
            spec.kind = InitialFieldSpec::Kind::plane;
            spec.k = num(require(in, "k", "initial"), "initial.k");
        } else if (kind == "tabulated") {
            spec.kind = InitialFieldSpec::Kind::tabulated;
            spec.file = require(in, "file", "initial").get<std::string>();
            if (!std::filesystem::exists(spec.file))
                throw ConfigError("initial.file '" + spec.file + "' does not exist");
        } else {
            throw ConfigError("key 'initial.kind' must be gaussian|plane|tabulated");
        }
        const std::string ed = in.value("e0dot", "zero");
        if (ed == "zero")
            spec.e0dot = InitialFieldSpec::E0Dot::zero;
        else if (ed == "right_moving")
            spec.e0dot = InitialFieldSpec::E0Dot::right_moving;
        else
            throw ConfigError("key 'initial.e0dot' must be zero|right_moving");
        cfg.initial = spec;
    }

    if (j.contains("times")) cfg.times = num_array(j.at("times"), "times");
    cfg.method = j.value("method", "wkb");
    if (cfg.method != "wkb" && cfg.method != "spectral")
        throw ConfigError("key 'method' must be wkb|spectral");

    if (j.contains("eigen")) {
        const json& e = j.at("eigen");
        cfg.eigen.k = static_cast<std::size_t>(num_or(e, "k", "eigen", 10.0));
        const std::string b = e.value("boundary", "dirichlet");
        if (b == "dirichlet")
            cfg.eigen.boundary = spectral::Boundary::dirichlet;
        else if (b == "periodic")
            cfg.eigen.boundary = spectral::Boundary::periodic;
        else
            throw ConfigError("key 'eigen.boundary' must be dirichlet|periodic");
    }

    if (j.contains("lorentz")) {
        const json& l = j.at("lorentz");
        LorentzSpec spec;
        spec.a = num(require(l, "a", "lorentz"), "lorentz.a");
        spec.gamma = num(require(l, "gamma", "lorentz"), "lorentz.gamma");
        spec.k = num(require(l, "k", "lorentz"), "lorentz.k");
        spec.a_steps = num_array(require(l, "a_steps", "lorentz"), "lorentz.a_steps");
        if (spec.a_steps.size() < 2) throw ConfigError("key 'lorentz.a_steps' needs >= 2 values");
        if (l.contains("exclusion_radius"))
            spec.exclusion_radius = num(l.at("exclusion_radius"), "lorentz.exclusion_radius");
        cfg.lorentz = spec;
    }

    if (j.contains("warn")) {
        cfg.warn.margin = num_or(j.at("warn"), "margin", "warn", 100.0);
        cfg.warn.c_fraction = num_or(j.at("warn"), "c_fraction", "warn", 1e-3);
    }

    // Normalized config for the reproducibility dump.
    cfg.resolved = j;
    cfg.resolved["method"] = cfg.method;
    if (!medium.contains("window")) {
        cfg.resolved["medium"]["window"] = {{"omega_min", cfg.medium.window.omega_min},
                                            {"omega_max", cfg.medium.window.omega_max}};
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return parse_config(j);
}

SampledField make_initial_field(const media::MediumModel& model, const AxisGrid& grid,
                                const InitialFieldSpec& spec) {
    (void)model;
    SampledField e0;
    e0.values.resize(grid.n);
    switch (spec.kind) {
        case InitialFieldSpec::Kind::gaussian: {
            e0.label = "gaussian";
            for (std::size_t i = 0; i < grid.n; ++i) {
                const double dz0 = grid.z(i) - spec.z0;
                e0.values[i] = std::exp(-dz0 * dz0 / (2.0 * spec.sigma * spec.sigma)) *
                               std::polar(1.0, spec.k0 * dz0);
            }
            break;
        }
        case InitialFieldSpec::Kind::plane: {
            e0.label = "plane";
            for (std::size_t i = 0; i < grid.n; ++i)
                e0.values[i] = std::polar(1.0, spec.k * grid.z(i));
            break;
        }
        case InitialFieldSpec::Kind::tabulated: {
            e0.label = "tabulated:" + spec.file;
            std::ifstream in(spec.file);
            if (!in) throw ConfigError("cannot open initial field file '" + spec.file + "'");
            std::string line;
            std::vector<std::complex<double>> vals;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                if (line.find_first_of("0123456789+-.") != 0) continue;  // header
                std::istringstream ls(line);
                double z, re, im = 0.0;
                char comma;
                if (!(ls >> z >> comma >> re)) continue;
                if (ls >> comma >> im) {}
                vals.emplace_back(re, im);
            }
            if (vals.size() != grid.n)
                throw ConfigError("initial field file '" + spec.file + "' has " +
                                  std::to_string(vals.size()) + " rows, grid has " +
                                  std::to_string(grid.n));
            e0.values = std::move(vals);
            break;
        }
    }
    return e0;
}

SampledField make_initial_field_dot(const media::MediumModel& model, const AxisGrid& grid,
                                    const InitialFieldSpec& spec) {
    SampledField e0dot;
    e0dot.label = "e0dot";
    e0dot.values.assign(grid.n, {0.0, 0.0});
    if (spec.e0dot == InitialFieldSpec::E0Dot::zero) return e0dot;

    // Right-moving d'Alembert data: dE/dt = -v2(z) dE/dz.
    const SampledField e0 = make_initial_field(model, grid, spec);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double z = grid.z(i);
        const double v2 = 1.0 / std::sqrt(model.eps2.value(z) * model.mu2.value(z));
        std::complex<double> dedz;
        switch (spec.kind) {
            case InitialFieldSpec::Kind::gaussian: {
                const double dz0 = z - spec.z0;
                dedz = (std::complex<double>(0.0, spec.k0) - dz0 / (spec.sigma * spec.sigma)) *
                       e0.values[i];
                break;
            }
            case InitialFieldSpec::Kind::plane:
                dedz = std::complex<double>(0.0, spec.k) * e0.values[i];
                break;
            case InitialFieldSpec::Kind::tabulated: {
                const double dz = grid.dz();
                if (i == 0)
                    dedz = (e0.values[1] - e0.values[0]) / dz;
                else if (i + 1 == grid.n)
                    dedz = (e0.values[i] - e0.values[i - 1]) / dz;
                else
                    dedz = (e0.values[i + 1] - e0.values[i - 1]) / (2.0 * dz);
                break;
            }
        }
        e0dot.values[i] = -v2 * dedz;
    }
    return e0dot;
}

}  // namespace io
}  // namespace dispwave
