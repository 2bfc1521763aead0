#include "dispwave/commands.hpp"

#include <cmath>
#include <sstream>

#include "dispwave/csv.hpp"
#include "dispwave/modes.hpp"
#include "dispwave/perturb.hpp"
#include "dispwave/spectral.hpp"
#include "dispwave/wkb.hpp"

namespace dispwave {
namespace io {

namespace {

namespace fs = std::filesystem;

void emit_resolved_config(const ExperimentConfig& cfg, const fs::path& out_dir) {
    atomic_write_text(out_dir / "resolved_config.json", cfg.resolved.dump(2) + "\n");
}

void write_validity(const media::MediumModel& model, const AxisGrid& grid,
                    const fs::path& out_dir) {
    const wkb::ValidityReport report = wkb::validity_functional(model, grid);
    std::vector<double> z(grid.n), lhs(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        z[i] = grid.z(i);
        lhs[i] = report.lhs[i];
    }
    write_csv(out_dir / "validity.csv", "z,lhs", {z, lhs});
}

std::string time_tag(double t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

void write_field(const AxisGrid& grid, const SampledField& field, const fs::path& path) {
    std::vector<double> z(grid.n), re(grid.n), im(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        z[i] = grid.z(i);
        re[i] = field.values[i].real();
        im[i] = field.values[i].imag();
    }
    write_csv(path, "z,re,im", {z, re, im});
}

}  // namespace

void cmd_eigen(const ExperimentConfig& cfg, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    emit_resolved_config(cfg, out_dir);

    const spectral::DiscreteOperator op =
        spectral::discretize_h2(cfg.medium, cfg.zgrid, cfg.eigen.boundary);
    const auto pairs = spectral::eigensolve(op, cfg.eigen.k);
    const wkb::ValidityReport report = wkb::validity_functional(cfg.medium, cfg.zgrid);

    std::vector<double> idx, lambda, omega, margin;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        idx.push_back(static_cast<double>(i));
        lambda.push_back(pairs[i].lambda);
        double w = std::nan("");
        try {
            w = spectral::omega_from_lambda(cfg.medium, std::max(0.0, pairs[i].lambda));
        } catch (const OutOfRange&) {
            // eigenvalue outside f(window); leave the frequency column NaN
        }
        omega.push_back(w);
        margin.push_back(std::isnan(w) ? std::nan("") : report.margin_at(w));
        write_field(cfg.zgrid, pairs[i].vector,
                    out_dir / ("eigvec_" + std::to_string(i) + ".csv"));
    }
    write_csv(out_dir / "eigenvalues.csv", "index,lambda,omega,margin",
              {idx, lambda, omega, margin});
    write_validity(cfg.medium, cfg.zgrid, out_dir);
}

void cmd_propagate(const ExperimentConfig& cfg, const fs::path& out_dir) {
    if (!cfg.initial) throw ConfigError("missing key 'initial'");
    if (cfg.times.empty()) throw ConfigError("missing key 'times'");
    fs::create_directories(out_dir);
    emit_resolved_config(cfg, out_dir);
    write_validity(cfg.medium, cfg.zgrid, out_dir);

    const SampledField e0 = make_initial_field(cfg.medium, cfg.zgrid, *cfg.initial);

    if (cfg.method == "wkb") {
        if (!cfg.wgrid) throw ConfigError("missing key 'omega_grid' (required for method=wkb)");
        const wkb::PhaseTable table = wkb::build_phase_table(cfg.medium, cfg.zgrid);
        const modes::ModeFunction c = modes::project(cfg.medium, table, *cfg.wgrid, e0);

        std::vector<double> w(cfg.wgrid->n), re(cfg.wgrid->n), im(cfg.wgrid->n),
            mag(cfg.wgrid->n);
        double peak = 0.0;
        for (std::size_t j = 0; j < cfg.wgrid->n; ++j) {
            w[j] = cfg.wgrid->omega(j);
            re[j] = c.values[j].real();
            im[j] = c.values[j].imag();
            mag[j] = std::abs(c.values[j]);
            peak = std::max(peak, mag[j]);
        }
        write_csv(out_dir / "modes.csv", "omega,re,im,abs", {w, re, im, mag});

        // Mode mass where the WKB hypothesis is weak deserves a warning.
        const wkb::ValidityReport report = wkb::validity_functional(cfg.medium, cfg.zgrid);
        std::string warnings;
        for (std::size_t j = 0; j < cfg.wgrid->n; ++j) {
            const double margin = report.margin_at(w[j]);
            if (margin < cfg.warn.margin && mag[j] > cfg.warn.c_fraction * peak) {
                warnings += "mode |c(" + fmt17(w[j]) + ")| = " + fmt17(mag[j]) +
                            " is non-negligible but WKB validity margin is only " +
                            fmt17(margin) + "\n";
            }
        }
        if (!warnings.empty()) atomic_write_text(out_dir / "warnings.txt", warnings);

        for (double t : cfg.times) {
            const SampledField field = modes::reconstruct(cfg.medium, table, c, t);
            write_field(cfg.zgrid, field, out_dir / ("field_t" + time_tag(t) + ".csv"));
        }
    } else {
        const SampledField e0dot = make_initial_field_dot(cfg.medium, cfg.zgrid, *cfg.initial);
        const spectral::NonDispersiveEvolution evo(cfg.medium, cfg.zgrid, cfg.eigen.boundary, e0,
                                                   e0dot);
        for (double t : cfg.times)
            write_field(cfg.zgrid, evo.field_at(t), out_dir / ("field_t" + time_tag(t) + ".csv"));
    }
}

void cmd_lorentz(const ExperimentConfig& cfg, const fs::path& out_dir) {
    if (!cfg.lorentz) throw ConfigError("missing key 'lorentz'");
    if (!cfg.wgrid) throw ConfigError("missing key 'omega_grid'");
    fs::create_directories(out_dir);
    emit_resolved_config(cfg, out_dir);

    perturb::LorentzCase lc;
    lc.a = cfg.lorentz->a;
    lc.gamma = cfg.lorentz->gamma;
    lc.k = cfg.lorentz->k;
    lc.eps1 = cfg.medium.eps1;
    lc.units = cfg.medium.units;
    lc.window = cfg.medium.window;

    const double r_ex = cfg.lorentz->exclusion_radius
                            ? *cfg.lorentz->exclusion_radius
                            : perturb::default_exclusion_radius(lc, cfg.zgrid.length());

    const perturb::FirstOrderModeFunction analytic =
        perturb::mode_function_first_order(lc, *cfg.wgrid, r_ex, /*strict=*/false);
    const std::vector<double> bracket = perturb::analytic_bracket(lc, *cfg.wgrid);
    const modes::ModeFunction numeric = perturb::numeric_mode_derivative(
        lc, cfg.zgrid, *cfg.wgrid, cfg.lorentz->a_steps[0], cfg.lorentz->a_steps[1]);

    std::vector<double> w(cfg.wgrid->n), kk(cfg.wgrid->n), excl(cfg.wgrid->n);
    std::vector<double> ana(cfg.wgrid->n), num_re(cfg.wgrid->n), num_im(cfg.wgrid->n);
    for (std::size_t j = 0; j < cfg.wgrid->n; ++j) {
        w[j] = cfg.wgrid->omega(j);
        kk[j] = perturb::medium_wavenumber(lc, w[j]);
        excl[j] = analytic.excluded[j] ? 1.0 : 0.0;
        ana[j] = bracket[j];
        num_re[j] = numeric.values[j].real();
        num_im[j] = numeric.values[j].imag();
    }
    write_csv(out_dir / "bracket_analytic.csv", "omega,K,dcda,excluded", {w, kk, ana, excl});
    write_csv(out_dir / "bracket_numeric.csv", "omega,K,dcda_re,dcda_im,excluded",
              {w, kk, num_re, num_im, excl});

    const perturb::DecayFit fit = perturb::fit_decay(lc, numeric, 1.0, 4.0);
    nlohmann::json fj;
    fj["decay_rate"] = fit.rate;
    fj["gamma"] = lc.gamma;
    fj["decay_rate_rel_error"] = std::abs(fit.rate - lc.gamma) / lc.gamma;
    fj["max_rel_deviation"] = fit.max_rel_deviation;
    fj["fit_samples"] = fit.samples;
    fj["omega_star"] = analytic.omega_star;
    fj["delta_weight"] = analytic.delta_weight;
    fj["exclusion_radius"] = r_ex;
    atomic_write_text(out_dir / "fit.json", fj.dump(2) + "\n");
}

void cmd_validate(const ExperimentConfig& cfg, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    emit_resolved_config(cfg, out_dir);
    // The monotonicity gate already ran at config load; what remains is the
    // WKB validity profile of the configured axis window.
    write_validity(cfg.medium, cfg.zgrid, out_dir);
}

}  // namespace io
}  // namespace dispwave
