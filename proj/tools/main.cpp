// Copyright 2026 The qpair Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// qpair CLI: batch front end over the library. Five subcommands
// (forward, invert, oracle, map, fit), JSON or CSV on stdout,
// diagnostics on stderr. Exit codes: 0 success, 2 invalid input,
// 3 numerical non-convergence.

#include <cstddef>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qpair/entropy.hpp"
#include "qpair/forward.hpp"
#include "qpair/inversion.hpp"
#include "qpair/mapping.hpp"
#include "qpair/mehler.hpp"
#include "qpair/oracle.hpp"
#include "qpair/quadrature.hpp"
#include "qpair/sample_io.hpp"

#include "json_writer.hpp"

namespace {

using qpair::tool::format_double;
using qpair::tool::JsonWriter;

constexpr int kSchemaVersion = 1;

using CsvRows = std::vector<std::pair<std::string, std::string>>;

void print_csv(const CsvRows& rows) {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows)
        std::cout << k << ',' << v << '\n';
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void entropy_to_json(JsonWriter& jw, const qpair::EntropyReport& er) {
    jw.key("entropy");
    jw.begin_object();
    jw.key("purity");
    jw.value(er.purity);
    jw.key("linear_entropy");
    jw.value(er.linear_entropy);
    jw.key("von_neumann");
    jw.value(er.von_neumann);
    jw.key("renyi");
    jw.begin_array();
    for (const auto& rs : er.renyi_samples) {
        jw.begin_object();
        jw.key("q");
        jw.value(rs.q);
        jw.key("value");
        jw.value(rs.value);
        jw.end_object();
    }
    jw.end_array();
    jw.end_object();
}

void entropy_to_csv(CsvRows& rows, const qpair::EntropyReport& er) {
    rows.emplace_back("purity", format_double(er.purity));
    rows.emplace_back("linear_entropy", format_double(er.linear_entropy));
    rows.emplace_back("von_neumann", format_double(er.von_neumann));
    for (const auto& rs : er.renyi_samples)
        rows.emplace_back("renyi_" + short_number(rs.q), format_double(rs.value));
}

// ---------------------------------------------------------------- forward

struct ForwardOpts {
    double omega0 = 1.0;
    double lambda = 0.0;
    double tol = 1e-12;
    std::vector<double> q{0.5, 1.0, 2.0, 3.0};
    std::string format = "json";
};

int run_forward(const ForwardOpts& o) {
    const qpair::ConfinedPair pair(o.omega0, o.lambda);
    const auto modes = qpair::normal_modes(pair);
    const auto params = qpair::model_params(pair);
    const auto spectrum = qpair::invert_widths(qpair::widths_of(params), o.tol);
    const double energy = qpair::ground_energy_H(pair);
    const auto kin = qpair::kinetic_energies(params);
    const auto report = qpair::entropy_report(spectrum, o.q);

    if (o.format == "csv") {
        CsvRows rows;
        rows.emplace_back("omega0", format_double(o.omega0));
        rows.emplace_back("lambda", format_double(o.lambda));
        rows.emplace_back("omega1", format_double(modes.omega1));
        rows.emplace_back("omega2", format_double(modes.omega2));
        rows.emplace_back("omega_s", format_double(params.omega_s));
        rows.emplace_back("d", format_double(params.d));
        rows.emplace_back("omega_cap_s", format_double(params.omega_cap_s));
        rows.emplace_back("omega_bar", format_double(spectrum.omega_bar));
        rows.emplace_back("z", format_double(spectrum.z));
        rows.emplace_back("e_h", format_double(energy));
        rows.emplace_back("k1", format_double(kin.k1));
        rows.emplace_back("k2", format_double(kin.k2));
        entropy_to_csv(rows, report);
        print_csv(rows);
        return 0;
    }

    JsonWriter jw(std::cout);
    jw.begin_object();
    jw.key("schema_version");
    jw.value(kSchemaVersion);
    jw.key("command");
    jw.value("forward");
    jw.key("omega0");
    jw.value(o.omega0);
    jw.key("lambda");
    jw.value(o.lambda);
    jw.key("omega1");
    jw.value(modes.omega1);
    jw.key("omega2");
    jw.value(modes.omega2);
    jw.key("omega_s");
    jw.value(params.omega_s);
    jw.key("d");
    jw.value(params.d);
    jw.key("omega_cap_s");
    jw.value(params.omega_cap_s);
    jw.key("omega_bar");
    jw.value(spectrum.omega_bar);
    jw.key("z");
    jw.value(spectrum.z);
    jw.key("truncation_order");
    jw.value(spectrum.truncation_order);
    jw.key("e_h");
    jw.value(energy);
    jw.key("k1");
    jw.value(kin.k1);
    jw.key("k2");
    jw.value(kin.k2);
    entropy_to_json(jw, report);
    jw.end_object();
    jw.finish();
    return 0;
}

// ----------------------------------------------------------------- invert

struct InvertOpts {
    double omega_s = 0.0;
    double omega_cap_s = 0.0;
    bool have_widths = false;
    std::string pos_file;
    std::string mom_file;
    double omega0 = 1.0;
    double tol = 1e-12;
    std::vector<double> q{0.5, 1.0, 2.0, 3.0};
    std::string format = "json";
};

int run_invert(const InvertOpts& o) {
    bool from_samples = false;
    qpair::WidthFit fit_pos{}, fit_mom{};
    double ws = o.omega_s, wcs = o.omega_cap_s;
    if (!o.pos_file.empty()) {
        from_samples = true;
        fit_pos = qpair::fit_width(
            qpair::read_samples_file(o.pos_file, qpair::SampleKind::position));
        fit_mom = qpair::fit_width(
            qpair::read_samples_file(o.mom_file, qpair::SampleKind::momentum));
        ws = fit_pos.value;
        wcs = fit_mom.value;
    } else if (!o.have_widths) {
        throw std::invalid_argument(
            "invert: give --omega-s/--omega-cap-s or --pos-samples/--mom-samples");
    }

    const qpair::WidthPair widths(ws, wcs);
    const auto spectrum = qpair::invert_widths(widths, o.tol);
    const auto occ = qpair::occupations(spectrum);
    const auto report = qpair::entropy_report(spectrum, o.q);
    const auto duals = qpair::dual_couplings(spectrum);
    const auto pairs = qpair::dual_pairs(spectrum, o.omega0);
    const auto modes_att = qpair::normal_modes(pairs.first);
    const auto modes_rep = qpair::normal_modes(pairs.second);

    if (o.format == "csv") {
        CsvRows rows;
        rows.emplace_back("omega_s", format_double(widths.omega_s));
        rows.emplace_back("omega_cap_s", format_double(widths.omega_cap_s));
        if (from_samples) {
            rows.emplace_back("fit_pos_std_error", format_double(fit_pos.std_error));
            rows.emplace_back("fit_mom_std_error", format_double(fit_mom.std_error));
        }
        rows.emplace_back("omega_bar", format_double(spectrum.omega_bar));
        rows.emplace_back("z", format_double(spectrum.z));
        rows.emplace_back("truncation_order", std::to_string(spectrum.truncation_order));
        entropy_to_csv(rows, report);
        rows.emplace_back("lambda_attractive", format_double(duals.lambda_attractive));
        rows.emplace_back("lambda_repulsive", format_double(duals.lambda_repulsive));
        for (std::size_t m = 0; m < occ.size(); ++m)
            rows.emplace_back("p_" + std::to_string(m), format_double(occ[m]));
        print_csv(rows);
        return 0;
    }

    JsonWriter jw(std::cout);
    jw.begin_object();
    jw.key("schema_version");
    jw.value(kSchemaVersion);
    jw.key("command");
    jw.value("invert");
    jw.key("omega_s");
    jw.value(widths.omega_s);
    jw.key("omega_cap_s");
    jw.value(widths.omega_cap_s);
    if (from_samples) {
        jw.key("fits");
        jw.begin_object();
        jw.key("position");
        jw.begin_object();
        jw.key("value");
        jw.value(fit_pos.value);
        jw.key("std_error");
        jw.value(fit_pos.std_error);
        jw.key("count");
        jw.value(fit_pos.count);
        jw.end_object();
        jw.key("momentum");
        jw.begin_object();
        jw.key("value");
        jw.value(fit_mom.value);
        jw.key("std_error");
        jw.value(fit_mom.std_error);
        jw.key("count");
        jw.value(fit_mom.count);
        jw.end_object();
        jw.end_object();
    }
    jw.key("omega_bar");
    jw.value(spectrum.omega_bar);
    jw.key("z");
    jw.value(spectrum.z);
    jw.key("truncation_order");
    jw.value(spectrum.truncation_order);
    jw.key("occupations");
    jw.begin_array();
    for (double p : occ)
        jw.value(p);
    jw.end_array();
    entropy_to_json(jw, report);
    jw.key("omega0");
    jw.value(o.omega0);
    jw.key("dual");
    jw.begin_object();
    jw.key("lambda_attractive");
    jw.value(duals.lambda_attractive);
    jw.key("lambda_repulsive");
    jw.value(duals.lambda_repulsive);
    jw.key("attractive_modes");
    jw.begin_object();
    jw.key("omega1");
    jw.value(modes_att.omega1);
    jw.key("omega2");
    jw.value(modes_att.omega2);
    jw.end_object();
    jw.key("repulsive_modes");
    jw.begin_object();
    jw.key("omega1");
    jw.value(modes_rep.omega1);
    jw.key("omega2");
    jw.value(modes_rep.omega2);
    jw.end_object();
    jw.end_object();
    jw.end_object();
    jw.finish();
    return 0;
}

// ----------------------------------------------------------------- oracle

struct OracleOpts {
    std::string model;
    double omega0 = 1.0;
    double lambda = 0.0;
    bool have_lambda = false;
    double lambda_cap = 0.0;
    bool have_lambda_cap = false;
    std::string kernel = "position";
    int nodes = 0; // 0 = per-model default
    double half_width = 0.0;
    int keep = 16;
    std::string format = "json";
};

void spectrum_to_json(JsonWriter& jw, const qpair::OracleResult& r,
                      const std::vector<double>& kept,
                      const qpair::SpectrumEntropy& ent) {
    jw.key("eigenvalues");
    jw.begin_array();
    for (double mu : kept)
        jw.value(mu);
    jw.end_array();
    jw.key("trace");
    jw.value(r.trace);
    jw.key("residual");
    jw.value(r.residual);
    jw.key("purity");
    jw.value(r.purity_numeric);
    jw.key("von_neumann");
    jw.value(ent.von_neumann);
}

// The solver always produces the full spectrum; the entropy needs all of
// it (a short head alone fails the unit-trace check), while the report
// carries only the first `keep` modes.
std::vector<double> head_of(const std::vector<double>& v, int keep) {
    const auto n = std::min<std::size_t>(v.size(), static_cast<std::size_t>(keep));
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

int run_oracle(const OracleOpts& o) {
    JsonWriter jw(std::cout);
    CsvRows rows;
    const bool csv = o.format == "csv";
    if (o.keep < 1)
        throw std::invalid_argument("oracle: --keep must be at least 1");

    if (o.model == "heisenberg") {
        if (!o.have_lambda)
            throw std::invalid_argument("oracle: heisenberg model needs --lambda");
        const qpair::ConfinedPair pair(o.omega0, o.lambda);
        const auto params = qpair::model_params(pair);
        const int nodes = o.nodes > 0 ? o.nodes : 200;
        qpair::QuadratureGrid grid;
        if (o.half_width > 0.0)
            grid = qpair::gauss_legendre(nodes, o.half_width);
        else if (o.kernel == "momentum")
            grid = qpair::momentum_kernel_grid(params, nodes);
        else
            grid = qpair::position_kernel_grid(params, nodes);

        const int full = static_cast<int>(grid.size());
        qpair::OracleResult result;
        if (o.kernel == "momentum")
            result = qpair::nystrom_eigs(
                [&](double a, double b) { return qpair::gamma_momentum(a, b, params); },
                grid, full);
        else
            result = qpair::nystrom_eigs(
                [&](double a, double b) { return qpair::gamma_position(a, b, params); },
                grid, full);
        const auto ent = qpair::entropy_of_spectrum(result.eigenvalues);
        const auto kept = head_of(result.eigenvalues, o.keep);

        const double z = qpair::z_of_coupling(o.lambda);
        std::vector<double> deviation(kept.size());
        double max_dev = 0.0;
        for (std::size_t m = 0; m < deviation.size(); ++m) {
            deviation[m] = kept[m] - qpair::occupation(static_cast<int>(m), z);
            max_dev = std::max(max_dev, std::abs(deviation[m]));
        }

        if (csv) {
            rows.emplace_back("model", "heisenberg");
            rows.emplace_back("kernel", o.kernel);
            rows.emplace_back("lambda", format_double(o.lambda));
            rows.emplace_back("z_closed_form", format_double(z));
            rows.emplace_back("trace", format_double(result.trace));
            rows.emplace_back("residual", format_double(result.residual));
            rows.emplace_back("purity", format_double(result.purity_numeric));
            rows.emplace_back("von_neumann", format_double(ent.von_neumann));
            rows.emplace_back("max_occupation_deviation", format_double(max_dev));
            for (std::size_t m = 0; m < kept.size(); ++m)
                rows.emplace_back("eigenvalue_" + std::to_string(m),
                                  format_double(kept[m]));
            print_csv(rows);
            return 0;
        }

        jw.begin_object();
        jw.key("schema_version");
        jw.value(kSchemaVersion);
        jw.key("command");
        jw.value("oracle");
        jw.key("model");
        jw.value("heisenberg");
        jw.key("kernel");
        jw.value(o.kernel);
        jw.key("omega0");
        jw.value(o.omega0);
        jw.key("lambda");
        jw.value(o.lambda);
        jw.key("nodes");
        jw.value(nodes);
        jw.key("half_width");
        jw.value(grid.half_width);
        spectrum_to_json(jw, result, kept, ent);
        jw.key("z_closed_form");
        jw.value(z);
        jw.key("occupation_deviations");
        jw.begin_array();
        for (double d : deviation)
            jw.value(d);
        jw.end_array();
        jw.key("max_occupation_deviation");
        jw.value(max_dev);
        jw.end_object();
        jw.finish();
        return 0;
    }

    if (o.model != "inverse-square")
        throw std::invalid_argument("oracle: unknown model '" + o.model + "'");
    if (!o.have_lambda_cap)
        throw std::invalid_argument("oracle: inverse-square model needs --lambda-cap");

    const auto ground = qpair::inverse_square_ground(o.omega0, o.lambda_cap);
    const int nodes = o.nodes > 0 ? o.nodes : 400;
    const auto grid = o.half_width > 0.0
                          ? qpair::gauss_legendre(nodes, o.half_width)
                          : qpair::inverse_square_grid(o.omega0, o.lambda_cap, nodes);
    const auto result = qpair::rdm_spectrum_from_wavefunction(
        ground, grid, static_cast<int>(grid.size()));
    const auto ent = qpair::entropy_of_spectrum(result.eigenvalues);
    const auto kept = head_of(result.eigenvalues, o.keep);

    if (csv) {
        rows.emplace_back("model", "inverse-square");
        rows.emplace_back("lambda_cap", format_double(o.lambda_cap));
        rows.emplace_back("a_exponent", format_double(ground.a_exponent));
        rows.emplace_back("energy", format_double(ground.energy));
        rows.emplace_back("trace", format_double(result.trace));
        rows.emplace_back("residual", format_double(result.residual));
        rows.emplace_back("purity", format_double(result.purity_numeric));
        rows.emplace_back("von_neumann", format_double(ent.von_neumann));
        for (std::size_t m = 0; m < kept.size(); ++m)
            rows.emplace_back("eigenvalue_" + std::to_string(m),
                              format_double(kept[m]));
        print_csv(rows);
        return 0;
    }

    jw.begin_object();
    jw.key("schema_version");
    jw.value(kSchemaVersion);
    jw.key("command");
    jw.value("oracle");
    jw.key("model");
    jw.value("inverse-square");
    jw.key("omega0");
    jw.value(o.omega0);
    jw.key("lambda_cap");
    jw.value(o.lambda_cap);
    jw.key("a_exponent");
    jw.value(ground.a_exponent);
    jw.key("energy");
    jw.value(ground.energy);
    jw.key("nodes");
    jw.value(nodes);
    jw.key("half_width");
    jw.value(grid.half_width);
    spectrum_to_json(jw, result, kept, ent);
    jw.end_object();
    jw.finish();
    return 0;
}

// -------------------------------------------------------------------- map

struct MapOpts {
    std::vector<double> lambda_caps;
    double grid_min = 0.0;
    double grid_max = 0.0;
    int grid_points = 0;
    std::string rule = "asymptotic";
    double omega0 = 1.0;
    int nodes = 400;
    bool skip_oracle = false;
    std::string format = "json";
};

int run_map(const MapOpts& o) {
    std::vector<double> grid = o.lambda_caps;
    if (grid.empty()) {
        if (o.grid_points < 1 || !(o.grid_min > 0.0) || !(o.grid_max > o.grid_min))
            throw std::invalid_argument(
                "map: give --lambda-cap values or --grid-min/--grid-max/--grid-points");
        const double step = o.grid_points > 1 ? std::log(o.grid_max / o.grid_min) /
                                                    (o.grid_points - 1)
                                              : 0.0;
        for (int i = 0; i < o.grid_points; ++i)
            grid.push_back(o.grid_min * std::exp(step * i));
    }
    const auto rule = o.rule == "exact" ? qpair::MappingRule::exact
                                        : qpair::MappingRule::asymptotic;

    std::vector<qpair::MappingResult> points;
    points.reserve(grid.size());
    for (double lc : grid)
        points.push_back(
            qpair::compare_purities(o.omega0, lc, rule, o.nodes, !o.skip_oracle));

    bool have_fit = false;
    qpair::PowerLawFit fit{};
    try {
        fit = qpair::fit_purity_power_law(o.omega0, grid, rule);
        have_fit = true;
    } catch (const std::invalid_argument&) {
        // grid too narrow for a scaling fit; points are still reported
    }

    if (o.format == "csv") {
        std::cout << "lambda_cap,lambda_asymptotic,lambda_exact,e_c,e_h_at_exact,"
                     "purity_h,purity_c,purity_h_asymptote\n";
        for (const auto& p : points) {
            std::cout << format_double(p.lambda_cap) << ','
                      << format_double(p.lambda_asymptotic) << ','
                      << format_double(p.lambda_exact) << ',' << format_double(p.e_c)
                      << ',' << format_double(p.e_h_at_exact) << ','
                      << format_double(p.purity_h) << ',' << format_double(p.purity_c)
                      << ',' << format_double(p.purity_h_asymptote) << '\n';
        }
        if (have_fit)
            std::cout << "# scaling_slope=" << format_double(fit.slope)
                      << " scaling_prefactor=" << format_double(std::exp(fit.intercept))
                      << '\n';
        return 0;
    }

    JsonWriter jw(std::cout);
    jw.begin_object();
    jw.key("schema_version");
    jw.value(kSchemaVersion);
    jw.key("command");
    jw.value("map");
    jw.key("rule");
    jw.value(o.rule);
    jw.key("omega0");
    jw.value(o.omega0);
    jw.key("nodes");
    jw.value(o.nodes);
    jw.key("points");
    jw.begin_array();
    for (const auto& p : points) {
        jw.begin_object();
        jw.key("lambda_cap");
        jw.value(p.lambda_cap);
        jw.key("lambda_asymptotic");
        jw.value(p.lambda_asymptotic);
        jw.key("lambda_exact");
        jw.value(p.lambda_exact);
        jw.key("e_c");
        jw.value(p.e_c);
        jw.key("e_h_at_exact");
        jw.value(p.e_h_at_exact);
        jw.key("purity_h");
        jw.value(p.purity_h);
        jw.key("purity_c");
        jw.value(p.purity_c); // null when the oracle is skipped
        jw.key("purity_h_asymptote");
        jw.value(p.purity_h_asymptote);
        jw.end_object();
    }
    jw.end_array();
    if (have_fit) {
        jw.key("scaling");
        jw.begin_object();
        jw.key("slope");
        jw.value(fit.slope);
        jw.key("intercept");
        jw.value(fit.intercept);
        jw.key("prefactor");
        jw.value(std::exp(fit.intercept));
        jw.end_object();
    }
    jw.end_object();
    jw.finish();
    return 0;
}

// -------------------------------------------------------------------- fit

struct FitOpts {
    std::string file;
    std::string kind;
    std::string format = "json";
};

int run_fit(const FitOpts& o) {
    const auto kind = o.kind == "momentum" ? qpair::SampleKind::momentum
                                           : qpair::SampleKind::position;
    const auto set = qpair::read_samples_file(o.file, kind);
    const auto fit = qpair::fit_width(set);

    if (o.format == "csv") {
        CsvRows rows;
        rows.emplace_back("kind", o.kind);
        rows.emplace_back("count", std::to_string(fit.count));
        rows.emplace_back("value", format_double(fit.value));
        rows.emplace_back("std_error", format_double(fit.std_error));
        print_csv(rows);
        return 0;
    }

    JsonWriter jw(std::cout);
    jw.begin_object();
    jw.key("schema_version");
    jw.value(kSchemaVersion);
    jw.key("command");
    jw.value("fit");
    jw.key("kind");
    jw.value(o.kind);
    jw.key("count");
    jw.value(fit.count);
    jw.key("value");
    jw.value(fit.value);
    jw.key("std_error");
    jw.value(fit.std_error);
    jw.end_object();
    jw.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward-model and invert harmonically confined two-particle "
                 "Gaussian observables"};
    app.require_subcommand(1);

    ForwardOpts fwd;
    auto* forward_cmd =
        app.add_subcommand("forward", "Closed-form model at (omega0, lambda)");
    forward_cmd->add_option("--omega0", fwd.omega0, "trap frequency (a.u.)")
        ->capture_default_str();
    forward_cmd->add_option("--lambda", fwd.lambda, "pair coupling, > -0.5")
        ->required();
    forward_cmd->add_option("--tol", fwd.tol, "truncation tolerance")
        ->capture_default_str();
    forward_cmd->add_option("--q", fwd.q, "Renyi orders");
    forward_cmd->add_option("--format", fwd.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    InvertOpts inv;
    auto* invert_cmd = app.add_subcommand(
        "invert", "Widths (or samples) -> spectrum, entropies, dual couplings");
    auto* ws_opt =
        invert_cmd->add_option("--omega-s", inv.omega_s, "position-density decay");
    auto* wcs_opt = invert_cmd->add_option("--omega-cap-s", inv.omega_cap_s,
                                           "momentum-density decay");
    auto* pos_opt = invert_cmd->add_option("--pos-samples", inv.pos_file,
                                           "file of position samples");
    auto* mom_opt = invert_cmd->add_option("--mom-samples", inv.mom_file,
                                           "file of momentum samples");
    ws_opt->needs(wcs_opt);
    wcs_opt->needs(ws_opt);
    pos_opt->needs(mom_opt);
    mom_opt->needs(pos_opt);
    ws_opt->excludes(pos_opt);
    invert_cmd->add_option("--omega0", inv.omega0, "trap frequency for the dual pair")
        ->capture_default_str();
    invert_cmd->add_option("--tol", inv.tol, "truncation tolerance")
        ->capture_default_str();
    invert_cmd->add_option("--q", inv.q, "Renyi orders");
    invert_cmd->add_option("--format", inv.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    OracleOpts orc;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Numeric occupation spectrum by quadrature diagonalization");
    oracle_cmd->add_option("--model", orc.model, "heisenberg or inverse-square")
        ->required()
        ->check(CLI::IsMember({"heisenberg", "inverse-square"}));
    oracle_cmd->add_option("--omega0", orc.omega0, "trap frequency")
        ->capture_default_str();
    auto* lam_opt = oracle_cmd->add_option("--lambda", orc.lambda,
                                           "harmonic pair coupling (heisenberg)");
    auto* lcap_opt = oracle_cmd->add_option("--lambda-cap", orc.lambda_cap,
                                            "inverse-square coupling");
    oracle_cmd->add_option("--kernel", orc.kernel, "position or momentum (heisenberg)")
        ->check(CLI::IsMember({"position", "momentum"}))
        ->capture_default_str();
    oracle_cmd->add_option("--nodes", orc.nodes, "quadrature nodes (0 = default)");
    oracle_cmd->add_option("--half-width", orc.half_width,
                           "grid half-width (0 = automatic)");
    oracle_cmd->add_option("--keep", orc.keep, "modes kept in the report")
        ->capture_default_str();
    oracle_cmd->add_option("--format", orc.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    MapOpts map;
    auto* map_cmd = app.add_subcommand(
        "map", "Energy-matched surrogate coupling and purity comparison");
    map_cmd->add_option("--lambda-cap", map.lambda_caps,
                        "explicit inverse-square couplings");
    map_cmd->add_option("--grid-min", map.grid_min, "log-grid lower edge");
    map_cmd->add_option("--grid-max", map.grid_max, "log-grid upper edge");
    map_cmd->add_option("--grid-points", map.grid_points, "log-grid size");
    map_cmd->add_option("--rule", map.rule, "exact or asymptotic coupling rule")
        ->check(CLI::IsMember({"exact", "asymptotic"}))
        ->capture_default_str();
    map_cmd->add_option("--omega0", map.omega0, "trap frequency")
        ->capture_default_str();
    map_cmd->add_option("--nodes", map.nodes, "oracle quadrature nodes")
        ->capture_default_str();
    map_cmd->add_flag("--skip-oracle", map.skip_oracle,
                      "skip the numeric purity of the inverse-square state");
    map_cmd->add_option("--format", map.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    FitOpts fit;
    auto* fit_cmd =
        app.add_subcommand("fit", "Width from a sample file by the moment estimator");
    fit_cmd->add_option("file", fit.file, "sample file, one real per line")
        ->required();
    fit_cmd->add_option("--kind", fit.kind, "position or momentum")
        ->required()
        ->check(CLI::IsMember({"position", "momentum"}));
    fit_cmd->add_option("--format", fit.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    inv.have_widths = ws_opt->count() > 0;
    orc.have_lambda = lam_opt->count() > 0;
    orc.have_lambda_cap = lcap_opt->count() > 0;

    try {
        if (forward_cmd->parsed())
            return run_forward(fwd);
        if (invert_cmd->parsed())
            return run_invert(inv);
        if (oracle_cmd->parsed())
            return run_oracle(orc);
        if (map_cmd->parsed())
            return run_map(map);
        if (fit_cmd->parsed())
            return run_fit(fit);
    } catch (const qpair::convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
