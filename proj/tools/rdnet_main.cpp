// Command-line front end: validate inputs, inspect equilibria and meshes,
// run simulations, and verify spatial consensus.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical failure,
// 3 I/O or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rdnet/analysis.hpp"
#include "rdnet/io.hpp"

namespace {

using namespace rdnet;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string moiety_str(const ReactionNetwork& net, const IntVector& w) {
    std::string s;
    for (Index i = 0; i < w.size(); ++i) {
        if (w(i) == 0) continue;
        if (!s.empty()) s += w(i) > 0 ? " + " : " - ";
        else if (w(i) < 0) s += "-";
        const int a = std::abs(w(i));
        if (a != 1) s += std::to_string(a) + "*";
        s += net.species[i];
    }
    return s.empty() ? "0" : s;
}

Vector parse_x0_arg(const std::string& arg, Index m, Index N, const Vector& fallback) {
    if (arg.empty()) return fallback;
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < arg.size()) {
        std::size_t next = arg.find(',', pos);
        if (next == std::string::npos) next = arg.size();
        try {
            values.push_back(std::stod(arg.substr(pos, next - pos)));
        } catch (const std::exception&) {
            throw ValidationError("--x0: cannot parse '" + arg.substr(pos, next - pos) +
                                  "' as a number");
        }
        pos = next + 1;
    }
    Vector x0(m * N);
    if (static_cast<Index>(values.size()) == m) {
        for (Index j = 0; j < N; ++j)
            for (Index i = 0; i < m; ++i) x0(j * m + i) = values[i];
    } else if (static_cast<Index>(values.size()) == m * N) {
        for (Index k = 0; k < m * N; ++k) x0(k) = values[k];
    } else {
        throw ValidationError("--x0 must list m or m*N values (m=" + std::to_string(m) +
                              ", N=" + std::to_string(N) + ")");
    }
    return x0;
}

struct SimOptions {
    std::string network_path;
    std::string mesh_path;
    std::string x0_arg;
    std::string method = "rk45";
    double t_end = 10.0;
    double rtol = 1e-8;
    double atol = 1e-10;
    double balance_tol = 1e-8;

    void add_common(CLI::App* cmd) {
        cmd->add_option("network", network_path, "network spec file")->required();
        cmd->add_option("mesh", mesh_path, "mesh spec file")->required();
        cmd->add_option("--t-end", t_end, "integration horizon");
        cmd->add_option("--rtol", rtol, "relative tolerance");
        cmd->add_option("--atol", atol, "absolute tolerance");
        cmd->add_option("--method", method, "integrator: rk45 | imex")
            ->check(CLI::IsMember({"rk45", "imex"}));
        cmd->add_option("--x0", x0_arg,
                        "initial state, comma-separated (m values replicated per "
                        "compartment, or m*N values); default: all ones");
        cmd->add_option("--balance-tol", balance_tol,
                        "residual tolerance when deriving x* from the rates");
    }

    IntegratorConfig config() const {
        IntegratorConfig cfg;
        cfg.method = method == "imex" ? Method::SemiImplicitDiffusion : Method::ExplicitRK45;
        cfg.t_end = t_end;
        cfg.rtol = rtol;
        cfg.atol = atol;
        return cfg;
    }

    CompartmentalSystem assemble_system() const {
        const NetworkFile file = parse_network(network_path);
        const SimplicialComplex mesh = parse_mesh(mesh_path);
        const BalancedForm bf = balanced_form(file.network, file.x_star, balance_tol);
        return assemble(file.network, bf, mesh);
    }
};

int cmd_validate(const std::string& network_path, const std::string& mesh_path,
                 double balance_tol) {
    const NetworkFile file = parse_network(network_path);
    const ReactionNetwork& net = file.network;
    std::cout << "network=" << network_path << "\n";
    std::cout << "species=" << net.num_species() << "\n";
    std::cout << "complexes=" << net.num_complexes() << "\n";
    std::cout << "reactions=" << net.num_reactions() << "\n";

    const BalancedForm bf = balanced_form(net, file.x_star, balance_tol);
    std::cout << "detailed_balance=ok\n";
    std::cout << "x_star_source=" << (file.x_star ? "file" : "derived") << "\n";
    for (Index i = 0; i < net.num_species(); ++i)
        std::cout << "x_star." << net.species[i] << "=" << fmt(bf.x_star(i)) << "\n";

    if (!mesh_path.empty()) {
        const SimplicialComplex mesh = parse_mesh(mesh_path);
        std::cout << "mesh=" << mesh_path << "\n";
        std::cout << "mesh_vertices=" << mesh.num_vertices() << "\n";
        std::cout << "mesh_well_centered=" << (is_well_centered(mesh) ? "yes" : "no") << "\n";
        if (!is_well_centered(mesh))
            throw NotWellCentered("mesh in " + mesh_path + " is not well-centered");
    }
    std::cout << "valid=yes\n";
    return 0;
}

int cmd_equilibrium(const std::string& network_path, double balance_tol) {
    const NetworkFile file = parse_network(network_path);
    const ReactionNetwork& net = file.network;
    const BalancedForm bf = balanced_form(net, file.x_star, balance_tol);
    const EquilibriaSet eq = make_equilibria_set(net, bf.x_star);

    for (Index i = 0; i < net.num_species(); ++i)
        std::cout << "x_star." << net.species[i] << "=" << fmt(bf.x_star(i)) << "\n";
    for (Index j = 0; j < net.num_reactions(); ++j)
        std::cout << "kappa." << j << "=" << fmt(bf.kappa(j)) << "\n";
    std::cout << "moieties=" << eq.kernel_basis.size() << "\n";
    for (std::size_t k = 0; k < eq.kernel_basis.size(); ++k)
        std::cout << "moiety." << k << "=" << moiety_str(net, eq.kernel_basis[k]) << "\n";
    std::cout << "equilibria_set={ x > 0 : S^T Ln x = S^T Ln x* }\n";
    std::cout << "stoichiometric_rank=" << (net.num_species() - eq.kernel_basis.size()) << "\n";
    return 0;
}

int cmd_mesh_info(const std::string& mesh_path) {
    const SimplicialComplex mesh = parse_mesh(mesh_path);
    std::cout << "dimension=" << mesh.dimension << "\n";
    std::cout << "vertices=" << mesh.num_vertices() << "\n";
    std::cout << "edges=" << mesh.num_edges() << "\n";
    std::cout << "cells=" << mesh.num_cells() << "\n";
    std::cout << "boundary_vertices=" << mesh.num_boundary_vertices() << "\n";
    const bool wc = is_well_centered(mesh);
    std::cout << "well_centered=" << (wc ? "yes" : "no") << "\n";
    if (!wc)
        throw NotWellCentered("mesh in " + mesh_path +
                              " is not well-centered; dual measures undefined");
    const DualComplex dual = circumcentric_dual(mesh);
    const Operators ops = build_operators(mesh, dual);
    std::cout << "total_volume=" << fmt(dual.total_volume) << "\n";
    for (Index k = 0; k < ops.star0.size(); ++k)
        std::cout << "star0." << k << "=" << fmt(ops.star0(k)) << "\n";
    for (Index k = 0; k < ops.star1.size(); ++k)
        std::cout << "star1." << k << "=" << fmt(ops.star1(k)) << "\n";
    return 0;
}

int cmd_simulate(const SimOptions& opt, const std::string& schedule_path,
                 const std::string& out_path, const std::string& format) {
    const CompartmentalSystem sys = opt.assemble_system();
    const IntegratorConfig cfg = opt.config();
    const Vector x0 =
        parse_x0_arg(opt.x0_arg, sys.m, sys.N, Vector::Ones(sys.state_size()));

    Trajectory traj;
    std::optional<Vector> final_variance;
    if (!schedule_path.empty()) {
        const BoundarySchedule schedule =
            parse_boundary_schedule(schedule_path, sys.boundary_size());
        ActuationResult result = boundary_actuation_experiment(sys, schedule, x0, cfg);
        traj = std::move(result.trajectory);
        final_variance = result.spatial_variance.back();
    } else {
        traj = integrate(sys, x0, cfg);
    }

    if (!out_path.empty()) {
        const TrajectoryFormat fmt_kind =
            format == "json" || (format.empty() && out_path.ends_with(".json"))
                ? TrajectoryFormat::Json
                : TrajectoryFormat::Csv;
        export_trajectory(traj, sys, cfg, fmt_kind, out_path);
        std::cout << "trajectory_file=" << out_path << "\n";
    }

    const PersistencyReport persistency = monitor_persistency(traj);
    std::cout << "model=" << (schedule_path.empty() ? "closed" : "open") << "\n";
    std::cout << "method=" << opt.method << "\n";
    std::cout << "samples=" << traj.size() << "\n";
    std::cout << "t_end=" << fmt(traj.t.back()) << "\n";
    std::cout << "G_d_start=" << fmt(traj.energy.front()) << "\n";
    std::cout << "G_d_end=" << fmt(traj.energy.back()) << "\n";
    std::cout << "disagreement_final=" << fmt(traj.disagreement.back()) << "\n";
    std::cout << "min_concentration=" << fmt(persistency.min_value) << "\n";
    std::cout << "min_concentration_at_t=" << fmt(persistency.time) << "\n";
    std::cout << "min_concentration_compartment=" << persistency.compartment << "\n";
    std::cout << "min_concentration_species="
              << sys.net.species[persistency.species] << "\n";
    if (final_variance) {
        for (Index i = 0; i < sys.m; ++i)
            std::cout << "spatial_variance." << sys.net.species[i] << "="
                      << fmt((*final_variance)(i)) << "\n";
    }
    std::cout << "status=" << to_string(detect_convergence(traj, 1e-6, 1e-6)) << "\n";
    return 0;
}

int cmd_analyze(const SimOptions& opt, double eps_consensus, double eps_stationary,
                const std::string& out_path) {
    const CompartmentalSystem sys = opt.assemble_system();
    const IntegratorConfig cfg = opt.config();
    const Vector x0 =
        parse_x0_arg(opt.x0_arg, sys.m, sys.N, Vector::Ones(sys.state_size()));

    const auto print_report = [&](const ConsensusReport& report) {
        std::cout << "status=" << to_string(report.status) << "\n";
        std::cout << "diffusion_alpha=" << fmt(report.diffusion_alpha) << "\n";
        std::cout << "final_disagreement=" << fmt(report.final_disagreement) << "\n";
        std::cout << "membership_residual=" << fmt(report.membership_residual) << "\n";
        for (Index i = 0; i < sys.m; ++i)
            std::cout << "limit_simulated." << sys.net.species[i] << "="
                      << fmt(report.simulated_limit(i)) << "\n";
        for (Index i = 0; i < sys.m; ++i)
            std::cout << "limit_predicted." << sys.net.species[i] << "="
                      << fmt(report.predicted_limit(i)) << "\n";
        std::cout << "prediction_error=" << fmt(report.prediction_error) << "\n";
        std::cout << "lyapunov_violation_max=" << fmt(report.lyapunov_violation_max) << "\n";
        for (std::size_t k = 0; k < report.moiety_drift.size(); ++k)
            std::cout << "moiety_drift." << k << "=" << fmt(report.moiety_drift[k]) << "\n";
    };

    try {
        const ConsensusReport report =
            verify_consensus(sys, x0, cfg, eps_consensus, eps_stationary);
        print_report(report);
        if (!out_path.empty())
            export_trajectory(report.trajectory, sys, cfg, TrajectoryFormat::Json, out_path);
        return 0;
    } catch (const NotConverged& e) {
        print_report(e.report);
        std::cerr << "analyze: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced reaction-diffusion networks on simplicial complexes"};
    app.require_subcommand(1);

    // validate
    std::string v_network, v_mesh;
    double v_tol = 1e-8;
    CLI::App* validate_cmd = app.add_subcommand("validate", "parse inputs and check invariants");
    validate_cmd->add_option("network", v_network, "network spec file")->required();
    validate_cmd->add_option("mesh", v_mesh, "optional mesh spec file");
    validate_cmd->add_option("--balance-tol", v_tol, "detailed-balance residual tolerance");

    // equilibrium
    std::string e_network;
    double e_tol = 1e-8;
    CLI::App* equilibrium_cmd =
        app.add_subcommand("equilibrium", "thermodynamic equilibrium, kappa, and moieties");
    equilibrium_cmd->add_option("network", e_network, "network spec file")->required();
    equilibrium_cmd->add_option("--balance-tol", e_tol, "detailed-balance residual tolerance");

    // mesh-info
    std::string m_mesh;
    CLI::App* mesh_cmd = app.add_subcommand("mesh-info", "mesh sizes, duals, and Hodge stars");
    mesh_cmd->add_option("mesh", m_mesh, "mesh spec file")->required();

    // simulate
    SimOptions sim;
    std::string schedule_path, out_path, out_format;
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "integrate the compartmental model");
    sim.add_common(simulate_cmd);
    simulate_cmd->add_option("--boundary-schedule", schedule_path,
                             "boundary flux schedule file (runs the open model)");
    simulate_cmd->add_option("--out", out_path, "trajectory output file (.csv or .json)");
    simulate_cmd->add_option("--format", out_format, "force output format: csv | json")
        ->check(CLI::IsMember({"", "csv", "json"}));

    // analyze: tighter defaults, since consensus residuals sit on the
    // integrator's tolerance floor.
    SimOptions ana;
    ana.t_end = 60.0;
    ana.rtol = 1e-10;
    ana.atol = 1e-12;
    std::string a_out;
    double eps_consensus = 1e-6, eps_stationary = 1e-6;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "run the closed model and verify spatial consensus");
    ana.add_common(analyze_cmd);
    analyze_cmd->add_option("--eps-consensus", eps_consensus, "disagreement threshold");
    analyze_cmd->add_option("--eps-stationary", eps_stationary, "stationarity threshold");
    analyze_cmd->add_option("--out", a_out, "write the run as a JSON trajectory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (*validate_cmd) return cmd_validate(v_network, v_mesh, v_tol);
        if (*equilibrium_cmd) return cmd_equilibrium(e_network, e_tol);
        if (*mesh_cmd) return cmd_mesh_info(m_mesh);
        if (*simulate_cmd) return cmd_simulate(sim, schedule_path, out_path, out_format);
        if (*analyze_cmd) return cmd_analyze(ana, eps_consensus, eps_stationary, a_out);
    } catch (const rdnet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const rdnet::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const rdnet::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const rdnet::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const rdnet::DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return 1;
    } catch (const rdnet::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
