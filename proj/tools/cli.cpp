// Copyright 2026 The fermiqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermiqi/channels.hpp"
#include "fermiqi/density.hpp"
#include "fermiqi/entanglement.hpp"
#include "fermiqi/error.hpp"
#include "fermiqi/fock.hpp"
#include "fermiqi/roof.hpp"
#include "fermiqi/text_format.hpp"

namespace fermiqi::cli {

namespace {

constexpr int kCsvDigits = 12;

std::string csv(double v) {
    return format_number(v, kCsvDigits);
}

struct CheckArgs {
    std::string state_path;
    std::string rho_path;
};

struct ReorderArgs {
    std::string state_path;
    std::string order;
};

struct ReduceArgs {
    std::string state_path;
    std::string trace_out;
    std::string order;
};

struct MeasureArgs {
    std::string rho_path;
    std::string measure;
    std::string constraint = "none";
    std::string subsystem;
    std::uint64_t seed = 0;
    int restarts = 32;
};

struct ErasureArgs {
    double p = 0;
    std::string report = "all";
};

struct CurveArgs {
    int samples = 25;
    std::uint64_t seed = 0;
    int restarts = 32;
    std::string out_path;
};

std::string describe_sectors(bool even, bool odd) {
    if (even && odd) {
        return "even odd";
    }
    return even ? "even" : (odd ? "odd" : "none");
}

int verdict_line(const SsrVerdict &verdict, std::ostream &out) {
    if (verdict) {
        out << "ssr: Valid\n";
        return kSuccess;
    }
    out << "ssr: Violation: " << verdict.reason << '\n';
    return kDomainViolation;
}

int cmd_check(const CheckArgs &a, std::ostream &out) {
    if (!a.state_path.empty()) {
        FockVector state = parse_state(read_file(a.state_path));
        if (state.is_zero()) {
            throw Error("state has no nonzero amplitudes");
        }
        bool even = false, odd = false;
        for (const auto &kv : state.terms()) {
            (kv.first.even() ? even : odd) = true;
        }
        out << "input: state\n";
        out << "modes: " << state.order().to_string() << '\n';
        out << "norm: " << format_number(std::sqrt(state.norm_squared()), kCsvDigits) << '\n';
        out << "parity: " << to_string(parity_of(state)) << '\n';
        out << "sectors: " << describe_sectors(even, odd) << '\n';
        return verdict_line(ssr_check_pure(state), out);
    }
    DensityMatrix rho = parse_density(read_file(a.rho_path));
    double even_weight = 0, odd_weight = 0;
    for (Eigen::Index i = 0; i < rho.dimension(); i++) {
        bool even = Occupation(rho.num_modes(), static_cast<std::uint64_t>(i)).even();
        (even ? even_weight : odd_weight) += rho(i, i).real();
    }
    out << "input: density\n";
    out << "modes: " << rho.order().to_string() << '\n';
    out << "trace: " << format_number(rho.matrix().trace().real(), kCsvDigits) << '\n';
    out << "hermitian_deviation: " << format_number(max_hermitian_deviation(rho.matrix()), kCsvDigits) << '\n';
    out << "min_eigenvalue: " << format_number(spectrum(rho).min(), kCsvDigits) << '\n';
    out << "sector_weights: even=" << format_number(even_weight, kCsvDigits)
        << " odd=" << format_number(odd_weight, kCsvDigits) << '\n';
    return verdict_line(ssr_check_mixed(rho), out);
}

FockVector load_reordered(const std::string &path, const std::string &order) {
    FockVector state = parse_state(read_file(path));
    if (order.empty()) {
        return state;
    }
    return reorder_modes(state, ModeOrder(resolve_labels(order, state.order())));
}

int cmd_reorder(const ReorderArgs &a, std::ostream &out) {
    out << write_state(load_reordered(a.state_path, a.order));
    return kSuccess;
}

int cmd_reduce(const ReduceArgs &a, std::ostream &out, std::ostream &err) {
    FockVector state = load_reordered(a.state_path, a.order);
    auto traced = resolve_labels(a.trace_out, state.order());
    if (auto verdict = ssr_check_pure(state); !verdict) {
        err << "note: input " << verdict.reason << "; reducing anyway\n";
    }
    out << write_density(partial_trace(outer(state), traced));
    return kSuccess;
}

int cmd_measure(const MeasureArgs &a, std::ostream &out, std::ostream &err) {
    DensityMatrix rho = parse_density(read_file(a.rho_path));
    EntanglementReport report;
    report.measure = a.measure;
    if (a.measure == "negativity" || a.measure == "log-negativity") {
        std::vector<std::string> subsystem;
        if (a.subsystem.empty()) {
            if (rho.num_modes() < 2) {
                throw Error("negativity needs at least two modes");
            }
            subsystem.push_back(rho.order()[rho.num_modes() - 1]);
        } else {
            subsystem = resolve_labels(a.subsystem, rho.order());
        }
        report.value = a.measure == "negativity" ? negativity(rho, subsystem) : log_negativity(rho, subsystem);
    } else if (a.measure == "concurrence") {
        report.value = concurrence_two_qubit(rho);
    } else if (a.measure == "eof-wootters") {
        report.value = eof_wootters(rho);
    } else if (a.measure == "eof-roof") {
        RoofConfig config;
        config.seed = a.seed;
        config.restarts = a.restarts;
        auto constraint = a.constraint == "ssr" ? RoofConstraint::ParitySSR : RoofConstraint::Unconstrained;
        report = eof_convex_roof(rho, constraint, config).report;
        if (!report.converged) {
            err << "warning: no restart met the convergence tolerance; residual " << format_number(report.residual)
                << '\n';
        }
    } else {
        throw Error("unknown measure '" + a.measure + "'");
    }
    out << format_report(report) << '\n';
    return kSuccess;
}

int cmd_erasure(const ErasureArgs &a, std::ostream &out) {
    if (!(a.p >= 0.0 && a.p <= 1.0)) {
        throw Error("--p must lie in [0, 1]");
    }
    Spectrum ppt = erasure_ppt_spectrum(a.p);
    ChoiState choi = erasure_choi(a.p);
    double neg = negativity(choi.matrix, choi.dims, Side::Second);
    double capacity = erasure_quantum_capacity(a.p);
    if (a.report == "ppt") {
        out << "p=" << csv(a.p) << " ppt_spectrum=";
        for (std::size_t i = 0; i < ppt.size(); i++) {
            out << (i ? "," : "") << csv(ppt.eigenvalues[i]);
        }
        out << '\n';
    } else if (a.report == "negativity") {
        out << "p=" << csv(a.p) << " negativity=" << csv(neg) << '\n';
    } else if (a.report == "capacity") {
        out << "p=" << csv(a.p) << " capacity=" << csv(capacity) << '\n';
    } else {
        out << "p,neg_eig,negativity,capacity\n";
        out << csv(a.p) << ',' << csv(ppt.min()) << ',' << csv(neg) << ',' << csv(capacity) << '\n';
    }
    return kSuccess;
}

int cmd_unruh_curve(const CurveArgs &a, std::ostream &out) {
    if (a.samples < 2) {
        throw Error("--samples must be at least 2");
    }
    RoofConfig config;
    config.seed = a.seed;
    config.restarts = a.restarts;
    std::ostringstream body;
    body << "r,eof_wootters,eof_ssr,gap\n";
    for (int i = 0; i < a.samples; i++) {
        double r = (std::numbers::pi / 4) * (static_cast<double>(i) / (a.samples - 1));
        DensityMatrix rho = grassmann_output_state(r);
        double lower = eof_wootters(rho);
        double upper = eof_convex_roof(rho, RoofConstraint::ParitySSR, config).report.value;
        body << csv(r) << ',' << csv(lower) << ',' << csv(upper) << ',' << csv(upper - lower) << '\n';
    }
    std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error("cannot write '" + a.out_path + "'");
    }
    file << body.str();
    file.close();
    if (!file) {
        throw Error("failed writing '" + a.out_path + "'");
    }
    out << "wrote " << a.samples << " rows to " << a.out_path << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fermionic Fock states, superselection checks and entanglement measures", "fermiqi"};
    app.require_subcommand(1);

    CheckArgs check;
    auto *check_cmd = app.add_subcommand("check", "Parity sectors and superselection verdict of a state or density");
    auto *check_state = check_cmd->add_option("--state", check.state_path, "State file")->check(CLI::ExistingFile);
    auto *check_rho = check_cmd->add_option("--rho", check.rho_path, "Density file")->check(CLI::ExistingFile);
    check_state->excludes(check_rho);
    check_cmd->require_option(1);

    ReorderArgs reorder;
    auto *reorder_cmd = app.add_subcommand("reorder", "Rewrite a state in another mode order");
    reorder_cmd->add_option("--state", reorder.state_path, "State file")->required()->check(CLI::ExistingFile);
    reorder_cmd->add_option("--order", reorder.order, "New mode order, e.g. 'a,c,b' or 'acb'")->required();

    ReduceArgs reduce;
    auto *reduce_cmd = app.add_subcommand("reduce", "Fermionic partial trace of a pure state");
    reduce_cmd->add_option("--state", reduce.state_path, "State file")->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("--trace-out", reduce.trace_out, "Modes to trace out")->required();
    reduce_cmd->add_option("--order", reduce.order, "Reorder the state before tracing");

    MeasureArgs measure;
    auto *measure_cmd = app.add_subcommand("measure", "Entanglement measure of a density matrix");
    measure_cmd->add_option("--rho", measure.rho_path, "Density file")->required()->check(CLI::ExistingFile);
    measure_cmd->add_option("--measure", measure.measure, "Measure name")
        ->required()
        ->check(CLI::IsMember({"negativity", "log-negativity", "concurrence", "eof-wootters", "eof-roof"}));
    measure_cmd->add_option("--constraint", measure.constraint, "Roof constraint for eof-roof")
        ->check(CLI::IsMember({"none", "ssr"}));
    measure_cmd->add_option("--subsystem", measure.subsystem, "Transposed modes for (log-)negativity");
    measure_cmd->add_option("--seed", measure.seed, "Optimizer seed");
    measure_cmd->add_option("--restarts", measure.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);

    ErasureArgs erasure;
    auto *erasure_cmd = app.add_subcommand("erasure", "Qubit erasure channel diagnostics");
    erasure_cmd->add_option("--p", erasure.p, "Erasure probability")->required();
    erasure_cmd->add_option("--report", erasure.report, "ppt | negativity | capacity | all")
        ->check(CLI::IsMember({"ppt", "negativity", "capacity", "all"}));

    CurveArgs curve;
    auto *curve_cmd = app.add_subcommand("unruh-curve", "Wootters vs parity-constrained EoF over r in [0, pi/4]");
    curve_cmd->add_option("--samples", curve.samples, "Grid points (>= 2)");
    curve_cmd->add_option("--seed", curve.seed, "Optimizer seed");
    curve_cmd->add_option("--restarts", curve.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    curve_cmd->add_option("--out", curve.out_path, "Output CSV path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*check_cmd) {
            return cmd_check(check, out);
        }
        if (*reorder_cmd) {
            return cmd_reorder(reorder, out);
        }
        if (*reduce_cmd) {
            return cmd_reduce(reduce, out, err);
        }
        if (*measure_cmd) {
            return cmd_measure(measure, out, err);
        }
        if (*erasure_cmd) {
            return cmd_erasure(erasure, out);
        }
        if (*curve_cmd) {
            return cmd_unruh_curve(curve, out);
        }
    } catch (const SuperselectionError &e) {
        err << "error: " << e.what() << '\n';
        return kDomainViolation;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace fermiqi::cli
