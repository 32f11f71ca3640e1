// Copyright 2026 The qgd Authors
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

#include "qgd/cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qgd/analytics.h"
#include "qgd/circuit.h"
#include "qgd/errors.h"
#include "qgd/expander.h"
#include "qgd/gray_code.h"
#include "qgd/matrix_io.h"
#include "qgd/synthesizer.h"

namespace qgd {

namespace {

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    file << text;
}

int cmd_random(const RunConfig &cfg, std::ostream &out) {
    write_text(cfg.output_path, format_matrix_text(haar_random_unitary(cfg.n, cfg.seed)), out);
    return kExitOk;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.format == "qasm" && !cfg.expand) {
        err << "error: --format qasm requires --expand\n";
        return kExitInputError;
    }
    CostModel model = CostModel::parse(cfg.model);
    UnitaryMatrix u = read_matrix_file(cfg.input_path);
    DecomposeOptions options;
    options.minimize = cfg.minimize;
    DecompositionResult result;
    try {
        result = decompose(u, options);
    } catch (const ResidualError &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }

    Circuit circuit = cfg.expand ? expand_circuit(result.circuit) : result.circuit;
    write_text(cfg.output_path, cfg.format == "qasm" ? export_qasm(circuit) : serialize_circuit(circuit), out);

    std::uint64_t estimated = 0;
    for (int k = 0; k < u.num_qubits(); ++k) {
        estimated += result.profile.at(k) * cnot_cost(k, model);
    }
    char residual[32];
    std::snprintf(residual, sizeof(residual), "%.3g", result.residual);
    err << "n " << u.num_qubits() << ", gates " << result.circuit.gates.size() << ", profile "
        << result.profile.str() << ", escalations " << result.escalations << ", identity rotations "
        << result.identity_rotations << ", residual " << residual << "\n";
    err << "cnot estimate (" << model.name() << ") " << estimated;
    if (cfg.expand) {
        GateCounts counts = count_gates(circuit);
        err << ", expanded: " << counts.cnot << " cnot + " << counts.single_qubit << " single-qubit";
    }
    err << "\n";
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    Circuit circuit = read_circuit_file(cfg.circuit_path);
    write_text(cfg.output_path, format_matrix_text(simulate(circuit)), out);
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    Circuit circuit = read_circuit_file(cfg.circuit_path);
    UnitaryMatrix target = read_matrix_file(cfg.matrix_path);
    if (circuit.num_qubits != target.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits) + " qubits, matrix has " +
                                    std::to_string(target.num_qubits()));
    }
    double distance = distance_up_to_phase(simulate(circuit), target);
    double limit = cfg.tolerance * static_cast<double>(target.dim());
    char buf[96];
    std::snprintf(buf, sizeof(buf), "distance %.6g, limit %.6g", distance, limit);
    bool ok = distance <= limit;
    out << buf << (ok ? ": ok" : ": FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_counts(const RunConfig &cfg, std::ostream &out) {
    CostModel model = CostModel::parse(cfg.model);
    CnotReport report = cnot_report(cfg.n, model);
    out << render_cnot_report(report);
    if (cfg.n >= 2) {
        BoundReport bounds = bound_check(cfg.n);
        out << "g(n, n-1) = " << bounds.top << (bounds.closed_form_holds ? " = " : " != ") << "3*2^(n-1)-2 = "
            << bounds.closed_form << "\n";
        for (const auto &row : bounds.rows) {
            out << "  g(n, n-" << row.i << ") = " << row.value << (row.pass ? " <= " : " > ") << row.bound << "\n";
        }
    }
    if (cfg.reference_compare) {
        out << render_reference_comparison(model);
    }
    if (!cfg.json_path.empty()) {
        write_text(cfg.json_path, cnot_report_json(report), out);
    }
    return kExitOk;
}

int cmd_gray(const RunConfig &cfg, std::ostream &out) {
    out << format_gray_table(gray_code(cfg.n));
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Gray-code Givens decomposition of unitary matrices into controlled single-qubit gates", "qgd"};
    app.require_subcommand(1);

    auto *random = app.add_subcommand("random", "Write a Haar-random unitary matrix");
    random->add_option("--n", cfg.n, "Qubit count")->required()->check(CLI::Range(1, kMaxQubits));
    random->add_option("--seed", cfg.seed, "Seed for the mt19937_64 stream");
    random->add_option("--out", cfg.output_path, "Output matrix file (default stdout)");

    auto *dec = app.add_subcommand("decompose", "Decompose a unitary into a circuit");
    dec->add_option("--in", cfg.input_path, "Input matrix file")->required();
    dec->add_option("--out", cfg.output_path, "Output circuit file (default stdout)");
    dec->add_flag("--no-minimize{false}", cfg.minimize, "Keep every gate fully controlled");
    dec->add_flag("--expand", cfg.expand, "Expand into single-qubit and CNOT gates");
    dec->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "qasm"}));
    dec->add_option("--model", cfg.model, "CNOT cost model for the estimate: emitted | linear:a,b");

    auto *sim = app.add_subcommand("simulate", "Multiply out a circuit file");
    sim->add_option("--circuit", cfg.circuit_path, "Circuit file")->required();
    sim->add_option("--out", cfg.output_path, "Output matrix file (default stdout)");

    auto *ver = app.add_subcommand("verify", "Check a circuit against a matrix up to global phase");
    ver->add_option("--circuit", cfg.circuit_path, "Circuit file")->required();
    ver->add_option("--matrix", cfg.matrix_path, "Matrix file")->required();
    ver->add_option("--tol", cfg.tolerance, "Pass iff distance <= tol * 2^n")->check(CLI::NonNegativeNumber);

    auto *counts = app.add_subcommand("counts", "Gate-count analytics");
    counts->add_option("--n", cfg.n, "Qubit count")->required()->check(CLI::Range(1, 30));
    counts->add_option("--model", cfg.model, "CNOT cost model: emitted | linear:a,b");
    counts->add_flag("--table1-compare", cfg.reference_compare, "Compare against the published reference table");
    counts->add_option("--json", cfg.json_path, "Also write a machine-readable report");

    auto *gray = app.add_subcommand("gray", "Print the Gray code table and gamma");
    gray->add_option("--n", cfg.n, "Bit count")->required()->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    for (auto *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    try {
        if (cfg.command == "random") {
            return cmd_random(cfg, out);
        }
        if (cfg.command == "decompose") {
            return cmd_decompose(cfg, out, err);
        }
        if (cfg.command == "simulate") {
            return cmd_simulate(cfg, out);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, out);
        }
        if (cfg.command == "counts") {
            return cmd_counts(cfg, out);
        }
        return cmd_gray(cfg, out);
    } catch (const ResidualError &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv;
    argv.push_back("qgd");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qgd
