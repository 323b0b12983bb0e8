// Copyright 2026 The hybridqc Authors
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

#include "hqc/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <set>

#include "hqc/channels.h"
#include "hqc/circuit.h"
#include "hqc/noise.h"
#include "hqc/qasm.h"
#include "hqc/sweep.h"

namespace hqc::cli {

using protocol::BranchSelector;
using protocol::CorrectionTable;
using protocol::ProtocolInputs;

namespace {

constexpr double kFidelityFloor = 1 - 1e-10;

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v == 0 ? 0.0 : v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1e", v);
    return buf;
}

std::string amplitude_text(Complex c) {
    std::string s = fixed(c.real());
    if (std::abs(c.imag()) > 5e-7) {
        s += (c.imag() < 0 ? "-" : "+") + fixed(std::abs(c.imag())) + "i";
    }
    return s;
}

std::string qubit_text(const StateVector &s) {
    return "(" + amplitude_text(s[0]) + ")|0> + (" + amplitude_text(s[1]) + ")|1>";
}

// Haar-random payload qubit and a uniformly drawn real target a|0>+b|1>.
ProtocolInputs random_inputs(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Complex x(g(rng), g(rng));
    Complex y(g(rng), g(rng));
    double n = std::sqrt(std::norm(x) + std::norm(y));
    std::uniform_real_distribution<double> angle(0, std::numbers::pi / 2);
    double t = angle(rng);
    return ProtocolInputs(x / n, y / n, std::cos(t), std::sin(t));
}

PauliString with_extra_x(const PauliString &p) {
    std::vector<PauliFactor> f = p.factors();
    f.push_back(PauliFactor::X);
    return PauliString(f, p.sign());
}

const char *verdict(bool ok) {
    return ok ? "PASS" : "FAIL";
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    return f;
}

}  // namespace

PayloadFlags::PayloadFlags() : x(1 / std::sqrt(5.0)), y(2 / std::sqrt(5.0)), a(1 / std::sqrt(2.0)), b(1 / std::sqrt(2.0)) {}

ProtocolInputs PayloadFlags::inputs() const {
    return ProtocolInputs(Complex(x, 0), std::polar(y, y_phase), a, b);
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.inputs == 0) {
        throw std::invalid_argument("--inputs must be at least 1");
    }
    CorrectionTable table = CorrectionTable::standard();
    if (cfg.corrupt_entry) {
        if (*cfg.corrupt_entry >= protocol::kBranchCount) {
            throw std::invalid_argument("--corrupt-entry must be below 256");
        }
        const auto &e = table.entry(BranchSelector::from_index(*cfg.corrupt_entry));
        table = table.with_entry(e.selector, with_extra_x(e.bob_op), e.alice_op);
        err << "injected fault: Bob's correction for " << e.selector.str() << " gets an extra X\n";
    }
    bool all_ok = true;

    // Noiseless branches over random payloads.
    std::mt19937_64 rng(cfg.seed);
    std::set<size_t> failing;
    double min_f = 1;
    for (size_t n = 0; n < cfg.inputs; n++) {
        ProtocolInputs in = random_inputs(rng);
        for (const auto &r : protocol::enumerate_branches(in, table)) {
            double f = r.defined ? std::min(r.fidelity_tp, r.fidelity_rsp) : 0.0;
            min_f = std::min(min_f, f);
            if (!(f >= kFidelityFloor) && failing.insert(r.selector.index()).second) {
                out << "  failing branch " << r.selector.str() << " (input " << n << "): F_tp=" << fixed(r.fidelity_tp)
                    << " F_rsp=" << fixed(r.fidelity_rsp) << "\n";
            }
        }
    }
    size_t good = protocol::kBranchCount - failing.size();
    out << "branches: " << verdict(failing.empty()) << " " << good << "/256 branches over " << cfg.inputs
        << " inputs, min fidelity 1-" << sci(1 - min_f) << "\n";
    all_ok &= failing.empty();

    // Each tabulated correction against the Pauli products that actually
    // restore a generic payload.
    ProtocolInputs probe(Complex(0.6, 0.3), Complex(std::sqrt(1 - 0.45) * 0.8, std::sqrt(1 - 0.45) * 0.6),
        std::cos(0.7), std::sin(0.7));
    size_t mismatches = 0;
    const CorrectionTable &identity = CorrectionTable::standard();
    for (const auto &sel : protocol::all_selectors()) {
        protocol::BranchResult r = protocol::run_branch(probe, sel, identity);
        const auto &e = table.entry(sel);
        bool bob_ok = fidelity(probe.teleport_state(), StateVector(apply_unitary(r.b1_before, e.bob_op.gate(), {0}))) >=
                      kFidelityFloor;
        bool alice_ok = fidelity(probe.rsp_state(), StateVector(apply_unitary(r.a2_before, e.alice_op.gate(), {0}))) >=
                        kFidelityFloor;
        if (!bob_ok || !alice_ok) {
            mismatches++;
            out << "  table entry " << sel.str() << ": " << (bob_ok ? "" : "Bob's ") << (bob_ok || alice_ok ? "" : "and ")
                << (alice_ok ? "" : "Alice's ") << "correction does not restore the payload\n";
        }
    }
    out << "tables: " << verdict(mismatches == 0) << " " << (protocol::kBranchCount - mismatches)
        << "/256 entries restore the payload\n";
    all_ok &= mismatches == 0;

    // Channel preparation circuits against the closed forms.
    double dev = std::max(1 - fidelity(channels::prepare_xi1(), channels::analytic_xi1()),
        1 - fidelity(channels::prepare_xi2(), channels::analytic_xi2()));
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            dev = std::max(dev, 1 - fidelity(channels::m_state(BellIndex(i), BellIndex(j)),
                                        channels::m_state_by_projection(BellIndex(i), BellIndex(j))));
        }
    }
    bool channels_ok = dev <= 1e-12;
    out << "channels: " << verdict(channels_ok) << " max deviation " << sci(dev) << "\n";
    all_ok &= channels_ok;

    return all_ok ? 0 : 1;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<noise::NoiseKind> kinds;
    if (cfg.kind == "all") {
        kinds.assign(noise::kAllNoiseKinds.begin(), noise::kAllNoiseKinds.end());
    } else {
        kinds.push_back(noise::parse_noise_kind(cfg.kind));
    }
    std::vector<noise::SweepGrid> grids;
    for (auto kind : kinds) {
        noise::SweepGrid g{kind, noise::parse_grid(cfg.strength), noise::parse_grid(cfg.b2), noise::parse_grid(cfg.y2)};
        g.validate();
        grids.push_back(std::move(g));
    }
    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.out.empty()) {
        file = open_output(cfg.out);
        sink = &file;
    }

    std::vector<noise::FidelityRecord> rows;
    for (const auto &g : grids) {
        auto part = noise::sweep(g, cfg.payload.y_phase, cfg.threads);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    noise::write_csv(*sink, rows, cfg.with_weighted);
    sink->flush();
    if (!*sink) {
        throw std::runtime_error("failed writing CSV");
    }
    for (const auto &[kind, s] : noise::summarize(rows)) {
        err << noise::to_string(kind) << ": " << s.rows << " rows, max |numeric - closed form| = " << sci(s.max_deviation)
            << "\n";
    }
    if (!cfg.out.empty()) {
        err << "wrote " << cfg.out << "\n";
    }
    return 0;
}

int cmd_run(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    ProtocolInputs in = cfg.payload.inputs();
    auto [sel, r] = protocol::sample_run(in, cfg.seed);
    const auto &fix = CorrectionTable::standard().entry(sel);
    auto bell = [](BellIndex b) {
        return "Phi" + std::to_string(b.value());
    };
    out << "payload: teleport " << qubit_text(in.teleport_state()) << ", prepare " << qubit_text(in.rsp_state()) << "\n";
    out << "seed " << cfg.seed << "\n";
    out << "Mentor measures (m1,m3) -> " << bell(sel.mentor_i) << ", (m2,m4) -> " << bell(sel.mentor_j) << "\n";
    out << "Alice measures (A0,A1) -> " << bell(sel.alice_k) << "\n";
    out << "Bob measures B2 -> xi" << sel.bob_l << "\n";
    out << "Controller measures C -> " << (sel.controller_m ? "-" : "+") << "\n";
    out << "branch probability " << fixed(r.probability) << "\n";
    out << "A2 before correction: " << qubit_text(r.a2_before) << "\n";
    out << "B1 before correction: " << qubit_text(r.b1_before) << "\n";
    out << "Alice applies " << fix.alice_op.str() << " to A2: " << qubit_text(r.a2_state) << "\n";
    out << "Bob applies " << fix.bob_op.str() << " to B1: " << qubit_text(r.b1_state) << "\n";
    out << "F_tp=" << fixed(r.fidelity_tp) << ", F_rsp=" << fixed(r.fidelity_rsp) << "\n";
    return 0;
}

int cmd_export_qasm(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    ProtocolInputs in = cfg.payload.inputs();
    std::string path = cfg.out;
    if (path.empty()) {
        std::error_code ec;  // open_output reports what went wrong
        std::filesystem::create_directories(cfg.out_dir, ec);
        path = (std::filesystem::path(cfg.out_dir) / circuit::qasm_filename(in)).string();
    }
    circuit::CircuitIR c = circuit::build_protocol_circuit(in);
    circuit::QasmDoc doc = circuit::export_qasm(c);
    {
        std::ofstream f = open_output(path);
        f << doc.text;
        if (!f.flush()) {
            throw std::runtime_error("failed writing '" + path + "'");
        }
    }
    err << "wrote " << path << " (" << c.ops.size() << " gates)\n";
    for (const auto &[q, p] : circuit::simulate_marginals(c)) {
        out << "q" << q << ": P(0)=" << fixed(p[0], 4) << "\n";
        out << "q" << q << ": P(1)=" << fixed(p[1], 4) << "\n";
    }
    return 0;
}

int cmd_channels(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    StateVector s;
    const QubitOrdering *order;
    if (cfg.which == "xi1") {
        s = channels::prepare_xi1();
        order = &channels::xi1_ordering();
    } else if (cfg.which == "xi2") {
        s = channels::prepare_xi2();
        order = &channels::xi2_ordering();
    } else if (cfg.which == "tau") {
        s = channels::combined_tau();
        order = &channels::tau_ordering();
    } else if (cfg.which == "m") {
        if (cfg.i < 0 || cfg.i > 3 || cfg.j < 0 || cfg.j > 3) {
            throw std::invalid_argument("--i and --j must lie in 0..3");
        }
        s = channels::m_state(BellIndex(cfg.i), BellIndex(cfg.j));
        order = &channels::m_ordering();
    } else {
        throw std::invalid_argument("--which must be xi1, xi2, tau or m, got '" + cfg.which + "'");
    }
    err << "# " << cfg.which;
    if (cfg.which == "m") {
        err << " i=" << cfg.i << " j=" << cfg.j;
    }
    err << ", qubits " << order->joined() << "\n";
    for (const auto &[bits, amp] : channels::nonzero_terms(s)) {
        out << "|" << bits << "> " << (amp.real() >= 0 ? "+" : "") << amplitude_text(amp) << "\n";
    }
    return 0;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app("Controlled bidirectional hybrid teleportation / remote state preparation toolkit", "hqc");
    app.set_config("--config", "", "key=value file; flags on the command line win");
    app.require_subcommand(1);

    auto payload_flags = [&](CLI::App *sub) {
        sub->add_option("--x", cfg.payload.x, "amplitude x of the teleported qubit x|0>+y|1>");
        sub->add_option("--y", cfg.payload.y, "magnitude of y");
        sub->add_option("--y-phase", cfg.payload.y_phase, "phase of y in radians");
        sub->add_option("--a", cfg.payload.a, "amplitude a of the prepared qubit a|0>+b|1>");
        sub->add_option("--b", cfg.payload.b, "amplitude b");
    };

    CLI::App *verify = app.add_subcommand("verify", "check every noiseless branch, the correction table and the channels");
    verify->add_option("--inputs", cfg.inputs, "number of random payloads")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    verify->add_option("--corrupt-entry", cfg.corrupt_entry)->group("");

    CLI::App *sweep = app.add_subcommand("sweep", "average fidelity over a noise grid as CSV");
    sweep->add_option("--kind", cfg.kind, "bitflip, phaseflip, phasedamping, depolarizing or all")->capture_default_str();
    sweep->add_option("--strength,--lambda,--gamma,--delta,--tau", cfg.strength, "noise strength: value or start:stop:count")
        ->capture_default_str();
    sweep->add_option("--b2", cfg.b2, "b^2: value or start:stop:count")->capture_default_str();
    sweep->add_option("--y2", cfg.y2, "|y|^2: value or start:stop:count")->capture_default_str();
    sweep->add_option("--y-phase", cfg.payload.y_phase, "phase of y in radians");
    sweep->add_flag("--with-weighted", cfg.with_weighted, "add the probability-weighted mean as a weighted_f column");
    sweep->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    sweep->add_option("--out", cfg.out, "CSV path (default: stdout)");

    CLI::App *run = app.add_subcommand("run", "sample one protocol run and print the transcript");
    payload_flags(run);
    run->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

    CLI::App *qasm = app.add_subcommand("export-qasm", "write the deferred-measurement circuit as OpenQASM 3");
    payload_flags(qasm);
    qasm->add_option("--out", cfg.out, "output file");
    qasm->add_option("--out-dir", cfg.out_dir, "directory for an input-derived file name")->capture_default_str();

    CLI::App *chan = app.add_subcommand("channels", "print the nonzero amplitudes of a resource state");
    chan->add_option("--which", cfg.which, "xi1, xi2, tau or m")->capture_default_str();
    chan->add_option("--i", cfg.i, "first Mentor outcome for --which m");
    chan->add_option("--j", cfg.j, "second Mentor outcome for --which m");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        // --help and --version land here with status 0.
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (sweep->parsed()) return cmd_sweep(cfg, out, err);
        if (run->parsed()) return cmd_run(cfg, out, err);
        if (qasm->parsed()) return cmd_export_qasm(cfg, out, err);
        if (chan->parsed()) return cmd_channels(cfg, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hqc::cli
