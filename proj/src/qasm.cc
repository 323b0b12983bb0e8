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

#include "hqc/qasm.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hqc::circuit {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this an Euler factor counts as zero and its phase is arbitrary.
constexpr double kEulerEps = 1e-14;

double wrap(double angle) {
    angle = std::remainder(angle, 2 * kPi);
    if (angle <= -kPi) {
        angle += 2 * kPi;
    }
    return angle == 0 ? 0.0 : angle;
}

std::string angle_text(double v) {
    if (v == 0) {
        v = 0;  // no "-0"
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format angle");
    }
    return std::string(buf, ptr);
}

double parse_angle(std::string text, size_t line_no) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    text = b == std::string::npos ? "" : text.substr(b, e - b + 1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad angle '" + text + "'");
    }
    return v;
}

[[noreturn]] void fail(size_t line_no, const std::string &what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Matrix2 u_matrix(double theta, double phi, double lambda) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {Complex(c, 0), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
}

EulerAngles euler_zyz(const Matrix2 &u) {
    double theta = 2 * std::atan2(std::abs(u.m10), std::abs(u.m00));
    double alpha, phi, lambda;
    if (std::abs(u.m10) < kEulerEps) {
        alpha = std::arg(u.m00);
        phi = 0;
        lambda = std::arg(u.m11) - alpha;
    } else if (std::abs(u.m00) < kEulerEps) {
        alpha = std::arg(-u.m01);
        lambda = 0;
        phi = std::arg(u.m10) - alpha;
    } else {
        alpha = std::arg(u.m00);
        phi = std::arg(u.m10) - alpha;
        lambda = std::arg(-u.m01) - alpha;
    }
    return {theta, wrap(phi), wrap(lambda), wrap(alpha)};
}

QasmDoc export_qasm(const CircuitIR &c) {
    c.validate();
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << c.n_qubits << "] q;\n";
    if (!c.measured.empty()) {
        out << "bit[" << c.measured.size() << "] c;\n";
    }
    for (const auto &op : c.ops) {
        if (op.matrix) {
            EulerAngles e = euler_zyz(*op.matrix);
            out << "u(" << angle_text(e.theta) << ", " << angle_text(e.phi) << ", " << angle_text(e.lambda) << ")";
        } else {
            out << op.name;
        }
        for (size_t k = 0; k < op.qubits.size(); k++) {
            out << (k == 0 ? " " : ", ") << "q[" << op.qubits[k] << "]";
        }
        out << ";\n";
    }
    for (size_t k = 0; k < c.measured.size(); k++) {
        out << "c[" << k << "] = measure q[" << c.measured[k] << "];\n";
    }
    return {out.str()};
}

CircuitIR parse_qasm(const std::string &text) {
    static const std::regex version(R"(OPENQASM\s+3(\.0)?\s*;)");
    static const std::regex include(R"(include\s+"stdgates\.inc"\s*;)");
    static const std::regex qreg(R"(qubit\[(\d+)\]\s+q\s*;)");
    static const std::regex creg(R"(bit\[(\d+)\]\s+c\s*;)");
    static const std::regex measure(R"(c\[(\d+)\]\s*=\s*measure\s+q\[(\d+)\]\s*;)");
    static const std::regex gate(R"(([a-z]+)\s*(?:\(([^)]*)\))?\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;)");
    static const std::regex operand(R"(q\[(\d+)\])");

    CircuitIR c;
    bool saw_version = false;
    std::vector<long> bits;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto cut = line.find("//"); cut != std::string::npos) {
            line.erase(cut);
        }
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            continue;
        }
        line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
        std::smatch m;
        if (!saw_version) {
            if (!std::regex_match(line, version)) {
                fail(line_no, "expected 'OPENQASM 3.0;'");
            }
            saw_version = true;
        } else if (std::regex_match(line, include)) {
            continue;
        } else if (std::regex_match(line, m, qreg)) {
            if (c.n_qubits != 0) {
                fail(line_no, "second qubit register");
            }
            c.n_qubits = std::stoul(m[1]);
        } else if (std::regex_match(line, m, creg)) {
            bits.assign(std::stoul(m[1]), -1);
        } else if (std::regex_match(line, m, measure)) {
            size_t k = std::stoul(m[1]);
            if (k >= bits.size()) {
                fail(line_no, "classical bit " + std::to_string(k) + " is not declared");
            }
            bits[k] = std::stol(m[2]);
        } else if (std::regex_match(line, m, gate)) {
            if (c.n_qubits == 0) {
                fail(line_no, "gate before the qubit register");
            }
            CircuitOp op{m[1], {}, std::nullopt};
            std::string params = m[2];
            std::string operands = m[3];
            for (std::sregex_iterator it(operands.begin(), operands.end(), operand), end; it != end; ++it) {
                op.qubits.push_back(std::stoul((*it)[1]));
            }
            if (op.name == "u") {
                std::vector<double> angles;
                std::istringstream ps(params);
                std::string item;
                while (std::getline(ps, item, ',')) {
                    angles.push_back(parse_angle(item, line_no));
                }
                if (angles.size() != 3) {
                    fail(line_no, "u takes three angles");
                }
                op.matrix = u_matrix(angles[0], angles[1], angles[2]);
            } else if (m[2].matched) {
                fail(line_no, "gate '" + op.name + "' takes no parameters");
            }
            c.ops.push_back(std::move(op));
        } else {
            fail(line_no, "unsupported statement '" + line + "'");
        }
    }
    if (!saw_version) {
        throw std::runtime_error("empty QASM document");
    }
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] < 0) {
            throw std::runtime_error("classical bit " + std::to_string(k) + " is never measured into");
        }
        c.measured.push_back(static_cast<size_t>(bits[k]));
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("invalid circuit: ") + e.what());
    }
    return c;
}

std::string qasm_filename(const protocol::ProtocolInputs &in) {
    const double values[] = {in.x().real(), in.x().imag(), in.y().real(), in.y().imag(), in.a(), in.b()};
    std::string key;
    for (double v : values) {
        key += angle_text(v);
        key += ';';
    }
    // FNV-1a, 64 bit.
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "protocol_%016llx.qasm", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hqc::circuit
