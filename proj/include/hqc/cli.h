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

#ifndef HQC_CLI_H
#define HQC_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hqc/protocol.h"

namespace hqc::cli {

/// Payload flags. x and y are given as real numbers; y may carry a phase.
/// Defaults are x = 1/sqrt5, y = 2/sqrt5, a = b = 1/sqrt2.
struct PayloadFlags {
    double x;
    double y;
    double y_phase = 0;
    double a;
    double b;

    PayloadFlags();
    /// Throws std::invalid_argument on unnormalized or negative a, b.
    protocol::ProtocolInputs inputs() const;
};

/// Every flag of every subcommand, after the config file and the command line
/// have been merged.
struct RunConfig {
    PayloadFlags payload;
    uint64_t seed = 1;

    // verify
    size_t inputs = 100;
    std::optional<size_t> corrupt_entry;  // test-only fault injection

    // sweep
    std::string kind = "bitflip";  // or "all"
    std::string strength = "0:1:11";
    std::string b2 = "0.4";
    std::string y2 = "0.3";
    bool with_weighted = false;
    size_t threads = 0;

    // sweep and export-qasm
    std::string out;
    std::string out_dir = ".";

    // channels
    std::string which = "tau";
    int i = 0;
    int j = 0;
};

/// Each command writes data to `out`, diagnostics to `err`, and returns the
/// process exit status. Validation failures throw std::invalid_argument
/// before any work is done.
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_run(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_export_qasm(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_channels(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and dispatches. Errors are
/// reported on `err`; the return value is the exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hqc::cli

#endif
