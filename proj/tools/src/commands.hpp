// Copyright 2026 The sep2xn Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "state_io.hpp"

namespace sep2xn::cli {

enum ExitCode : int {
    kExitSeparable = 0,
    kExitError = 1,
    kExitNpt = 2,
    kExitPptEntangled = 3,
    kExitInconclusive = 4,
    kExitRejected = 5,
};

int exit_code_for(VerdictKind kind);

struct RunSettings {
    std::vector<std::string> tol_flags;
    std::uint64_t seed = kDefaultFinderSeed;
    bool fallbacks = true;
    bool timings = true;
};

/// Tolerances for one state: defaults, then SEP2XN_TOL_CONFIG, then the
/// file's overrides, then command-line flags.
ToleranceConfig resolve_tolerances(const StateFile &state, const std::vector<std::string> &flags);

struct AnalysisReport {
    json report;
    int exit_code = kExitInconclusive;
    std::optional<SeparabilityCertificate> certificate;
    Index n = 0;
};

/// Runs the engine on a parsed state and builds the report. Throws
/// InputError or sep2xn::Error for invalid states.
AnalysisReport analyze_state(const StateFile &state, const RunSettings &settings, const std::string &source);

struct AnalyzeArgs {
    std::filesystem::path input;
    std::optional<std::filesystem::path> report;
    std::optional<std::filesystem::path> certificate;
    bool print_json = false;
    RunSettings settings;
};
int cmd_analyze(const AnalyzeArgs &args, std::ostream &out, std::ostream &err);

struct GenerateArgs {
    std::string kind;
    Index n = 2;
    std::optional<Index> rank;
    std::uint64_t seed = 1;
    std::filesystem::path out;
};
/// Builds the state without writing it. Throws InputError for inconsistent
/// parameters or a failed self-check.
StateFile generate_state(const GenerateArgs &args);
int cmd_generate(const GenerateArgs &args, std::ostream &out, std::ostream &err);

struct VerifyArgs {
    std::filesystem::path state;
    std::filesystem::path certificate;
    std::vector<std::string> tol_flags;
};
int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err);

struct BatchArgs {
    std::filesystem::path dir;
    std::optional<std::filesystem::path> out_dir;
    unsigned jobs = 1;
    RunSettings settings;
};
/// Summary with per-verdict counts, per-label counts, per-file results,
/// errors and timing percentiles. Timings sit under their own key.
json run_batch(const BatchArgs &args);
int cmd_batch(const BatchArgs &args, std::ostream &out, std::ostream &err);

}  // namespace sep2xn::cli
