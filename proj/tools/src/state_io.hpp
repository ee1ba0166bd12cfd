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

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "sep2xn/sep2xn.hpp"

namespace sep2xn::cli {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Environment variable naming a JSON tolerance file used as the default.
inline constexpr const char *kToleranceEnv = "SEP2XN_TOL_CONFIG";

/// Raised for unreadable or malformed input files.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct StateFile {
    Index n = 0;
    CMatrix matrix;
    std::string label;
    /// Raw tolerance overrides as given in the file.
    json tolerances = json::object();
    /// Optional construction data written by generate.
    std::optional<SeparabilityCertificate> generators;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json &j);
json vector_to_json(const CVector &v);
CVector vector_from_json(const json &j);

json state_to_json(const StateFile &s);
StateFile state_from_json(const json &j);

json certificate_to_json(const SeparabilityCertificate &c, Index n);
SeparabilityCertificate certificate_from_json(const json &j, Index *n = nullptr);

json tolerances_to_json(const ToleranceConfig &t);
/// Applies the keys present in j on top of base; unknown keys are rejected.
ToleranceConfig apply_tolerances(ToleranceConfig base, const json &j);
/// Parses "name=value" overrides from the command line.
ToleranceConfig apply_tolerance_flag(ToleranceConfig base, const std::string &flag);
/// Built-in defaults updated from the file named by SEP2XN_TOL_CONFIG, if set.
ToleranceConfig environment_tolerances();

json read_json(const std::filesystem::path &path);
/// Writes j with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path &path, const json &j);

}  // namespace sep2xn::cli
