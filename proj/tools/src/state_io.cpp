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

#include "state_io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sep2xn::cli {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw InputError(what);
}

double finite_number(const json &j, const std::string &what) {
    require(j.is_number(), what + ": expected a number");
    const double v = j.get<double>();
    require(std::isfinite(v), what + ": non-finite value");
    return v;
}

void check_version(const json &j) {
    require(j.is_object(), "expected a JSON object");
    require(j.contains("format_version"), "missing format_version");
    require(j.at("format_version").is_number_integer() && j.at("format_version").get<int>() == kFormatVersion,
            "unsupported format_version");
}

double *tolerance_field(ToleranceConfig &t, const std::string &name) {
    if (name == "rank_rel_tol") return &t.rank_rel_tol;
    if (name == "psd_tol") return &t.psd_tol;
    if (name == "root_residual_tol") return &t.root_residual_tol;
    if (name == "cert_recon_tol") return &t.cert_recon_tol;
    if (name == "membership_tol") return &t.membership_tol;
    if (name == "merge_radius") return &t.merge_radius;
    return nullptr;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    require(j.is_array() && j.size() == 2, "complex numbers are [re, im] pairs");
    return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

json vector_to_json(const CVector &v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

CVector vector_from_json(const json &j) {
    require(j.is_array(), "expected an array of [re, im] pairs");
    CVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = complex_from_json(j[i]);
    return v;
}

json state_to_json(const StateFile &s) {
    json rows = json::array();
    for (Index i = 0; i < s.matrix.rows(); ++i) rows.push_back(vector_to_json(s.matrix.row(i).transpose()));
    json out = {{"format_version", kFormatVersion}, {"N", s.n}, {"matrix", rows}};
    if (!s.label.empty()) out["label"] = s.label;
    if (!s.tolerances.empty()) out["tolerances"] = s.tolerances;
    if (s.generators) out["generators"] = certificate_to_json(*s.generators, s.n);
    return out;
}

StateFile state_from_json(const json &j) {
    check_version(j);
    StateFile s;
    require(j.contains("N") && j.at("N").is_number_integer(), "N must be an integer");
    s.n = j.at("N").get<Index>();
    require(s.n >= 1, "N must be at least 1");
    require(j.contains("matrix") && j.at("matrix").is_array(), "missing matrix");
    const json &rows = j.at("matrix");
    require(static_cast<Index>(rows.size()) == 2 * s.n, "matrix must have 2N rows");
    s.matrix.resize(2 * s.n, 2 * s.n);
    for (Index i = 0; i < 2 * s.n; ++i) {
        const CVector row = vector_from_json(rows[static_cast<std::size_t>(i)]);
        require(row.size() == 2 * s.n, "matrix must have 2N columns");
        s.matrix.row(i) = row.transpose();
    }
    if (j.contains("label")) {
        require(j.at("label").is_string(), "label must be a string");
        s.label = j.at("label").get<std::string>();
    }
    if (j.contains("tolerances")) {
        require(j.at("tolerances").is_object(), "tolerances must be an object");
        s.tolerances = j.at("tolerances");
        apply_tolerances({}, s.tolerances);
    }
    if (j.contains("generators")) s.generators = certificate_from_json(j.at("generators"));
    return s;
}

json certificate_to_json(const SeparabilityCertificate &c, Index n) {
    json terms = json::array();
    for (const CertificateTerm &t : c.terms) {
        terms.push_back({{"weight", t.weight}, {"e", vector_to_json(t.vector.e())}, {"f", vector_to_json(t.vector.f())}});
    }
    return {{"format_version", kFormatVersion}, {"N", n}, {"terms", terms}};
}

SeparabilityCertificate certificate_from_json(const json &j, Index *n) {
    check_version(j);
    require(j.contains("N") && j.at("N").is_number_integer(), "certificate N must be an integer");
    const Index dim = j.at("N").get<Index>();
    require(dim >= 1, "certificate N must be at least 1");
    if (n) *n = dim;
    require(j.contains("terms") && j.at("terms").is_array(), "certificate needs a terms array");
    SeparabilityCertificate c;
    for (const json &t : j.at("terms")) {
        require(t.is_object() && t.contains("weight") && t.contains("e") && t.contains("f"),
                "certificate terms need weight, e and f");
        const double w = finite_number(t.at("weight"), "weight");
        const CVector e = vector_from_json(t.at("e"));
        const CVector f = vector_from_json(t.at("f"));
        require(e.size() == 2 && f.size() == dim, "certificate vector has the wrong dimension");
        require(e.norm() > 0.0 && f.norm() > 0.0, "certificate vectors must be nonzero");
        c.terms.push_back({w, ProductVector(e, f)});
    }
    return c;
}

json tolerances_to_json(const ToleranceConfig &t) {
    return {{"rank_rel_tol", t.rank_rel_tol},         {"psd_tol", t.psd_tol},
            {"root_residual_tol", t.root_residual_tol}, {"cert_recon_tol", t.cert_recon_tol},
            {"membership_tol", t.membership_tol},     {"merge_radius", t.merge_radius}};
}

ToleranceConfig apply_tolerances(ToleranceConfig base, const json &j) {
    require(j.is_object(), "tolerances must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "format_version") continue;
        double *field = tolerance_field(base, it.key());
        require(field != nullptr, "unknown tolerance '" + it.key() + "'");
        *field = finite_number(it.value(), it.key());
    }
    try {
        base.validate();
    } catch (const Error &e) {
        throw InputError(e.what());
    }
    return base;
}

ToleranceConfig apply_tolerance_flag(ToleranceConfig base, const std::string &flag) {
    const auto eq = flag.find('=');
    require(eq != std::string::npos, "--tol expects name=value, got '" + flag + "'");
    const std::string name = flag.substr(0, eq);
    const std::string value = flag.substr(eq + 1);
    double v = 0.0;
    std::istringstream in(value);
    in >> v;
    require(!in.fail() && in.eof(), "--tol: cannot parse '" + value + "'");
    return apply_tolerances(base, json{{name, v}});
}

ToleranceConfig environment_tolerances() {
    const char *path = std::getenv(kToleranceEnv);
    if (!path || !*path) return {};
    return apply_tolerances({}, read_json(path));
}

json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace sep2xn::cli
