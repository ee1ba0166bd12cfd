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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <thread>

namespace sep2xn::cli {

namespace fs = std::filesystem;

int exit_code_for(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Separable: return kExitSeparable;
        case VerdictKind::EntangledNPT: return kExitNpt;
        case VerdictKind::EntangledPPT: return kExitPptEntangled;
        case VerdictKind::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

ToleranceConfig resolve_tolerances(const StateFile &state, const std::vector<std::string> &flags) {
    ToleranceConfig tol = environment_tolerances();
    tol = apply_tolerances(tol, state.tolerances);
    for (const std::string &f : flags) tol = apply_tolerance_flag(tol, f);
    return tol;
}

namespace {

json step_to_json(const TraceStep &s) {
    return {{"tag", s.tag},
            {"segment", s.segment},
            {"case", to_string(s.declared)},
            {"lambda", s.lambda},
            {"lambda0", s.lambda0},
            {"lambda0_bar", s.lambda0_bar},
            {"e", vector_to_json(s.e)},
            {"f", vector_to_json(s.f)},
            {"rank_before", s.rank_before},
            {"pt_rank_before", s.pt_rank_before},
            {"rank_after", s.rank_after},
            {"pt_rank_after", s.pt_rank_after},
            {"n_before", s.n_before},
            {"n_after", s.n_after},
            {"min_eig_after", s.min_eig_after},
            {"pt_min_eig_after", s.pt_min_eig_after}};
}

json trace_to_json(const ReductionTrace &t) {
    json steps = json::array();
    for (const TraceStep &s : t.steps) steps.push_back(step_to_json(s));
    return {{"exhaustive", t.exhaustive},
            {"sampled_subtraction", t.sampled_subtraction},
            {"decision", {{"rank", t.decision_rank}, {"pt_rank", t.decision_pt_rank}, {"n", t.decision_n}}},
            {"eliminant_degree", t.eliminant_degree},
            {"enumerated_vectors", t.enumerated_vectors},
            {"segments", t.next_segment},
            {"steps", steps}};
}

json witness_to_json(const Witness &w) {
    return {{"coefficients", w.coefficients},
            {"violating", w.violating},
            {"residual_outside_span", w.residual_outside_span}};
}

}  // namespace

AnalysisReport analyze_state(const StateFile &state, const RunSettings &settings, const std::string &source) {
    const ToleranceConfig tol = resolve_tolerances(state, settings.tol_flags);
    const auto t0 = std::chrono::steady_clock::now();
    const DensityState rho(state.matrix, state.n, tol);
    AnalyzeOptions options;
    options.seed = settings.seed;
    options.use_fallbacks = settings.fallbacks;
    Analysis a = analyze(rho, options);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    AnalysisReport out;
    out.n = state.n;
    json &r = out.report;
    r["format_version"] = kFormatVersion;
    r["source"] = source;
    r["label"] = state.label;
    r["N"] = state.n;
    r["ranks"] = {{"rank", rho.rank()}, {"pt_rank", rho.pt_rank()}};

    bool verified = false;
    if (a.verdict.kind == VerdictKind::Separable) {
        verified = a.verdict.certificate && verify_certificate(rho, *a.verdict.certificate);
        if (!verified) {
            a.trace.warnings.push_back("certificate failed re-verification; verdict withdrawn");
            a.verdict = Verdict::inconclusive(InconclusiveReason::ReductionStalled, "certificate failed re-verification");
        }
    }
    r["verdict"] = {{"kind", to_string(a.verdict.kind)},
                    {"reason", to_string(a.verdict.reason)},
                    {"detail", a.verdict.detail}};
    if (a.verdict.kind == VerdictKind::Separable) {
        r["certificate"] = certificate_to_json(*a.verdict.certificate, state.n);
        r["certificate_verified"] = verified;
        out.certificate = a.verdict.certificate;
    } else {
        r["certificate"] = nullptr;
        r["certificate_verified"] = nullptr;
    }
    r["witness"] = a.verdict.witness ? witness_to_json(*a.verdict.witness) : json(nullptr);
    r["trace"] = trace_to_json(a.trace);
    r["tolerances"] = tolerances_to_json(tol);
    r["seed"] = settings.seed;
    r["warnings"] = a.trace.warnings;
    if (settings.timings) r["timings"] = {{"analyze_ms", ms}};
    out.exit_code = exit_code_for(a.verdict.kind);
    return out;
}

int cmd_analyze(const AnalyzeArgs &args, std::ostream &out, std::ostream &err) {
    AnalysisReport rep;
    try {
        const StateFile state = state_from_json(read_json(args.input));
        rep = analyze_state(state, args.settings, args.input.string());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    try {
        if (args.report) write_json(*args.report, rep.report);
        if (args.certificate && rep.certificate) write_json(*args.certificate, certificate_to_json(*rep.certificate, rep.n));
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    if (args.print_json) {
        out << rep.report.dump(2) << '\n';
    } else {
        const json &v = rep.report["verdict"];
        out << v["kind"].get<std::string>();
        if (rep.certificate) out << " (" << rep.certificate->size() << " terms)";
        if (v["kind"] == "Inconclusive") out << " [" << v["reason"].get<std::string>() << "]";
        if (!v["detail"].get<std::string>().empty()) out << ": " << v["detail"].get<std::string>();
        out << '\n';
    }
    return rep.exit_code;
}

StateFile generate_state(const GenerateArgs &args) {
    const Index n = args.n;
    if (n < 1) throw InputError("--n must be at least 1");
    Rng rng(args.seed);
    GeneratedState g;
    const ToleranceConfig tol;
    auto rank_of = [&](const CMatrix &m) { return hermitian_split(m, tol).rank; };
    if (args.kind == "separable") {
        const Index terms = args.rank.value_or(n + 1);
        if (terms < 1 || terms > 2 * n) throw InputError("separable: --rank must lie in [1, 2N]");
        g = random_separable(n, terms, rng);
        if (rank_of(g.matrix) != terms) throw InputError("separable: generated rank differs from --rank");
    } else if (args.kind == "rank-n-separable") {
        if (args.rank && *args.rank != n) throw InputError("rank-n-separable: --rank must equal N");
        g = random_separable(n, n, rng);
        if (rank_of(g.matrix) != n) throw InputError("rank-n-separable: generated rank differs from N");
    } else if (args.kind == "pt-invariant") {
        if (args.rank && *args.rank != 2 * n) throw InputError("pt-invariant: states are full rank, --rank must be 2N");
        g = random_pt_invariant(n, rng);
        if (operator_norm(g.matrix - partial_transpose(g.matrix, n)) > 1e-12) {
            throw InputError("pt-invariant: self-check failed");
        }
    } else if (args.kind == "npt") {
        if (n < 2) throw InputError("npt: N must be at least 2");
        if (args.rank && *args.rank != 2 * n) throw InputError("npt: states are full rank, --rank must be 2N");
        g = noisy_max_entangled(n, 0.8);
        if (!(min_eigenvalue(partial_transpose(g.matrix, n)) < 0.0)) throw InputError("npt: self-check failed");
    } else if (args.kind == "random-ppt") {
        if (args.rank && *args.rank != 2 * n) throw InputError("random-ppt: states are full rank, --rank must be 2N");
        g = random_ppt(n, rng);
        if (!DensityState(g.matrix, n).is_ppt()) throw InputError("random-ppt: self-check failed");
    } else {
        throw InputError("unknown kind '" + args.kind +
                         "' (expected separable, rank-n-separable, pt-invariant, npt or random-ppt)");
    }
    StateFile s;
    s.n = n;
    s.matrix = g.matrix;
    s.label = args.kind;
    if (!g.generators.empty()) {
        SeparabilityCertificate c;
        for (std::size_t i = 0; i < g.generators.size(); ++i) c.terms.push_back({g.weights[i], g.generators[i]});
        s.generators = std::move(c);
    }
    return s;
}

int cmd_generate(const GenerateArgs &args, std::ostream &out, std::ostream &err) {
    try {
        const StateFile s = generate_state(args);
        write_json(args.out, state_to_json(s));
        out << "wrote " << args.kind << " state (N=" << args.n << ") to " << args.out.string() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
    try {
        const StateFile state = state_from_json(read_json(args.state));
        Index n = 0;
        const SeparabilityCertificate cert = certificate_from_json(read_json(args.certificate), &n);
        if (n != state.n) throw InputError("certificate N does not match the state");
        const ToleranceConfig tol = resolve_tolerances(state, args.tol_flags);
        const DensityState rho(state.matrix, state.n, tol);
        const bool ok = verify_certificate(rho, cert);
        out << (ok ? "certificate verified" : "certificate rejected") << " (relative error "
            << cert.reconstruction_error(rho.matrix(), rho.n()) << ")\n";
        return ok ? 0 : kExitRejected;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

json run_batch(const BatchArgs &args) {
    if (!fs::is_directory(args.dir)) throw InputError("not a directory: " + args.dir.string());
    std::vector<fs::path> files;
    for (const fs::directory_entry &entry : fs::directory_iterator(args.dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    const fs::path out_dir = args.out_dir.value_or(args.dir / "reports");
    fs::create_directories(out_dir);

    struct Result {
        std::string label;
        std::string verdict;
        std::string error;
        double ms = 0.0;
    };
    std::vector<Result> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            Result &res = results[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const StateFile state = state_from_json(read_json(files[i]));
                res.label = state.label;
                const AnalysisReport rep = analyze_state(state, args.settings, files[i].filename().string());
                res.verdict = rep.report["verdict"]["kind"].get<std::string>();
                write_json(out_dir / (files[i].stem().string() + ".report.json"), rep.report);
            } catch (const std::exception &e) {
                res.error = e.what();
            }
            res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(args.jobs, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread &t : pool) t.join();

    std::map<std::string, int> verdicts;
    std::map<std::string, std::map<std::string, int>> by_label;
    json entries = json::array();
    json errors = json::array();
    std::vector<double> times;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Result &res = results[i];
        const std::string name = files[i].filename().string();
        times.push_back(res.ms);
        if (!res.error.empty()) {
            errors.push_back({{"file", name}, {"error", res.error}});
            entries.push_back({{"file", name}, {"label", res.label}, {"verdict", nullptr}});
            continue;
        }
        ++verdicts[res.verdict];
        ++by_label[res.label][res.verdict];
        entries.push_back({{"file", name}, {"label", res.label}, {"verdict", res.verdict}});
    }
    std::sort(times.begin(), times.end());
    auto pct = [&](double p) {
        if (times.empty()) return 0.0;
        return times[static_cast<std::size_t>(p * static_cast<double>(times.size() - 1) + 0.5)];
    };
    json summary = {{"format_version", kFormatVersion},
                    {"count", files.size()},
                    {"analyzed", files.size() - errors.size()},
                    {"verdicts", verdicts},
                    {"by_label", by_label},
                    {"errors", errors},
                    {"files", entries}};
    if (args.settings.timings) summary["timings"] = {{"p50_ms", pct(0.5)}, {"p90_ms", pct(0.9)}, {"max_ms", pct(1.0)}};
    write_json(out_dir / "summary.json", summary);
    return summary;
}

int cmd_batch(const BatchArgs &args, std::ostream &out, std::ostream &err) {
    try {
        const json summary = run_batch(args);
        out << summary.dump(2) << '\n';
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace sep2xn::cli
