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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = sep2xn::cli;

namespace {

void add_run_flags(CLI::App *cmd, cli::RunSettings &s) {
    cmd->add_option("--tol", s.tol_flags, "Tolerance override name=value (repeatable)");
    cmd->add_option("--seed", s.seed, "Seed for randomized steps");
    cmd->add_flag("!--no-fallbacks", s.fallbacks, "Skip the sufficient fallback checks");
    cmd->add_flag("!--no-timings", s.timings, "Leave timings out of reports");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Separability analysis of PPT states on C^2 (x) C^N"};
    app.require_subcommand(1);

    cli::AnalyzeArgs analyze;
    CLI::App *a = app.add_subcommand("analyze", "Analyze one state file");
    a->add_option("file", analyze.input, "State file")->required();
    a->add_option("--report", analyze.report, "Write the JSON report here");
    a->add_option("--certificate", analyze.certificate, "Write the certificate here when separable");
    a->add_flag("--json", analyze.print_json, "Print the report instead of a summary line");
    add_run_flags(a, analyze.settings);

    cli::GenerateArgs generate;
    CLI::App *g = app.add_subcommand("generate", "Generate a test state");
    g->add_option("--kind", generate.kind, "separable, rank-n-separable, pt-invariant, npt or random-ppt")->required();
    g->add_option("--n", generate.n, "Dimension N of the second factor")->required();
    g->add_option("--rank", generate.rank, "Rank (number of product terms for separable)");
    g->add_option("--seed", generate.seed, "Generator seed")->required();
    g->add_option("--out", generate.out, "Output state file")->required();

    cli::VerifyArgs verify;
    CLI::App *v = app.add_subcommand("verify", "Check a certificate against a state");
    v->add_option("state", verify.state, "State file")->required();
    v->add_option("certificate", verify.certificate, "Certificate file")->required();
    v->add_option("--tol", verify.tol_flags, "Tolerance override name=value (repeatable)");

    cli::BatchArgs batch;
    CLI::App *b = app.add_subcommand("batch", "Analyze every .json state in a directory");
    b->add_option("dir", batch.dir, "Input directory")->required();
    b->add_option("--jobs", batch.jobs, "Parallel analyses")->check(CLI::PositiveNumber);
    b->add_option("--out", batch.out_dir, "Report directory (default: <dir>/reports)");
    add_run_flags(b, batch.settings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitError;
    }

    if (*a) return cli::cmd_analyze(analyze, std::cout, std::cerr);
    if (*g) return cli::cmd_generate(generate, std::cout, std::cerr);
    if (*v) return cli::cmd_verify(verify, std::cout, std::cerr);
    if (*b) return cli::cmd_batch(batch, std::cout, std::cerr);
    return cli::kExitError;
}
