// Copyright 2026 The relent Authors
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

// Command-line driver. Talks to the library only through the C API and is
// the only place that touches the filesystem.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relent/relent.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitIo = 3, kExitAssertion = 4, kExitInternal = 5 };

struct CommonOptions {
    std::optional<uint64_t> samples;
    uint64_t seed = 0;
    std::string out = ".";
    uint32_t workers = 1;
    std::string format = "csv";
    std::optional<uint64_t> keep_rows;
    std::vector<std::string> thresholds;
};

struct ExtraOptions {
    std::optional<uint64_t> haar_samples;
    std::optional<int32_t> starts;
    std::optional<int32_t> max_iters;
    bool sigma_mixed = false;
};

int report(relent_status s, const char *what) {
    std::cerr << "error: " << what << ": " << relent_status_name(s) << ": " << relent_last_error() << "\n";
    switch (s) {
        case RELENT_ERR_INVALID_ARGUMENT:
            return kExitConfig;
        case RELENT_ERR_PARSE:
            return kExitConfig;
        default:
            return kExitInternal;
    }
}

bool write_file(const fs::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

// Writes every artifact of `result` under `dir`; returns an exit code.
int write_artifacts(const relent_result *result, const std::string &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory " << dir << ": " << ec.message() << "\n";
        return kExitIo;
    }
    for (size_t i = 0; i < relent_result_artifact_count(result); i++) {
        const char *name = nullptr;
        const char *content = nullptr;
        relent_result_artifact(result, i, &name, &content);
        fs::path path = fs::path(dir) / name;
        if (!write_file(path, content)) {
            std::cerr << "error: cannot write " << path.string() << "\n";
            return kExitIo;
        }
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

void print_summary(const relent_result *result) {
    auto j = nlohmann::ordered_json::parse(relent_result_summary_json(result));
    std::cout << j["experiment"].get<std::string>() << ": " << j["n_samples"] << " samples, seed " << j["seed"]
              << ", " << relent_result_runtime_seconds(result) << " s\n";
    for (auto &[name, q] : j["quantities"].items()) {
        std::printf("  %-14s negative=%-8llu zero=%-8llu positive=%-8llu neg.frac=%.3g min=%.6g\n", name.c_str(),
                    static_cast<unsigned long long>(q["negative"].get<uint64_t>()),
                    static_cast<unsigned long long>(q["zero"].get<uint64_t>()),
                    static_cast<unsigned long long>(q["positive"].get<uint64_t>()),
                    q["negative_fraction"].get<double>(), q["min_value"].is_number() ? q["min_value"].get<double>() : 0.0);
    }
    for (auto &[name, v] : j["counters"].items()) {
        std::printf("  %-34s %llu\n", name.c_str(), static_cast<unsigned long long>(v.get<uint64_t>()));
    }
    uint64_t potential = 0;
    if (relent_result_counter(result, "potential_counterexamples", &potential) == RELENT_OK && potential > 0) {
        std::printf("POTENTIAL-COUNTEREXAMPLE: %llu samples with negative delta or delta_mix (see flagged.csv)\n",
                    static_cast<unsigned long long>(potential));
    }
}

int run_experiment(const std::string &experiment, const CommonOptions &common, const ExtraOptions &extra) {
    relent_config *cfg = nullptr;
    relent_status s = relent_config_create(experiment.c_str(), &cfg);
    if (s != RELENT_OK) {
        return report(s, "config");
    }
    std::unique_ptr<relent_config, decltype(&relent_config_destroy)> cfg_guard(cfg, relent_config_destroy);

    auto check = [&](relent_status st, const char *what) {
        if (st != RELENT_OK) {
            throw std::pair<relent_status, std::string>(st, what);
        }
    };
    try {
        if (common.samples) check(relent_config_set_samples(cfg, *common.samples), "--samples");
        check(relent_config_set_seed(cfg, common.seed), "--seed");
        check(relent_config_set_workers(cfg, common.workers), "--workers");
        check(relent_config_set_row_format(cfg, common.format == "json" ? RELENT_FORMAT_JSON : RELENT_FORMAT_CSV),
              "--format");
        if (common.keep_rows) check(relent_config_set_retained_rows(cfg, *common.keep_rows), "--keep-rows");
        for (const auto &t : common.thresholds) {
            auto eq = t.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --threshold expects name=value, got '" << t << "'\n";
                return kExitConfig;
            }
            double v = 0;
            try {
                v = std::stod(t.substr(eq + 1));
            } catch (const std::exception &) {
                std::cerr << "error: --threshold value is not a number: '" << t << "'\n";
                return kExitConfig;
            }
            check(relent_config_set_threshold(cfg, t.substr(0, eq).c_str(), v), "--threshold");
        }
        if (extra.haar_samples) check(relent_config_set_haar_samples(cfg, *extra.haar_samples), "--haar-samples");
        if (extra.starts) check(relent_config_set_starts(cfg, *extra.starts), "--starts");
        if (extra.max_iters) check(relent_config_set_max_iters(cfg, *extra.max_iters), "--max-iters");
        if (extra.sigma_mixed) check(relent_config_set_sigma_maximally_mixed(cfg, 1), "--sigma-mixed");
    } catch (const std::pair<relent_status, std::string> &e) {
        return report(e.first, e.second.c_str());
    }

    relent_result *result = nullptr;
    s = relent_run(cfg, &result);
    if (s != RELENT_OK) {
        return report(s, experiment.c_str());
    }
    std::unique_ptr<relent_result, decltype(&relent_result_destroy)> result_guard(result, relent_result_destroy);

    int rc = write_artifacts(result, common.out);
    if (rc != kExitOk) {
        return rc;
    }
    print_summary(result);
    uint64_t failures = relent_result_assertion_failures(result);
    if (failures > 0) {
        std::cerr << "error: " << failures << " internal assertion failure(s); see flagged.csv\n";
        return kExitAssertion;
    }
    return kExitOk;
}

int run_plot(const std::string &input, const std::string &out) {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitIo;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    relent_result *result = nullptr;
    relent_status s = relent_plot(buf.str().c_str(), &result);
    if (s != RELENT_OK) {
        return report(s, "plot");
    }
    std::unique_ptr<relent_result, decltype(&relent_result_destroy)> guard(result, relent_result_destroy);
    return write_artifacts(result, out);
}

void add_common(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--samples", o.samples, "Number of samples (experiment default if omitted)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--workers", o.workers, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "Samples file format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--keep-rows", o.keep_rows, "Rows kept in the samples file");
    cmd->add_option("--threshold", o.thresholds, "Override a tolerance, name=value (repeatable)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"relent: Monte Carlo checks of two-qubit relative-entropy inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", relent_version());

    struct Sub {
        const char *name;
        const char *help;
    };
    const std::vector<Sub> experiments = {
        {"spectra-deltas", "Sample admissible spectrum triples and evaluate the spectral differences"},
        {"state-deltas", "Sample two-qubit state pairs and check delta_bar <= delta_s <= delta"},
        {"orbit-verify", "Check relative entropy over Haar unitary orbits against the analytic interval"},
        {"counterexample", "Search for pairs violating super-additivity of relative entropy"},
        {"local-opt", "Optimize relative entropy over local unitaries U_A (x) U_B"},
    };

    std::vector<CommonOptions> common(experiments.size());
    std::vector<ExtraOptions> extra(experiments.size());
    std::vector<CLI::App *> cmds;
    for (size_t k = 0; k < experiments.size(); k++) {
        CLI::App *cmd = app.add_subcommand(experiments[k].name, experiments[k].help);
        add_common(cmd, common[k]);
        std::string name = experiments[k].name;
        if (name == "orbit-verify") {
            cmd->add_option("--haar-samples", extra[k].haar_samples, "Haar unitaries per pair");
        } else if (name == "local-opt") {
            cmd->add_option("--starts", extra[k].starts, "Random starts per instance");
            cmd->add_option("--max-iters", extra[k].max_iters, "Iterations per start");
        } else if (name == "counterexample") {
            cmd->add_flag("--sigma-mixed", extra[k].sigma_mixed, "Use sigma = I/4 only");
        }
        cmds.push_back(cmd);
    }

    std::string plot_in;
    std::string plot_out = ".";
    CLI::App *plot = app.add_subcommand("plot", "Render SVG scatter plots from a samples CSV");
    plot->add_option("--in", plot_in, "Samples CSV")->required();
    plot->add_option("--out", plot_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    if (plot->parsed()) {
        return run_plot(plot_in, plot_out);
    }
    for (size_t k = 0; k < cmds.size(); k++) {
        if (cmds[k]->parsed()) {
            return run_experiment(experiments[k].name, common[k], extra[k]);
        }
    }
    return kExitConfig;
}
