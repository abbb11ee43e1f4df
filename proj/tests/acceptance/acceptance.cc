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


// Acceptance suite. Each criterion prints one PASS/FAIL line; `--criterion N`
// runs a single one so ctest can register them separately.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "relent/fixture.h"
#include "relent/marginal.h"
#include "relent/orbit.h"
#include "relent/relent.h"
#include "relent/unitary_opt.h"

namespace fs = std::filesystem;
using namespace relent;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

using ResultPtr = std::unique_ptr<relent_result, decltype(&relent_result_destroy)>;

ResultPtr run(const char *experiment, uint64_t samples, uint64_t seed,
              const std::function<void(relent_config *)> &extra = {}) {
    relent_config *c = nullptr;
    if (relent_config_create(experiment, &c) != RELENT_OK) {
        throw std::runtime_error(relent_last_error());
    }
    relent_config_set_samples(c, samples);
    relent_config_set_seed(c, seed);
    relent_config_set_workers(c, worker_count());
    if (extra) {
        extra(c);
    }
    relent_result *r = nullptr;
    relent_status s = relent_run(c, &r);
    relent_config_destroy(c);
    if (s != RELENT_OK) {
        throw std::runtime_error(std::string(experiment) + ": " + relent_last_error());
    }
    return ResultPtr(r, relent_result_destroy);
}

struct Counts {
    uint64_t negative = 0, zero = 0, positive = 0;
    double min = 0;
    double fraction() const { return static_cast<double>(negative) / static_cast<double>(negative + zero + positive); }
};

Counts counts(const relent_result *r, const char *name) {
    Counts c;
    if (relent_result_quantity(r, name, &c.negative, &c.zero, &c.positive, &c.min) != RELENT_OK) {
        throw std::runtime_error(relent_last_error());
    }
    return c;
}

uint64_t counter(const relent_result *r, const char *name) {
    uint64_t v = 0;
    if (relent_result_counter(r, name, &v) != RELENT_OK) {
        throw std::runtime_error(relent_last_error());
    }
    return v;
}

std::string artifact(const relent_result *r, const std::string &wanted) {
    for (size_t i = 0; i < relent_result_artifact_count(r); i++) {
        const char *name = nullptr, *content = nullptr;
        relent_result_artifact(r, i, &name, &content);
        if (wanted == name) {
            return content;
        }
    }
    throw std::runtime_error("missing artifact " + wanted);
}

size_t count_occurrences(const std::string &text, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

// The 10^6-sample spectra run is shared by criteria 1-4.
struct SpectraRun {
    ResultPtr result{nullptr, relent_result_destroy};
    double seconds = 0;
};

SpectraRun &spectra_run() {
    static SpectraRun run_once = [] {
        SpectraRun s;
        auto t0 = std::chrono::steady_clock::now();
        s.result = run("spectra-deltas", 1000000, 42);
        s.seconds = seconds_since(t0);
        return s;
    }();
    return run_once;
}

Verdict criterion_1() {
    auto &s = spectra_run();
    Counts mix = counts(s.result.get(), "delta_mix"), d = counts(s.result.get(), "delta");
    std::string flagged = artifact(s.result.get(), "flagged.csv");
    uint64_t emitted = count_occurrences(flagged, "POTENTIAL-COUNTEREXAMPLE");
    bool pass = mix.negative == 0 && d.negative == 0 && s.seconds < 600 && emitted >= std::max(mix.negative, d.negative);
    return {pass, fmt("negative delta_mix=%llu (min %.6g), negative delta=%llu (min %.6g), "
                      "potential-counterexample rows=%llu, runtime %.1f s",
                      (unsigned long long)mix.negative, mix.min, (unsigned long long)d.negative, d.min,
                      (unsigned long long)emitted, s.seconds)};
}

Verdict criterion_2() {
    Counts c = counts(spectra_run().result.get(), "delta_min");
    return {c.negative > 0, fmt("negative delta_min=%llu, fraction %.4f", (unsigned long long)c.negative, c.fraction())};
}

Verdict criterion_3() {
    Counts c = counts(spectra_run().result.get(), "delta_max");
    return {c.fraction() < 0.01,
            fmt("negative delta_max=%llu, fraction %.2e (< 1%%)", (unsigned long long)c.negative, c.fraction())};
}

Verdict criterion_4() {
    uint64_t v = counter(spectra_run().result.get(), "ordering_violations");
    return {v == 0, fmt("ordering-chain violations at slack 1e-10: %llu of 1000000", (unsigned long long)v)};
}

Verdict criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run("orbit-verify", 300, 42, [](relent_config *c) { relent_config_set_haar_samples(c, 1000); });
    double secs = seconds_since(t0);
    uint64_t out_of_interval = counter(r.get(), "interval_violations");
    uint64_t attainment = counter(r.get(), "attainment_failures");
    uint64_t evals = counter(r.get(), "haar_evaluations");
    bool pass = out_of_interval == 0 && attainment == 0 && evals == 300000 && secs < 120;
    return {pass, fmt("100 pairs x d in {2,3,4}, %llu Haar evaluations: %llu outside interval, "
                      "%llu attainment failures, runtime %.1f s",
                      (unsigned long long)evals, (unsigned long long)out_of_interval, (unsigned long long)attainment,
                      secs)};
}

Verdict criterion_6() {
    auto r = run("state-deltas", 10000, 42);
    uint64_t v = counter(r.get(), "sandwich_violations");
    uint64_t support = counter(r.get(), "support_violations");
    return {v == 0 && support == 0,
            fmt("sandwich violations at slack 1e-9: %llu of 10000", (unsigned long long)v)};
}

Verdict criterion_7() {
    auto r = run("counterexample", 10000, 42);
    Counts c = counts(r.get(), "delta_s");
    CounterexampleFixture found = CounterexampleFixture::from_json(artifact(r.get(), "counterexample_fixture.json"));
    bool full_rank = found.rho.spectrum().min() > 0 && found.sigma.spectrum().min() > 0;
    double found_err = std::abs(found.recompute() - found.delta_s);

    std::ifstream f(RELENT_FIXTURE_DIR "/superadditivity_counterexample.json");
    std::stringstream buf;
    buf << f.rdbuf();
    double stored = 0, recomputed = 0;
    bool pinned_ok = relent_fixture_recompute(buf.str().c_str(), &stored, &recomputed) == RELENT_OK;
    double pinned_err = std::abs(stored - recomputed);

    bool pass = c.min < -1e-6 && full_rank && found_err <= 1e-12 && pinned_ok && pinned_err <= 1e-12 && stored < -1e-6;
    return {pass, fmt("best delta_s=%.6g (index %llu, full rank: %s), fixture recompute error %.1e, "
                      "pinned fixture delta_s=%.6g recompute error %.1e",
                      c.min, (unsigned long long)found.index, full_rank ? "yes" : "no", found_err, stored, pinned_err)};
}

Verdict criterion_8() {
    std::mt19937_64 rng(42);
    const double eps = 1e-5;
    double worst = 0;
    int bad = 0;
    for (int t = 0; t < 100; t++) {
        size_t d = t % 2 == 0 ? 2 : 4;
        DensityMatrix rho(sample_random_density(d, rng));
        DensityMatrix sigma(sample_random_density(d, rng));
        ComplexMatrix u = sample_haar_unitary(d, rng);
        ComplexMatrix g = sample_ginibre(d, d, rng);
        ComplexMatrix k = g - g.adjoint();
        k *= 0.5;
        auto f = [&](const ComplexMatrix &v) {
            return relative_entropy_quantum(DensityMatrix(conjugate_by(v, rho.matrix())), sigma).bits();
        };
        double analytic = (k * riemannian_gradient(u, rho, sigma)).trace().real();
        double fd = (f(expm_skew_hermitian(eps * k) * u) - f(expm_skew_hermitian(-eps * k) * u)) / (2 * eps);
        double rel = std::abs(analytic - fd) / std::max(std::abs(fd), 1e-12);
        worst = std::max(worst, rel);
        bad += rel >= 1e-5;
    }
    return {bad == 0, fmt("100 tuples at d in {2,4}: worst relative error %.2e, %d above 1e-5", worst, bad)};
}

Verdict criterion_9() {
    std::mt19937_64 rng(42);
    double worst_gap = 0, worst_drift = 0;
    int failures = 0;
    for (int t = 0; t < 50; t++) {
        size_t d = t % 2 == 0 ? 2 : 4;
        DensityMatrix rho(sample_random_density(d, rng));
        DensityMatrix sigma(sample_random_density(d, rng));
        OrbitExtremes e = orbit_extremes(rho.spectrum(), sigma.spectrum());
        for (OptMode mode : {OptMode::Maximize, OptMode::Minimize}) {
            OptimizerConfig c;
            c.mode = mode;
            OptimizerTrace tr = optimize_full_with_restarts(rho, sigma, c, rng);
            double target = mode == OptMode::Maximize ? e.max_value : e.min_value;
            double gap = std::abs(tr.final_objective() - target);
            worst_gap = std::max(worst_gap, gap);
            worst_drift = std::max(worst_drift, tr.max_unitarity_defect);
            failures += !tr.converged || gap > 1e-6 || tr.max_unitarity_defect > 1e-8;
        }
    }
    return {failures == 0, fmt("50 instances x {max,min}: worst gap to analytic extreme %.2e bits, "
                               "worst unitarity drift %.2e, %d failures",
                               worst_gap, worst_drift, failures)};
}

Verdict criterion_10() {
    std::mt19937_64 rng(42);
    int bad = 0;
    double tightest = 1e300;
    for (int t = 0; t < 100000; t++) {
        DensityMatrix rho(sample_random_density(4, rng));
        BravyiCheck c = bravyi_admissible(margins_of_state(rho), 1e-10);
        bad += !c.admissible;
        tightest = std::min({tightest, c.residuals[0], c.residuals[1], -c.residuals[2]});
    }
    return {bad == 0, fmt("100000 random two-qubit states: %d inadmissible at slack 1e-10, tightest residual %.2e",
                          bad, tightest)};
}

std::map<std::string, std::string> read_dir(const fs::path &dir) {
    std::map<std::string, std::string> out;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.path().filename() == "runtime.json") {
            continue;
        }
        std::ifstream f(entry.path(), std::ios::binary);
        std::stringstream buf;
        buf << f.rdbuf();
        out[entry.path().filename().string()] = buf.str();
    }
    return out;
}

Verdict criterion_11() {
    struct Case {
        const char *experiment;
        const char *args;
    };
    const Case cases[] = {
        {"spectra-deltas", "--samples 100000 --format csv"},
        {"spectra-deltas", "--samples 20000 --format json"},
        {"state-deltas", "--samples 2000"},
        {"orbit-verify", "--samples 30 --haar-samples 200"},
        {"counterexample", "--samples 2000 --format json"},
        {"local-opt", "--samples 4 --starts 3 --max-iters 300"},
    };
    fs::path root = fs::temp_directory_path() / ("relent_determinism_" + std::to_string(::getpid()));
    int mismatches = 0, files = 0;
    std::string first_bad;
    for (size_t k = 0; k < std::size(cases); k++) {
        std::map<std::string, std::string> outputs[2];
        int workers[2] = {1, 8};
        for (int w = 0; w < 2; w++) {
            fs::path dir = root / (std::to_string(k) + "_w" + std::to_string(workers[w]));
            std::string cmd = std::string("\"") + RELENT_CLI_PATH + "\" " + cases[k].experiment + " " + cases[k].args +
                              " --seed 42 --workers " + std::to_string(workers[w]) + " --out \"" + dir.string() +
                              "\" > /dev/null";
            int rc = std::system(cmd.c_str());
            if (rc != 0) {
                fs::remove_all(root);
                return {false, fmt("CLI exited with status %d for %s", rc, cases[k].experiment)};
            }
            outputs[w] = read_dir(dir);
        }
        if (outputs[0].size() != outputs[1].size()) {
            mismatches++;
        }
        for (const auto &[name, content] : outputs[0]) {
            files++;
            auto it = outputs[1].find(name);
            if (it == outputs[1].end() || it->second != content) {
                mismatches++;
                if (first_bad.empty()) {
                    first_bad = std::string(cases[k].experiment) + "/" + name;
                }
            }
        }
    }
    fs::remove_all(root);
    return {mismatches == 0 && files > 0,
            fmt("%d output files compared between --workers 1 and --workers 8: %d differ%s%s", files, mismatches,
                first_bad.empty() ? "" : ", first: ", first_bad.c_str())};
}

const std::vector<std::pair<const char *, Verdict (*)()>> kCriteria = {
    {"conjectured differences delta_mix and delta are never negative", criterion_1},
    {"delta_min is negative on some samples", criterion_2},
    {"delta_max is negative on under 1% of samples", criterion_3},
    {"ordering chain on every spectra sample", criterion_4},
    {"unitary-orbit interval containment and attainment", criterion_5},
    {"sandwich delta_bar <= delta_s <= delta", criterion_6},
    {"full-rank super-additivity counterexample and pinned fixture", criterion_7},
    {"Riemannian gradient vs central differences", criterion_8},
    {"full-unitary optimizer reaches analytic extremes", criterion_9},
    {"margins of random states satisfy the two-qubit marginal inequalities", criterion_10},
    {"outputs byte-identical across worker counts", criterion_11},
};

bool run_one(size_t n) {
    const auto &[title, fn] = kCriteria[n - 1];
    Verdict v;
    try {
        v = fn();
    } catch (const std::exception &e) {
        v = {false, std::string("error: ") + e.what()};
    }
    std::printf("[%s] criterion %zu: %s -- %s\n", v.pass ? "PASS" : "FAIL", n, title, v.detail.c_str());
    std::fflush(stdout);
    return v.pass;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<size_t> selected;
    for (int i = 1; i < argc; i++) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            size_t n = std::strtoul(argv[++i], nullptr, 10);
            if (n < 1 || n > kCriteria.size()) {
                std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
                return 2;
            }
            selected.push_back(n);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty()) {
        for (size_t n = 1; n <= kCriteria.size(); n++) {
            selected.push_back(n);
        }
    }
    bool all = true;
    for (size_t n : selected) {
        all = run_one(n) && all;
    }
    if (selected.size() == kCriteria.size()) {
        std::printf("[SKIP] criterion 12: exact reproduction of the original point clouds -- excluded "
                    "(sampling distribution unspecified; replaced by criteria 1-4)\n");
    }
    return all ? 0 : 1;
}
