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

#ifndef RELENT_CAMPAIGN_H
#define RELENT_CAMPAIGN_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relent/deltas.h"
#include "relent/fixture.h"

namespace relent {

/// Invalid campaign configuration (maps to CLI exit code 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Experiment { SpectraDeltas, StateDeltas, OrbitVerify, Counterexample, LocalOpt };

std::string_view experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

/// Named tolerances. Each has a CLI/C-API name (see `set`).
struct Thresholds {
    /// |v| <= zero_tol counts as zero, v < -zero_tol as negative.
    double zero_tol = 1e-12;
    double ordering_slack = kOrderingSlack;
    double sandwich_slack = kSandwichSlack;
    double interval_slack = 1e-9;
    double attainment_tol = 1e-9;
    /// delta_s below -counterexample_tol is a clear super-additivity violation.
    double counterexample_tol = 1e-6;
    double subgroup_slack = 1e-9;

    /// Throws ConfigError on an unknown name or a negative/non-finite value.
    void set(std::string_view name, double value);
    std::vector<std::pair<std::string, double>> named() const;
};

struct CampaignConfig {
    Experiment experiment = Experiment::SpectraDeltas;
    uint64_t n_samples = 0;
    uint64_t master_seed = 0;
    unsigned workers = 1;
    Thresholds thresholds;

    /// Rows kept for the samples CSV (keyed-hash bottom-k subsample).
    uint64_t retained_rows = 10000;
    /// Flagged rows kept (lowest indices first).
    uint64_t max_flagged_rows = 10000;
    uint64_t margin_tries = 1000000;
    /// orbit-verify: Haar unitaries per pair.
    uint64_t haar_samples = 1000;
    /// local-opt: random starts per instance and optimizer budget.
    int starts = 20;
    int max_iters = 2000;
    /// counterexample: draw sigma = I/4 only.
    bool sigma_maximally_mixed = false;

    static uint64_t default_samples(Experiment e);
    /// Config with experiment defaults filled in.
    static CampaignConfig defaults(Experiment e);
    void validate() const;
};

/// One output row: sample index plus input and output columns.
struct SampleRow {
    uint64_t index = 0;
    std::vector<double> values;
    /// Why the row was flagged; empty for ordinary rows.
    std::string reason;
};

struct QuantityStats {
    std::string name;
    uint64_t negative = 0;
    uint64_t zero = 0;
    uint64_t positive = 0;
    double min_value = 0;
    double max_value = 0;
    SampleRow min_row;
    SampleRow max_row;

    uint64_t total() const { return negative + zero + positive; }
};

struct Counter {
    std::string name;
    uint64_t value = 0;
    /// Internal assertions: a non-zero value is a failure, not a finding.
    bool is_assertion = false;
};

struct CampaignSummary {
    CampaignConfig config;
    std::vector<std::string> input_columns;
    std::vector<std::string> output_columns;
    std::vector<QuantityStats> quantities;
    std::vector<Counter> counters;
    /// Sorted by index.
    std::vector<SampleRow> retained;
    /// Sorted by index.
    std::vector<SampleRow> flagged;
    /// counterexample experiment: the most negative delta_s instance.
    std::optional<CounterexampleFixture> fixture;
    double runtime_seconds = 0;

    const QuantityStats &quantity(std::string_view name) const;
    uint64_t counter(std::string_view name) const;
    uint64_t assertion_failures() const;
    std::vector<std::string> columns() const;
};

/// Runs any experiment; dispatches on config.experiment.
CampaignSummary run_campaign(const CampaignConfig &config);

CampaignSummary run_spectra_deltas(const CampaignConfig &config);
CampaignSummary run_state_deltas(const CampaignConfig &config);
CampaignSummary run_orbit_verify(const CampaignConfig &config);
CampaignSummary run_counterexample_search(const CampaignConfig &config);
CampaignSummary run_local_opt(const CampaignConfig &config);

/// Admissible rho-side and full-rank sigma-side triples for one sample.
struct SpectraSample {
    QubitMarginTriple rho;
    QubitMarginTriple sigma;
    /// Joint spectra redrawn because margin sampling ran out of tries.
    uint64_t resamples = 0;
};
SpectraSample draw_spectra_sample(uint64_t master_seed, uint64_t index, uint64_t margin_tries);

/// Two Ginibre states of dimension `dim` for one sample; sigma is redrawn
/// until its smallest eigenvalue exceeds 1e-12 (or is I/dim when requested).
struct StatePair {
    DensityMatrix rho;
    DensityMatrix sigma;
};
StatePair draw_state_pair(uint64_t master_seed, uint64_t index, size_t dim, bool sigma_maximally_mixed = false);

/// The state pair that state-deltas evaluates at `index` (index 0 is rho = sigma).
StatePair state_deltas_pair(uint64_t master_seed, uint64_t index);

/// Recomputes the spectra-deltas outputs from a row's 12 input columns.
DeltaReport recompute_spectra_row(std::span<const double> inputs);

}  // namespace relent

#endif
