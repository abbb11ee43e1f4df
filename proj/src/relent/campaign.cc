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

#include "relent/campaign.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "relent/orbit.h"
#include "relent/rng.h"
#include "relent/unitary_opt.h"

namespace relent {

namespace {

constexpr double kNoOrderingCheck = std::numeric_limits<double>::infinity();

// Stream tags for derive_stream, so one sample's draws never alias another
// purpose's.
enum StreamTag : uint64_t { kSpectraStream = 0, kStateStream = 1, kHaarStream = 2, kOptStream = 3 };

const std::vector<std::string> kSpectralInputs = {"l1", "l2", "l3", "l4", "lA", "lB",
                                                  "m1", "m2", "m3", "m4", "mA", "mB"};
const std::vector<std::string> kDeltaOutputs = {"delta_min", "delta_max", "delta_mix", "delta", "delta_bar"};

struct CounterSpec {
    std::string name;
    bool is_assertion;
};

struct Layout {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<std::string> quantities;
    std::vector<CounterSpec> counters;
};

struct Outcome {
    SampleRow row;
    std::vector<double> quantities;
    std::vector<uint64_t> counters;
};

using Evaluator = std::function<Outcome(uint64_t index)>;

bool row_less(const SampleRow &a, const SampleRow &b) {
    return a.index < b.index;
}

// Mergeable partial aggregate over a set of sample indices. merge() is
// commutative and associative, so results do not depend on scheduling.
class Partial {
   public:
    Partial(const Layout &layout, const CampaignConfig &config) : config_(config) {
        for (const auto &q : layout.quantities) {
            QuantityStats s;
            s.name = q;
            quantities_.push_back(std::move(s));
        }
        counters_.assign(layout.counters.size(), 0);
    }

    void add(Outcome &&o) {
        for (size_t k = 0; k < quantities_.size(); k++) {
            observe(quantities_[k], o.quantities[k], o.row);
        }
        for (size_t k = 0; k < counters_.size(); k++) {
            counters_[k] += o.counters[k];
        }
        if (!o.row.reason.empty() && flagged_.size() < config_.max_flagged_rows) {
            flagged_.push_back(o.row);
        }
        if (config_.retained_rows > 0) {
            retain({sample_priority(config_.master_seed, o.row.index), o.row.index}, std::move(o.row));
        }
    }

    void merge(Partial &&other) {
        for (size_t k = 0; k < quantities_.size(); k++) {
            QuantityStats &mine = quantities_[k];
            QuantityStats &theirs = other.quantities_[k];
            if (theirs.total() == 0) {
                continue;
            }
            bool empty = mine.total() == 0;
            mine.negative += theirs.negative;
            mine.zero += theirs.zero;
            mine.positive += theirs.positive;
            if (empty || lower(theirs.min_value, theirs.min_row.index, mine.min_value, mine.min_row.index)) {
                mine.min_value = theirs.min_value;
                mine.min_row = std::move(theirs.min_row);
            }
            if (empty || higher(theirs.max_value, theirs.max_row.index, mine.max_value, mine.max_row.index)) {
                mine.max_value = theirs.max_value;
                mine.max_row = std::move(theirs.max_row);
            }
        }
        for (size_t k = 0; k < counters_.size(); k++) {
            counters_[k] += other.counters_[k];
        }
        for (auto &f : other.flagged_) {
            flagged_.push_back(std::move(f));
        }
        std::sort(flagged_.begin(), flagged_.end(), row_less);
        if (flagged_.size() > config_.max_flagged_rows) {
            flagged_.resize(config_.max_flagged_rows);
        }
        for (auto &r : other.retained_) {
            retain(r.first, std::move(r.second));
        }
    }

    void finish_into(CampaignSummary &s) && {
        s.quantities = std::move(quantities_);
        std::sort(flagged_.begin(), flagged_.end(), row_less);
        s.flagged = std::move(flagged_);
        s.retained.clear();
        for (auto &r : retained_) {
            s.retained.push_back(std::move(r.second));
        }
        std::sort(s.retained.begin(), s.retained.end(), row_less);
        for (size_t k = 0; k < counters_.size(); k++) {
            s.counters[k].value = counters_[k];
        }
    }

   private:
    using Key = std::pair<uint64_t, uint64_t>;

    static bool lower(double v, uint64_t i, double best, uint64_t best_i) {
        return v < best || (v == best && i < best_i);
    }
    static bool higher(double v, uint64_t i, double best, uint64_t best_i) {
        return v > best || (v == best && i < best_i);
    }

    void observe(QuantityStats &s, double v, const SampleRow &row) {
        bool empty = s.total() == 0;
        double tol = config_.thresholds.zero_tol;
        if (v < -tol) {
            s.negative++;
        } else if (v <= tol) {
            s.zero++;
        } else {
            s.positive++;
        }
        if (empty || lower(v, row.index, s.min_value, s.min_row.index)) {
            s.min_value = v;
            s.min_row = row;
        }
        if (empty || higher(v, row.index, s.max_value, s.max_row.index)) {
            s.max_value = v;
            s.max_row = row;
        }
    }

    // Max-heap on key holding the retained_rows smallest keys seen.
    void retain(Key key, SampleRow &&row) {
        auto cmp = [](const auto &a, const auto &b) { return a.first < b.first; };
        if (retained_.size() < config_.retained_rows) {
            retained_.emplace_back(key, std::move(row));
            std::push_heap(retained_.begin(), retained_.end(), cmp);
        } else if (key < retained_.front().first) {
            std::pop_heap(retained_.begin(), retained_.end(), cmp);
            retained_.back() = {key, std::move(row)};
            std::push_heap(retained_.begin(), retained_.end(), cmp);
        }
    }

    const CampaignConfig &config_;
    std::vector<QuantityStats> quantities_;
    std::vector<uint64_t> counters_;
    std::vector<SampleRow> flagged_;
    std::vector<std::pair<Key, SampleRow>> retained_;
};

CampaignSummary run_engine(const CampaignConfig &config, const Layout &layout, const Evaluator &eval) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();

    uint64_t n = config.n_samples;
    uint64_t workers = std::max<uint64_t>(1, std::min<uint64_t>(config.workers, n));
    std::vector<Partial> partials;
    partials.reserve(workers);
    for (uint64_t w = 0; w < workers; w++) {
        partials.emplace_back(layout, config);
    }
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](uint64_t w) {
        uint64_t begin = n * w / workers;
        uint64_t end = n * (w + 1) / workers;
        try {
            for (uint64_t i = begin; i < end; i++) {
                partials[w].add(eval(i));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (uint64_t w = 0; w < workers; w++) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (uint64_t w = 1; w < workers; w++) {
        partials[0].merge(std::move(partials[w]));
    }

    CampaignSummary s;
    s.config = config;
    s.input_columns = layout.inputs;
    s.output_columns = layout.outputs;
    for (const auto &c : layout.counters) {
        s.counters.push_back(Counter{c.name, 0, c.is_assertion});
    }
    std::move(partials[0]).finish_into(s);
    s.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

void push_triple(std::vector<double> &out, const QubitMarginTriple &t) {
    for (double x : t.joint.sorted_desc()) {
        out.push_back(x);
    }
    out.push_back(t.margin_a);
    out.push_back(t.margin_b);
}

void push_deltas(std::vector<double> &out, const DeltaReport &r) {
    out.insert(out.end(), {r.delta_min, r.delta_max, r.delta_mix, r.delta, r.delta_bar});
}

void append_reason(std::string &reason, const std::string &tag) {
    reason += reason.empty() ? tag : ";" + tag;
}

DensityMatrix draw_full_rank_state(size_t dim, std::mt19937_64 &rng) {
    while (true) {
        DensityMatrix s(sample_random_density(dim, rng));
        if (s.spectrum().min() > 1e-12) {
            return s;
        }
    }
}

}  // namespace

std::string_view experiment_name(Experiment e) {
    switch (e) {
        case Experiment::SpectraDeltas:
            return "spectra-deltas";
        case Experiment::StateDeltas:
            return "state-deltas";
        case Experiment::OrbitVerify:
            return "orbit-verify";
        case Experiment::Counterexample:
            return "counterexample";
        case Experiment::LocalOpt:
            return "local-opt";
    }
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
    for (Experiment e : {Experiment::SpectraDeltas, Experiment::StateDeltas, Experiment::OrbitVerify,
                         Experiment::Counterexample, Experiment::LocalOpt}) {
        if (experiment_name(e) == name) {
            return e;
        }
    }
    return std::nullopt;
}

void Thresholds::set(std::string_view name, double value) {
    if (!std::isfinite(value) || value < 0) {
        throw ConfigError("threshold '" + std::string(name) + "' must be finite and non-negative");
    }
    if (name == "zero_tol") {
        zero_tol = value;
    } else if (name == "ordering_slack") {
        ordering_slack = value;
    } else if (name == "sandwich_slack") {
        sandwich_slack = value;
    } else if (name == "interval_slack") {
        interval_slack = value;
    } else if (name == "attainment_tol") {
        attainment_tol = value;
    } else if (name == "counterexample_tol") {
        counterexample_tol = value;
    } else if (name == "subgroup_slack") {
        subgroup_slack = value;
    } else {
        throw ConfigError("unknown threshold '" + std::string(name) + "'");
    }
}

std::vector<std::pair<std::string, double>> Thresholds::named() const {
    return {{"zero_tol", zero_tol},
            {"ordering_slack", ordering_slack},
            {"sandwich_slack", sandwich_slack},
            {"interval_slack", interval_slack},
            {"attainment_tol", attainment_tol},
            {"counterexample_tol", counterexample_tol},
            {"subgroup_slack", subgroup_slack}};
}

uint64_t CampaignConfig::default_samples(Experiment e) {
    switch (e) {
        case Experiment::SpectraDeltas:
            return 1000000;
        case Experiment::StateDeltas:
        case Experiment::Counterexample:
            return 10000;
        case Experiment::OrbitVerify:
            return 300;
        case Experiment::LocalOpt:
            return 100;
    }
    return 1000;
}

CampaignConfig CampaignConfig::defaults(Experiment e) {
    CampaignConfig c;
    c.experiment = e;
    c.n_samples = default_samples(e);
    return c;
}

void CampaignConfig::validate() const {
    if (n_samples < 1) {
        throw ConfigError("n_samples must be >= 1");
    }
    if (workers < 1) {
        throw ConfigError("workers must be >= 1");
    }
    if (margin_tries < 1) {
        throw ConfigError("margin_tries must be >= 1");
    }
    if (experiment == Experiment::OrbitVerify && haar_samples < 1) {
        throw ConfigError("haar_samples must be >= 1");
    }
    if (experiment == Experiment::LocalOpt && (starts < 1 || max_iters < 1)) {
        throw ConfigError("starts and max_iters must be >= 1");
    }
}

const QuantityStats &CampaignSummary::quantity(std::string_view name) const {
    for (const auto &q : quantities) {
        if (q.name == name) {
            return q;
        }
    }
    throw std::out_of_range("no quantity named " + std::string(name));
}

uint64_t CampaignSummary::counter(std::string_view name) const {
    for (const auto &c : counters) {
        if (c.name == name) {
            return c.value;
        }
    }
    throw std::out_of_range("no counter named " + std::string(name));
}

uint64_t CampaignSummary::assertion_failures() const {
    uint64_t n = 0;
    for (const auto &c : counters) {
        if (c.is_assertion) {
            n += c.value;
        }
    }
    return n;
}

std::vector<std::string> CampaignSummary::columns() const {
    std::vector<std::string> cols = input_columns;
    cols.insert(cols.end(), output_columns.begin(), output_columns.end());
    return cols;
}

SpectraSample draw_spectra_sample(uint64_t master_seed, uint64_t index, uint64_t margin_tries) {
    std::mt19937_64 rng = derive_stream(master_seed, index, kSpectraStream);
    SpectraSample out;
    auto draw = [&](bool full_rank) {
        while (true) {
            Spectrum joint = sample_joint_spectrum(rng, full_rank);
            try {
                auto [a, b] = sample_admissible_margins(joint, rng, margin_tries);
                return QubitMarginTriple{std::move(joint), a, b};
            } catch (const SamplingFailure &) {
                out.resamples++;
            }
        }
    };
    out.rho = draw(false);
    out.sigma = draw(true);
    return out;
}

StatePair draw_state_pair(uint64_t master_seed, uint64_t index, size_t dim, bool sigma_maximally_mixed) {
    std::mt19937_64 rng = derive_stream(master_seed, index, kStateStream);
    DensityMatrix rho(sample_random_density(dim, rng));
    if (sigma_maximally_mixed) {
        return StatePair{std::move(rho), DensityMatrix::maximally_mixed(dim)};
    }
    DensityMatrix sigma = draw_full_rank_state(dim, rng);
    return StatePair{std::move(rho), std::move(sigma)};
}

StatePair state_deltas_pair(uint64_t master_seed, uint64_t index) {
    StatePair p = draw_state_pair(master_seed, index, 4);
    if (index == 0) {
        p.rho = p.sigma;
    }
    return p;
}

DeltaReport recompute_spectra_row(std::span<const double> inputs) {
    if (inputs.size() != 12) {
        throw DomainError("recompute_spectra_row: expected 12 input columns");
    }
    QubitMarginTriple rho{Spectrum({inputs[0], inputs[1], inputs[2], inputs[3]}), inputs[4], inputs[5]};
    QubitMarginTriple sigma{Spectrum({inputs[6], inputs[7], inputs[8], inputs[9]}), inputs[10], inputs[11]};
    return compute_deltas(rho, sigma, kNoOrderingCheck);
}

CampaignSummary run_spectra_deltas(const CampaignConfig &config) {
    Layout layout{kSpectralInputs, kDeltaOutputs, kDeltaOutputs,
                  {{"margin_resamples", false}, {"potential_counterexamples", false}, {"ordering_violations", true}}};
    const Thresholds &th = config.thresholds;
    return run_engine(config, layout, [&](uint64_t i) {
        SpectraSample s = draw_spectra_sample(config.master_seed, i, config.margin_tries);
        DeltaReport r = compute_deltas(s.rho, s.sigma, kNoOrderingCheck);
        Outcome o;
        o.row.index = i;
        push_triple(o.row.values, s.rho);
        push_triple(o.row.values, s.sigma);
        push_deltas(o.row.values, r);
        o.quantities = {r.delta_min, r.delta_max, r.delta_mix, r.delta, r.delta_bar};
        bool mix_negative = r.delta_mix < -th.zero_tol;
        bool delta_negative = r.delta < -th.zero_tol;
        bool ordering_bad = ordering_violations(r, th.ordering_slack) != 0;
        if (mix_negative) {
            append_reason(o.row.reason, "POTENTIAL-COUNTEREXAMPLE:delta_mix");
        }
        if (delta_negative) {
            append_reason(o.row.reason, "POTENTIAL-COUNTEREXAMPLE:delta");
        }
        if (ordering_bad) {
            append_reason(o.row.reason, "ORDERING-VIOLATION");
        }
        o.counters = {s.resamples, uint64_t{mix_negative || delta_negative}, uint64_t{ordering_bad}};
        return o;
    });
}

CampaignSummary run_state_deltas(const CampaignConfig &config) {
    std::vector<std::string> outputs = kDeltaOutputs;
    outputs.push_back("delta_s");
    Layout layout{kSpectralInputs,
                  outputs,
                  outputs,
                  {{"superadditivity_violations", false},
                   {"clear_superadditivity_violations", false},
                   {"support_violations", false},
                   {"ordering_violations", true},
                   {"sandwich_violations", true}}};
    const Thresholds &th = config.thresholds;
    return run_engine(config, layout, [&](uint64_t i) {
        StatePair p = state_deltas_pair(config.master_seed, i);
        DeltaReport r = compute_deltas(margins_of_state(p.rho), margins_of_state(p.sigma), kNoOrderingCheck);
        DeltaS ds = delta_s(p.rho, p.sigma);
        r.delta_s = ds.value;
        Outcome o;
        o.row.index = i;
        push_triple(o.row.values, r.rho_side);
        push_triple(o.row.values, r.sigma_side);
        push_deltas(o.row.values, r);
        o.row.values.push_back(ds.value);
        o.quantities = {r.delta_min, r.delta_max, r.delta_mix, r.delta, r.delta_bar, ds.value};
        bool ordering_bad = ordering_violations(r, th.ordering_slack) != 0;
        bool sandwich_bad = !ds.support_violation && !sandwich_holds(r, th.sandwich_slack);
        if (ordering_bad) {
            append_reason(o.row.reason, "ORDERING-VIOLATION");
        }
        if (sandwich_bad) {
            append_reason(o.row.reason, "SANDWICH-VIOLATION");
        }
        if (ds.value < -th.zero_tol) {
            append_reason(o.row.reason, "SUPERADDITIVITY-VIOLATION");
        }
        o.counters = {uint64_t{ds.value < -th.zero_tol}, uint64_t{ds.value < -th.counterexample_tol},
                      uint64_t{ds.support_violation}, uint64_t{ordering_bad}, uint64_t{sandwich_bad}};
        return o;
    });
}

CampaignSummary run_orbit_verify(const CampaignConfig &config) {
    Layout layout{{"dim"},
                  {"analytic_min", "analytic_max", "observed_min", "observed_max", "lower_gap", "upper_gap",
                   "coverage", "min_attainment_error", "max_attainment_error", "violations"},
                  {"lower_gap", "upper_gap"},
                  {{"haar_evaluations", false}, {"interval_violations", true}, {"attainment_failures", true}}};
    const Thresholds &th = config.thresholds;
    return run_engine(config, layout, [&](uint64_t i) {
        size_t dim = 2 + i % 3;
        StatePair p = draw_state_pair(config.master_seed, i, dim);
        std::mt19937_64 rng = derive_stream(config.master_seed, i, kHaarStream);
        OrbitIntervalReport rep = verify_orbit_interval(p.rho, p.sigma, config.haar_samples, rng, th.interval_slack);
        double lower_gap = rep.observed_min - rep.analytic.min_value;
        double upper_gap = rep.analytic.max_value - rep.observed_max;
        uint64_t attain_bad = (rep.min_attainment_error > th.attainment_tol) + (rep.max_attainment_error > th.attainment_tol);
        Outcome o;
        o.row.index = i;
        o.row.values = {static_cast<double>(dim),
                        rep.analytic.min_value,
                        rep.analytic.max_value,
                        rep.observed_min,
                        rep.observed_max,
                        lower_gap,
                        upper_gap,
                        rep.coverage,
                        rep.min_attainment_error,
                        rep.max_attainment_error,
                        static_cast<double>(rep.violations)};
        o.quantities = {lower_gap, upper_gap};
        if (rep.violations != 0) {
            append_reason(o.row.reason, "INTERVAL-VIOLATION");
        }
        if (attain_bad != 0) {
            append_reason(o.row.reason, "ATTAINMENT-FAILURE");
        }
        o.counters = {rep.n_samples, rep.violations, attain_bad};
        return o;
    });
}

CampaignSummary run_counterexample_search(const CampaignConfig &config) {
    Layout layout{kSpectralInputs,
                  {"delta_s"},
                  {"delta_s"},
                  {{"superadditivity_violations", false},
                   {"clear_superadditivity_violations", false},
                   {"support_violations", false}}};
    const Thresholds &th = config.thresholds;
    CampaignSummary s = run_engine(config, layout, [&](uint64_t i) {
        StatePair p = draw_state_pair(config.master_seed, i, 4, config.sigma_maximally_mixed);
        DeltaS ds = delta_s(p.rho, p.sigma);
        Outcome o;
        o.row.index = i;
        push_triple(o.row.values, margins_of_state(p.rho));
        push_triple(o.row.values, margins_of_state(p.sigma));
        o.row.values.push_back(ds.value);
        o.quantities = {ds.value};
        if (ds.value < -th.zero_tol) {
            append_reason(o.row.reason, "SUPERADDITIVITY-VIOLATION");
        }
        o.counters = {uint64_t{ds.value < -th.zero_tol}, uint64_t{ds.value < -th.counterexample_tol},
                      uint64_t{ds.support_violation}};
        return o;
    });

    const QuantityStats &q = s.quantity("delta_s");
    StatePair best = draw_state_pair(config.master_seed, q.min_row.index, 4, config.sigma_maximally_mixed);
    CounterexampleFixture f;
    f.master_seed = config.master_seed;
    f.index = q.min_row.index;
    f.rho = best.rho;
    f.sigma = best.sigma;
    f.delta_s = f.recompute();
    s.fixture = std::move(f);
    return s;
}

CampaignSummary run_local_opt(const CampaignConfig &config) {
    Layout layout{{},
                  {"orbit_min", "orbit_max", "local_max", "local_min", "local_additivity_margin", "max_converged",
                   "min_converged"},
                  {"local_additivity_margin", "local_max_gap", "local_min_gap"},
                  {{"local_additivity_shortfalls", false}, {"nonconverged_runs", false}, {"subgroup_violations", true}}};
    const Thresholds &th = config.thresholds;
    return run_engine(config, layout, [&](uint64_t i) {
        StatePair p = draw_state_pair(config.master_seed, i, 4);
        std::mt19937_64 rng = derive_stream(config.master_seed, i, kOptStream);
        OrbitExtremes ext = orbit_extremes(p.rho.spectrum(), p.sigma.spectrum());

        OptimizerConfig opt;
        opt.max_iters = config.max_iters;
        opt.mode = OptMode::Maximize;
        OptimizerTrace up = optimize_local_multistart(p.rho, p.sigma, opt, rng, config.starts);
        opt.mode = OptMode::Minimize;
        OptimizerTrace down = optimize_local_multistart(p.rho, p.sigma, opt, rng, config.starts);

        auto margin_divergence = [&](const ComplexMatrix &u, Subsystem keep) {
            DensityMatrix r(conjugate_by(u, partial_trace(p.rho.matrix(), 2, 2, keep)));
            DensityMatrix s(partial_trace(p.sigma.matrix(), 2, 2, keep));
            return relative_entropy_quantum(r, s).as_double();
        };
        double local_max = up.final_objective();
        double local_min = down.final_objective();
        double additivity_margin = local_max - margin_divergence(up.final_a, Subsystem::A) -
                    margin_divergence(up.final_b, Subsystem::B);
        double max_gap = ext.max_value - local_max;
        double min_gap = local_min - ext.min_value;
        bool subgroup_bad = max_gap < -th.subgroup_slack || min_gap < -th.subgroup_slack;

        Outcome o;
        o.row.index = i;
        o.row.values = {ext.min_value, ext.max_value, local_max, local_min, additivity_margin,
                        up.converged ? 1.0 : 0.0, down.converged ? 1.0 : 0.0};
        o.quantities = {additivity_margin, max_gap, min_gap};
        if (additivity_margin < -th.zero_tol) {
            append_reason(o.row.reason, "LOCAL-ADDITIVITY-NOT-WITNESSED");
        }
        if (subgroup_bad) {
            append_reason(o.row.reason, "SUBGROUP-VIOLATION");
        }
        o.counters = {uint64_t{additivity_margin < -th.zero_tol}, uint64_t{!up.converged} + uint64_t{!down.converged},
                      uint64_t{subgroup_bad}};
        return o;
    });
}

CampaignSummary run_campaign(const CampaignConfig &config) {
    switch (config.experiment) {
        case Experiment::SpectraDeltas:
            return run_spectra_deltas(config);
        case Experiment::StateDeltas:
            return run_state_deltas(config);
        case Experiment::OrbitVerify:
            return run_orbit_verify(config);
        case Experiment::Counterexample:
            return run_counterexample_search(config);
        case Experiment::LocalOpt:
            return run_local_opt(config);
    }
    throw ConfigError("unknown experiment");
}

}  // namespace relent
