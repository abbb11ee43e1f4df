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

#include "relent/relent.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relent/campaign.h"
#include "relent/campaign_output.h"
#include "relent/deltas.h"
#include "relent/orbit.h"

struct relent_config {
    relent::CampaignConfig config;
    relent::RowFormat format = relent::RowFormat::Csv;
};

struct relent_result {
    std::optional<relent::CampaignSummary> summary;
    std::vector<relent::Artifact> artifacts;
    std::string summary_json;
};

namespace {

thread_local std::string last_error;

relent_status fail(relent_status status, const std::string &message) {
    last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
relent_status guarded(F &&body) {
    last_error.clear();
    try {
        return body();
    } catch (const relent::ConfigError &e) {
        return fail(RELENT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const relent::SamplingFailure &e) {
        return fail(RELENT_ERR_SAMPLING, e.what());
    } catch (const relent::DomainError &e) {
        return fail(RELENT_ERR_DOMAIN, e.what());
    } catch (const std::out_of_range &e) {
        return fail(RELENT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(RELENT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RELENT_ERR_INTERNAL, "unknown exception");
    }
}

#define RELENT_REQUIRE(cond, msg)                          \
    do {                                                   \
        if (!(cond)) {                                     \
            return fail(RELENT_ERR_INVALID_ARGUMENT, msg); \
        }                                                  \
    } while (0)

relent::QubitMarginTriple triple_from(const double *t) {
    return relent::QubitMarginTriple{relent::Spectrum({t[0], t[1], t[2], t[3]}), t[4], t[5]};
}

}  // namespace

extern "C" {

const char *relent_version(void) {
    return "0.1.0";
}

const char *relent_last_error(void) {
    return last_error.c_str();
}

const char *relent_status_name(relent_status status) {
    switch (status) {
        case RELENT_OK:
            return "ok";
        case RELENT_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case RELENT_ERR_DOMAIN:
            return "domain error";
        case RELENT_ERR_SAMPLING:
            return "sampling failure";
        case RELENT_ERR_PARSE:
            return "parse error";
        case RELENT_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

relent_status relent_config_create(const char *experiment, relent_config **out) {
    return guarded([&] {
        RELENT_REQUIRE(experiment != nullptr && out != nullptr, "relent_config_create: null argument");
        auto e = relent::parse_experiment(experiment);
        if (!e) {
            return fail(RELENT_ERR_INVALID_ARGUMENT, std::string("unknown experiment '") + experiment + "'");
        }
        auto cfg = std::make_unique<relent_config>();
        cfg->config = relent::CampaignConfig::defaults(*e);
        *out = cfg.release();
        return RELENT_OK;
    });
}

void relent_config_destroy(relent_config *config) {
    delete config;
}

relent_status relent_config_set_samples(relent_config *config, uint64_t n_samples) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(n_samples >= 1, "samples must be >= 1");
    config->config.n_samples = n_samples;
    return RELENT_OK;
}

relent_status relent_config_set_seed(relent_config *config, uint64_t seed) {
    RELENT_REQUIRE(config != nullptr, "null config");
    config->config.master_seed = seed;
    return RELENT_OK;
}

relent_status relent_config_set_workers(relent_config *config, uint32_t workers) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(workers >= 1, "workers must be >= 1");
    config->config.workers = workers;
    return RELENT_OK;
}

relent_status relent_config_set_row_format(relent_config *config, relent_row_format format) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(format == RELENT_FORMAT_CSV || format == RELENT_FORMAT_JSON, "unknown row format");
    config->format = format == RELENT_FORMAT_CSV ? relent::RowFormat::Csv : relent::RowFormat::Json;
    return RELENT_OK;
}

relent_status relent_config_set_retained_rows(relent_config *config, uint64_t rows) {
    RELENT_REQUIRE(config != nullptr, "null config");
    config->config.retained_rows = rows;
    return RELENT_OK;
}

relent_status relent_config_set_threshold(relent_config *config, const char *name, double value) {
    return guarded([&] {
        RELENT_REQUIRE(config != nullptr && name != nullptr, "null argument");
        config->config.thresholds.set(name, value);
        return RELENT_OK;
    });
}

relent_status relent_config_set_haar_samples(relent_config *config, uint64_t n) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(n >= 1, "haar samples must be >= 1");
    config->config.haar_samples = n;
    return RELENT_OK;
}

relent_status relent_config_set_starts(relent_config *config, int32_t starts) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(starts >= 1, "starts must be >= 1");
    config->config.starts = starts;
    return RELENT_OK;
}

relent_status relent_config_set_max_iters(relent_config *config, int32_t max_iters) {
    RELENT_REQUIRE(config != nullptr, "null config");
    RELENT_REQUIRE(max_iters >= 1, "max_iters must be >= 1");
    config->config.max_iters = max_iters;
    return RELENT_OK;
}

relent_status relent_config_set_sigma_maximally_mixed(relent_config *config, int enabled) {
    RELENT_REQUIRE(config != nullptr, "null config");
    config->config.sigma_maximally_mixed = enabled != 0;
    return RELENT_OK;
}

relent_status relent_run(const relent_config *config, relent_result **out) {
    return guarded([&] {
        RELENT_REQUIRE(config != nullptr && out != nullptr, "relent_run: null argument");
        auto result = std::make_unique<relent_result>();
        result->summary = relent::run_campaign(config->config);
        result->artifacts = relent::campaign_artifacts(*result->summary, config->format);
        result->summary_json = relent::summary_json(*result->summary);
        *out = result.release();
        return RELENT_OK;
    });
}

relent_status relent_plot(const char *csv_text, relent_result **out) {
    return guarded([&] {
        RELENT_REQUIRE(csv_text != nullptr && out != nullptr, "relent_plot: null argument");
        auto result = std::make_unique<relent_result>();
        try {
            result->artifacts = relent::plot_artifacts(csv_text);
        } catch (const relent::DomainError &e) {
            return fail(RELENT_ERR_PARSE, e.what());
        }
        *out = result.release();
        return RELENT_OK;
    });
}

void relent_result_destroy(relent_result *result) {
    delete result;
}

size_t relent_result_artifact_count(const relent_result *result) {
    return result == nullptr ? 0 : result->artifacts.size();
}

relent_status relent_result_artifact(const relent_result *result, size_t i, const char **name, const char **content) {
    RELENT_REQUIRE(result != nullptr && name != nullptr && content != nullptr, "null argument");
    RELENT_REQUIRE(i < result->artifacts.size(), "artifact index out of range");
    *name = result->artifacts[i].name.c_str();
    *content = result->artifacts[i].content.c_str();
    return RELENT_OK;
}

const char *relent_result_summary_json(const relent_result *result) {
    if (result == nullptr || !result->summary) {
        return nullptr;
    }
    return result->summary_json.c_str();
}

uint64_t relent_result_assertion_failures(const relent_result *result) {
    if (result == nullptr || !result->summary) {
        return 0;
    }
    return result->summary->assertion_failures();
}

double relent_result_runtime_seconds(const relent_result *result) {
    if (result == nullptr || !result->summary) {
        return 0;
    }
    return result->summary->runtime_seconds;
}

relent_status relent_result_quantity(const relent_result *result, const char *name, uint64_t *negative, uint64_t *zero,
                                     uint64_t *positive, double *min_value) {
    return guarded([&] {
        RELENT_REQUIRE(result != nullptr && result->summary && name != nullptr, "no campaign summary");
        const relent::QuantityStats &q = result->summary->quantity(name);
        if (negative) *negative = q.negative;
        if (zero) *zero = q.zero;
        if (positive) *positive = q.positive;
        if (min_value) *min_value = q.min_value;
        return RELENT_OK;
    });
}

relent_status relent_result_counter(const relent_result *result, const char *name, uint64_t *value) {
    return guarded([&] {
        RELENT_REQUIRE(result != nullptr && result->summary && name != nullptr && value != nullptr,
                       "no campaign summary");
        *value = result->summary->counter(name);
        return RELENT_OK;
    });
}

relent_status relent_relative_entropy_classical(const double *p, const double *q, size_t n, double *bits,
                                                int *is_infinite) {
    return guarded([&] {
        RELENT_REQUIRE(p != nullptr && q != nullptr && bits != nullptr && n > 0, "null argument");
        relent::Divergence d = relent::relative_entropy_classical(relent::Spectrum({p, p + n}),
                                                                  relent::Spectrum({q, q + n}));
        *bits = d.as_double();
        if (is_infinite) *is_infinite = d.is_infinite() ? 1 : 0;
        return RELENT_OK;
    });
}

relent_status relent_orbit_extremes(const double *rho_spec, const double *sigma_spec, size_t n, double *min_value,
                                    double *max_value) {
    return guarded([&] {
        RELENT_REQUIRE(rho_spec != nullptr && sigma_spec != nullptr && n > 0, "null argument");
        relent::OrbitExtremes e = relent::orbit_extremes(relent::Spectrum({rho_spec, rho_spec + n}),
                                                         relent::Spectrum({sigma_spec, sigma_spec + n}));
        if (min_value) *min_value = e.min_value;
        if (max_value) *max_value = e.max_value;
        return RELENT_OK;
    });
}

relent_status relent_bravyi_admissible(const double *joint, double margin_a, double margin_b, double slack,
                                       int *admissible, double *residuals) {
    return guarded([&] {
        RELENT_REQUIRE(joint != nullptr && admissible != nullptr, "null argument");
        relent::QubitMarginTriple t{relent::Spectrum({joint[0], joint[1], joint[2], joint[3]}), margin_a, margin_b};
        relent::BravyiCheck c = relent::bravyi_admissible(t, slack);
        *admissible = c.admissible ? 1 : 0;
        if (residuals) {
            for (int k = 0; k < 3; k++) {
                residuals[k] = c.residuals[k];
            }
        }
        return RELENT_OK;
    });
}

relent_status relent_compute_deltas(const double *rho_triple, const double *sigma_triple, double *out) {
    return guarded([&] {
        RELENT_REQUIRE(rho_triple != nullptr && sigma_triple != nullptr && out != nullptr, "null argument");
        relent::DeltaReport r = relent::compute_deltas(triple_from(rho_triple), triple_from(sigma_triple));
        out[0] = r.delta_min;
        out[1] = r.delta_max;
        out[2] = r.delta_mix;
        out[3] = r.delta;
        out[4] = r.delta_bar;
        return RELENT_OK;
    });
}

relent_status relent_fixture_recompute(const char *fixture_json, double *stored, double *recomputed) {
    return guarded([&] {
        RELENT_REQUIRE(fixture_json != nullptr, "null argument");
        relent::CounterexampleFixture f;
        try {
            f = relent::CounterexampleFixture::from_json(fixture_json);
        } catch (const relent::DomainError &e) {
            return fail(RELENT_ERR_PARSE, e.what());
        }
        if (stored) *stored = f.delta_s;
        if (recomputed) *recomputed = f.recompute();
        return RELENT_OK;
    });
}

}  // extern "C"
