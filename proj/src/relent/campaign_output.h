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

#ifndef RELENT_CAMPAIGN_OUTPUT_H
#define RELENT_CAMPAIGN_OUTPUT_H

#include <string>
#include <utility>
#include <vector>

#include "relent/campaign.h"

namespace relent {

enum class RowFormat { Csv, Json };

/// A named text output (file name relative to the output directory).
struct Artifact {
    std::string name;
    std::string content;
};

/// %.17g.
std::string format_double(double v);

/// Header plus one line per retained row: index, inputs..., outputs...
std::string samples_csv(const CampaignSummary &s);
/// Same rows as a JSON array of objects.
std::string samples_json(const CampaignSummary &s);
/// Flagged rows with a trailing `reason` column.
std::string flagged_csv(const CampaignSummary &s);
/// Deterministic summary (no wall-clock fields).
std::string summary_json(const CampaignSummary &s);
std::string runtime_json(const CampaignSummary &s);

/// Everything a campaign writes: samples, flagged rows, summary, runtime,
/// and the counterexample fixture when present.
std::vector<Artifact> campaign_artifacts(const CampaignSummary &s, RowFormat format);

/// Parsed CSV table (header + numeric rows).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Throws DomainError when absent.
    size_t column(const std::string &name) const;
};
CsvTable parse_csv(const std::string &text);

/// One scatter SVG (`plot_<column>.svg`) per delta-valued column of a
/// samples CSV: sample index on x, value on y, with a zero line.
std::vector<Artifact> plot_artifacts(const std::string &csv_text);

}  // namespace relent

#endif
