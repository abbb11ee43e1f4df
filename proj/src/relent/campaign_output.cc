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

#include "relent/campaign_output.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "relent/svg.h"

namespace relent {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kPlottable = {"delta_min", "delta_max", "delta_mix", "delta", "delta_bar", "delta_s"};

std::string csv_line(const SampleRow &row, bool with_reason) {
    std::string line = std::to_string(row.index);
    for (double v : row.values) {
        line += ',';
        line += format_double(v);
    }
    if (with_reason) {
        line += ',';
        line += row.reason;
    }
    line += '\n';
    return line;
}

std::string csv_header(const CampaignSummary &s, bool with_reason) {
    std::string h = "index";
    for (const auto &c : s.columns()) {
        h += ',' + c;
    }
    if (with_reason) {
        h += ",reason";
    }
    return h + "\n";
}

ordered_json row_digest(const CampaignSummary &s, const SampleRow &row) {
    ordered_json j;
    j["index"] = row.index;
    for (size_t k = 0; k < s.input_columns.size() && k < row.values.size(); k++) {
        j[s.input_columns[k]] = row.values[k];
    }
    return j;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string samples_csv(const CampaignSummary &s) {
    std::string out = csv_header(s, false);
    for (const auto &row : s.retained) {
        out += csv_line(row, false);
    }
    return out;
}

std::string samples_json(const CampaignSummary &s) {
    std::vector<std::string> cols = s.columns();
    ordered_json rows = ordered_json::array();
    for (const auto &row : s.retained) {
        ordered_json j;
        j["index"] = row.index;
        for (size_t k = 0; k < cols.size(); k++) {
            j[cols[k]] = row.values[k];
        }
        rows.push_back(std::move(j));
    }
    return rows.dump(1) + "\n";
}

std::string flagged_csv(const CampaignSummary &s) {
    std::string out = csv_header(s, true);
    for (const auto &row : s.flagged) {
        out += csv_line(row, true);
    }
    return out;
}

std::string summary_json(const CampaignSummary &s) {
    ordered_json j;
    j["experiment"] = std::string(experiment_name(s.config.experiment));
    j["seed"] = s.config.master_seed;
    j["n_samples"] = s.config.n_samples;
    ordered_json th;
    for (const auto &[name, value] : s.config.thresholds.named()) {
        th[name] = value;
    }
    j["thresholds"] = th;

    ordered_json qs;
    for (const auto &q : s.quantities) {
        ordered_json e;
        e["negative"] = q.negative;
        e["zero"] = q.zero;
        e["positive"] = q.positive;
        e["negative_fraction"] = static_cast<double>(q.negative) / static_cast<double>(std::max<uint64_t>(1, q.total()));
        e["min_value"] = q.min_value;
        e["min_input_digest"] = row_digest(s, q.min_row);
        e["max_value"] = q.max_value;
        e["max_input_digest"] = row_digest(s, q.max_row);
        qs[q.name] = e;
    }
    j["quantities"] = qs;

    ordered_json cs;
    for (const auto &c : s.counters) {
        cs[c.name] = c.value;
    }
    j["counters"] = cs;
    j["assertion_failures"] = s.assertion_failures();
    j["retained_rows"] = s.retained.size();
    j["flagged_rows"] = s.flagged.size();
    if (s.fixture) {
        j["fixture_index"] = s.fixture->index;
        j["fixture_delta_s"] = s.fixture->delta_s;
    }
    return j.dump(2) + "\n";
}

std::string runtime_json(const CampaignSummary &s) {
    ordered_json j;
    j["experiment"] = std::string(experiment_name(s.config.experiment));
    j["workers"] = s.config.workers;
    j["runtime_seconds"] = s.runtime_seconds;
    return j.dump(2) + "\n";
}

std::vector<Artifact> campaign_artifacts(const CampaignSummary &s, RowFormat format) {
    std::string base(experiment_name(s.config.experiment));
    std::vector<Artifact> out;
    if (format == RowFormat::Csv) {
        out.push_back({base + ".csv", samples_csv(s)});
    } else {
        out.push_back({base + ".json", samples_json(s)});
    }
    out.push_back({"flagged.csv", flagged_csv(s)});
    out.push_back({"summary.json", summary_json(s)});
    out.push_back({"runtime.json", runtime_json(s)});
    if (s.fixture) {
        out.push_back({"counterexample_fixture.json", s.fixture->to_json()});
    }
    return out;
}

size_t CsvTable::column(const std::string &name) const {
    for (size_t k = 0; k < header.size(); k++) {
        if (header[k] == name) {
            return k;
        }
    }
    throw DomainError("csv: no column named '" + name + "'");
}

CsvTable parse_csv(const std::string &text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw DomainError("csv: empty input");
    }
    t.header = split(line, ',');
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() < t.header.size()) {
            throw DomainError("csv: line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                              " fields, expected " + std::to_string(t.header.size()));
        }
        std::vector<double> row;
        for (size_t k = 0; k < t.header.size(); k++) {
            errno = 0;
            char *end = nullptr;
            double v = std::strtod(fields[k].c_str(), &end);
            if (end == fields[k].c_str()) {
                v = std::numeric_limits<double>::quiet_NaN();
            }
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<Artifact> plot_artifacts(const std::string &csv_text) {
    CsvTable t = parse_csv(csv_text);
    size_t idx = t.column("index");
    std::vector<double> xs;
    for (const auto &r : t.rows) {
        xs.push_back(r[idx]);
    }
    std::vector<Artifact> out;
    for (const auto &name : kPlottable) {
        size_t col;
        try {
            col = t.column(name);
        } catch (const DomainError &) {
            continue;
        }
        std::vector<double> ys;
        for (const auto &r : t.rows) {
            ys.push_back(r[col]);
        }
        ScatterStyle style;
        style.title = name + " (" + std::to_string(t.rows.size()) + " samples)";
        style.y_label = name + " (bits)";
        out.push_back({"plot_" + name + ".svg", render_scatter_svg(xs, ys, style)});
    }
    if (out.empty()) {
        throw DomainError("plot: input has no delta columns to plot");
    }
    return out;
}

}  // namespace relent
