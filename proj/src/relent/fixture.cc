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

#include "relent/fixture.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "relent/deltas.h"

namespace relent {

namespace {

using nlohmann::ordered_json;

ordered_json matrix_to_json(const ComplexMatrix &m) {
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        ordered_json row = ordered_json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back({hex_double(m(r, c).real()), hex_double(m(r, c).imag())});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const ordered_json &j) {
    if (!j.is_array() || j.empty()) {
        throw DomainError("fixture: matrix must be a non-empty array of rows");
    }
    size_t n = j.size();
    ComplexMatrix m(n, j[0].size());
    for (size_t r = 0; r < n; r++) {
        if (!j[r].is_array() || j[r].size() != m.cols()) {
            throw DomainError("fixture: ragged matrix");
        }
        for (size_t c = 0; c < m.cols(); c++) {
            const auto &z = j[r][c];
            if (!z.is_array() || z.size() != 2) {
                throw DomainError("fixture: entries must be [re, im] pairs");
            }
            m(r, c) = Complex(parse_hex_double(z[0].get<std::string>()), parse_hex_double(z[1].get<std::string>()));
        }
    }
    return m;
}

}  // namespace

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

double parse_hex_double(const std::string &s) {
    errno = 0;
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
        throw DomainError("fixture: cannot parse number '" + s + "'");
    }
    return v;
}

std::string CounterexampleFixture::to_json() const {
    ordered_json j;
    j["kind"] = "superadditivity-counterexample";
    j["master_seed"] = master_seed;
    j["index"] = index;
    j["delta_s"] = delta_s;
    j["delta_s_hex"] = hex_double(delta_s);
    j["rho"] = matrix_to_json(rho.matrix());
    j["sigma"] = matrix_to_json(sigma.matrix());
    return j.dump(2) + "\n";
}

CounterexampleFixture CounterexampleFixture::from_json(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
        CounterexampleFixture f;
        f.master_seed = j.value("master_seed", uint64_t{0});
        f.index = j.value("index", uint64_t{0});
        f.delta_s = parse_hex_double(j.at("delta_s_hex").get<std::string>());
        f.rho = DensityMatrix(matrix_from_json(j.at("rho")));
        f.sigma = DensityMatrix(matrix_from_json(j.at("sigma")));
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("fixture: ") + e.what());
    }
}

double CounterexampleFixture::recompute() const {
    return relent::delta_s(rho, sigma).value;
}

}  // namespace relent
