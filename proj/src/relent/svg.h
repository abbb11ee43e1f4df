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

#ifndef RELENT_SVG_H
#define RELENT_SVG_H

#include <span>
#include <string>

namespace relent {

struct ScatterStyle {
    std::string title;
    std::string x_label = "sample index";
    std::string y_label = "value (bits)";
    int width = 800;
    int height = 500;
};

/// Standalone SVG scatter plot with axes and a horizontal line at y = 0.
/// Points below zero are drawn in a contrasting color.
std::string render_scatter_svg(std::span<const double> xs, std::span<const double> ys, const ScatterStyle &style);

}  // namespace relent

#endif
