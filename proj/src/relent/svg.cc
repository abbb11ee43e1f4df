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

#include "relent/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace relent {

namespace {

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_scatter_svg(std::span<const double> xs, std::span<const double> ys, const ScatterStyle &style) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("render_scatter_svg: xs and ys differ in length");
    }
    const double left = 80, right = 20, top = 40, bottom = 50;
    const double plot_w = style.width - left - right;
    const double plot_h = style.height - top - bottom;

    double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 0;
    bool any = false;
    for (size_t k = 0; k < xs.size(); k++) {
        if (!std::isfinite(xs[k]) || !std::isfinite(ys[k])) {
            continue;
        }
        if (!any) {
            x_lo = x_hi = xs[k];
            any = true;
        }
        x_lo = std::min(x_lo, xs[k]);
        x_hi = std::max(x_hi, xs[k]);
        y_lo = std::min(y_lo, ys[k]);
        y_hi = std::max(y_hi, ys[k]);
    }
    if (x_hi <= x_lo) {
        x_hi = x_lo + 1;
    }
    if (y_hi <= y_lo) {
        y_hi = y_lo + 1;
    }
    double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) + "\" height=\"" +
           std::to_string(style.height) + "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt("%.1f", style.width / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + escape(style.title) + "</text>\n";

    // Frame and labels.
    out += "<rect x=\"" + fmt("%.1f", left) + "\" y=\"" + fmt("%.1f", top) + "\" width=\"" + fmt("%.1f", plot_w) +
           "\" height=\"" + fmt("%.1f", plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; t++) {
        double y = y_lo + (y_hi - y_lo) * t / 4;
        double x = x_lo + (x_hi - x_lo) * t / 4;
        out += "<text x=\"" + fmt("%.1f", left - 6) + "\" y=\"" + fmt("%.1f", py(y) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.3g", y) + "</text>\n";
        out += "<text x=\"" + fmt("%.1f", px(x)) + "\" y=\"" + fmt("%.1f", top + plot_h + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.6g", x) + "</text>\n";
    }
    out += "<text x=\"" + fmt("%.1f", left + plot_w / 2) + "\" y=\"" + fmt("%.1f", style.height - 10.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(style.x_label) +
           "</text>\n";
    out += "<text x=\"16\" y=\"" + fmt("%.1f", top + plot_h / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\" transform=\"rotate(-90 16 " + fmt("%.1f", top + plot_h / 2) + ")\">" +
           escape(style.y_label) + "</text>\n";

    out += "<line x1=\"" + fmt("%.1f", left) + "\" y1=\"" + fmt("%.2f", py(0)) + "\" x2=\"" + fmt("%.1f", left + plot_w) +
           "\" y2=\"" + fmt("%.2f", py(0)) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    out += "<g>\n";
    for (size_t k = 0; k < xs.size(); k++) {
        if (!std::isfinite(xs[k]) || !std::isfinite(ys[k])) {
            continue;
        }
        const char *color = ys[k] < 0 ? "#d62728" : "#1f77b4";
        out += "<circle cx=\"" + fmt("%.2f", px(xs[k])) + "\" cy=\"" + fmt("%.2f", py(ys[k])) + "\" r=\"1.5\" fill=\"" +
               color + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace relent
