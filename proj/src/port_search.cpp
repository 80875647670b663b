// SPDX-License-Identifier: Apache-2.0
//
// faisac: joint transmit-covariance and fluid-antenna port-selection
// optimization for a UAV-mounted ISAC downlink.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "faisac/port_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "faisac/geometry.hpp"
#include "faisac/metrics.hpp"

namespace faisac {

namespace {

double gain_tolerance(double gamma_mw) { return 1e-9 * std::max(1.0, gamma_mw); }

bool meets_threshold(double gain_mw, double gamma_mw) {
    return gain_mw >= gamma_mw - gain_tolerance(gamma_mw);
}

}  // namespace

PortSelection initial_selection(int M, int m0) {
    if (M < 1 || m0 < 1 || m0 > M) {
        throw std::domain_error("initial_selection: need 1 <= m0 <= M");
    }
    std::vector<int> r(static_cast<std::size_t>(m0));
    int prev = 0;
    for (int m = 1; m <= m0; ++m) {
        int v = static_cast<int>(std::lround((m - 0.5) * static_cast<double>(M) / m0));
        v = std::clamp(v, 1, M);
        if (v <= prev) v = prev + 1;
        v = std::min(v, M - (m0 - m));  // leave room for the remaining ports
        r[static_cast<std::size_t>(m - 1)] = v;
        prev = v;
    }
    PortSelection sel{std::move(r)};
    sel.validate(M);
    return sel;
}

SearchReport coordinate_sweep(const PortSelection& sel, const Eigen::MatrixXcd& W,
                              const SystemConfig& cfg) {
    cfg.validate();
    sel.validate(cfg.M);
    const int m0 = sel.size();
    if (W.rows() != m0 || W.cols() != m0) {
        throw std::domain_error("coordinate_sweep: W dimension does not match selection size");
    }
    const double gamma = cfg.gamma_mw();
    const double sigma2 = cfg.sigma2_mw();

    SearchReport report;
    report.selection = sel;
    auto& cur = report.selection.idx;
    double cur_rate = achievable_rate(W, response_matrix(report.selection, cfg), sigma2);

    for (int m = 0; m < m0; ++m) {
        const int lo = (m > 0) ? cur[static_cast<std::size_t>(m - 1)] : 0;
        const int hi = (m + 1 < m0) ? cur[static_cast<std::size_t>(m + 1)] : cfg.M + 1;
        const int incumbent = cur[static_cast<std::size_t>(m)];

        int best_idx = -1;
        double best_rate = -std::numeric_limits<double>::infinity();
        bool incumbent_feasible = false;
        PortSelection cand = report.selection;
        for (int c = lo + 1; c < hi; ++c) {
            cand.idx[static_cast<std::size_t>(m)] = c;
            ++report.candidates_evaluated;
            const double gain = beampattern_gain(W, sensing_steering(cand, cfg));
            if (!meets_threshold(gain, gamma)) {
                ++report.constraint_rejections;
                continue;
            }
            const double rate = achievable_rate(W, response_matrix(cand, cfg), sigma2);
            if (c == incumbent) incumbent_feasible = true;
            if (rate > best_rate) {
                best_rate = rate;
                best_idx = c;
            }
        }

        if (best_idx < 0) continue;  // nothing feasible here; leave the port alone
        const bool improves = best_idx != incumbent && best_rate > cur_rate;
        if ((incumbent_feasible && improves) || (!incumbent_feasible)) {
            cur[static_cast<std::size_t>(m)] = best_idx;
            cur_rate = best_rate;
            if (best_idx != incumbent) ++report.moves_accepted;
        }
    }

    report.rate_bits = cur_rate;
    const double final_gain = beampattern_gain(W, sensing_steering(report.selection, cfg));
    report.sensing_feasible = meets_threshold(final_gain, gamma);
    return report;
}

SearchReport exhaustive_search(const Eigen::MatrixXcd& W, const SystemConfig& cfg) {
    cfg.validate();
    const int m0 = cfg.m0;
    if (W.rows() != m0 || W.cols() != m0) {
        throw std::domain_error("exhaustive_search: W dimension does not match cfg.m0");
    }
    double combos = 1.0;
    for (int i = 1; i <= m0; ++i) combos *= static_cast<double>(cfg.M - m0 + i) / i;
    if (combos > 1e6) {
        throw std::domain_error("exhaustive_search: C(M, m0) exceeds the 1e6 guard");
    }
    const double gamma = cfg.gamma_mw();
    const double sigma2 = cfg.sigma2_mw();

    SearchReport report;
    double best_feasible_rate = -std::numeric_limits<double>::infinity();
    double best_any_rate = -std::numeric_limits<double>::infinity();
    PortSelection best_feasible, best_any;

    std::vector<int> comb(static_cast<std::size_t>(m0));
    for (int i = 0; i < m0; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        PortSelection sel{comb};
        ++report.candidates_evaluated;
        const double gain = beampattern_gain(W, sensing_steering(sel, cfg));
        const bool feasible = meets_threshold(gain, gamma);
        if (!feasible) ++report.constraint_rejections;
        const double rate = achievable_rate(W, response_matrix(sel, cfg), sigma2);
        if (rate > best_any_rate) {
            best_any_rate = rate;
            best_any = sel;
        }
        if (feasible && rate > best_feasible_rate) {
            best_feasible_rate = rate;
            best_feasible = sel;
        }
        // next lexicographic combination
        int pos = m0 - 1;
        while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == cfg.M - (m0 - 1 - pos)) --pos;
        if (pos < 0) break;
        ++comb[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < m0; ++j) {
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    if (best_feasible.size() > 0) {
        report.selection = best_feasible;
        report.rate_bits = best_feasible_rate;
        report.sensing_feasible = true;
    } else {
        report.selection = best_any;
        report.rate_bits = best_any_rate;
        report.sensing_feasible = false;
    }
    return report;
}

}  // namespace faisac
