// SPDX-License-Identifier: Apache-2.0
//
// fasop: outage analysis for UAV-relayed rate-splitting downlinks with
// fluid-antenna ground users
// Copyright (C) 2026 The fasop authors
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

#include "fasop/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <thread>

#include "fasop/channel.hpp"
#include "fasop/geometry.hpp"

namespace fasop::cli {

namespace {

ResolvedParams resolve(int k, const rsma::RsmaScenario& s) {
    const rsma::UserSpec& u = s.users[static_cast<std::size_t>(k)];
    ResolvedParams p;
    p.p_b_dbm = geometry::watts_to_dbm(s.p_b);
    p.p_a_dbm = geometry::watts_to_dbm(s.p_a);
    p.alpha_c = s.power.alpha_c;
    p.alpha_p = s.power.alpha_p[static_cast<std::size_t>(k)];
    p.n1 = u.fas.n1;
    p.n2 = u.fas.n2;
    p.w1 = u.fas.w1;
    p.w2 = u.fas.w2;
    p.m_user = u.fading.m;
    p.m_uav = s.uav_fading.m;
    p.dof = u.fas.dof;
    p.theta = channel::effective_theta(u.fas);
    p.gamma_common = u.thresholds.common;
    p.gamma_private = u.thresholds.priv;
    p.noise_dbm = geometry::watts_to_dbm(u.noise_power);
    p.literal_typos = s.paper_literal_typos;
    return p;
}

struct PointOutput {
    std::vector<ResultRow> rows;
    bool any_feasible = false;
};

PointOutput evaluate_point(const RunSpec& spec, double value) {
    const rsma::RsmaScenario s = spec.scenario_at(value);
    const montecarlo::McConfig mc = spec.mc.value_or(montecarlo::McConfig{});
    PointOutput out;
    for (int k = 0; k < s.users_count(); ++k) {
        const bool feasible = rsma::is_feasible(k, s);
        out.any_feasible = out.any_feasible || feasible;
        for (Mode mode : spec.modes) {
            ResultRow row;
            if (spec.sweep)
                row.sweep_var = spec.sweep->variable;
            row.sweep_value = value;
            row.user_index = k + 1;
            row.mode = mode;
            row.feasible = feasible;
            row.params = resolve(k, s);
            switch (mode) {
            case Mode::exact:
                row.op_value = feasible ? rsma::outage_probability(k, s).value : 1.0;
                break;
            case Mode::asymptotic:
                row.op_value = feasible ? rsma::outage_probability_asymptotic(k, s).value : 1.0;
                break;
            case Mode::monte_carlo: {
                const montecarlo::OutageCount c = montecarlo::simulate_outages(k, s, mc);
                row.op_value = c.estimate();
                row.std_error = c.std_error();
                row.seed = mc.seed;
                break;
            }
            case Mode::noma: {
                const montecarlo::OutageCount c = rsma::noma_outage_count(k, s, spec.noma, mc);
                row.op_value = c.estimate();
                row.std_error = c.std_error();
                row.seed = mc.seed;
                row.feasible = !c.infeasible;
                break;
            }
            }
            out.rows.push_back(row);
        }
    }
    return out;
}

std::string point_label(const RunSpec& spec, double value) {
    if (!spec.sweep)
        return "base scenario";
    return std::string(to_string(spec.sweep->variable)) + " = " + format_double(value);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        return "nan";
    return {buf, ptr};
}

SweepResult evaluate(const RunSpec& spec, unsigned workers) {
    const std::vector<double> grid = spec.sweep ? spec.sweep->values : std::vector<double>{0.0};
    std::vector<PointOutput> outputs(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                outputs[i] = evaluate_point(spec, grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }

    SweepResult result;
    result.points = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (errors[i]) {
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                throw PointError("at " + point_label(spec, grid[i]) + ": " + e.what());
            }
        }
        if (!outputs[i].any_feasible)
            ++result.infeasible_points;
        for (ResultRow& r : outputs[i].rows)
            result.rows.push_back(std::move(r));
    }
    return result;
}

void write_csv(std::ostream& out, const SweepResult& result) {
    out << "sweep_var,sweep_value,user_index,mode,op_value,std_error,feasible,seed,"
           "p_b_dbm,p_a_dbm,alpha_c,alpha_p,n1,n2,w1,w2,m_user,m_uav,dof,theta,gamma_common,"
           "gamma_private,noise_dbm,literal_typos\n";
    for (const ResultRow& r : result.rows) {
        const ResolvedParams& p = r.params;
        out << (r.sweep_var ? to_string(*r.sweep_var) : "none") << ','
            << (r.sweep_var ? format_double(r.sweep_value) : "") << ',' << r.user_index << ','
            << to_string(r.mode) << ',' << format_double(r.op_value) << ','
            << (r.std_error ? format_double(*r.std_error) : "") << ',' << (r.feasible ? "true" : "false")
            << ',' << (r.seed ? std::to_string(*r.seed) : "") << ',' << format_double(p.p_b_dbm) << ','
            << format_double(p.p_a_dbm) << ',' << format_double(p.alpha_c) << ',' << format_double(p.alpha_p)
            << ',' << p.n1 << ',' << p.n2 << ',' << format_double(p.w1) << ',' << format_double(p.w2) << ','
            << format_double(p.m_user) << ',' << format_double(p.m_uav) << ',' << format_double(p.dof) << ','
            << format_double(p.theta) << ',' << format_double(p.gamma_common) << ','
            << format_double(p.gamma_private) << ',' << format_double(p.noise_dbm) << ','
            << (p.literal_typos ? "true" : "false") << "\n";
    }
}

void write_summary(std::ostream& out, const SweepResult& result) {
    for (const ResultRow& r : result.rows) {
        if (r.sweep_var)
            out << to_string(*r.sweep_var) << '=' << format_double(r.sweep_value) << "  ";
        out << "user " << r.user_index << "  " << to_string(r.mode) << "  OP=" << format_double(r.op_value);
        if (r.std_error)
            out << " (se " << format_double(*r.std_error) << ')';
        if (!r.feasible)
            out << "  infeasible";
        out << "\n";
    }
    out << result.points << " grid point(s), " << result.infeasible_points << " infeasible for every user\n";
}

void write_svg(std::ostream& out, const SweepResult& result) {
    constexpr double width = 720, height = 480, left = 80, right = 190, top = 30, bottom = 60;
    constexpr double floor_op = 1e-12;
    const double plot_w = width - left - right, plot_h = height - top - bottom;

    std::map<std::pair<int, Mode>, std::vector<std::pair<double, double>>> series;
    double xmin = INFINITY, xmax = -INFINITY, ymin = 1.0;
    for (const ResultRow& r : result.rows) {
        const double y = std::clamp(r.op_value, floor_op, 1.0);
        series[{r.user_index, r.mode}].emplace_back(r.sweep_value, y);
        xmin = std::min(xmin, r.sweep_value);
        xmax = std::max(xmax, r.sweep_value);
        ymin = std::min(ymin, y);
    }
    if (!(xmax > xmin)) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    const int dec_lo = static_cast<int>(std::floor(std::log10(ymin)));
    const int decades = std::max(1, -dec_lo);
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return top + (-std::log10(y)) / decades * plot_h; };

    const char* sweep_name = "value";
    if (!result.rows.empty() && result.rows.front().sweep_var)
        sweep_name = to_string(*result.rows.front().sweep_var);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int d = 0; d <= decades; ++d) {
        const double y = top + static_cast<double>(d) / decades * plot_h;
        out << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e-" << d << "</text>\n";
    }
    for (int t = 0; t <= 5; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 5.0;
        out << "<text x=\"" << sx(xv) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
            << format_double(std::round(xv * 1000.0) / 1000.0) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
        << sweep_name << "</text>\n";
    out << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" transform=\"rotate(-90 20 " << top + plot_h / 2
        << ")\" text-anchor=\"middle\">outage probability</text>\n";

    static constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    auto dash = [](Mode m) -> const char* {
        switch (m) {
        case Mode::exact:
            return "";
        case Mode::asymptotic:
            return "6,4";
        case Mode::monte_carlo:
            return "2,3";
        case Mode::noma:
            return "10,3,2,3";
        }
        return "";
    };
    int legend = 0;
    for (const auto& [key, pts] : series) {
        const char* color = colors[static_cast<std::size_t>(key.first - 1) % std::size(colors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" stroke-dasharray=\""
            << dash(key.second) << "\" points=\"";
        for (const auto& [x, y] : pts)
            out << sx(x) << ',' << sy(y) << ' ';
        out << "\"/>\n";
        for (const auto& [x, y] : pts)
            out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        const double ly = top + 10 + 18 * legend++;
        out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 40
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\" stroke-dasharray=\""
            << dash(key.second) << "\"/>\n";
        out << "<text x=\"" << left + plot_w + 46 << "\" y=\"" << ly + 4 << "\">user " << key.first << ' '
            << to_string(key.second) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace fasop::cli
