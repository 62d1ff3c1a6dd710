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

#include "fasop/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fasop::cli {

namespace {

using json = nlohmann::json;

// One-based line of the first occurrence of a quoted key, 0 when absent.
int line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    if (pos == std::string_view::npos)
        return 0;
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

class Node {
public:
    Node(const json& j, std::string path, std::string key, std::string_view text, std::string_view source)
        : j_(j), path_(std::move(path)), key_(std::move(key)), text_(text), source_(source) {}

    [[noreturn]] void fail(const std::string& what, ConfigError::Kind kind = ConfigError::Kind::parse) const {
        std::string where(source_);
        if (const int line = key_.empty() ? 0 : line_of_key(text_, key_); line > 0)
            where += ":" + std::to_string(line);
        throw ConfigError(kind, where + ": " + (path_.empty() ? "(root)" : path_) + ": " + what);
    }

    const json& raw() const { return j_; }

    void expect_object(std::initializer_list<std::string_view> allowed) const {
        if (!j_.is_object())
            fail("expected an object");
        for (const auto& [k, v] : j_.items()) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                child(k).fail("unknown key '" + k + "'");
        }
    }

    std::optional<Node> get(const std::string& key) const {
        if (!j_.contains(key) || j_.at(key).is_null())
            return std::nullopt;
        return child(key);
    }

    std::vector<Node> elements() const {
        if (!j_.is_array())
            fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_.size(); ++i)
            out.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]", key_, text_, source_);
        return out;
    }

    double number() const {
        if (!j_.is_number())
            fail("expected a number");
        return j_.get<double>();
    }

    int integer() const {
        if (!j_.is_number_integer())
            fail("expected an integer");
        return j_.get<int>();
    }

    std::uint64_t unsigned_integer() const {
        if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0))
            fail("expected a nonnegative integer");
        return j_.get<std::uint64_t>();
    }

    bool boolean() const {
        if (!j_.is_boolean())
            fail("expected true or false");
        return j_.get<bool>();
    }

    std::string string() const {
        if (!j_.is_string())
            fail("expected a string");
        return j_.get<std::string>();
    }

    std::vector<double> numbers() const {
        std::vector<double> out;
        for (const Node& e : elements())
            out.push_back(e.number());
        return out;
    }

    double power() const {
        if (j_.is_number())
            return j_.get<double>();
        try {
            return parse_power(string());
        } catch (const ConfigError& e) {
            fail(e.what());
        }
    }

    geometry::Position3 position() const {
        const std::vector<double> v = numbers();
        if (v.size() != 3)
            fail("expected [x, y, z]");
        return {v[0], v[1], v[2]};
    }

private:
    Node child(const std::string& key) const {
        return {j_.at(key), path_.empty() ? key : path_ + "." + key, key, text_, source_};
    }

    const json& j_;
    std::string path_;
    std::string key_;
    std::string_view text_;
    std::string_view source_;
};

void read_fading(const Node& n, channel::FadingParams& f) {
    n.expect_object({"m", "omega"});
    if (auto v = n.get("m"))
        f.m = v->number();
    if (auto v = n.get("omega"))
        f.omega = v->number();
}

void read_fas(const Node& n, channel::FasConfig& fas) {
    n.expect_object({"n1", "n2", "w1", "w2", "dof", "theta_override", "kernel", "theta_rule"});
    if (auto v = n.get("n1"))
        fas.n1 = v->integer();
    if (auto v = n.get("n2"))
        fas.n2 = v->integer();
    if (auto v = n.get("w1"))
        fas.w1 = v->number();
    if (auto v = n.get("w2"))
        fas.w2 = v->number();
    if (auto v = n.get("dof"))
        fas.dof = v->number();
    fas.theta_override.reset();
    if (auto v = n.get("theta_override"))
        fas.theta_override = v->number();
    if (auto v = n.get("kernel")) {
        const std::string k = v->string();
        if (k == "bessel_j0")
            fas.kernel = channel::CorrelationKernel::bessel_j0;
        else if (k == "sinc")
            fas.kernel = channel::CorrelationKernel::sinc;
        else
            v->fail("kernel must be bessel_j0 or sinc");
    }
    if (auto v = n.get("theta_rule")) {
        const std::string r = v->string();
        if (r == "mean_gain_correlation")
            fas.theta_rule = channel::ThetaRule::mean_gain_correlation;
        else if (r == "mean_field_correlation")
            fas.theta_rule = channel::ThetaRule::mean_field_correlation;
        else
            v->fail("theta_rule must be mean_gain_correlation or mean_field_correlation");
    }
}

void read_user(const Node& n, rsma::UserSpec& u, bool has_default_position) {
    n.expect_object({"position", "noise_power", "fading", "fas", "thresholds"});
    if (auto v = n.get("position"))
        u.position = v->position();
    else if (!has_default_position)
        n.fail("position is required for users beyond the default two");
    if (auto v = n.get("noise_power"))
        u.noise_power = v->power();
    if (auto v = n.get("fading"))
        read_fading(*v, u.fading);
    if (auto v = n.get("fas"))
        read_fas(*v, u.fas);
    if (auto v = n.get("thresholds")) {
        v->expect_object({"common", "private"});
        if (auto t = v->get("common"))
            u.thresholds.common = t->number();
        if (auto t = v->get("private"))
            u.thresholds.priv = t->number();
    }
}

void read_scenario(const Node& n, RunSpec& spec) {
    n.expect_object({"environment", "bs", "uav", "power_split", "users", "paper_literal_typos"});
    rsma::RsmaScenario& s = spec.scenario;
    if (auto env = n.get("environment")) {
        env->expect_object({"mu1", "mu2", "eta1", "eta2", "beta"});
        for (auto [key, field] : {std::pair{"mu1", &s.env.mu1}, std::pair{"mu2", &s.env.mu2},
                                  std::pair{"eta1", &s.env.eta1}, std::pair{"eta2", &s.env.eta2},
                                  std::pair{"beta", &s.env.beta}}) {
            if (auto v = env->get(key))
                *field = v->number();
        }
    }
    if (auto bs = n.get("bs")) {
        bs->expect_object({"position", "tx_power"});
        if (auto v = bs->get("position"))
            s.bs = v->position();
        if (auto v = bs->get("tx_power"))
            s.p_b = v->power();
    }
    if (auto uav = n.get("uav")) {
        uav->expect_object({"position", "tx_power", "noise_power", "fading"});
        if (auto v = uav->get("position"))
            s.uav = v->position();
        if (auto v = uav->get("tx_power"))
            s.p_a = v->power();
        if (auto v = uav->get("noise_power"))
            s.uav_noise = v->power();
        if (auto v = uav->get("fading"))
            read_fading(*v, s.uav_fading);
    }
    if (auto users = n.get("users")) {
        const rsma::RsmaScenario defaults = rsma::RsmaScenario::defaults();
        std::vector<rsma::UserSpec> list;
        const std::vector<Node> entries = users->elements();
        if (entries.empty())
            users->fail("at least one user required");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            rsma::UserSpec u = defaults.users[std::min<std::size_t>(i, defaults.users.size() - 1)];
            read_user(entries[i], u, i < defaults.users.size());
            list.push_back(u);
        }
        s.users = list;
        if (list.size() == 1)
            spec.private_shares = {1.0};
        else if (list.size() != 2)
            spec.private_shares.clear();
    }

    double alpha_c = s.power.alpha_c;
    std::optional<std::vector<double>> alpha_p;
    if (auto split = n.get("power_split")) {
        split->expect_object({"alpha_c", "private_shares", "alpha_p"});
        if (auto v = split->get("alpha_c"))
            alpha_c = v->number();
        if (split->get("private_shares") && split->get("alpha_p"))
            split->fail("give either private_shares or alpha_p, not both");
        if (auto v = split->get("private_shares"))
            spec.private_shares = v->numbers();
        if (auto v = split->get("alpha_p"))
            alpha_p = v->numbers();
    }
    if (alpha_p) {
        s.power = {alpha_c, *alpha_p};
        double total = 0.0;
        for (double a : *alpha_p)
            total += a;
        spec.private_shares.clear();
        for (double a : *alpha_p)
            spec.private_shares.push_back(total > 0.0 ? a / total : 0.0);
    } else {
        if (spec.private_shares.size() != s.users.size())
            n.fail("power_split.private_shares needs one entry per user", ConfigError::Kind::validation);
        s.power = rsma::RsmaPower::from_shares(alpha_c, spec.private_shares);
        s.power.alpha_c = alpha_c;
    }
    if (auto v = n.get("paper_literal_typos"))
        s.paper_literal_typos = v->boolean();
}

json power_json(double watts) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g dBm", geometry::watts_to_dbm(watts));
    return buf;
}

json fading_json(const channel::FadingParams& f) {
    return {{"m", f.m}, {"omega", f.omega}};
}

json to_json(const RunSpec& spec) {
    const rsma::RsmaScenario& s = spec.scenario;
    json users = json::array();
    for (const rsma::UserSpec& u : s.users) {
        json fas = {{"n1", u.fas.n1},
                    {"n2", u.fas.n2},
                    {"w1", u.fas.w1},
                    {"w2", u.fas.w2},
                    {"dof", u.fas.dof},
                    {"theta_override", u.fas.theta_override ? json(*u.fas.theta_override) : json(nullptr)},
                    {"kernel", u.fas.kernel == channel::CorrelationKernel::bessel_j0 ? "bessel_j0" : "sinc"},
                    {"theta_rule", u.fas.theta_rule == channel::ThetaRule::mean_gain_correlation
                                       ? "mean_gain_correlation"
                                       : "mean_field_correlation"}};
        users.push_back({{"position", {u.position.x, u.position.y, u.position.z}},
                         {"noise_power", power_json(u.noise_power)},
                         {"fading", fading_json(u.fading)},
                         {"fas", fas},
                         {"thresholds", {{"common", u.thresholds.common}, {"private", u.thresholds.priv}}}});
    }
    json scenario = {
        {"environment", {{"mu1", s.env.mu1}, {"mu2", s.env.mu2}, {"eta1", s.env.eta1}, {"eta2", s.env.eta2}, {"beta", s.env.beta}}},
        {"bs", {{"position", {s.bs.x, s.bs.y, s.bs.z}}, {"tx_power", power_json(s.p_b)}}},
        {"uav",
         {{"position", {s.uav.x, s.uav.y, s.uav.z}},
          {"tx_power", power_json(s.p_a)},
          {"noise_power", power_json(s.uav_noise)},
          {"fading", fading_json(s.uav_fading)}}},
        {"power_split", {{"alpha_c", s.power.alpha_c}, {"private_shares", spec.private_shares}}},
        {"users", users},
        {"paper_literal_typos", s.paper_literal_typos}};
    json modes = json::array();
    for (Mode m : spec.modes)
        modes.push_back(to_string(m));
    json doc = {{"scenario", scenario}, {"modes", modes}, {"noma", {{"far_factor", spec.noma.far_factor}}}};
    if (spec.sweep)
        doc["sweep"] = {{"variable", to_string(spec.sweep->variable)}, {"values", spec.sweep->values}};
    if (spec.mc) {
        doc["mc"] = {{"trials", spec.mc->trials},
                     {"seed", spec.mc->seed},
                     {"sampler", montecarlo::to_string(spec.mc->sampler)},
                     {"chunk_size", spec.mc->chunk_size},
                     {"workers", spec.mc->workers}};
    }
    json outputs = json::object();
    if (!spec.outputs.csv_path.empty())
        outputs["csv"] = spec.outputs.csv_path;
    if (spec.outputs.svg_path)
        outputs["svg"] = *spec.outputs.svg_path;
    doc["outputs"] = outputs;
    return doc;
}

RunSpec default_spec() {
    RunSpec spec;
    spec.scenario = rsma::RsmaScenario::defaults();
    spec.private_shares = {0.75, 0.25};
    return spec;
}

}  // namespace

const char* to_string(Mode m) {
    switch (m) {
    case Mode::exact:
        return "exact";
    case Mode::asymptotic:
        return "asymptotic";
    case Mode::monte_carlo:
        return "monte_carlo";
    case Mode::noma:
        return "noma";
    }
    return "?";
}

const char* to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::power_dbm:
        return "power_dbm";
    case SweepVariable::alpha_c:
        return "alpha_c";
    case SweepVariable::n_ports:
        return "n_ports";
    case SweepVariable::aperture:
        return "aperture";
    case SweepVariable::m_user:
        return "m_user";
    case SweepVariable::threshold_common:
        return "threshold_common";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (Mode m : {Mode::exact, Mode::asymptotic, Mode::monte_carlo, Mode::noma}) {
        if (name == to_string(m))
            return m;
    }
    return std::nullopt;
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
    for (SweepVariable v : {SweepVariable::power_dbm, SweepVariable::alpha_c, SweepVariable::n_ports,
                            SweepVariable::aperture, SweepVariable::m_user, SweepVariable::threshold_common}) {
        if (name == to_string(v))
            return v;
    }
    return std::nullopt;
}

std::vector<Mode> parse_modes(std::string_view list) {
    std::vector<Mode> modes;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t end = std::min(list.find(',', start), list.size());
        std::string_view item = list.substr(start, end - start);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        if (!item.empty()) {
            const auto m = parse_mode(item);
            if (!m)
                throw ConfigError(ConfigError::Kind::parse, "unknown mode '" + std::string(item) +
                                                                "' (expected exact, asymptotic, monte_carlo, noma)");
            if (std::find(modes.begin(), modes.end(), *m) == modes.end())
                modes.push_back(*m);
        }
        start = end + 1;
    }
    if (modes.empty())
        throw ConfigError(ConfigError::Kind::validation, "at least one mode must be selected");
    return modes;
}

double parse_power(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ')
        t.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc())
        throw ConfigError(ConfigError::Kind::parse, "cannot read power '" + std::string(text) + "'");
    std::string_view unit(ptr, static_cast<std::size_t>(t.data() + t.size() - ptr));
    while (!unit.empty() && unit.front() == ' ')
        unit.remove_prefix(1);
    while (!unit.empty() && unit.back() == ' ')
        unit.remove_suffix(1);
    if (unit == "dBm")
        return geometry::dbm_to_watts(value);
    if (unit == "dBW")
        return std::pow(10.0, value / 10.0);
    if (unit == "mW")
        return value * 1e-3;
    if (unit == "W" || unit.empty())
        return value;
    throw ConfigError(ConfigError::Kind::parse,
                      "unknown power unit '" + std::string(unit) + "' (expected dBm, dBW, mW or W)");
}

rsma::RsmaScenario RunSpec::scenario_at(double value) const {
    rsma::RsmaScenario s = scenario;
    if (!sweep)
        return s;
    switch (sweep->variable) {
    case SweepVariable::power_dbm:
        s.p_b = geometry::dbm_to_watts(value);
        s.p_a = s.p_b;
        break;
    case SweepVariable::alpha_c:
        s.power = rsma::RsmaPower::from_shares(value, private_shares);
        break;
    case SweepVariable::n_ports: {
        const int n = static_cast<int>(std::lround(value));
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
        for (rsma::UserSpec& u : s.users) {
            u.fas.n1 = side * side == n ? side : n;
            u.fas.n2 = side * side == n ? side : 1;
        }
        break;
    }
    case SweepVariable::aperture:
        for (rsma::UserSpec& u : s.users)
            u.fas.w1 = u.fas.w2 = std::sqrt(value);
        break;
    case SweepVariable::m_user:
        for (rsma::UserSpec& u : s.users)
            u.fading.m = value;
        break;
    case SweepVariable::threshold_common:
        for (rsma::UserSpec& u : s.users)
            u.thresholds.common = value;
        break;
    }
    return s;
}

void RunSpec::validate() const {
    auto invalid = [](const std::string& what) { throw ConfigError(ConfigError::Kind::validation, what); };
    if (modes.empty())
        invalid("at least one mode must be selected");
    if (private_shares.size() != scenario.users.size())
        invalid("power_split.private_shares needs one entry per user");
    for (double s : private_shares) {
        if (!(s > 0.0))
            invalid("power_split.private_shares must be positive");
    }
    if (mc) {
        try {
            mc->validate();
        } catch (const std::invalid_argument& e) {
            invalid(e.what());
        }
    }
    if (!(noma.far_factor > 0.0 && noma.far_factor < 1.0))
        invalid("noma.far_factor must lie in (0, 1)");
    std::vector<double> points{0.0};
    if (sweep) {
        if (sweep->values.empty())
            invalid("sweep.values must not be empty");
        for (std::size_t i = 1; i < sweep->values.size(); ++i) {
            if (!(sweep->values[i] > sweep->values[i - 1]))
                invalid("sweep.values must be strictly increasing");
        }
        if (sweep->variable == SweepVariable::n_ports) {
            for (double v : sweep->values) {
                if (!(v >= 1.0 && v == std::round(v)))
                    invalid("sweep over n_ports needs positive integers");
            }
        }
        points = sweep->values;
    }
    for (double v : points) {
        try {
            scenario_at(v).validate();
        } catch (const std::invalid_argument& e) {
            invalid(sweep ? std::string(e.what()) + " (at " + to_string(sweep->variable) + " = " + std::to_string(v) + ")"
                          : std::string(e.what()));
        }
    }
}

RunSpec parse_config(std::string_view text, std::string_view source) {
    RunSpec spec = default_spec();
    const bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) {
        spec.validate();
        return spec;
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
        throw ConfigError(ConfigError::Kind::parse, std::string(source) + ":" + std::to_string(line) + ": " + e.what());
    }
    const Node root(doc, "", "", text, source);
    root.expect_object({"scenario", "sweep", "outputs", "mc", "modes", "noma"});
    try {
        if (auto n = root.get("scenario"))
            read_scenario(*n, spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ConfigError::Kind::validation, std::string(source) + ": " + e.what());
    }
    if (auto n = root.get("sweep")) {
        n->expect_object({"variable", "values"});
        const auto var = n->get("variable");
        const auto values = n->get("values");
        if (!var || !values)
            n->fail("sweep needs variable and values");
        const auto v = parse_sweep_variable(var->string());
        if (!v)
            var->fail("unknown sweep variable (expected power_dbm, alpha_c, n_ports, aperture, m_user, threshold_common)");
        spec.sweep = Sweep{*v, values->numbers()};
    }
    if (auto n = root.get("outputs")) {
        n->expect_object({"csv", "svg"});
        if (auto v = n->get("csv"))
            spec.outputs.csv_path = v->string();
        if (auto v = n->get("svg"))
            spec.outputs.svg_path = v->string();
    }
    if (auto n = root.get("mc")) {
        n->expect_object({"trials", "seed", "sampler", "chunk_size", "workers"});
        montecarlo::McConfig mc;
        if (auto v = n->get("trials"))
            mc.trials = v->unsigned_integer();
        if (auto v = n->get("seed"))
            mc.seed = v->unsigned_integer();
        if (auto v = n->get("chunk_size"))
            mc.chunk_size = v->unsigned_integer();
        if (auto v = n->get("workers"))
            mc.workers = static_cast<unsigned>(v->unsigned_integer());
        if (auto v = n->get("sampler")) {
            const std::string s = v->string();
            if (s == "copula")
                mc.sampler = montecarlo::Sampler::copula;
            else if (s == "physical")
                mc.sampler = montecarlo::Sampler::physical;
            else
                v->fail("sampler must be copula or physical");
        }
        spec.mc = mc;
    }
    if (auto n = root.get("modes")) {
        try {
            if (n->raw().is_string()) {
                spec.modes = parse_modes(n->string());
            } else {
                std::string joined;
                for (const Node& e : n->elements())
                    joined += e.string() + ",";
                spec.modes = parse_modes(joined);
            }
        } catch (const ConfigError& e) {
            n->fail(e.what(), e.kind());
        }
    }
    if (auto n = root.get("noma")) {
        n->expect_object({"far_factor"});
        if (auto v = n->get("far_factor"))
            spec.noma.far_factor = v->number();
    }
    spec.validate();
    return spec;
}

RunSpec load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open configuration file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("error reading configuration file '" + path + "'");
    return parse_config(buf.str(), path);
}

std::string default_config_text() {
    RunSpec spec = default_spec();
    spec.mc = montecarlo::McConfig{};
    spec.modes = {Mode::exact, Mode::asymptotic, Mode::monte_carlo};
    spec.sweep = Sweep{SweepVariable::power_dbm, {0, 5, 10, 15, 20, 25, 30}};
    return to_json(spec).dump(2) + "\n";
}

}  // namespace fasop::cli
