// Copyright 2026 The qwalk Authors
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

#include "qwalk/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qwalk::cli {

using nlohmann::json;

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

double parse_decimal(const std::string &text) {
    std::string s = trim(text);
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
        throw Error("not a number: '" + text + "'");
    }
    return v;
}

}  // namespace

double parse_real(const std::string &text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return parse_decimal(s);
    }
    double den = parse_decimal(s.substr(slash + 1));
    if (den == 0.0) {
        throw Error("zero denominator in '" + text + "'");
    }
    return parse_decimal(s.substr(0, slash)) / den;
}

double parse_angle(const std::string &text) {
    std::string s = trim(text);
    if (s.rfind("pi:", 0) == 0) {
        return parse_real(s.substr(3)) * kPi;
    }
    return parse_real(s);
}

Complex parse_complex(const std::string &text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() == 1) {
        return {parse_real(parts[0]), 0.0};
    }
    if (parts.size() == 2) {
        return {parse_real(parts[0]), parse_real(parts[1])};
    }
    throw Error("complex values are written 're,im': '" + text + "'");
}

std::size_t parse_count(const std::string &text) {
    std::string s = trim(text);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
        throw Error("not a non-negative integer: '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string &text) {
    std::string s = trim(text);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw Error("not a boolean: '" + text + "'");
}

std::vector<double> parse_angle_list(const std::string &text) {
    std::vector<double> out;
    for (const std::string &item : split(text, ',')) {
        if (!item.empty()) {
            out.push_back(parse_angle(item));
        }
    }
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string &text) {
    std::vector<std::size_t> out;
    for (const std::string &item : split(text, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(item));
            continue;
        }
        std::size_t lo = parse_count(item.substr(0, dots));
        std::size_t hi = parse_count(item.substr(dots + 2));
        if (hi < lo) {
            throw Error("empty range '" + item + "'");
        }
        for (std::size_t n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
    }
    return out;
}

ConfigMap parse_config_text(const std::string &text) {
    ConfigMap out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') {
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos || trim(s.substr(0, eq)).empty()) {
            throw Error("config line " + std::to_string(lineno) + ": expected key=value");
        }
        out[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
    }
    return out;
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

ConfigMap load_config_file(const std::string &path) { return parse_config_text(read_file(path)); }

ConfigMap config_from_output(const std::string &text) {
    ConfigMap out;
    std::string s = trim(text);
    if (!s.empty() && s[0] == '{') {
        json doc = json::parse(s);
        if (!doc.contains("config") || !doc["config"].is_object()) {
            throw Error("JSON output has no config object");
        }
        for (auto &[k, v] : doc["config"].items()) {
            out[k] = v.get<std::string>();
        }
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line) && line.rfind('#', 0) == 0) {
        std::string body = trim(line.substr(1));
        auto eq = body.find('=');
        if (eq != std::string::npos) {
            out[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
        }
    }
    return out;
}

ConfigMap merge(ConfigMap base, const ConfigMap &overrides) {
    for (const auto &[k, v] : overrides) {
        base[k] = v;
    }
    return base;
}

namespace {

using KeySet = std::map<std::string, std::string>;

const KeySet kLatticeKeys = {
    {"topology", "line or cycle"},
    {"n", "number of sites N"},
    {"convention", "spatial or local direction labels"},
};
const KeySet kCoinKeys = {
    {"rho", "coin bias in [0, 1]"},
    {"theta", "coin phase theta (pi: prefix allowed)"},
    {"phi", "coin phase phi (pi: prefix allowed)"},
};
const KeySet kInitialKeys = {
    {"init_theta", "initial coin polar angle on the Bloch sphere"},
    {"init_phi", "initial coin azimuth on the Bloch sphere"},
    {"alpha", "explicit up amplitude 're,im' (with beta)"},
    {"beta", "explicit down amplitude 're,im' (with alpha)"},
};
const KeySet kOutputKeys = {{"output", "output path, '-' for stdout"}};

KeySet join(std::initializer_list<KeySet> sets) {
    KeySet out;
    for (const KeySet &s : sets) {
        out.insert(s.begin(), s.end());
    }
    return out;
}

const std::map<std::string, KeySet> &key_table() {
    static const std::map<std::string, KeySet> table = {
        {"evolve", join({kLatticeKeys, kCoinKeys, kInitialKeys, kOutputKeys,
                         {{"steps", "number of steps"}, {"site", "only emit this site"}}})},
        {"check-pst", join({kLatticeKeys, kCoinKeys, kOutputKeys,
                            {{"horizon", "search horizon (default 50 N)"},
                             {"tolerance", "transfer tolerance (default 1e-9)"}}})},
        {"sweep", join({kOutputKeys,
                        {{"topology", "line or cycle"},
                         {"convention", "spatial or local direction labels"},
                         {"n_values", "site counts, e.g. 2..10"},
                         {"rho_grid", "comma separated rho values (default k/8)"},
                         {"theta_grid", "comma separated theta values (default 0)"},
                         {"phi_grid", "comma separated phi values (default 0)"},
                         {"horizon", "search horizon (default 50 N)"},
                         {"tolerance", "transfer tolerance (default 1e-9)"},
                         {"threads", "worker threads"},
                         {"include_uncertified", "also list cells without a transfer"}}})},
        {"fidelity-map", join({kLatticeKeys, kCoinKeys, kOutputKeys,
                               {{"res_theta", "grid points in theta_b"},
                                {"res_phi", "grid points in phi_b"},
                                {"horizon", "time horizon (default 50 N)"},
                                {"recovery", "apply the synthesized recovery operator"}}})},
        {"peaks", join({kLatticeKeys, kCoinKeys, kInitialKeys, kOutputKeys,
                        {{"site", "observed site (default B)"},
                         {"horizon", "number of steps"},
                         {"threshold", "peak threshold in (0, 1)"},
                         {"min_gap", "smallest quasi-period kept in the envelope"}}})},
        {"verify-closed-forms", join({kOutputKeys,
                                      {{"max_n", "largest N"},
                                       {"l_max", "largest revival index l on lines"},
                                       {"angles", "comma separated theta/phi grid values"},
                                       {"tolerance", "largest acceptable deviation (default 1e-10)"}}})},
        {"reproduce", join({kOutputKeys,
                            {{"target", "table1, table2, fig3, fig4 or fig5"},
                             {"threads", "worker threads"}}})},
    };
    return table;
}

}  // namespace

std::vector<std::string> subcommands() {
    return {"evolve", "check-pst", "sweep", "fidelity-map", "peaks", "verify-closed-forms", "reproduce"};
}

const std::map<std::string, std::string> &allowed_keys(const std::string &command) {
    auto it = key_table().find(command);
    if (it == key_table().end()) {
        throw Error("unknown command '" + command + "'");
    }
    return it->second;
}

RunConfig RunConfig::from_map(const std::string &command, const ConfigMap &settings) {
    const KeySet &keys = allowed_keys(command);
    for (const auto &[k, v] : settings) {
        if (!keys.count(k)) {
            throw Error("unknown setting '" + k + "' for " + command);
        }
    }
    auto get = [&](const std::string &k) -> std::optional<std::string> {
        auto it = settings.find(k);
        return it == settings.end() ? std::nullopt : std::optional<std::string>(it->second);
    };

    RunConfig c;
    c.command = command;
    c.echo = settings;
    if (auto v = get("topology")) c.topology = parse_topology(*v);
    if (auto v = get("convention")) c.convention = parse_convention(*v);
    if (auto v = get("n")) c.n_sites = parse_count(*v);

    double rho = 0.5, theta = 0.0, phi = 0.0;
    if (auto v = get("rho")) rho = parse_real(*v);
    if (auto v = get("theta")) theta = parse_angle(*v);
    if (auto v = get("phi")) phi = parse_angle(*v);
    c.coin = CoinParameters(rho, theta, phi);

    auto alpha = get("alpha");
    auto beta = get("beta");
    if (alpha || beta) {
        if (!alpha || !beta) {
            throw Error("alpha and beta must be given together");
        }
        if (get("init_theta") || get("init_phi")) {
            throw Error("give either alpha/beta or init_theta/init_phi, not both");
        }
        c.initial = CoinState(parse_complex(*alpha), parse_complex(*beta));
    } else {
        double tb = kPi / 2, pb = kPi / 2;
        if (auto v = get("init_theta")) tb = parse_angle(*v);
        if (auto v = get("init_phi")) pb = parse_angle(*v);
        c.initial = bloch_to_coin(tb, pb);
    }

    if (auto v = get("steps")) c.steps = parse_count(*v);
    if (auto v = get("horizon")) {
        c.horizon = parse_count(*v);
        if (*c.horizon < 1) {
            throw Error("horizon must be at least 1");
        }
    }
    if (auto v = get("site")) c.site = parse_count(*v);
    if (command == "verify-closed-forms") c.tolerance = 1e-10;
    if (auto v = get("tolerance")) c.tolerance = parse_real(*v);
    if (!(c.tolerance > 0.0)) {
        throw Error("tolerance must be positive");
    }
    if (auto v = get("threshold")) c.threshold = parse_real(*v);
    if (!(c.threshold > 0.0 && c.threshold < 1.0)) {
        throw Error("threshold must lie in (0, 1)");
    }
    if (auto v = get("min_gap")) c.min_gap = parse_count(*v);

    c.n_values = parse_count_list(get("n_values").value_or("2..10"));
    if (auto v = get("rho_grid")) {
        c.rho_grid.clear();
        for (const std::string &item : split(*v, ',')) {
            if (!item.empty()) c.rho_grid.push_back(parse_real(item));
        }
    } else {
        c.rho_grid = default_rho_grid();
    }
    if (auto v = get("theta_grid")) c.theta_grid = parse_angle_list(*v);
    if (auto v = get("phi_grid")) c.phi_grid = parse_angle_list(*v);
    if (auto v = get("threads")) {
        c.threads = static_cast<unsigned>(parse_count(*v));
        if (c.threads < 1) throw Error("threads must be at least 1");
    }
    if (auto v = get("include_uncertified")) c.include_uncertified = parse_bool(*v);

    if (auto v = get("res_theta")) c.theta_resolution = parse_count(*v);
    if (auto v = get("res_phi")) c.phi_resolution = parse_count(*v);
    if (auto v = get("recovery")) c.recovery = parse_bool(*v);

    if (auto v = get("max_n")) c.max_n = parse_count(*v);
    if (auto v = get("l_max")) c.l_max = parse_count(*v);
    if (auto v = get("angles")) {
        c.angle_grid = parse_angle_list(*v);
    } else {
        for (int k = 0; k < 8; ++k) c.angle_grid.push_back(kTwoPi * k / 8);
    }

    if (auto v = get("target")) c.target = *v;
    if (auto v = get("output")) c.output = *v;

    // Surface lattice errors (odd local cycles, N < 2, bad sites) up front.
    if (keys.count("n")) {
        Lattice lat = c.lattice();
        if (c.site) lat.check_site(*c.site);
    }
    if (command == "reproduce") {
        static const std::vector<std::string> targets = {"table1", "table2", "fig3", "fig4", "fig5"};
        if (std::find(targets.begin(), targets.end(), c.target) == targets.end()) {
            throw Error("reproduce needs target=table1|table2|fig3|fig4|fig5");
        }
    }
    return c;
}

std::string format_number(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

namespace {

json coin_json(const CoinParameters &c) { return {{"rho", c.rho()}, {"theta", c.theta()}, {"phi", c.phi()}}; }

json lattice_json(const Lattice &l) {
    return {{"topology", to_string(l.topology())}, {"n", l.n_sites()}, {"convention", to_string(l.convention())}};
}

json matrix_json(const Matrix2 &m) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        json row = json::array();
        for (int j = 0; j < 2; ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json to_json(const PSTReport &r) {
    json j;
    j["schema"] = 1;
    j["lattice"] = lattice_json(r.lattice);
    j["coin"] = coin_json(r.coin);
    j["horizon"] = r.horizon;
    j["source"] = r.source;
    j["target"] = r.target;
    j["certified"] = r.certified;
    j["transfer_time"] = r.transfer_time ? json(*r.transfer_time) : json(nullptr);
    j["residual"] = r.residual;
    j["best_time"] = r.best_time;
    if (r.transfer_time) {
        j["transfer_block"] = matrix_json(r.block);
    }
    j["recovery"] = r.recovery ? coin_json(r.recovery->params) : json(nullptr);
    j["global_phase"] = r.recovery ? json(r.recovery->global_phase) : json(nullptr);
    j["min_recovered_fidelity"] = r.min_recovered_fidelity;
    j["recovery_unique"] = r.recovery_unique;
    j["later_transfer_times"] = r.later_transfer_times;
    j["period"] = r.period ? json{{"t", r.period->period}, {"phase", r.period->phase}} : json(nullptr);
    j["n_period"] = r.n_period ? json(*r.n_period) : json(nullptr);
    return j;
}

json to_json(const PeakAnalysis &a) {
    return {{"site", a.site},
            {"horizon", a.horizon},
            {"threshold", a.threshold},
            {"stride", a.stride},
            {"max_value", a.max_value},
            {"max_time", a.max_time},
            {"peak_times", a.peak_times},
            {"peak_values", a.peak_values},
            {"gaps", a.gaps},
            {"envelope_times", a.envelope_times},
            {"envelope_values", a.envelope_values},
            {"quasi_periods", a.quasi_periods}};
}

json to_json(const ClosedFormReport &r) {
    json j;
    j["checks"] = r.checks.size();
    j["max_deviation"] = r.max_deviation;
    std::map<std::string, double> per_family;
    for (const ClosedFormCheck &c : r.checks) {
        per_family[c.family] = std::max(per_family[c.family], c.deviation);
    }
    j["max_deviation_by_family"] = per_family;
    auto worst = std::max_element(r.checks.begin(), r.checks.end(),
                                  [](const auto &a, const auto &b) { return a.deviation < b.deviation; });
    if (worst != r.checks.end()) {
        j["worst"] = {{"family", worst->family}, {"n", worst->n}, {"l", worst->l}, {"t", worst->t},
                      {"theta", worst->theta},   {"phi", worst->phi}, {"deviation", worst->deviation}};
    }
    return j;
}

namespace {

void csv_header(std::ostream &o, const RunConfig &c) {
    o << "# qwalk " << c.command << '\n';
    for (const auto &[k, v] : c.echo) {
        o << "# " << k << '=' << v << '\n';
    }
}

json json_envelope(const RunConfig &c) {
    json j;
    j["schema"] = 1;
    j["command"] = c.command;
    j["config"] = c.echo;
    return j;
}

void write_state_rows(std::ostream &o, const WalkState &s, std::optional<std::size_t> only, const std::string &prefix = "") {
    const std::size_t n = s.lattice().n_sites();
    for (std::size_t x = 1; x <= n; ++x) {
        if (only && *only != x) continue;
        Complex a = s.alpha(x), b = s.beta(x);
        o << prefix << s.step_count() << ',' << x << ',' << format_number(std::norm(a) + std::norm(b)) << ','
          << format_number(a.real()) << ',' << format_number(a.imag()) << ',' << format_number(b.real()) << ','
          << format_number(b.imag()) << '\n';
    }
}

int cmd_evolve(const RunConfig &c, std::ostream &o) {
    const Lattice lat = c.lattice();
    const UnitaryOperator u = step_operator(c.coin, lat);
    csv_header(o, c);
    o << "t,x,prob,re_alpha,im_alpha,re_beta,im_beta\n";
    WalkState s = localized_state(c.initial, lat.source_site(), lat);
    write_state_rows(o, s, c.site);
    for (std::size_t t = 1; t <= c.steps; ++t) {
        s = evolve(s, 1, u);
        write_state_rows(o, s, c.site);
    }
    return ok;
}

int cmd_check_pst(const RunConfig &c, std::ostream &o) {
    PSTReport r = check_pst(c.lattice(), c.coin, c.resolved_horizon(), c.tolerance);
    json j = to_json(r);
    j["command"] = c.command;
    j["config"] = c.echo;
    o << j.dump(2) << '\n';
    return r.certified ? ok : not_found;
}

int cmd_sweep(const RunConfig &c, std::ostream &o) {
    SweepConfig sc;
    sc.topology = c.topology;
    sc.convention = c.convention;
    sc.n_values = c.n_values;
    sc.rho_grid = c.rho_grid;
    sc.theta_grid = c.theta_grid;
    sc.phi_grid = c.phi_grid;
    sc.horizon = c.horizon.value_or(0);
    sc.include_uncertified = c.include_uncertified;
    sc.threads = c.threads;
    sc.tolerance = c.tolerance;
    json j = json_envelope(c);
    j["reports"] = json::array();
    for (const PSTReport &r : sweep(sc)) {
        j["reports"].push_back(to_json(r));
    }
    o << j.dump(2) << '\n';
    return ok;
}

void write_map_rows(std::ostream &o, const FidelityMap &m, const std::string &prefix = "") {
    for (std::size_t i = 0; i < m.theta_values.size(); ++i) {
        for (std::size_t k = 0; k < m.phi_values.size(); ++k) {
            o << prefix << format_number(m.theta_values[i]) << ',' << format_number(m.phi_values[k]) << ','
              << format_number(m.at(i, k)) << '\n';
        }
    }
}

int cmd_fidelity_map(const RunConfig &c, std::ostream &o, std::ostream &err) {
    const Lattice lat = c.lattice();
    const std::size_t h = c.resolved_horizon();
    std::optional<Matrix2> rec;
    if (c.recovery) {
        PSTReport r = check_pst(lat, c.coin, h, c.tolerance);
        if (!r.recovery) {
            err << "qwalk: no transfer within " << h << " steps, so there is no recovery operator to apply\n";
            return not_found;
        }
        rec = coin_matrix(r.recovery->params);
    }
    FidelityMap m = fidelity_map(lat, c.coin, c.theta_resolution, c.phi_resolution, h, rec);
    csv_header(o, c);
    o << "theta_b,phi_b,fidelity\n";
    write_map_rows(o, m);
    return ok;
}

int cmd_peaks(const RunConfig &c, std::ostream &o) {
    const Lattice lat = c.lattice();
    std::size_t site = c.site.value_or(lat.target_site());
    PeakAnalysis a = peak_analysis(lat, c.coin, c.initial, site, c.resolved_horizon(), c.threshold, c.min_gap);
    json j = json_envelope(c);
    j["lattice"] = lattice_json(lat);
    j["coin"] = coin_json(c.coin);
    j["analysis"] = to_json(a);
    o << j.dump(2) << '\n';
    return ok;
}

int cmd_verify_closed_forms(const RunConfig &c, std::ostream &o) {
    ClosedFormReport r = verify_closed_forms(c.max_n, c.l_max, c.angle_grid);
    json j = json_envelope(c);
    j["report"] = to_json(r);
    j["passed"] = r.max_deviation <= c.tolerance;
    o << j.dump(2) << '\n';
    return r.max_deviation <= c.tolerance ? ok : not_found;
}

const CoinState kFigureState = bloch_to_coin(kPi / 2, kPi / 2);

int cmd_reproduce(const RunConfig &c, std::ostream &o) {
    if (c.target == "table1" || c.target == "table2") {
        json j = json_envelope(c);
        j["rows"] = json::array();
        const Lattice lat = c.target == "table1" ? Lattice::line(2) : Lattice::cycle(4);
        std::vector<CoinParameters> coins = {CoinParameters(0.25, 0, 0), CoinParameters(0.5, 0, 0),
                                             CoinParameters(0.75, 0, 0)};
        if (c.target == "table2") {
            coins.push_back(CoinParameters(0.5, kPi, 0));
        }
        for (const CoinParameters &coin : coins) {
            j["rows"].push_back(to_json(check_pst(lat, coin, default_horizon(lat))));
        }
        o << j.dump(2) << '\n';
        return ok;
    }
    csv_header(o, c);
    const CoinParameters h = CoinParameters::hadamard();
    if (c.target == "fig3") {
        struct Panel {
            const char *name;
            Lattice lattice;
            std::size_t horizon;
        };
        const Panel panels[] = {{"a", Lattice::cycle(4), 100}, {"b", Lattice::line(4), 100},
                                {"c", Lattice::cycle(6), 100}, {"d", Lattice::line(6), 100},
                                {"e", Lattice::cycle(6), 13000}, {"f", Lattice::line(6), 14000}};
        o << "panel,t,prob\n";
        for (const Panel &p : panels) {
            std::vector<double> series =
                probability_series(localized_state(kFigureState, 1, p.lattice), step_operator(h, p.lattice),
                                   p.lattice.target_site(), p.horizon);
            for (std::size_t t = 0; t < series.size(); ++t) {
                o << p.name << ',' << t << ',' << format_number(series[t]) << '\n';
            }
        }
    } else if (c.target == "fig4") {
        o << "panel,theta_b,phi_b,fidelity\n";
        const Lattice lat = Lattice::line(2);
        write_map_rows(o, fidelity_map(lat, CoinParameters(1.0, 0, 0), 61, 61, 100), "a,");
        write_map_rows(o, fidelity_map(lat, h, 61, 61, 100), "b,");
    } else {
        o << "panel,t,x,prob,re_alpha,im_alpha,re_beta,im_beta\n";
        const Lattice lat = Lattice::cycle(4);
        for (auto [name, rho, steps] : {std::tuple{"hadamard", 0.5, 8}, std::tuple{"rho=1/4", 0.25, 12}}) {
            UnitaryOperator u = step_operator(CoinParameters(rho, 0, 0), lat);
            WalkState s = localized_state(kFigureState, 1, lat);
            std::string prefix = std::string(name) + ",";
            write_state_rows(o, s, std::nullopt, prefix);
            for (int t = 1; t <= steps; ++t) {
                s = evolve(s, 1, u);
                write_state_rows(o, s, std::nullopt, prefix);
            }
        }
    }
    return ok;
}

}  // namespace

int run_command(const std::string &command, const ConfigMap &settings, std::ostream &out, std::ostream &err) {
    std::ostringstream buf;
    int status = ok;
    try {
        RunConfig c = RunConfig::from_map(command, settings);
        if (command == "evolve") {
            status = cmd_evolve(c, buf);
        } else if (command == "check-pst") {
            status = cmd_check_pst(c, buf);
        } else if (command == "sweep") {
            status = cmd_sweep(c, buf);
        } else if (command == "fidelity-map") {
            status = cmd_fidelity_map(c, buf, err);
        } else if (command == "peaks") {
            status = cmd_peaks(c, buf);
        } else if (command == "verify-closed-forms") {
            status = cmd_verify_closed_forms(c, buf);
        } else {
            status = cmd_reproduce(c, buf);
        }
        if (c.output == "-") {
            out << buf.str();
        } else {
            std::ofstream f(c.output, std::ios::binary);
            if (!f) {
                throw Error("cannot write '" + c.output + "'");
            }
            f << buf.str();
        }
    } catch (const std::exception &e) {
        err << "qwalk " << command << ": " << e.what() << '\n';
        return validation_error;
    }
    return status;
}

}  // namespace qwalk::cli
