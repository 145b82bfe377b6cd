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

#ifndef QWALK_IO_HPP
#define QWALK_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/pst.hpp"

namespace qwalk::cli {

/// Raw key=value settings. Ordered, so echoing them is deterministic.
using ConfigMap = std::map<std::string, std::string>;

/// Exit statuses shared by every subcommand.
enum ExitCode : int { ok = 0, validation_error = 1, not_found = 2 };

/// Decimal, fraction ("1/4") or multiple of pi ("pi:0.5", "pi:-1/2").
double parse_angle(const std::string &text);
/// Decimal or fraction.
double parse_real(const std::string &text);
/// "re,im" or a bare real.
Complex parse_complex(const std::string &text);
std::size_t parse_count(const std::string &text);
bool parse_bool(const std::string &text);
/// Comma separated values, each parsed with `parse_angle`.
std::vector<double> parse_angle_list(const std::string &text);
/// Comma separated counts; "a..b" expands to an inclusive range.
std::vector<std::size_t> parse_count_list(const std::string &text);

/// Flat key=value lines. Blank lines and lines starting with '#' are ignored.
ConfigMap parse_config_text(const std::string &text);
ConfigMap load_config_file(const std::string &path);
/// Recovers the settings echoed at the top of a previous run's output (CSV
/// header comments or the "config" object of a JSON document).
ConfigMap config_from_output(const std::string &text);
/// `overrides` wins on every key present in both.
ConfigMap merge(ConfigMap base, const ConfigMap &overrides);

std::vector<std::string> subcommands();
/// Keys accepted by a subcommand, with their one-line help text.
const std::map<std::string, std::string> &allowed_keys(const std::string &command);

/// Validated settings for one run.
struct RunConfig {
    std::string command;
    ConfigMap echo;

    Topology topology = Topology::line;
    std::size_t n_sites = 2;
    Convention convention = Convention::spatial;
    CoinParameters coin = CoinParameters::hadamard();
    CoinState initial = CoinState::up();
    std::size_t steps = 0;
    std::optional<std::size_t> horizon;
    std::optional<std::size_t> site;
    double tolerance = kTransferTolerance;
    double threshold = 0.5;
    std::size_t min_gap = 1000;

    std::vector<std::size_t> n_values;
    std::vector<double> rho_grid;
    std::vector<double> theta_grid{0.0};
    std::vector<double> phi_grid{0.0};
    unsigned threads = 1;
    bool include_uncertified = false;

    std::size_t theta_resolution = 61;
    std::size_t phi_resolution = 61;
    bool recovery = false;

    std::size_t max_n = 16;
    std::size_t l_max = 3;
    std::vector<double> angle_grid;

    std::string target;
    std::string format;
    std::string output = "-";

    Lattice lattice() const { return {topology, n_sites, convention}; }
    std::size_t resolved_horizon() const { return horizon ? *horizon : default_horizon(lattice()); }

    /// Throws Error on unknown keys or invalid values.
    static RunConfig from_map(const std::string &command, const ConfigMap &settings);
};

nlohmann::json to_json(const PSTReport &report);
nlohmann::json to_json(const PeakAnalysis &analysis);
nlohmann::json to_json(const ClosedFormReport &report);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

/// Runs a subcommand and writes its records to `out` (or the configured
/// output file) in one piece once the computation is done. Diagnostics go to
/// `err`. Returns an ExitCode.
int run_command(const std::string &command, const ConfigMap &settings, std::ostream &out, std::ostream &err);

}  // namespace qwalk::cli

#endif
