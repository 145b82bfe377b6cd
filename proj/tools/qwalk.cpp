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

// Command-line front end. Every subcommand takes its settings as --key value
// flags, from a key=value file (--config) or from the header of an earlier
// run's output (--replay); flags win over files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qwalk/io.hpp"

namespace {

std::string flag_name(std::string key) {
    for (char &ch : key) {
        if (ch == '_') ch = '-';
    }
    return "--" + key;
}

struct Subcommand {
    CLI::App *app = nullptr;
    std::string config_file;
    std::string replay_file;
    std::map<std::string, std::string> flags;
    std::string positional_target;
};

}  // namespace

int main(int argc, char **argv) {
    using namespace qwalk::cli;

    CLI::App app{"Discrete-time quantum walks and perfect state transfer on lines and cycles"};
    app.require_subcommand(1);

    static const std::map<std::string, std::string> descriptions = {
        {"evolve", "Evolve a walker and emit per-step CSV records"},
        {"check-pst", "Search for perfect state transfer and emit a JSON report"},
        {"sweep", "Check every (N, rho, theta, phi) cell of a grid"},
        {"fidelity-map", "Max-over-time fidelity at B on a Bloch-sphere grid (CSV)"},
        {"peaks", "Long-time peak and quasi-period analysis (JSON)"},
        {"verify-closed-forms", "Compare simulations against the analytic state families"},
        {"reproduce", "Regenerate a table or figure dataset"},
    };

    std::map<std::string, Subcommand> subs;
    for (const std::string &name : subcommands()) {
        Subcommand &s = subs[name];
        s.app = app.add_subcommand(name, descriptions.at(name));
        s.app->add_option("--config", s.config_file, "key=value settings file")->check(CLI::ExistingFile);
        s.app->add_option("--replay", s.replay_file, "reuse the settings echoed in an earlier output")
            ->check(CLI::ExistingFile);
        for (const auto &[key, help] : allowed_keys(name)) {
            s.app->add_option(flag_name(key), s.flags[key], help);
        }
        if (name == "reproduce") {
            s.app->add_option("which", s.positional_target, "table1, table2, fig3, fig4 or fig5");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? ok : validation_error;
    }

    for (auto &[name, s] : subs) {
        if (!s.app->parsed()) continue;
        ConfigMap settings;
        try {
            if (!s.replay_file.empty()) {
                std::ifstream f(s.replay_file, std::ios::binary);
                std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
                settings = config_from_output(text);
            }
            if (!s.config_file.empty()) {
                settings = merge(settings, load_config_file(s.config_file));
            }
        } catch (const std::exception &e) {
            std::cerr << "qwalk " << name << ": " << e.what() << '\n';
            return validation_error;
        }
        ConfigMap given;
        if (!s.positional_target.empty()) given["target"] = s.positional_target;
        for (const auto &[key, value] : s.flags) {
            auto *opt = s.app->get_option_no_throw(flag_name(key));
            if (opt != nullptr && opt->count() > 0) given[key] = value;
        }
        return run_command(name, merge(settings, given), std::cout, std::cerr);
    }
    return validation_error;
}
