// Copyright 2026 The qmeas Authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmeas/demos.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

bool is_input_error(qmeas::ErrorKind kind) {
    switch (kind) {
        case qmeas::ErrorKind::ParseError:
        case qmeas::ErrorKind::ValidationError:
        case qmeas::ErrorKind::MissingInput:
            return true;
        default:
            return false;
    }
}

int run_check(const std::string &path, std::optional<double> tol, std::optional<std::uint64_t> seed,
              const std::string &format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitInvalid;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    qmeas::CheckReport report;
    try {
        qmeas::Scenario scenario = qmeas::parse_scenario(buffer.str());
        if (tol) {
            scenario.tolerance = *tol;
        }
        if (seed) {
            scenario.seed = *seed;
        }
        report = qmeas::run_scenario(scenario);
    } catch (const qmeas::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kExitInvalid : kExitFail;
    }
    std::cout << (format == "json" ? qmeas::report_to_json(report) + "\n" : qmeas::report_to_text(report));
    return report.overall ? kExitPass : kExitFail;
}

int run_demo(const std::string &name, std::optional<double> tol, std::optional<std::uint64_t> seed,
             const std::string &format) {
    qmeas::DemoOptions options;
    if (tol) {
        options.tol = *tol;
    }
    if (seed) {
        options.seed = *seed;
    }
    qmeas::DemoReport report;
    try {
        report = qmeas::run_demo(name, options);
    } catch (const qmeas::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kExitInvalid : kExitFail;
    }
    std::cout << (format == "json" ? qmeas::demo_to_json(report) + "\n" : qmeas::demo_to_text(report));
    return report.pattern_matches ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qmeas: finite-dimensional measurement and state-reduction checks"};
    app.require_subcommand(1);

    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    app.add_option("--tol", tol, "numerical tolerance (default 1e-10, or the scenario's own)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized inputs");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string path;
    auto *check = app.add_subcommand("check", "run the checks listed in a scenario file");
    check->add_option("file", path, "scenario JSON file")->required();
    check->fallthrough();

    std::string demo_name;
    auto *demo = app.add_subcommand("demo", "run a canned demo");
    demo->add_option("name", demo_name, "demo name (see list-demos)")->required();
    demo->fallthrough();

    auto *list = app.add_subcommand("list-demos", "list canned demos");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    if (*check) {
        return run_check(path, tol, seed, format);
    }
    if (*demo) {
        return run_demo(demo_name, tol, seed, format);
    }
    if (*list) {
        for (const auto &info : qmeas::list_demos()) {
            std::cout << info.name << "  " << info.anchor << "\n";
        }
    }
    return kExitPass;
}
