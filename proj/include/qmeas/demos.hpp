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

#ifndef QMEAS_DEMOS_HPP
#define QMEAS_DEMOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qmeas/linops.hpp"
#include "qmeas/scenario.hpp"

namespace qmeas {

struct DemoOptions {
    double tol = kDefaultTol;
    std::uint64_t seed = 20260101;
};

/// One check of a demo together with the verdict the demo expects from it.
struct DemoCheck {
    bool expected_pass = true;
    CheckResult result;

    bool matches() const {
        return result.pass == expected_pass;
    }
};

struct DemoReport {
    std::string name;
    std::string anchor;  // what the demo reproduces
    std::vector<DemoCheck> checks;
    bool pattern_matches = true;
};

struct DemoInfo {
    std::string name;
    std::string anchor;
};

const std::vector<DemoInfo> &list_demos();

/// Throws ValidationError for an unknown name.
DemoReport run_demo(const std::string &name, const DemoOptions &options = {});

std::string demo_to_json(const DemoReport &report);
std::string demo_to_text(const DemoReport &report);

}  // namespace qmeas

#endif
