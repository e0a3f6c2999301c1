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

#ifndef QMEAS_CHECK_HPP
#define QMEAS_CHECK_HPP

#include <optional>
#include <string>

namespace qmeas {

/// Result of a tolerance check. `max_deviation` is the worst entrywise (or
/// scalar) discrepancy seen; `witness` names the first outcome that broke the
/// tolerance, if any.
struct CheckOutcome {
    bool pass = true;
    double max_deviation = 0.0;
    std::optional<std::string> witness;

    /// Folds one comparison into the outcome.
    void record(double deviation, double tol, const std::string &label) {
        if (deviation > max_deviation) {
            max_deviation = deviation;
        }
        if (deviation > tol && pass) {
            pass = false;
            witness = label;
        }
    }
};

}  // namespace qmeas

#endif
