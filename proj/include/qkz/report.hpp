/*
   Copyright 2026 the qkzforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace qkz {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

/**
 * A verification report: named pass/fail checks plus recorded constants
 * (proportionality factors, resolved conventions). Serialized to JSON by the
 * CLI layer.
 */
struct Report {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> constants;

    using Clock = std::chrono::steady_clock;
    static Clock::time_point now() { return Clock::now(); }

    void add(const std::string& name, bool pass, const std::string& detail = "",
             double ms = 0.0) {
        checks.push_back({name, pass, detail, ms});
    }

    void add(const std::string& name, bool pass, const std::string& detail,
             Clock::time_point started) {
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        checks.push_back({name, pass, detail, ms});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        constants.insert(other.constants.begin(), other.constants.end());
    }

    bool all_pass() const {
        for (const auto& check : checks)
            if (!check.pass) return false;
        return true;
    }
};

}  // namespace qkz
