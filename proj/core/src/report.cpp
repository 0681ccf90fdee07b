// Copyright 2026 The entverify Authors
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

#include "entverify/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace entverify {

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Sic:
            return "sic";
        case Scheme::Mub:
            return "mub";
        case Scheme::Clifford:
            return "clifford";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "sic") {
        return Scheme::Sic;
    }
    if (name == "mub") {
        return Scheme::Mub;
    }
    if (name == "clifford") {
        return Scheme::Clifford;
    }
    return std::nullopt;
}

std::string format_real(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

const Check &VerificationReport::add_check(std::string name, double measured, double tolerance) {
    bool pass = !std::isnan(measured) && measured <= tolerance;
    checks_.push_back(Check{std::move(name), measured, tolerance, pass});
    return checks_.back();
}

const Check &VerificationReport::add_exact_check(std::string name, long long measured, long long expected) {
    auto dev = static_cast<double>(measured > expected ? measured - expected : expected - measured);
    return add_check(std::move(name), dev, 0.0);
}

void VerificationReport::merge(const VerificationReport &other, std::string_view prefix) {
    for (const auto &c : other.checks_) {
        Check copy = c;
        copy.name = std::string(prefix) + c.name;
        checks_.push_back(std::move(copy));
    }
}

const Check *VerificationReport::find(std::string_view name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check &c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::overall() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.pass; });
}

}  // namespace entverify
