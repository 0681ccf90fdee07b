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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entverify {

enum class Scheme { Sic, Mub, Clifford };

std::string_view scheme_name(Scheme s);
/// Parses "sic", "mub" or "clifford"; nullopt otherwise.
std::optional<Scheme> parse_scheme(std::string_view name);

/// Decimal form with 17 significant digits, enough to round-trip any double.
std::string format_real(double v);

struct Check {
    std::string name;
    double measured = 0.0;  // deviation from the expected value
    double tolerance = 0.0;
    bool pass = false;
};

/// Named list of numeric checks; passes iff every check passes.
class VerificationReport {
  public:
    VerificationReport(Scheme scheme, int d) : scheme_(scheme), d_(d) {}

    /// Records `measured <= tolerance` under `name`. NaN always fails.
    const Check &add_check(std::string name, double measured, double tolerance);
    /// Records an exact integer comparison as a check with zero tolerance.
    const Check &add_exact_check(std::string name, long long measured, long long expected);
    /// Appends every check of `other`, prefixing names with `prefix`.
    void merge(const VerificationReport &other, std::string_view prefix = {});

    void set_metadata(std::string key, std::string value) { metadata_[std::move(key)] = std::move(value); }

    Scheme scheme() const { return scheme_; }
    int d() const { return d_; }
    const std::vector<Check> &checks() const { return checks_; }
    const std::map<std::string, std::string> &metadata() const { return metadata_; }
    /// nullptr when absent.
    const Check *find(std::string_view name) const;
    bool overall() const;

  private:
    Scheme scheme_;
    int d_;
    std::vector<Check> checks_;
    std::map<std::string, std::string> metadata_;
};

}  // namespace entverify
