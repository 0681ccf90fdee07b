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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "entverify/clifford.hpp"
#include "entverify/protocol.hpp"
#include "entverify/report.hpp"
#include "entverify/sic.hpp"
#include "entverify/test_operators.hpp"

namespace entverify {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

/// Malformed or incompatible JSON input.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// [re, im].
Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);
/// [[re, im], ...].
Json vector_to_json(const Vector &v);
Vector vector_from_json(const Json &j);
/// Row-major nested list of [re, im].
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// {"schema", "kind": "povm", "scheme"?, "dim", "local_dim", "parties", "elements": [{"weight", "vector"}]}.
Json povm_to_json(const RankOnePovm &m, std::optional<Scheme> scheme = std::nullopt);
/// Rebuilds and revalidates the POVM; throws FormatError or IncompletePovm.
RankOnePovm povm_from_json(const Json &j);

/// {"schema", "kind": "report", "scheme", "d", "overall", "checks": [...], "metadata": {...}}.
Json report_to_json(const VerificationReport &r);

/// {"schema", "kind": "transcript", "scheme", "d", "fidelity", "shots", "seed", "estimate",
///  "analytic", "two_step", "stderr", "within_3sigma", "accept_count", "outcome_histogram"}.
Json transcript_to_json(const ProtocolTranscript &t, Scheme scheme, int d, double fidelity);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

/// ENTVERIFY_CACHE_DIR, else $XDG_CACHE_HOME/entverify, else $HOME/.cache/entverify,
/// else ./.entverify-cache.
std::filesystem::path cache_dir();

inline constexpr const char *kFiducialCacheFile = "fiducial-cache.json";
inline constexpr const char *kCliffordCacheFile = "clifford-cache.json";

/// {d, vector, residual, seed, created}.
Json fiducial_to_json(const Fiducial &f, std::uint64_t seed);
Fiducial fiducial_from_json(const Json &j);

/// Entry for d from a JSON array file; nullopt when the file or entry is missing, unreadable, or
/// the recomputed residual exceeds `max_residual`.
std::optional<Fiducial> load_cached_fiducial(const std::filesystem::path &file, int d,
                                             double max_residual = kSearchAcceptTol);
/// Inserts or replaces the entry for f.d, creating parent directories.
void store_cached_fiducial(const std::filesystem::path &file, const Fiducial &f, std::uint64_t seed);

/// {d, count, elements: [matrix, ...]}.
Json group_to_json(const PhaselessGroup &g);
PhaselessGroup group_from_json(const Json &j);

/// Entry for d; nullopt unless present and its size matches clifford_cardinality(d).
std::optional<PhaselessGroup> load_cached_group(const std::filesystem::path &file, int d);
void store_cached_group(const std::filesystem::path &file, const PhaselessGroup &g);

/// Parses a file; throws FormatError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path &file);
/// Writes `j` (pretty-printed) to file; throws Error on I/O failure.
void write_json_file(const std::filesystem::path &file, const Json &j);

}  // namespace entverify
