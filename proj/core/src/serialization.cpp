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

#include "entverify/serialization.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace entverify {

namespace {

const Json &require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

void require_schema(const Json &j) {
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
        throw FormatError("unsupported schema version " + j.at("schema").dump());
    }
}

std::string_view parties_name(PartyStructure p) { return p == PartyStructure::Single ? "single" : "double"; }

Json read_array_or_empty(const std::filesystem::path &file) {
    std::error_code ec;
    if (!std::filesystem::exists(file, ec)) {
        return Json::array();
    }
    Json j = read_json_file(file);
    if (!j.is_array()) {
        throw FormatError(file.string() + ": cache file must hold a JSON array");
    }
    return j;
}

void upsert_by_d(const std::filesystem::path &file, Json entry) {
    Json all = read_array_or_empty(file);
    const int d = entry.at("d");
    Json out = Json::array();
    for (auto &e : all) {
        if (!(e.is_object() && e.contains("d") && e.at("d") == d)) {
            out.push_back(std::move(e));
        }
    }
    out.push_back(std::move(entry));
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    write_json_file(file, out);
}

std::optional<Json> find_by_d(const std::filesystem::path &file, int d) {
    try {
        for (const auto &e : read_array_or_empty(file)) {
            if (e.is_object() && e.contains("d") && e.at("d") == d) {
                return std::optional<Json>(std::in_place, e);
            }
        }
    } catch (const Error &) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const Vector &v) {
    Json out = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(complex_to_json(v(k)));
    }
    return out;
}

Vector vector_from_json(const Json &j) {
    if (!j.is_array()) {
        throw FormatError("vector must be a list of [re, im]");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
    }
    return v;
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        rows.push_back(vector_to_json(m.row(r).transpose()));
    }
    return rows;
}

Matrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw FormatError("matrix must be a non-empty list of rows");
    }
    const auto n = static_cast<Eigen::Index>(j.size());
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        Vector row = vector_from_json(j[static_cast<std::size_t>(r)]);
        if (row.size() != n) {
            throw FormatError("matrix must be square");
        }
        m.row(r) = row.transpose();
    }
    return m;
}

Json povm_to_json(const RankOnePovm &m, std::optional<Scheme> scheme) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "povm";
    if (scheme) {
        j["scheme"] = scheme_name(*scheme);
    }
    j["dim"] = m.dim();
    j["local_dim"] = m.local_dim();
    j["parties"] = parties_name(m.parties());
    j["count"] = m.size();
    Json elements = Json::array();
    for (const auto &e : m.elements()) {
        elements.push_back({{"weight", e.weight}, {"vector", vector_to_json(e.vector.amplitudes())}});
    }
    j["elements"] = std::move(elements);
    return j;
}

RankOnePovm povm_from_json(const Json &j) {
    require_schema(j);
    const Json &elements = require(j, "elements");
    if (!elements.is_array()) {
        throw FormatError("'elements' must be a list");
    }
    PartyStructure parties = PartyStructure::Single;
    if (j.contains("parties")) {
        const auto &p = j.at("parties");
        if (p == "double") {
            parties = PartyStructure::Double;
        } else if (p != "single") {
            throw FormatError("'parties' must be \"single\" or \"double\"");
        }
    }
    std::vector<PovmElement> out;
    for (const auto &e : elements) {
        const Json &w = require(e, "weight");
        if (!w.is_number()) {
            throw FormatError("'weight' must be a number");
        }
        out.push_back({w.get<double>(), Ket::from_unit(vector_from_json(require(e, "vector")))});
    }
    return RankOnePovm(std::move(out), parties);
}

Json report_to_json(const VerificationReport &r) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "report";
    j["scheme"] = scheme_name(r.scheme());
    j["d"] = r.d();
    j["overall"] = r.overall();
    Json checks = Json::array();
    for (const auto &c : r.checks()) {
        checks.push_back({{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    j["metadata"] = r.metadata();
    return j;
}

Json transcript_to_json(const ProtocolTranscript &t, Scheme scheme, int d, double fidelity) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "transcript";
    j["scheme"] = scheme_name(scheme);
    j["d"] = d;
    j["fidelity"] = fidelity;
    j["noise_model"] = "isotropic";
    j["shots"] = t.shots;
    j["seed"] = t.seed;
    j["estimate"] = t.estimate;
    j["analytic"] = t.analytic;
    j["two_step"] = t.two_step;
    j["stderr"] = t.standard_error();
    j["within_3sigma"] = t.within_three_sigma();
    j["accept_count"] = t.accept_count;
    j["outcome_histogram"] = t.alice_outcome_counts;
    return j;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::filesystem::path cache_dir() {
    if (const char *dir = std::getenv("ENTVERIFY_CACHE_DIR"); dir && *dir) {
        return dir;
    }
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "entverify";
    }
    if (const char *home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "entverify";
    }
    return ".entverify-cache";
}

Json fiducial_to_json(const Fiducial &f, std::uint64_t seed) {
    return {{"d", f.d},
            {"vector", vector_to_json(f.vector.amplitudes())},
            {"residual", f.residual},
            {"seed", seed},
            {"created", utc_timestamp()}};
}

Fiducial fiducial_from_json(const Json &j) {
    Vector v = vector_from_json(require(j, "vector"));
    const Json &d = require(j, "d");
    if (!d.is_number_integer() || d.get<long long>() != v.size()) {
        throw FormatError("fiducial 'd' does not match the vector length");
    }
    return Fiducial::from_vector(std::move(v));
}

std::optional<Fiducial> load_cached_fiducial(const std::filesystem::path &file, int d, double max_residual) {
    auto entry = find_by_d(file, d);
    if (!entry) {
        return std::nullopt;
    }
    try {
        Fiducial f = fiducial_from_json(*entry);
        if (f.residual <= max_residual) {
            return f;
        }
    } catch (const Error &) {
    }
    return std::nullopt;
}

void store_cached_fiducial(const std::filesystem::path &file, const Fiducial &f, std::uint64_t seed) {
    upsert_by_d(file, fiducial_to_json(f, seed));
}

Json group_to_json(const PhaselessGroup &g) {
    Json elements = Json::array();
    for (const auto &u : g.elements()) {
        elements.push_back(matrix_to_json(u.matrix()));
    }
    return {{"d", g.d()}, {"count", g.size()}, {"elements", std::move(elements)}};
}

PhaselessGroup group_from_json(const Json &j) {
    const Json &d = require(j, "d");
    const Json &elements = require(j, "elements");
    if (!d.is_number_integer() || !elements.is_array()) {
        throw FormatError("group entry needs integer 'd' and a list of 'elements'");
    }
    std::vector<Matrix> ms;
    ms.reserve(elements.size());
    for (const auto &e : elements) {
        ms.push_back(matrix_from_json(e));
    }
    auto g = PhaselessGroup::from_matrices(d.get<int>(), ms);
    if (j.contains("count") && j.at("count") != g.size()) {
        throw FormatError("group 'count' does not match the number of distinct elements");
    }
    return g;
}

std::optional<PhaselessGroup> load_cached_group(const std::filesystem::path &file, int d) {
    auto entry = find_by_d(file, d);
    if (!entry) {
        return std::nullopt;
    }
    try {
        auto g = group_from_json(*entry);
        if (g.size() == clifford_cardinality(d)) {
            return g;
        }
    } catch (const Error &) {
    }
    return std::nullopt;
}

void store_cached_group(const std::filesystem::path &file, const PhaselessGroup &g) {
    upsert_by_d(file, group_to_json(g));
}

Json read_json_file(const std::filesystem::path &file) {
    std::ifstream in(file);
    if (!in) {
        throw FormatError("cannot open " + file.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw FormatError(file.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &file, const Json &j) {
    std::ofstream out(file);
    if (!out) {
        throw Error("cannot write " + file.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw Error("failed writing " + file.string());
    }
}

}  // namespace entverify
