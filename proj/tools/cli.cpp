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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "entverify/entverify.hpp"

#ifndef ENTVERIFY_VERSION
#define ENTVERIFY_VERSION "unknown"
#endif

namespace entverify::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string scheme;
    int d = 0;
    std::optional<double> tol;
    bool json = false;
    std::string out_path;
    std::uint64_t seed = 0;
    int restarts = 50;
    bool no_cache = false;
    double fidelity = 1.0;
    std::uint64_t shots = 100000;
};

Scheme scheme_of(const Options &o) {
    auto s = parse_scheme(o.scheme);
    if (!s) {
        throw UsageError("unknown scheme '" + o.scheme + "'");
    }
    return *s;
}

void require_supported(Scheme s, int d) {
    switch (s) {
    case Scheme::Sic:
        if (d < 2 || d > 12) {
            throw UsageError("sic supports d = 2..12");
        }
        return;
    case Scheme::Mub:
        if (!is_prime(d)) {
            throw UsageError("d must be prime (got " + std::to_string(d) + ")");
        }
        if (d > 64) {
            throw UsageError("mub supports prime d <= 64");
        }
        return;
    case Scheme::Clifford:
        if (d != 2 && d != 3 && d != 5) {
            throw UsageError("clifford supports d = 2, 3, 5");
        }
        return;
    }
}

struct FiducialSource {
    Fiducial fiducial;
    std::string origin;  // "analytic", "cache" or "search"
};

FiducialSource obtain_fiducial(int d, const Options &o, std::ostream &err) {
    if (d <= 3) {
        return {known_fiducial(d), "analytic"};
    }
    const auto file = cache_dir() / kFiducialCacheFile;
    if (!o.no_cache) {
        if (auto f = load_cached_fiducial(file, d)) {
            return {*f, "cache"};
        }
    }
    FiducialSearchConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    Fiducial f = search_fiducial(d, cfg);
    if (!o.no_cache) {
        try {
            store_cached_fiducial(file, f, o.seed);
        } catch (const Error &e) {
            err << "warning: could not update fiducial cache: " << e.what() << '\n';
        }
    }
    return {f, "search"};
}

CliffordGroup obtain_group(int d, const Options &o, std::ostream &err) {
    const auto file = cache_dir() / kCliffordCacheFile;
    if (!o.no_cache) {
        if (auto g = load_cached_group(file, d)) {
            return *g;
        }
    }
    CliffordGroup g = enumerate_clifford(d);
    if (!o.no_cache) {
        try {
            store_cached_group(file, g);
        } catch (const Error &e) {
            err << "warning: could not update Clifford cache: " << e.what() << '\n';
        }
    }
    return g;
}

RankOnePovm build_povm(Scheme s, int d, const Options &o, std::ostream &err) {
    switch (s) {
    case Scheme::Sic:
        return wh_orbit(obtain_fiducial(d, o, err).fiducial);
    case Scheme::Mub:
        return mub_povm(mub_prime(d));
    case Scheme::Clifford:
        return clifford_povm(obtain_group(d, o, err));
    }
    throw UsageError("unsupported scheme");
}

void write_artifact(const Options &o, const Json &j) {
    if (o.out_path.empty()) {
        return;
    }
    try {
        write_json_file(o.out_path, j);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Up to 10 significant digits, for tables meant to be read.
std::string plain(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

void print_report(std::ostream &out, const VerificationReport &r) {
    out << "verify " << scheme_name(r.scheme()) << " d=" << r.d() << ": " << (r.overall() ? "PASS" : "FAIL") << '\n';
    std::size_t width = 5;
    for (const auto &c : r.checks()) {
        width = std::max(width, c.name.size());
    }
    auto pad = [&](const std::string &s) { return s + std::string(width + 2 - s.size(), ' '); };
    out << "  " << pad("check") << "measured     tolerance    result\n";
    for (const auto &c : r.checks()) {
        out << "  " << pad(c.name) << sci(c.measured) << "    " << sci(c.tolerance) << "    "
            << (c.pass ? "pass" : "FAIL") << '\n';
    }
    for (const auto &[k, v] : r.metadata()) {
        out << "  " << k << ": " << v << '\n';
    }
}

int cmd_gen(const Options &o, std::ostream &out, std::ostream &err) {
    const Scheme s = scheme_of(o);
    require_supported(s, o.d);
    RankOnePovm m = build_povm(s, o.d, o, err);
    Json j = povm_to_json(m, s);
    if (o.out_path.empty()) {
        out << j.dump(o.json ? -1 : 2) << '\n';
    } else {
        write_artifact(o, j);
        out << "wrote " << m.size() << "-element " << scheme_name(s) << " POVM (d=" << o.d << ") to " << o.out_path
            << '\n';
    }
    return kExitPass;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    const Scheme s = scheme_of(o);
    require_supported(s, o.d);
    VerificationReport report(s, o.d);
    switch (s) {
    case Scheme::Sic: {
        FiducialSource src = obtain_fiducial(o.d, o, err);
        const double tol = o.tol.value_or(src.origin == "analytic" ? kAnalyticSicTol : kSearchedIdentityTol);
        report = verify_sic_identity(src.fiducial, tol);
        report.set_metadata("fiducial_source", src.origin);
        if (src.origin != "analytic") {
            report.set_metadata("seed", std::to_string(o.seed));
        }
        break;
    }
    case Scheme::Mub:
        report = verify_mub_identity(o.d, o.tol.value_or(kIdentityTol));
        break;
    case Scheme::Clifford:
        report = verify_theorem1(obtain_group(o.d, o, err), o.tol.value_or(theorem1_tolerance(o.d)));
        break;
    }
    report.set_metadata("version", ENTVERIFY_VERSION);
    report.set_metadata("created", utc_timestamp());

    Json j = report_to_json(report);
    write_artifact(o, j);
    if (o.json) {
        out << j.dump(2) << '\n';
    } else {
        print_report(out, report);
    }
    return report.overall() ? kExitPass : kExitFailure;
}

int cmd_simulate(const Options &o, std::ostream &out, std::ostream &err) {
    const Scheme s = scheme_of(o);
    require_supported(s, o.d);
    RankOnePovm m = build_povm(s, o.d, o, err);
    BipartiteState state = m.parties() == PartyStructure::Double ? product_isotropic_state(o.d, o.fidelity, o.fidelity)
                                                                 : isotropic_state(o.d, o.fidelity);
    ProtocolTranscript t = run_protocol(m, state, o.shots, o.seed);
    Json j = transcript_to_json(t, s, o.d, o.fidelity);
    write_artifact(o, j);
    if (o.json) {
        out << j.dump(2) << '\n';
    } else {
        out << "simulate " << scheme_name(s) << " d=" << o.d << " F=" << plain(o.fidelity)
            << " shots=" << o.shots << " seed=" << o.seed << '\n';
        out << "  estimate   " << plain(t.estimate) << " +/- " << sci(t.standard_error()) << '\n';
        out << "  analytic   " << plain(t.analytic) << '\n';
        out << "  two-step   " << plain(t.two_step) << '\n';
        out << "  accepted   " << t.accept_count << " / " << t.shots << '\n';
        out << "  within 3 sigma: " << (t.within_three_sigma() ? "yes" : "no") << '\n';
    }
    return t.within_three_sigma() ? kExitPass : kExitFailure;
}

int cmd_count(const Options &o, std::ostream &out, std::ostream &err) {
    const int d = o.d;
    const auto nus = nu_values(d);
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "count";
    j["d"] = d;
    j["nu_values"] = nus;
    j["formula_value"] = clifford_cardinality(d);
    if (is_prime(d)) {
        j["prime_formula_value"] = clifford_cardinality_prime(d);
    }
    std::optional<std::size_t> enumerated;
    if (d == 2 || d == 3 || d == 5) {
        enumerated = obtain_group(d, o, err).size();
        j["enumerated"] = *enumerated;
    } else {
        j["enumerated"] = nullptr;
    }
    write_artifact(o, j);
    if (o.json) {
        out << j.dump(2) << '\n';
    } else {
        out << "d = " << d << '\n';
        out << "  nu(n, " << d << "), n = 0.." << d - 1 << ":";
        for (auto v : nus) {
            out << ' ' << v;
        }
        out << '\n';
        out << "  nu-sum formula:   " << j["formula_value"].get<std::uint64_t>() << '\n';
        if (j.contains("prime_formula_value")) {
            out << "  d^3 (d^2 - 1):    " << j["prime_formula_value"].get<std::uint64_t>() << '\n';
        }
        out << "  enumerated:       " << (enumerated ? std::to_string(*enumerated) : "n/a") << '\n';
    }
    const bool agree = !enumerated || *enumerated == j["formula_value"].get<std::uint64_t>();
    return agree ? kExitPass : kExitFailure;
}

void add_output_flags(CLI::App *sub, Options &o) {
    sub->add_flag("--json", o.json, "Print JSON instead of a table");
    sub->add_option("--out", o.out_path, "Also write the JSON document to this file");
}

void add_cache_flags(CLI::App *sub, Options &o) {
    sub->add_option("--seed", o.seed, "Seed for the fiducial search or the simulation");
    sub->add_option("--restarts", o.restarts, "Fiducial search restarts")->check(CLI::Range(1, 100000));
    sub->add_flag("--no-cache", o.no_cache, "Ignore and do not update the on-disk caches");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Verification of maximally entangled states with SIC, MUB and Clifford one-way LOCC tests",
                 "entverify"};
    app.set_version_flag("--version", ENTVERIFY_VERSION);
    app.require_subcommand(1);
    const auto schemes = CLI::IsMember({"sic", "mub", "clifford"});

    auto *gen = app.add_subcommand("gen", "Generate a POVM and print it as JSON");
    gen->add_option("scheme", o.scheme, "sic, mub or clifford")->required()->check(schemes);
    gen->add_option("--d", o.d, "Local dimension")->required();
    add_output_flags(gen, o);
    add_cache_flags(gen, o);

    auto *verify = app.add_subcommand("verify", "Check the scheme's test-operator identity");
    verify->add_option("scheme", o.scheme, "sic, mub or clifford")->required()->check(schemes);
    verify->add_option("--d", o.d, "Local dimension")->required();
    verify->add_option("--tol", o.tol, "Override the tolerance")->check(CLI::PositiveNumber);
    add_output_flags(verify, o);
    add_cache_flags(verify, o);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo run of the one-way protocol on an isotropic state");
    simulate->add_option("--scheme", o.scheme, "sic, mub or clifford")->required()->check(schemes);
    simulate->add_option("--d", o.d, "Local dimension")->required();
    simulate->add_option("--fidelity", o.fidelity, "Isotropic fidelity F in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--shots", o.shots, "Number of shots")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    add_output_flags(simulate, o);
    add_cache_flags(simulate, o);

    auto *count = app.add_subcommand("count", "Clifford group cardinality |C(d)/I(d)|");
    count->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1000));
    count->add_flag("--no-cache", o.no_cache, "Ignore and do not update the on-disk caches");
    add_output_flags(count, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gen) {
            return cmd_gen(o, out, err);
        }
        if (*verify) {
            return cmd_verify(o, out, err);
        }
        if (*simulate) {
            return cmd_simulate(o, out, err);
        }
        return cmd_count(o, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchFailed &e) {
        err << "error: " << e.what() << '\n';
        return kExitSearchFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace entverify::cli
