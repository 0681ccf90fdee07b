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

#include "entverify/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entverify/rng.hpp"

namespace entverify {

namespace {

std::size_t party_dim(int d, PartyStructure parties) {
    auto ud = static_cast<std::size_t>(d);
    return parties == PartyStructure::Single ? ud : ud * ud;
}

}  // namespace

BipartiteState::BipartiteState(int d, DenseOperator rho, PartyStructure parties)
    : d_(d), rho_(std::move(rho)), parties_(parties) {
    if (d < 2) {
        throw Error("local dimension must be at least 2");
    }
    auto side = party_dim(d, parties);
    if (rho_.dim() != side * side) {
        throw DimensionMismatch("state dimension does not match its party structure");
    }
    require_density_operator(rho_.matrix());
}

BipartiteState isotropic_state(int d, double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw Error("fidelity must lie in [0, 1]");
    }
    if (d < 2) {
        throw Error("local dimension must be at least 2");
    }
    Matrix p = max_entangled(d).projector();
    const auto n = p.rows();
    Matrix rho = fidelity * p + (1.0 - fidelity) / static_cast<double>(d * d - 1) * (Matrix::Identity(n, n) - p);
    return BipartiteState(d, DenseOperator(std::move(rho)));
}

BipartiteState product_isotropic_state(int d, double fidelity1, double fidelity2) {
    auto a = isotropic_state(d, fidelity1);
    auto b = isotropic_state(d, fidelity2);
    const auto ud = static_cast<std::size_t>(d);
    const std::size_t dims[4] = {ud, ud, ud, ud};
    Matrix rho = permute_subsystems(tensor_product(a.matrix(), b.matrix()), dims, kPairedToCanonical);
    return BipartiteState(d, DenseOperator(std::move(rho)), PartyStructure::Double);
}

double analytic_acceptance(const TestOperator &t, const BipartiteState &s) {
    if (t.parties() != s.parties() || t.local_dim() != static_cast<std::size_t>(s.d())) {
        throw DimensionMismatch("test operator and state have different party structures");
    }
    return acceptance_probability(t, s.matrix());
}

AliasTable::AliasTable(std::span<const double> weights) : prob_(weights.size(), 0.0), alias_(weights.size(), 0) {
    const std::size_t n = weights.size();
    if (n == 0) {
        throw Error("alias table needs at least one weight");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw Error("alias table weights must be non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw Error("alias table weights sum to zero");
    }
    std::vector<double> scaled(n);
    std::vector<std::size_t> small;
    std::vector<std::size_t> large;
    for (std::size_t k = 0; k < n; ++k) {
        scaled[k] = weights[k] * static_cast<double>(n) / total;
        (scaled[k] < 1.0 ? small : large).push_back(k);
    }
    while (!small.empty() && !large.empty()) {
        std::size_t s = small.back();
        small.pop_back();
        std::size_t l = large.back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers are 1 up to rounding.
    const auto fallback = static_cast<std::size_t>(std::max_element(weights.begin(), weights.end()) - weights.begin());
    for (std::size_t k : large) {
        prob_[k] = 1.0;
        alias_[k] = k;
    }
    for (std::size_t k : small) {
        prob_[k] = weights[k] > 0.0 ? 1.0 : 0.0;
        alias_[k] = weights[k] > 0.0 ? k : fallback;
    }
}

std::size_t AliasTable::sample(double column_u, double coin_u) const {
    auto column = std::min(static_cast<std::size_t>(column_u * static_cast<double>(prob_.size())), prob_.size() - 1);
    return coin_u < prob_[column] ? column : alias_[column];
}

OutcomeModel outcome_model(const RankOnePovm &m, const BipartiteState &s) {
    const auto dim = static_cast<Eigen::Index>(m.dim());
    if (static_cast<Eigen::Index>(s.rho().dim()) != dim * dim) {
        throw DimensionMismatch("state dimension must be the square of the POVM dimension");
    }
    const Matrix &rho = s.matrix();
    OutcomeModel model;
    double total = 0.0;
    for (const auto &e : m.elements()) {
        const Vector &u = e.vector.amplitudes();
        // Bob's unnormalized conditional state: p (<u| (x) I) rho (|u> (x) I).
        Matrix sigma = Matrix::Zero(dim, dim);
        for (Eigen::Index a = 0; a < dim; ++a) {
            for (Eigen::Index a2 = 0; a2 < dim; ++a2) {
                Complex c = std::conj(u(a)) * u(a2);
                if (c == Complex(0.0)) {
                    continue;
                }
                sigma.noalias() += c * rho.block(a * dim, a2 * dim, dim, dim);
            }
        }
        sigma *= e.weight;
        double q = sigma.trace().real();
        total += q;
        double accept = 0.0;
        if (q >= kNegligibleOutcome) {
            Vector ubar = u.conjugate();
            accept = std::clamp(ubar.dot(sigma * ubar).real() / q, 0.0, 1.0);
        }
        model.alice_probability.push_back(std::max(q, 0.0));
        model.bob_accept.push_back(accept);
        model.two_step_acceptance += std::max(q, 0.0) * accept;
    }
    if (std::abs(total - 1.0) > kMarginalTol) {
        std::ostringstream os;
        os << "Alice's outcome probabilities sum to " << total << ", not 1";
        throw Error(os.str());
    }
    return model;
}

double ProtocolTranscript::standard_error() const {
    if (shots == 0) {
        return 0.0;
    }
    double p = std::clamp(analytic, 0.0, 1.0);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

bool ProtocolTranscript::within_three_sigma() const {
    return std::abs(estimate - analytic) <= 3.0 * standard_error() + 1e-9;
}

ProtocolTranscript run_protocol(const RankOnePovm &m, const BipartiteState &s, std::uint64_t shots,
                                std::uint64_t seed) {
    if (shots < 1) {
        throw Error("shots must be at least 1");
    }
    OutcomeModel model = outcome_model(m, s);
    std::vector<double> sampling = model.alice_probability;
    for (double &q : sampling) {
        if (q < kNegligibleOutcome) {
            q = 0.0;
        }
    }
    AliasTable table(sampling);
    const CounterRng rng(seed);

    ProtocolTranscript tr;
    tr.shots = shots;
    tr.seed = seed;
    tr.alice_outcome_counts.assign(m.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const std::uint64_t base = 3 * shot;
        std::size_t i = table.sample(rng.uniform(base), rng.uniform(base + 1));
        ++tr.alice_outcome_counts[i];
        if (rng.uniform(base + 2) < model.bob_accept[i]) {
            ++tr.accept_count;
        }
    }
    tr.estimate = static_cast<double>(tr.accept_count) / static_cast<double>(shots);
    tr.two_step = model.two_step_acceptance;
    tr.analytic = acceptance_probability(t_of_povm(m), s.matrix());
    return tr;
}

std::vector<SweepRow> sweep_fidelity(const RankOnePovm &m, int d, std::span<const double> grid,
                                     std::uint64_t shots, std::uint64_t seed) {
    const CounterRng root(seed);
    std::vector<SweepRow> rows;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double f = grid[k];
        BipartiteState state = m.parties() == PartyStructure::Double ? product_isotropic_state(d, f, f)
                                                                     : isotropic_state(d, f);
        auto tr = run_protocol(m, state, shots, root.bits(k));
        rows.push_back({f, tr.analytic, tr.estimate, tr.standard_error()});
    }
    return rows;
}

}  // namespace entverify
