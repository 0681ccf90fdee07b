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
#include <span>
#include <vector>

#include "entverify/linalg.hpp"
#include "entverify/test_operators.hpp"

namespace entverify {

/// Alice outcomes with probability below this are never sampled; Bob rejects in that branch.
inline constexpr double kNegligibleOutcome = 1e-15;
/// Allowed defect of sum_i q_i from 1.
inline constexpr double kMarginalTol = 1e-9;

/// Density operator on A (x) B, each party of dimension d (Single) or d^2 (Double, canonical
/// order A1 A2 B1 B2).
class BipartiteState {
  public:
    /// Throws unless rho is a density operator of the dimension implied by d and parties.
    BipartiteState(int d, DenseOperator rho, PartyStructure parties = PartyStructure::Single);

    int d() const { return d_; }
    const DenseOperator &rho() const { return rho_; }
    const Matrix &matrix() const { return rho_.matrix(); }
    PartyStructure parties() const { return parties_; }

  private:
    int d_;
    DenseOperator rho_;
    PartyStructure parties_;
};

/// F |phi0><phi0| + (1 - F)(I - |phi0><phi0|)/(d^2 - 1). Throws unless 0 <= F <= 1.
BipartiteState isotropic_state(int d, double fidelity);

/// Isotropic states on (A1 B1) and (A2 B2), reordered to A1 A2 B1 B2.
BipartiteState product_isotropic_state(int d, double fidelity1, double fidelity2);

/// Tr(T rho). Throws DimensionMismatch when the party structures or dimensions differ.
double analytic_acceptance(const TestOperator &t, const BipartiteState &s);

/// Walker alias table (Vose's construction) over non-negative weights.
class AliasTable {
  public:
    explicit AliasTable(std::span<const double> weights);
    /// Maps two uniforms in [0, 1) to an index.
    std::size_t sample(double column_u, double coin_u) const;
    std::size_t size() const { return prob_.size(); }

  private:
    std::vector<double> prob_;
    std::vector<std::size_t> alias_;
};

/// Per-outcome quantities of the two-step procedure.
struct OutcomeModel {
    std::vector<double> alice_probability;   // q_i = Tr((p_i |u_i><u_i| (x) I) rho)
    std::vector<double> bob_accept;          // <conj u_i| rho_B^(i) |conj u_i>, 0 when q_i is negligible
    double two_step_acceptance = 0.0;        // sum_i q_i bob_accept_i
};

/// Computes Alice's outcome distribution and Bob's conditional acceptance exactly.
/// Throws if sum_i q_i deviates from 1 by more than kMarginalTol.
OutcomeModel outcome_model(const RankOnePovm &m, const BipartiteState &s);

struct ProtocolTranscript {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> alice_outcome_counts;
    std::uint64_t accept_count = 0;
    double estimate = 0.0;
    double analytic = 0.0;  // Tr(T(M) rho)
    double two_step = 0.0;  // sum_i q_i Pr(accept | i)

    /// Binomial standard deviation of the estimate around `analytic`.
    double standard_error() const;
    /// |estimate - analytic| <= 3 sigma (plus 1e-9 slack for a degenerate sigma).
    bool within_three_sigma() const;
};

/// Shot-by-shot simulation: sample Alice's outcome i, then Bob's accept/reject with his
/// conditional acceptance probability. Deterministic given `seed`.
ProtocolTranscript run_protocol(const RankOnePovm &m, const BipartiteState &s, std::uint64_t shots,
                                std::uint64_t seed);

struct SweepRow {
    double fidelity;
    double analytic;
    double estimate;
    double standard_error;
};

/// run_protocol over isotropic inputs (product isotropic for two-subsystem POVMs).
std::vector<SweepRow> sweep_fidelity(const RankOnePovm &m, int d, std::span<const double> grid,
                                     std::uint64_t shots, std::uint64_t seed);

}  // namespace entverify
