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
#include <string>

#include "entverify/linalg.hpp"
#include "entverify/report.hpp"
#include "entverify/test_operators.hpp"

namespace entverify {

/// Tolerance for fiducials written down in closed form.
inline constexpr double kAnalyticSicTol = 1e-10;
/// Acceptance threshold on the max overlap deviation of a searched fiducial.
inline constexpr double kSearchAcceptTol = 1e-8;
/// Tolerance for identities built on top of a searched fiducial.
inline constexpr double kSearchedIdentityTol = 1e-7;

/// max over (i,j) != (0,0) of | |<psi|W(i,j)|psi>|^2 - 1/(d+1) |. psi need not be normalized.
double max_overlap_deviation(const Vector &psi);

/// sum over (i,j) != (0,0) of (|<psi|W(i,j)|psi>|^2 - 1/(d+1))^2, psi normalized internally.
double orbit_overlap_residual(const Vector &psi);

/// A unit vector whose Weyl-Heisenberg orbit is (approximately) a SIC.
struct Fiducial {
    int d = 0;
    Ket vector;
    double residual = 0.0;  // max_overlap_deviation(vector)

    /// Normalizes `v` and computes the residual.
    static Fiducial from_vector(Vector v);
};

struct SicCertificate {
    int d = 0;
    std::size_t n_elements = 0;
    double count_dev = 0.0;  // |n_elements - d^2|
    double max_weight_dev = 0.0;
    double max_overlap_dev = 0.0;
    double t_identity_dev = 0.0;  // ||T(M) - T_inv1||_F, NaN when T(M) cannot be formed
    double tolerance = 0.0;

    bool pass() const;
};

/// Step control for the descent phase of search_fiducial.
struct StepRule {
    double initial_step = 0.5;
    double shrink = 0.5;
    double armijo = 1e-4;
    double fd_step = 1e-7;
    int descent_iters = 200;  // gradient steps before Levenberg-Marquardt polishing
};

struct FiducialSearchConfig {
    std::uint64_t seed = 1;
    int restarts = 50;
    int max_iters = 400;
    double tol = kSearchAcceptTol;
    StepRule step_rule;
};

class SearchFailed : public Error {
  public:
    SearchFailed(int d, double best_residual);
    double best_residual() const { return best_residual_; }

  private:
    double best_residual_;
};

/// Closed-form fiducial for d = 2 or 3; throws for other d (use search_fiducial).
Fiducial known_fiducial(int d);

/// {(1/d, W(i,j)|f>)} over all (i, j), ordered i-major.
/// Throws IncompletePovm if the orbit fails to resolve the identity.
RankOnePovm wh_orbit(const Fiducial &f);

/// Construction-agnostic SIC certificate: element count d^2, weights 1/d, overlaps 1/(d+1).
SicCertificate sic_check(const RankOnePovm &m, double tol);

/// Multi-restart local minimization of orbit_overlap_residual from seeded random starts.
/// Returns the restart with the smallest max overlap deviation (lowest index on ties).
/// Throws SearchFailed if no restart reaches cfg.tol.
Fiducial search_fiducial(int d, const FiducialSearchConfig &cfg);

/// Checks T(M_sic) = T_inv1, linear independence of {u_i (x) conj(u_i)} (Gram rank d^2), and the
/// element-count lower bound n >= rank(T_inv1) with equality for a SIC.
VerificationReport verify_sic_identity(const Fiducial &f, double tol);

}  // namespace entverify
