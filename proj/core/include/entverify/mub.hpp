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

#include <vector>

#include "entverify/linalg.hpp"
#include "entverify/report.hpp"
#include "entverify/test_operators.hpp"

namespace entverify {

/// A list of orthonormal bases of C^d; bases[j][i] is the i-th vector of basis j.
/// A complete family for prime d has d+1 bases.
struct MubFamily {
    int d = 0;
    std::vector<std::vector<Ket>> bases;
};

/// Trial division.
bool is_prime(int n);

/// Computational basis plus d quadratic-phase bases w^{s k^2 + t k}/sqrt(d) (odd prime d),
/// or the Z, X, Y eigenbases (d = 2). Throws unless d is prime.
MubFamily mub_prime(int d);

/// Max deviation of within-basis Gram matrices from I ("orthonormality") and of cross-basis
/// squared overlaps from 1/d ("unbiasedness").
VerificationReport mub_check(const MubFamily &fam, double tol);

/// {1/(d+1) |u_ij><u_ij|}, basis-major. Throws if the family fails mub_check at kIdentityTol
/// or the result is not complete.
RankOnePovm mub_povm(const MubFamily &fam);

/// Projection of u (x) conj(u) onto the orthocomplement of the maximally entangled state.
Vector project_off_max_entangled(const Ket &u);

/// rank of span{P (u_ij (x) conj(u_ij))}_i for every basis j.
std::vector<std::size_t> projected_pvm_ranks(const MubFamily &fam);

/// Minimal number of PVMs whose uniform mixture M can satisfy T(M) = T_inv1:
/// ceil((d^2 - 1)/(d - 1)) = d + 1.
int pvm_count_bound(int d);

/// T(M_MUB) = T_inv1, cross-basis orthogonality of the projected subspaces, projected ranks d-1
/// per basis, and the PVM count matching pvm_count_bound.
VerificationReport verify_mub_identity(int d, double tol = kIdentityTol);

}  // namespace entverify
