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

#include <cstddef>
#include <span>
#include <vector>

#include "entverify/linalg.hpp"

namespace entverify {

/// Completeness tolerance (max-entry norm) for rank-one POVMs.
inline constexpr double kCompletenessTol = 1e-10;

/// How the local Hilbert space of each party is factored.
///   Single: A, B each of dimension d.
///   Double: A = A1 A2, B = B1 B2, each factor of dimension d; canonical order A1 A2 B1 B2.
enum class PartyStructure { Single, Double };

class IncompletePovm : public Error {
  public:
    explicit IncompletePovm(double defect);
    double defect() const { return defect_; }

  private:
    double defect_;
};

struct PovmElement {
    double weight;
    Ket vector;
};

/// Discrete measurement {p_i |u_i><u_i|} on C^dim.
class RankOnePovm {
  public:
    /// Validates weights in [0,1], matching dimensions, and completeness within kCompletenessTol.
    /// Throws IncompletePovm (carrying the defect) if the elements do not resolve the identity.
    explicit RankOnePovm(std::vector<PovmElement> elements, PartyStructure parties = PartyStructure::Single);

    /// Skips the completeness check (weights and dimensions are still validated).
    static RankOnePovm unchecked(std::vector<PovmElement> elements, PartyStructure parties = PartyStructure::Single);

    std::size_t dim() const { return dim_; }
    /// d for Single, sqrt(dim) for Double.
    std::size_t local_dim() const;
    PartyStructure parties() const { return parties_; }
    const std::vector<PovmElement> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// sum_i p_i |u_i><u_i|.
    Matrix resolution() const;
    /// max |sum_i p_i |u_i><u_i| - I|.
    double completeness_defect() const;

  private:
    RankOnePovm(std::vector<PovmElement> elements, PartyStructure parties, bool check);

    std::vector<PovmElement> elements_;
    std::size_t dim_ = 0;
    PartyStructure parties_;
};

/// Hermitian operator 0 <= T <= I on the two-party space, tagged with its factorization.
class TestOperator {
  public:
    /// Throws unless `op` is Hermitian with spectrum in [0, 1] (within kIdentityTol) and its
    /// dimension matches `local_dim` and `parties`.
    TestOperator(DenseOperator op, std::size_t local_dim, PartyStructure parties);

    const DenseOperator &op() const { return op_; }
    const Matrix &matrix() const { return op_.matrix(); }
    std::size_t local_dim() const { return local_dim_; }
    PartyStructure parties() const { return parties_; }
    std::size_t dim() const { return op_.dim(); }

  private:
    DenseOperator op_;
    std::size_t local_dim_;
    PartyStructure parties_;
};

/// (1/sqrt d) sum_i |i>|i>.
Ket max_entangled(int d);

/// |phi0><phi0| + (I - |phi0><phi0|)/(d+1) on C^d (x) C^d.
TestOperator t_inv1(int d);

/// P (x) P + (I-P) (x) (I-P)/(d^2-1) with P the projector on phi0 of (A1,B1) and of (A2,B2),
/// returned in canonical factor order A1 A2 B1 B2.
TestOperator t_inv2(int d);

/// T(M) = sum_i p_i |u_i (x) conj(u_i)><u_i (x) conj(u_i)|.
/// Throws IncompletePovm unless the POVM resolves the identity.
TestOperator t_of_povm(const RankOnePovm &m);
/// Same sum without the completeness requirement.
Matrix t_of_povm_unchecked(const RankOnePovm &m);

/// Reorders tensor factors: output factor k is input factor perm[k].
/// `dims` lists the input factor dimensions; their product must equal a.dim().
Matrix permute_subsystems(const Matrix &a, std::span<const std::size_t> dims, std::span<const std::size_t> perm);
DenseOperator permute_subsystems(const DenseOperator &a, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm);
/// Same reordering for a state vector.
Vector permute_subsystems(const Vector &v, std::span<const std::size_t> dims, std::span<const std::size_t> perm);

/// The inverse permutation.
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

/// Factor order (A1 B1 A2 B2) -> (A1 A2 B1 B2).
inline constexpr std::size_t kPairedToCanonical[4] = {0, 2, 1, 3};

/// Throws unless rho is Hermitian PSD with unit trace (within kIdentityTol).
void require_density_operator(const Matrix &rho);

/// Tr(T rho). Throws on dimension mismatch or if rho is not a density operator.
double acceptance_probability(const TestOperator &t, const Matrix &rho);

}  // namespace entverify
