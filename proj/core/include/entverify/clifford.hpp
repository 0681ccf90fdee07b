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
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entverify/linalg.hpp"
#include "entverify/report.hpp"
#include "entverify/test_operators.hpp"
#include "entverify/weyl.hpp"

namespace entverify {

/// Grid used to quantize entries of canonicalized unitaries for hashing.
inline constexpr double kPhaseHashGrid = 1e-6;
/// Tolerance for unitarity and normalizer checks.
inline constexpr double kGroupTol = 1e-10;
/// Default bound on the number of enumerated elements.
inline constexpr std::size_t kDefaultSizeCap = 10000;

/// Quantized entries of a canonicalized unitary, with a precomputed digest.
struct PhaseKey {
    std::vector<std::int64_t> grid;
    std::uint64_t digest = 0;

    friend bool operator==(const PhaseKey &a, const PhaseKey &b) { return a.grid == b.grid; }
};

struct PhaseKeyHash {
    std::size_t operator()(const PhaseKey &k) const { return static_cast<std::size_t>(k.digest); }
};

/// Representative of U I(d): the unitary rescaled so that its largest-magnitude entry
/// (lowest row-major index on ties) is real positive.
class PhaselessUnitary {
  public:
    /// Throws unless u is unitary within kGroupTol.
    static PhaselessUnitary canonicalize(const Matrix &u);

    const Matrix &matrix() const { return m_; }
    const PhaseKey &key() const { return key_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  private:
    PhaselessUnitary(Matrix m, PhaseKey key) : m_(std::move(m)), key_(std::move(key)) {}
    Matrix m_;
    PhaseKey key_;
};

/// Finite set of phase classes of d x d unitaries, indexed for membership lookup.
class PhaselessGroup {
  public:
    /// Canonicalizes and deduplicates `matrices`. Does not check closure.
    static PhaselessGroup from_matrices(int d, const std::vector<Matrix> &matrices);

    int d() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<PhaselessUnitary> &elements() const { return elements_; }
    const PhaselessUnitary &operator[](std::size_t k) const { return elements_[k]; }

    /// Index of the phase class of u, if present.
    std::optional<std::size_t> find(const Matrix &u) const;
    bool contains(const Matrix &u) const { return find(u).has_value(); }

    /// Adds the class of u; returns false if it was already present.
    bool insert(const Matrix &u);

  private:
    explicit PhaselessGroup(int d) : d_(d) {}

    int d_;
    std::vector<PhaselessUnitary> elements_;
    std::unordered_map<PhaseKey, std::size_t, PhaseKeyHash> index_;
};

using CliffordGroup = PhaselessGroup;

/// Number of ordered pairs (x, y) in Z_d^2 with x y = n (mod d), by enumeration.
std::uint64_t nu(int n, int d);
/// (nu(0,d), ..., nu(d-1,d)).
std::vector<std::uint64_t> nu_values(int d);

/// d^2 sum_n nu(n,d) nu(n+1 mod d, d). For prime d, also checks agreement with d^3 (d^2 - 1)
/// and throws Error on disagreement.
std::uint64_t clifford_cardinality(int d);
/// d^3 (d^2 - 1), valid for prime d.
std::uint64_t clifford_cardinality_prime(int d);

/// If u W u^dag = c W(i', j') for some phase c, returns ((i', j'), c).
std::optional<std::pair<WeylIndex, Complex>> conjugated_weyl(const Matrix &u, WeylIndex idx, double tol = kGroupTol);
/// True iff u maps every W(i, j) to a phase times some W(i', j').
bool normalizes_weyl_group(const Matrix &u, double tol = kGroupTol);

/// {X, Z, F, S}: Fourier F_jk = w^{jk}/sqrt(d); S = diag(1, i) for d = 2 and
/// diag(w^{k (k+1) 2^{-1} mod d}) for odd prime d. Throws unless d is prime.
std::vector<Matrix> clifford_generators(int d);

/// Breadth-first closure of the generators under multiplication, modulo phases.
/// Throws if the size exceeds `size_cap` or differs from clifford_cardinality(d).
CliffordGroup enumerate_clifford(int d, std::size_t size_cap = kDefaultSizeCap);

/// The d^2 phase classes of W(i, j).
PhaselessGroup weyl_subgroup(int d);

/// {(d^2/|G|) |f(g)/sqrt d><f(g)/sqrt d|} on A1 A2, two-subsystem structure.
RankOnePovm clifford_povm(const PhaselessGroup &g);

struct CharacterSums {
    double c1 = 0.0;  // (1/|G|) sum |Tr f(g)|^2; equals 1 iff f is irreducible
    double c2 = 0.0;  // (1/|G|) sum |Tr f(g)|^4; equals 2 iff f (x) conj(f) has two components
};

CharacterSums irreducibility_check(const PhaselessGroup &g);

/// Tolerance used by verify_theorem1 for the T-identity at dimension d.
double theorem1_tolerance(int d);

/// Completeness of M_f, character sums, T(M_f) = T_inv2, Tr T(M_f) = d^2, and |G| against the
/// cardinality formula.
VerificationReport verify_theorem1(const PhaselessGroup &g, double tol);
/// Enumerates the Clifford group for d and runs the check at theorem1_tolerance(d).
VerificationReport verify_theorem1(int d);

/// max over `trials` random (g1, g2) of ||V T V^dag - T||_F with
/// V = f(g1) (x) conj(f(g2)) (x) conj(f(g1)) (x) f(g2) in order A1 A2 B1 B2.
double gxg_invariance_defect(const PhaselessGroup &g, const Matrix &t, int trials, std::uint64_t seed);

}  // namespace entverify
