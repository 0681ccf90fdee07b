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

#include "entverify/clifford.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "entverify/weyl.hpp"
#include "test_util.hpp"

using namespace entverify;
using entverify::testing::oracle_nu;
using entverify::testing::random_unitary;

namespace {

// Is a proportional to b (|a| = |b| entrywise up to one global phase)?
bool proportional(const Matrix &a, const Matrix &b, double tol) {
    Complex ip = b.cwiseProduct(a.conjugate()).sum();  // <a, b>
    double na = a.norm(), nb = b.norm();
    return std::abs(std::abs(ip) - na * nb) <= tol * na * nb;
}

const CliffordGroup &group(int d) {
    static const CliffordGroup g2 = enumerate_clifford(2);
    static const CliffordGroup g3 = enumerate_clifford(3);
    return d == 2 ? g2 : g3;
}

}  // namespace

TEST(weyl, d2_matrices) {
    Matrix z(2, 2), x(2, 2), xz(2, 2);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    xz << 0, -1, 1, 0;
    EXPECT_LT((weyl(2, {0, 1}) - z).norm(), 1e-15);
    EXPECT_LT((weyl(2, {1, 0}) - x).norm(), 1e-15);
    EXPECT_LT((weyl(2, {1, 1}) - xz).norm(), 1e-15);
    EXPECT_THROW(weyl(2, {2, 0}), Error);
}

TEST(weyl, apply_matches_matrix) {
    Vector v = entverify::testing::random_vector(5, 3);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            EXPECT_LT((apply_weyl(5, {i, j}, v) - weyl(5, {i, j}) * v).norm(), 1e-13);
        }
    }
}

TEST(weyl, commutation_relation) {
    // Z X = w X Z.
    for (int d : {2, 3, 5}) {
        Matrix x = shift_operator(d), z = clock_operator(d);
        EXPECT_LT((z * x - root_of_unity(d, 1) * x * z).norm(), 1e-13);
    }
    EXPECT_EQ(WeylIndex::reduced(-1, 7, 3), (WeylIndex{2, 1}));
}

TEST(nu, small_values) {
    EXPECT_EQ(nu(0, 2), 3u);
    EXPECT_EQ(nu(1, 2), 1u);
    for (int d : {3, 5, 7}) {
        EXPECT_EQ(nu(0, d), static_cast<std::uint64_t>(2 * d - 1));
    }
    std::vector<std::uint64_t> want4{8, 2, 4, 2};
    EXPECT_EQ(nu_values(4), want4);
}

TEST(nu, agrees_with_brute_force_oracle) {
    for (int d = 2; d <= 12; ++d) {
        auto v = nu_values(d);
        ASSERT_EQ(v.size(), static_cast<std::size_t>(d));
        std::uint64_t total = 0;
        for (int n = 0; n < d; ++n) {
            EXPECT_EQ(v[static_cast<std::size_t>(n)], oracle_nu(n, d)) << "n=" << n << " d=" << d;
            total += v[static_cast<std::size_t>(n)];
        }
        EXPECT_EQ(total, static_cast<std::uint64_t>(d * d));
    }
}

TEST(cardinality, formula_values) {
    EXPECT_EQ(clifford_cardinality(2), 24u);
    EXPECT_EQ(clifford_cardinality(3), 216u);
    EXPECT_EQ(clifford_cardinality(5), 3000u);
    EXPECT_EQ(clifford_cardinality(4), 768u);
    for (int d : {2, 3, 5, 7, 11, 13}) {
        EXPECT_EQ(clifford_cardinality(d), clifford_cardinality_prime(d));
        EXPECT_EQ(clifford_cardinality_prime(d), static_cast<std::uint64_t>(d) * d * d * (d * d - 1));
    }
}

TEST(generators, d2_conjugation_action) {
    auto gens = clifford_generators(2);
    ASSERT_EQ(gens.size(), 4u);
    const Matrix &f = gens[2];
    const Matrix &s = gens[3];
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    EXPECT_LT((f - h).norm(), 1e-15);
    EXPECT_TRUE(proportional(f * weyl(2, {1, 0}) * f.adjoint(), weyl(2, {0, 1}), 1e-12));
    Matrix sd = Matrix::Zero(2, 2);
    sd(0, 0) = 1;
    sd(1, 1) = Complex(0, 1);
    EXPECT_LT((s - sd).norm(), 1e-15);
    EXPECT_TRUE(proportional(s * weyl(2, {1, 0}) * s.adjoint(), weyl(2, {1, 1}), 1e-12));
}

TEST(generators, normalize_weyl_group) {
    for (int d : {2, 3, 5, 7}) {
        for (const auto &g : clifford_generators(d)) {
            EXPECT_TRUE(normalizes_weyl_group(g)) << "d=" << d;
        }
    }
    EXPECT_THROW(clifford_generators(4), Error);
}

TEST(generators, d3_fourier_exhaustive) {
    const Matrix f = clifford_generators(3)[2];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            auto img = conjugated_weyl(f, {i, j});
            ASSERT_TRUE(img.has_value()) << i << "," << j;
            EXPECT_TRUE(proportional(f * weyl(3, {i, j}) * f.adjoint(), weyl(3, img->first), 1e-12));
            EXPECT_NEAR(std::abs(img->second), 1.0, 1e-12);
        }
    }
}

TEST(normalizer, random_unitary_is_rejected) {
    EXPECT_FALSE(normalizes_weyl_group(random_unitary(3, 8)));
    EXPECT_FALSE(conjugated_weyl(random_unitary(2, 9), {1, 0}).has_value());
}

TEST(phaseless, canonicalization_removes_global_phase) {
    Matrix u = random_unitary(3, 21);
    auto a = PhaselessUnitary::canonicalize(u);
    auto b = PhaselessUnitary::canonicalize(Matrix(std::polar(1.0, 2.3) * u));
    EXPECT_EQ(a.key(), b.key());
    EXPECT_LT((a.matrix() - b.matrix()).norm(), 1e-12);
    EXPECT_THROW(PhaselessUnitary::canonicalize(Matrix(2.0 * u)), Error);

    auto g = PhaselessGroup::from_matrices(3, {u, Matrix(Complex(0, 1) * u), Matrix(Matrix::Identity(3, 3))});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.contains(Matrix(-u)));
    EXPECT_FALSE(g.insert(Matrix(std::polar(1.0, 0.7) * u)));
}

TEST(enumerate, sizes) {
    EXPECT_EQ(group(2).size(), 24u);
    EXPECT_EQ(group(3).size(), 216u);
    EXPECT_THROW(enumerate_clifford(3, 100), Error);
}

TEST(enumerate, d5_size) {
    EXPECT_EQ(enumerate_clifford(5).size(), 3000u);
}

TEST(enumerate, every_element_normalizes) {
    for (int d : {2, 3}) {
        for (const auto &u : group(d).elements()) {
            auto img = conjugated_weyl(u.matrix(), {1, 0});
            EXPECT_TRUE(img.has_value());
            EXPECT_TRUE(normalizes_weyl_group(u.matrix()));
        }
    }
}

TEST(enumerate, closed_under_multiplication) {
    for (int d : {2, 3}) {
        const auto &g = group(d);
        CounterRng rng(1000 + static_cast<std::uint64_t>(d));
        for (std::uint64_t t = 0; t < 200; ++t) {
            std::size_t a = rng.bits(2 * t) % g.size();
            std::size_t b = rng.bits(2 * t + 1) % g.size();
            EXPECT_TRUE(g.contains(g[a].matrix() * g[b].matrix())) << "d=" << d << " trial " << t;
        }
    }
}

TEST(enumerate, contains_weyl_subgroup) {
    auto w = weyl_subgroup(3);
    EXPECT_EQ(w.size(), 9u);
    for (const auto &u : w.elements()) {
        EXPECT_TRUE(group(3).contains(u.matrix()));
    }
}

TEST(clifford_povm, weights_norms_completeness) {
    for (int d : {2, 3}) {
        RankOnePovm m = clifford_povm(group(d));
        EXPECT_EQ(m.size(), group(d).size());
        EXPECT_EQ(m.parties(), PartyStructure::Double);
        EXPECT_EQ(m.local_dim(), static_cast<std::size_t>(d));
        const double want = static_cast<double>(d * d) / static_cast<double>(group(d).size());
        for (const auto &e : m.elements()) {
            EXPECT_NEAR(e.weight, want, 1e-15);
            EXPECT_NEAR(e.vector.amplitudes().norm(), 1.0, 1e-14);
        }
        EXPECT_LT(m.completeness_defect(), 1e-10);
    }
    EXPECT_NEAR(clifford_povm(group(2)).elements()[0].weight, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(clifford_povm(group(3)).elements()[0].weight, 1.0 / 24.0, 1e-15);
}

TEST(characters, clifford_group) {
    for (int d : {2, 3}) {
        CharacterSums c = irreducibility_check(group(d));
        EXPECT_NEAR(c.c1, 1.0, 1e-8) << "d=" << d;
        EXPECT_NEAR(c.c2, 2.0, 1e-8) << "d=" << d;
    }
}

TEST(characters, weyl_subgroup_fails_second_condition) {
    for (int d : {2, 3, 5}) {
        CharacterSums c = irreducibility_check(weyl_subgroup(d));
        EXPECT_NEAR(c.c1, 1.0, 1e-10);
        EXPECT_NEAR(c.c2, d * d, 1e-9);
    }
}

TEST(theorem1, t_equals_t_inv2) {
    auto t2 = t_of_povm(clifford_povm(group(2)));
    EXPECT_LT(frobenius_distance(t2.matrix(), t_inv2(2).matrix()), 1e-10);
    EXPECT_NEAR(t2.op().trace().real(), 4.0, 1e-9);
    auto t3 = t_of_povm(clifford_povm(group(3)));
    EXPECT_LT(frobenius_distance(t3.matrix(), t_inv2(3).matrix()), 1e-9);
    EXPECT_NEAR(t3.op().trace().real(), 9.0, 1e-9);
}

TEST(theorem1, report_checks) {
    VerificationReport r = verify_theorem1(2);
    EXPECT_TRUE(r.overall());
    for (const char *name : {"completeness", "c1", "c2", "t2_identity", "trace", "cardinality"}) {
        ASSERT_NE(r.find(name), nullptr) << name;
        EXPECT_TRUE(r.find(name)->pass) << name;
    }
    EXPECT_TRUE(verify_theorem1(3).overall());
    EXPECT_EQ(theorem1_tolerance(2), 1e-10);
    EXPECT_EQ(theorem1_tolerance(3), 1e-9);
}

TEST(theorem1, weyl_subgroup_negative_control) {
    for (int d : {2, 3}) {
        auto w = weyl_subgroup(d);
        auto t = t_of_povm(clifford_povm(w));
        EXPECT_GT(frobenius_distance(t.matrix(), t_inv2(d).matrix()), 0.1);
        VerificationReport r = verify_theorem1(w, theorem1_tolerance(d));
        EXPECT_FALSE(r.overall());
        EXPECT_FALSE(r.find("c2")->pass);
    }
}

TEST(gxg, invariance_of_t_inv2) {
    EXPECT_LT(gxg_invariance_defect(group(2), t_of_povm(clifford_povm(group(2))).matrix(), 20, 5), 1e-9);
    EXPECT_LT(gxg_invariance_defect(group(3), t_inv2(3).matrix(), 20, 6), 1e-9);
}

TEST(gxg, detects_non_invariant_operator) {
    Matrix t = Matrix::Zero(16, 16);
    t(1, 1) = 1.0;
    EXPECT_GT(gxg_invariance_defect(group(2), t, 20, 5), 0.1);
}
