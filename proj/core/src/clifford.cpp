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
#include <deque>
#include <numbers>
#include <sstream>

#include "entverify/mub.hpp"
#include "entverify/rng.hpp"

namespace entverify {

namespace {

PhaseKey quantize(const Matrix &m) {
    PhaseKey key;
    key.grid.reserve(static_cast<std::size_t>(2 * m.size()));
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            for (double part : {m(r, c).real(), m(r, c).imag()}) {
                auto q = static_cast<std::int64_t>(std::llround(part / kPhaseHashGrid));
                key.grid.push_back(q);
                h = splitmix64(h ^ static_cast<std::uint64_t>(q));
            }
        }
    }
    key.digest = h;
    return key;
}

}  // namespace

PhaselessUnitary PhaselessUnitary::canonicalize(const Matrix &u) {
    if (u.rows() != u.cols() || u.rows() == 0) {
        throw DimensionMismatch("unitary must be square and non-empty");
    }
    const auto n = u.rows();
    double defect = max_abs_difference(u.adjoint() * u, Matrix::Identity(n, n));
    if (!(defect <= kGroupTol)) {
        std::ostringstream os;
        os << "matrix is not unitary (max |U^dag U - I| = " << defect << ")";
        throw Error(os.str());
    }
    const double largest = u.cwiseAbs().maxCoeff();
    Complex pivot = 0.0;
    for (Eigen::Index r = 0; r < n && pivot == Complex(0.0); ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            if (std::abs(u(r, c)) >= largest - 1e-9) {
                pivot = u(r, c);
                break;
            }
        }
    }
    Matrix m = u * (std::conj(pivot) / std::abs(pivot));
    PhaseKey key = quantize(m);
    return PhaselessUnitary(std::move(m), std::move(key));
}

PhaselessGroup PhaselessGroup::from_matrices(int d, const std::vector<Matrix> &matrices) {
    PhaselessGroup g(d);
    for (const auto &m : matrices) {
        if (m.rows() != d) {
            throw DimensionMismatch("group element has the wrong dimension");
        }
        g.insert(m);
    }
    return g;
}

std::optional<std::size_t> PhaselessGroup::find(const Matrix &u) const {
    auto canon = PhaselessUnitary::canonicalize(u);
    auto it = index_.find(canon.key());
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool PhaselessGroup::insert(const Matrix &u) {
    auto canon = PhaselessUnitary::canonicalize(u);
    auto [it, inserted] = index_.try_emplace(canon.key(), elements_.size());
    if (inserted) {
        elements_.push_back(std::move(canon));
    }
    return inserted;
}

std::uint64_t nu(int n, int d) {
    if (d < 1 || n < 0 || n >= d) {
        throw Error("nu requires 0 <= n < d");
    }
    std::uint64_t count = 0;
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            if ((x * y) % d == n) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<std::uint64_t> nu_values(int d) {
    std::vector<std::uint64_t> v;
    for (int n = 0; n < d; ++n) {
        v.push_back(nu(n, d));
    }
    return v;
}

std::uint64_t clifford_cardinality_prime(int d) {
    auto ud = static_cast<std::uint64_t>(d);
    return ud * ud * ud * (ud * ud - 1);
}

std::uint64_t clifford_cardinality(int d) {
    if (d < 2) {
        throw Error("clifford_cardinality requires d >= 2");
    }
    auto values = nu_values(d);
    std::uint64_t sum = 0;
    for (int n = 0; n < d; ++n) {
        sum += values[static_cast<std::size_t>(n)] * values[static_cast<std::size_t>((n + 1) % d)];
    }
    auto ud = static_cast<std::uint64_t>(d);
    std::uint64_t total = ud * ud * sum;
    if (is_prime(d) && total != clifford_cardinality_prime(d)) {
        throw Error("cardinality formulas disagree at d=" + std::to_string(d));
    }
    return total;
}

std::optional<std::pair<WeylIndex, Complex>> conjugated_weyl(const Matrix &u, WeylIndex idx, double tol) {
    const int d = static_cast<int>(u.rows());
    Matrix v = u * weyl(d, idx) * u.adjoint();
    // W(i', j') has its column-0 entry 1 in row i', and entry w^{j'} at (i'+1, 1).
    Eigen::Index i_prime = 0;
    v.col(0).cwiseAbs().maxCoeff(&i_prime);
    Complex c = v(i_prime, 0);
    if (std::abs(std::abs(c) - 1.0) > 1e-6) {
        return std::nullopt;
    }
    int j_prime = 0;
    if (d > 1) {
        Complex ratio = v((i_prime + 1) % d, 1) / c;
        double turns = std::arg(ratio) / (2.0 * std::numbers::pi) * d;
        j_prime = static_cast<int>(((std::lround(turns) % d) + d) % d);
    }
    auto label = WeylIndex{static_cast<int>(i_prime), j_prime};
    if (max_abs_difference(v, c * weyl(d, label)) > tol) {
        return std::nullopt;
    }
    return std::make_pair(label, c);
}

bool normalizes_weyl_group(const Matrix &u, double tol) {
    const int d = static_cast<int>(u.rows());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (!conjugated_weyl(u, {i, j}, tol)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Matrix> clifford_generators(int d) {
    if (!is_prime(d)) {
        throw Error("Clifford generators are built for prime d only (got " + std::to_string(d) + ")");
    }
    Matrix f(d, d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (long long j = 0; j < d; ++j) {
        for (long long k = 0; k < d; ++k) {
            f(j, k) = amp * root_of_unity(d, j * k);
        }
    }
    Matrix s = Matrix::Zero(d, d);
    if (d == 2) {
        s(0, 0) = 1.0;
        s(1, 1) = Complex(0.0, 1.0);
    } else {
        const long long half = (d + 1) / 2;  // inverse of 2 mod d
        for (long long k = 0; k < d; ++k) {
            s(k, k) = root_of_unity(d, (k * (k + 1) % d) * half);
        }
    }
    std::vector<Matrix> gens{shift_operator(d), clock_operator(d), f, s};
    for (const auto &g : gens) {
        if (!normalizes_weyl_group(g)) {
            throw Error("generator fails the normalizer test");
        }
    }
    return gens;
}

CliffordGroup enumerate_clifford(int d, std::size_t size_cap) {
    auto gens = clifford_generators(d);
    const std::uint64_t expected = clifford_cardinality(d);
    PhaselessGroup group = PhaselessGroup::from_matrices(d, {Matrix::Identity(d, d)});
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t k = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            Matrix product = g * group[k].matrix();
            if (group.insert(product)) {
                if (group.size() > size_cap) {
                    throw Error("Clifford enumeration exceeded the size cap of " + std::to_string(size_cap));
                }
                frontier.push_back(group.size() - 1);
            }
        }
    }
    if (group.size() != expected) {
        throw Error("Clifford closure has " + std::to_string(group.size()) + " elements, expected " +
                    std::to_string(expected));
    }
    return group;
}

PhaselessGroup weyl_subgroup(int d) {
    std::vector<Matrix> ms;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            ms.push_back(weyl(d, {i, j}));
        }
    }
    return PhaselessGroup::from_matrices(d, ms);
}

RankOnePovm clifford_povm(const PhaselessGroup &g) {
    const int d = g.d();
    const double weight = static_cast<double>(d) * d / static_cast<double>(g.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<PovmElement> elements;
    elements.reserve(g.size());
    for (const auto &u : g.elements()) {
        elements.push_back({weight, Ket::normalized(scale * vectorize(u.matrix()))});
    }
    return RankOnePovm(std::move(elements), PartyStructure::Double);
}

CharacterSums irreducibility_check(const PhaselessGroup &g) {
    CharacterSums sums;
    for (const auto &u : g.elements()) {
        double t2 = std::norm(u.matrix().trace());
        sums.c1 += t2;
        sums.c2 += t2 * t2;
    }
    sums.c1 /= static_cast<double>(g.size());
    sums.c2 /= static_cast<double>(g.size());
    return sums;
}

double theorem1_tolerance(int d) { return d <= 2 ? 1e-10 : 1e-9; }

VerificationReport verify_theorem1(const PhaselessGroup &g, double tol) {
    const int d = g.d();
    VerificationReport report(Scheme::Clifford, d);
    RankOnePovm m = clifford_povm(g);
    report.add_check("completeness", m.completeness_defect(), kIdentityTol);

    auto sums = irreducibility_check(g);
    report.add_check("c1", std::abs(sums.c1 - 1.0), 1e-8);
    report.add_check("c2", std::abs(sums.c2 - 2.0), 1e-8);

    TestOperator t = t_of_povm(m);
    report.add_check("t2_identity", frobenius_distance(t.matrix(), t_inv2(d).matrix()), tol);
    report.add_check("trace", std::abs(t.op().trace().real() - static_cast<double>(d) * d), 1e-9);
    report.add_exact_check("cardinality", static_cast<long long>(g.size()),
                           static_cast<long long>(clifford_cardinality(d)));
    report.set_metadata("c1", format_real(sums.c1));
    report.set_metadata("c2", format_real(sums.c2));
    return report;
}

VerificationReport verify_theorem1(int d) { return verify_theorem1(enumerate_clifford(d), theorem1_tolerance(d)); }

double gxg_invariance_defect(const PhaselessGroup &g, const Matrix &t, int trials, std::uint64_t seed) {
    CounterStream stream{CounterRng(seed)};
    double worst = 0.0;
    const auto n = g.size();
    for (int k = 0; k < trials; ++k) {
        const Matrix &f1 = g[stream.next_bits() % n].matrix();
        const Matrix &f2 = g[stream.next_bits() % n].matrix();
        Matrix v = tensor_product(tensor_product(f1, Matrix(f2.conjugate())),
                                  tensor_product(Matrix(f1.conjugate()), f2));
        worst = std::max(worst, frobenius_distance(v * t * v.adjoint(), t));
    }
    return worst;
}

}  // namespace entverify
