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

#include "entverify/mub.hpp"

#include <algorithm>
#include <cmath>

namespace entverify {

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

MubFamily mub_prime(int d) {
    if (!is_prime(d)) {
        throw Error("d must be prime (got " + std::to_string(d) + ")");
    }
    MubFamily fam;
    fam.d = d;
    std::vector<Ket> computational;
    for (int k = 0; k < d; ++k) {
        computational.push_back(Ket::basis(static_cast<std::size_t>(d), static_cast<std::size_t>(k)));
    }
    fam.bases.push_back(std::move(computational));

    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    if (d == 2) {
        const Complex i(0.0, 1.0);
        Vector v(2);
        v << amp, amp;
        Vector w(2);
        w << amp, -amp;
        fam.bases.push_back({Ket::normalized(v), Ket::normalized(w)});
        v << amp, amp * i;
        w << amp, -amp * i;
        fam.bases.push_back({Ket::normalized(v), Ket::normalized(w)});
        return fam;
    }
    for (long long s = 0; s < d; ++s) {
        std::vector<Ket> basis;
        for (long long t = 0; t < d; ++t) {
            Vector v(d);
            for (long long k = 0; k < d; ++k) {
                v(k) = amp * root_of_unity(d, s * k * k + t * k);
            }
            basis.push_back(Ket::normalized(std::move(v)));
        }
        fam.bases.push_back(std::move(basis));
    }
    return fam;
}

VerificationReport mub_check(const MubFamily &fam, double tol) {
    VerificationReport report(Scheme::Mub, fam.d);
    const double target = 1.0 / fam.d;
    double orth = 0.0;
    double unbiased = 0.0;
    for (std::size_t a = 0; a < fam.bases.size(); ++a) {
        const auto &ba = fam.bases[a];
        if (ba.size() != static_cast<std::size_t>(fam.d)) {
            orth = std::max(orth, 1.0);
        }
        for (std::size_t i = 0; i < ba.size(); ++i) {
            for (std::size_t k = 0; k < ba.size(); ++k) {
                Complex g = ba[i].amplitudes().dot(ba[k].amplitudes());
                orth = std::max(orth, std::abs(g - (i == k ? 1.0 : 0.0)));
            }
        }
        for (std::size_t b = a + 1; b < fam.bases.size(); ++b) {
            for (const auto &u : ba) {
                for (const auto &v : fam.bases[b]) {
                    unbiased = std::max(unbiased, std::abs(std::norm(u.amplitudes().dot(v.amplitudes())) - target));
                }
            }
        }
    }
    report.add_check("orthonormality", orth, tol);
    report.add_check("unbiasedness", unbiased, tol);
    return report;
}

RankOnePovm mub_povm(const MubFamily &fam) {
    auto check = mub_check(fam, kIdentityTol);
    if (!check.overall()) {
        throw Error("family is not mutually unbiased");
    }
    const double w = 1.0 / (fam.d + 1);
    std::vector<PovmElement> elements;
    for (const auto &basis : fam.bases) {
        for (const auto &u : basis) {
            elements.push_back({w, u});
        }
    }
    return RankOnePovm(std::move(elements));
}

Vector project_off_max_entangled(const Ket &u) {
    const int d = static_cast<int>(u.dim());
    const Vector &a = u.amplitudes();
    Vector w = tensor_product(a, Vector(a.conjugate()));
    const Vector phi = max_entangled(d).amplitudes();
    return w - phi * phi.dot(w);
}

std::vector<std::size_t> projected_pvm_ranks(const MubFamily &fam) {
    std::vector<std::size_t> ranks;
    for (const auto &basis : fam.bases) {
        Matrix cols(static_cast<Eigen::Index>(fam.d) * fam.d, static_cast<Eigen::Index>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            cols.col(static_cast<Eigen::Index>(i)) = project_off_max_entangled(basis[i]);
        }
        Matrix gram = cols.adjoint() * cols;
        ranks.push_back(numerical_rank(gram));
    }
    return ranks;
}

int pvm_count_bound(int d) {
    if (d < 2) {
        throw Error("pvm_count_bound requires d >= 2");
    }
    // Each PVM contributes at most d-1 dimensions to the (d^2-1)-dimensional orthocomplement.
    const int need = d * d - 1;
    const int per_pvm = d - 1;
    return (need + per_pvm - 1) / per_pvm;
}

VerificationReport verify_mub_identity(int d, double tol) {
    MubFamily fam = mub_prime(d);
    VerificationReport report(Scheme::Mub, d);
    report.merge(mub_check(fam, tol), "mub_");

    RankOnePovm m = mub_povm(fam);
    report.add_exact_check("element_count", static_cast<long long>(m.size()), static_cast<long long>(d) * (d + 1));
    report.add_check("completeness", m.completeness_defect(), tol);
    report.add_check("t_identity", frobenius_distance(t_of_povm(m).matrix(), t_inv1(d).matrix()), tol);

    // Projected vectors from different bases are mutually orthogonal.
    std::vector<std::vector<Vector>> projected;
    for (const auto &basis : fam.bases) {
        std::vector<Vector> p;
        for (const auto &u : basis) {
            p.push_back(project_off_max_entangled(u));
        }
        projected.push_back(std::move(p));
    }
    double cross = 0.0;
    for (std::size_t a = 0; a < projected.size(); ++a) {
        for (std::size_t b = a + 1; b < projected.size(); ++b) {
            for (const auto &x : projected[a]) {
                for (const auto &y : projected[b]) {
                    cross = std::max(cross, std::abs(x.dot(y)));
                }
            }
        }
    }
    report.add_check("projected_cross_orthogonality", cross, tol);

    auto ranks = projected_pvm_ranks(fam);
    long long total = 0;
    long long worst = 0;
    for (auto r : ranks) {
        total += static_cast<long long>(r);
        worst = std::max(worst, std::abs(static_cast<long long>(r) - (d - 1)));
    }
    report.add_exact_check("projected_rank_deviation", worst, 0);
    const auto n = static_cast<Eigen::Index>(d) * d;
    Matrix complement = Matrix::Identity(n, n) - max_entangled(d).projector();
    report.add_exact_check("projected_span_dimension", total, static_cast<long long>(numerical_rank(complement)));
    report.add_exact_check("pvm_count_meets_bound", static_cast<long long>(fam.bases.size()), pvm_count_bound(d));
    return report;
}

}  // namespace entverify
