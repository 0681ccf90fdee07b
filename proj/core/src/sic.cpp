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

#include "entverify/sic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "entverify/rng.hpp"
#include "entverify/weyl.hpp"

namespace entverify {

namespace {

// Squared orbit overlaps |<psi|W(i,j)|psi>|^2 / |psi|^4 for (i,j) != (0,0), i-major.
class OverlapEvaluator {
  public:
    explicit OverlapEvaluator(int d) : d_(d), phases_(d) {
        for (int k = 0; k < d; ++k) {
            phases_[k] = root_of_unity(d, k);
        }
    }

    int d() const { return d_; }
    int count() const { return d_ * d_ - 1; }

    template <typename Out>
    void deviations(const Vector &psi, Out &&out) const {
        const double norm2 = psi.squaredNorm();
        const double target = 1.0 / (d_ + 1);
        int n = 0;
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) {
                if (i == 0 && j == 0) {
                    continue;
                }
                // <psi|X^i Z^j|psi> = sum_m conj(psi[m+i]) w^{jm} psi[m].
                Complex acc = 0.0;
                for (int m = 0; m < d_; ++m) {
                    acc += std::conj(psi((m + i) % d_)) * phases_[(j * m) % d_] * psi(m);
                }
                out(n++, std::norm(acc) / (norm2 * norm2) - target);
            }
        }
    }

    RealVector residual_vector(const RealVector &x) const {
        RealVector e(count());
        deviations(to_complex(x), [&](int n, double v) { e(n) = v; });
        return e;
    }

    Vector to_complex(const RealVector &x) const {
        Vector psi(d_);
        for (int k = 0; k < d_; ++k) {
            psi(k) = Complex(x(k), x(d_ + k));
        }
        return psi;
    }

  private:
    int d_;
    std::vector<Complex> phases_;
};

double sum_squares(const OverlapEvaluator &ev, const RealVector &x) { return ev.residual_vector(x).squaredNorm(); }

RealVector fd_gradient(const OverlapEvaluator &ev, const RealVector &x, double h) {
    RealVector g(x.size());
    RealVector probe = x;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        probe(k) = x(k) + h;
        double up = sum_squares(ev, probe);
        probe(k) = x(k) - h;
        double down = sum_squares(ev, probe);
        probe(k) = x(k);
        g(k) = (up - down) / (2.0 * h);
    }
    return g;
}

Eigen::MatrixXd fd_jacobian(const OverlapEvaluator &ev, const RealVector &x, double h) {
    Eigen::MatrixXd j(ev.count(), x.size());
    RealVector probe = x;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        probe(k) = x(k) + h;
        RealVector up = ev.residual_vector(probe);
        probe(k) = x(k) - h;
        RealVector down = ev.residual_vector(probe);
        probe(k) = x(k);
        j.col(k) = (up - down) / (2.0 * h);
    }
    return j;
}

// Backtracking gradient descent on the sum of squared deviations.
void descend(const OverlapEvaluator &ev, RealVector &x, const StepRule &rule, int iters) {
    double step = rule.initial_step;
    double r = sum_squares(ev, x);
    for (int it = 0; it < iters && r > 1e-6; ++it) {
        RealVector g = fd_gradient(ev, x, rule.fd_step);
        double g2 = g.squaredNorm();
        if (g2 == 0.0) {
            break;
        }
        step = std::min(step / rule.shrink, 1e3);
        bool moved = false;
        for (int tries = 0; tries < 60; ++tries) {
            RealVector trial = x - step * g;
            double rt = sum_squares(ev, trial);
            if (rt <= r - rule.armijo * step * g2) {
                x = trial / trial.norm();
                r = sum_squares(ev, x);
                moved = true;
                break;
            }
            step *= rule.shrink;
        }
        if (!moved) {
            break;
        }
    }
}

// Levenberg-Marquardt on the deviation vector; converges quadratically near a zero-residual point.
void polish(const OverlapEvaluator &ev, RealVector &x, const StepRule &rule, int iters, double target) {
    RealVector e = ev.residual_vector(x);
    double r = e.squaredNorm();
    double lambda = 1e-3;
    const auto n = x.size();
    for (int it = 0; it < iters; ++it) {
        if (e.cwiseAbs().maxCoeff() < target) {
            break;
        }
        Eigen::MatrixXd j = fd_jacobian(ev, x, rule.fd_step);
        Eigen::MatrixXd jtj = j.transpose() * j;
        RealVector jte = j.transpose() * e;
        bool improved = false;
        for (int tries = 0; tries < 30; ++tries) {
            Eigen::MatrixXd a = jtj;
            a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
            RealVector delta = a.ldlt().solve(-jte);
            RealVector trial = x + delta;
            trial /= trial.norm();
            RealVector et = ev.residual_vector(trial);
            double rt = et.squaredNorm();
            if (rt < r) {
                x = trial;
                e = std::move(et);
                r = rt;
                lambda = std::max(lambda / 3.0, 1e-15);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!improved || n == 0) {
            break;
        }
    }
}

std::string describe_search_failure(int d, double best) {
    std::ostringstream os;
    os << "fiducial search in d=" << d << " failed; best max overlap deviation " << best;
    return os.str();
}

}  // namespace

double max_overlap_deviation(const Vector &psi) {
    const int d = static_cast<int>(psi.size());
    if (d < 2) {
        throw Error("fiducial dimension must be at least 2");
    }
    OverlapEvaluator ev(d);
    double worst = 0.0;
    ev.deviations(psi, [&](int, double v) { worst = std::max(worst, std::abs(v)); });
    return worst;
}

double orbit_overlap_residual(const Vector &psi) {
    const int d = static_cast<int>(psi.size());
    if (d < 2) {
        throw Error("fiducial dimension must be at least 2");
    }
    OverlapEvaluator ev(d);
    double sum = 0.0;
    ev.deviations(psi, [&](int, double v) { sum += v * v; });
    return sum;
}

Fiducial Fiducial::from_vector(Vector v) {
    Ket k = Ket::normalized(std::move(v));
    double res = max_overlap_deviation(k.amplitudes());
    return Fiducial{static_cast<int>(k.dim()), std::move(k), res};
}

bool SicCertificate::pass() const {
    return count_dev == 0.0 && max_weight_dev <= tolerance && max_overlap_dev <= tolerance &&
           t_identity_dev <= tolerance;
}

SearchFailed::SearchFailed(int d, double best_residual)
    : Error(describe_search_failure(d, best_residual)), best_residual_(best_residual) {}

Fiducial known_fiducial(int d) {
    if (d == 2) {
        // Bloch vector (1,1,1)/sqrt(3): cos(theta) = 1/sqrt(3), azimuth pi/4.
        const double theta = std::acos(1.0 / std::sqrt(3.0));
        Vector v(2);
        v << std::cos(theta / 2), std::polar(std::sin(theta / 2), std::numbers::pi / 4);
        return Fiducial::from_vector(std::move(v));
    }
    if (d == 3) {
        Vector v(3);
        v << 0.0, 1.0, -1.0;
        return Fiducial::from_vector(std::move(v));
    }
    throw Error("no closed-form fiducial for d=" + std::to_string(d) + "; use search_fiducial");
}

RankOnePovm wh_orbit(const Fiducial &f) {
    const int d = f.d;
    std::vector<PovmElement> elements;
    elements.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            elements.push_back({1.0 / d, Ket::normalized(apply_weyl(d, {i, j}, f.vector.amplitudes()))});
        }
    }
    return RankOnePovm(std::move(elements));
}

SicCertificate sic_check(const RankOnePovm &m, double tol) {
    SicCertificate cert;
    const auto d = static_cast<int>(m.dim());
    cert.d = d;
    cert.tolerance = tol;
    cert.n_elements = m.size();
    const auto expected = static_cast<std::size_t>(d) * d;
    cert.count_dev = static_cast<double>(m.size() > expected ? m.size() - expected : expected - m.size());

    const double weight = 1.0 / d;
    const double overlap = 1.0 / (d + 1);
    const auto &el = m.elements();
    for (std::size_t a = 0; a < el.size(); ++a) {
        cert.max_weight_dev = std::max(cert.max_weight_dev, std::abs(el[a].weight - weight));
        for (std::size_t b = a + 1; b < el.size(); ++b) {
            double o = std::norm(el[a].vector.amplitudes().dot(el[b].vector.amplitudes()));
            cert.max_overlap_dev = std::max(cert.max_overlap_dev, std::abs(o - overlap));
        }
    }
    if (d >= 2) {
        cert.t_identity_dev = frobenius_distance(t_of_povm_unchecked(m), t_inv1(d).matrix());
    } else {
        cert.t_identity_dev = std::numeric_limits<double>::quiet_NaN();
    }
    return cert;
}

Fiducial search_fiducial(int d, const FiducialSearchConfig &cfg) {
    if (d < 2) {
        throw Error("fiducial dimension must be at least 2");
    }
    if (cfg.restarts < 1 || !(cfg.tol > 0.0)) {
        throw Error("search needs restarts >= 1 and tol > 0");
    }
    OverlapEvaluator ev(d);
    const CounterRng root(cfg.seed);
    const int descent_iters = std::min(cfg.step_rule.descent_iters, cfg.max_iters);
    const int polish_iters = std::max(cfg.max_iters - descent_iters, 1);

    RealVector best_x;
    double best = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        CounterStream stream(root.child(static_cast<std::uint64_t>(restart)));
        RealVector x(2 * d);
        for (Eigen::Index k = 0; k < x.size(); ++k) {
            x(k) = stream.next_normal();
        }
        x /= x.norm();
        descend(ev, x, cfg.step_rule, descent_iters);
        polish(ev, x, cfg.step_rule, polish_iters, cfg.tol * 1e-3);
        double dev = max_overlap_deviation(ev.to_complex(x));
        if (dev < best) {
            best = dev;
            best_x = x;
        }
    }
    if (!(best <= cfg.tol)) {
        throw SearchFailed(d, best);
    }
    return Fiducial::from_vector(ev.to_complex(best_x));
}

VerificationReport verify_sic_identity(const Fiducial &f, double tol) {
    const int d = f.d;
    VerificationReport report(Scheme::Sic, d);
    RankOnePovm m = wh_orbit(f);
    SicCertificate cert = sic_check(m, tol);

    report.add_exact_check("element_count", static_cast<long long>(cert.n_elements), static_cast<long long>(d) * d);
    report.add_check("weights", cert.max_weight_dev, tol);
    report.add_check("overlaps", cert.max_overlap_dev, tol);
    report.add_check("completeness", m.completeness_defect(), tol);
    report.add_check("t_identity", cert.t_identity_dev, tol);

    // Gram matrix of u_i (x) conj(u_i): <u_a (x) conj(u_a)|u_b (x) conj(u_b)> = |<u_a|u_b>|^2.
    const auto n = static_cast<Eigen::Index>(m.size());
    Matrix gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            gram(a, b) = std::norm(m.elements()[static_cast<std::size_t>(a)].vector.amplitudes().dot(
                m.elements()[static_cast<std::size_t>(b)].vector.amplitudes()));
        }
    }
    report.add_exact_check("gram_rank", static_cast<long long>(numerical_rank(gram)), static_cast<long long>(d) * d);

    auto rank_t = static_cast<long long>(numerical_rank(t_inv1(d).op()));
    auto count = static_cast<long long>(m.size());
    report.add_exact_check("rank_t_inv1", rank_t, static_cast<long long>(d) * d);
    report.add_exact_check("count_lower_bound", std::max(0LL, rank_t - count), 0);
    report.add_exact_check("count_meets_bound", count, rank_t);
    report.set_metadata("fiducial_residual", format_real(f.residual));
    return report;
}

}  // namespace entverify
