#include "eur/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/rng.hpp"

namespace eur {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kNormTol = 1e-10;
constexpr double kUnitarityTol = 1e-10;
constexpr double kBoundTol = 1e-9;
constexpr double kLpTol = 1e-12;

double unitarity_residual(const Eigen::MatrixXcd& u) {
    const Eigen::MatrixXcd gram = u * u.adjoint();
    const auto n = u.rows();
    return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

// Golden-section minimization of a unimodal-enough slice; multi-start makes
// up for local minima.
template <typename F>
double golden_section(F&& f, double lo, double hi, double tol) {
    constexpr double kRatio = 0.6180339887498949;
    double x1 = hi - kRatio * (hi - lo);
    double x2 = lo + kRatio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kRatio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kRatio * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

PureState::PureState(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
        throw std::invalid_argument("state vector must be non-empty");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw std::invalid_argument("state vector is not normalized: |psi|^2 = " +
                                    std::to_string(norm2));
    }
}

BasisPair::BasisPair(Eigen::MatrixXcd transition) : u_(std::move(transition)) {
    if (u_.rows() < 1 || u_.rows() != u_.cols()) {
        throw std::invalid_argument("transition matrix must be square");
    }
    const double res = unitarity_residual(u_);
    if (res > kUnitarityTol) {
        throw std::invalid_argument("transition matrix is not unitary (residual " +
                                    std::to_string(res) + ")");
    }
}

ProbabilityVector born_probabilities(const PureState& state, const BasisPair& pair,
                                     Side side) {
    if (state.dimension() != pair.dimension()) {
        throw std::invalid_argument("state dimension " +
                                    std::to_string(state.dimension()) +
                                    " does not match basis dimension " +
                                    std::to_string(pair.dimension()));
    }
    const Eigen::VectorXcd coeffs =
        (side == Side::A) ? state.amplitudes()
                          : Eigen::VectorXcd(pair.transition().adjoint() *
                                             state.amplitudes());
    std::vector<double> probs(static_cast<std::size_t>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        probs[static_cast<std::size_t>(i)] = std::norm(coeffs[i]);
    }
    return ProbabilityVector(std::move(probs));
}

Overlap overlap_of(const BasisPair& pair) {
    return Overlap(std::min(pair.transition().cwiseAbs().maxCoeff(), 1.0));
}

BasisPair haar_random_pair(int dimension, std::uint64_t seed) {
    if (dimension < 2) throw std::invalid_argument("dimension must be at least 2");
    // dedicated stream tag: a Monte Carlo run over this pair with the same
    // seed must not replay the gaussians that built the basis
    auto rng = make_rng(seed, 0x9a5e);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(dimension, dimension);
    for (int j = 0; j < dimension; ++j) {
        for (int i = 0; i < dimension; ++i) {
            z(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dimension; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
    }
    return BasisPair(std::move(q));
}

BasisPair fourier_pair(int dimension) {
    if (dimension < 2) throw std::invalid_argument("dimension must be at least 2");
    Eigen::MatrixXcd u(dimension, dimension);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
    for (int j = 0; j < dimension; ++j) {
        for (int k = 0; k < dimension; ++k) {
            const double phase = 2.0 * kPi * j * k / dimension;
            u(j, k) = scale * std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    return BasisPair(std::move(u));
}

BasisPair qubit_pair_with_overlap(double c) {
    if (!(c >= kInvSqrt2 - 1e-12) || c > 1.0) {
        throw std::domain_error(
            "a 2x2 rotation pair cannot have overlap below 1/sqrt(2)");
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    Eigen::MatrixXcd u(2, 2);
    u << c, s, -s, c;
    return BasisPair(std::move(u));
}

PureState haar_random_state(int dimension, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd psi(dimension);
    double norm = 0.0;
    do {
        for (int i = 0; i < dimension; ++i) {
            psi[i] = std::complex<double>(gauss(rng), gauss(rng));
        }
        norm = psi.norm();
    } while (!(norm > 0.0));
    psi /= norm;
    return PureState(std::move(psi));
}

McReport verify_bound_mc(const BasisPair& pair, long long states, std::uint64_t seed,
                         int workers) {
    if (states < 1) throw std::invalid_argument("state count must be positive");
    if (workers < 1) throw std::invalid_argument("worker count must be positive");

    const Overlap ov = overlap_of(pair);
    const double bound = new_bound(ov).bound;
    const double theta = ov.theta();

    struct ShardResult {
        double min_entropy_sum = std::numeric_limits<double>::infinity();
        double min_bound_slack = std::numeric_limits<double>::infinity();
        double min_lp_slack = std::numeric_limits<double>::infinity();
        long long violations = 0;
        std::optional<Eigen::VectorXcd> offending;
    };

    auto run_shard = [&](std::uint64_t shard, long long count) {
        auto rng = make_rng(seed, shard);
        ShardResult res;
        for (long long i = 0; i < count; ++i) {
            const PureState psi = haar_random_state(pair.dimension(), rng);
            const ProbabilityVector pa = born_probabilities(psi, pair, Side::A);
            const ProbabilityVector pb = born_probabilities(psi, pair, Side::B);
            const double hsum = shannon_entropy(pa) + shannon_entropy(pb);
            const double lp = lp_lhs(pa.max_entry(), pb.max_entry());
            res.min_entropy_sum = std::min(res.min_entropy_sum, hsum);
            res.min_bound_slack = std::min(res.min_bound_slack, hsum - bound);
            res.min_lp_slack = std::min(res.min_lp_slack, lp - theta);
            if (hsum < bound - kBoundTol || lp < theta - kLpTol) {
                ++res.violations;
                if (!res.offending) res.offending = psi.amplitudes();
            }
        }
        return res;
    };

    std::vector<ShardResult> shards(static_cast<std::size_t>(workers));
    if (workers == 1) {
        shards[0] = run_shard(0, states);
    } else {
        const long long per = states / workers;
        const long long extra = states % workers;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const long long count = per + (w < extra ? 1 : 0);
            pool.emplace_back([&, w, count] {
                shards[static_cast<std::size_t>(w)] =
                    run_shard(static_cast<std::uint64_t>(w), count);
            });
        }
        for (auto& t : pool) t.join();
    }

    McReport report;
    report.states = states;
    report.bound = bound;
    report.min_entropy_sum = std::numeric_limits<double>::infinity();
    report.min_bound_slack = std::numeric_limits<double>::infinity();
    report.min_lp_slack = std::numeric_limits<double>::infinity();
    for (const auto& s : shards) {
        report.min_entropy_sum = std::min(report.min_entropy_sum, s.min_entropy_sum);
        report.min_bound_slack = std::min(report.min_bound_slack, s.min_bound_slack);
        report.min_lp_slack = std::min(report.min_lp_slack, s.min_lp_slack);
        report.violations += s.violations;
        if (!report.offending_state && s.offending) report.offending_state = s.offending;
    }
    report.pass = report.violations == 0;
    return report;
}

double qubit_min_entropy_sum(double c, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("restart count must be positive");
    const BasisPair pair = qubit_pair_with_overlap(c);

    auto objective = [&](double x, double phi) {
        Eigen::VectorXcd psi(2);
        psi[0] = std::complex<double>(std::cos(x / 2.0), 0.0);
        psi[1] = std::sin(x / 2.0) * std::complex<double>(std::cos(phi), std::sin(phi));
        const PureState state(std::move(psi));
        return shannon_entropy(born_probabilities(state, pair, Side::A)) +
               shannon_entropy(born_probabilities(state, pair, Side::B));
    };

    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> ux(0.0, kPi);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);

    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        double x = ux(rng);
        double phi = uphi(rng);
        double value = objective(x, phi);
        for (int sweep = 0; sweep < 60; ++sweep) {
            x = golden_section([&](double t) { return objective(t, phi); }, 0.0, kPi,
                               1e-8);
            phi = golden_section([&](double t) { return objective(x, t); }, 0.0,
                                 2.0 * kPi, 1e-8);
            const double next = objective(x, phi);
            if (value - next < 1e-12) {
                value = std::min(value, next);
                break;
            }
            value = next;
        }
        best = std::min(best, value);
    }
    return best;
}

}  // namespace eur
