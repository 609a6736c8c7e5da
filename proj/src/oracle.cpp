#include "eur/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "eur/rng.hpp"

namespace eur {

namespace {

constexpr double kWitnessMargin = 1e-9;

std::vector<double> random_simplex_point(int dimension, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> p(static_cast<std::size_t>(dimension));
    double sum = 0.0;
    do {
        sum = 0.0;
        for (double& x : p) {
            x = -std::log1p(-uniform(rng));  // Exp(1); flat Dirichlet after normalizing
            sum += x;
        }
    } while (!(sum > 0.0));
    for (double& x : p) x /= sum;
    return p;
}

// Largest-entropy length-n distribution with maximum exactly p: the remaining
// mass spread uniformly. Needs p >= 1/n.
std::vector<double> max_entropy_extension(double p, int n) {
    std::vector<double> out(static_cast<std::size_t>(n), (1.0 - p) / (n - 1));
    out.front() = p;
    return out;
}

double max_entropy_at(double p, int n) {
    double h = -p * std::log(p);
    const double rest = 1.0 - p;
    if (rest > 0.0) h -= rest * std::log(rest / (n - 1));
    return h;
}

}  // namespace

GridOracleResult grid_min(const Overlap& ov, int resolution) {
    if (resolution < 10) {
        throw std::invalid_argument("grid resolution must be at least 10");
    }
    const double c2 = ov.c() * ov.c();
    GridOracleResult best;
    best.c = ov.c();
    best.resolution = resolution;
    best.min_value = std::numeric_limits<double>::infinity();

    auto consider = [&](double p_a) {
        const double p_b = saturating_partner(p_a, ov);
        const double v = entropy_sum_functional(p_a, p_b);
        if (v < best.min_value) {
            best.min_value = v;
            best.argmin_p_a = p_a;
            best.argmin_p_b = p_b;
        }
    };

    for (int i = 0; i < resolution; ++i) {
        consider(c2 + (1.0 - c2) * i / (resolution - 1));
    }
    consider(1.0);                  // the G candidate
    consider((1.0 + ov.c()) / 2.0); // the F candidate
    return best;
}

double sampled_min(const Overlap& ov, int dimension, long long samples,
                   std::uint64_t seed, int workers) {
    if (dimension < 2) throw std::invalid_argument("dimension must be at least 2");
    if (samples < 0) throw std::invalid_argument("sample count must be non-negative");
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    if (samples == 0) return std::numeric_limits<double>::infinity();

    auto shard_min = [&](std::uint64_t shard, long long count) {
        auto rng = make_rng(seed, shard);
        double best = std::numeric_limits<double>::infinity();
        for (long long i = 0; i < count; ++i) {
            std::vector<double> p, q;
            long tries = 0;
            for (;;) {
                p = random_simplex_point(dimension, rng);
                q = random_simplex_point(dimension, rng);
                const double pa = *std::max_element(p.begin(), p.end());
                const double pb = *std::max_element(q.begin(), q.end());
                if (lp_satisfied(pa, pb, ov)) break;
                if (++tries > 1000000) {
                    throw std::runtime_error("feasible-pair rejection sampling stalled");
                }
            }
            const ProbabilityVector pv(std::move(p));
            const ProbabilityVector qv(std::move(q));
            best = std::min(best, shannon_entropy(pv) + shannon_entropy(qv));
        }
        return best;
    };

    if (workers == 1) return shard_min(0, samples);

    const long long per = samples / workers;
    const long long extra = samples % workers;
    std::vector<double> results(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const long long count = per + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, count] {
            results[static_cast<std::size_t>(w)] =
                shard_min(static_cast<std::uint64_t>(w), count);
        });
    }
    for (auto& t : pool) t.join();
    return *std::min_element(results.begin(), results.end());
}

std::optional<IncomparabilityWitness> incomparability_witness(const Overlap& ov,
                                                              int resolution,
                                                              int dimension) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    if (dimension < 2) throw std::invalid_argument("dimension must be at least 2");

    const double theta = ov.theta();
    const double mu = -2.0 * std::log(ov.c());
    const double lo = 1.0 / dimension;

    std::optional<WitnessSide> mu_ok_lp_bad;
    std::optional<WitnessSide> lp_ok_mu_bad;

    for (int i = 0; i < resolution && !(mu_ok_lp_bad && lp_ok_mu_bad); ++i) {
        const double pa = lo + (1.0 - lo) * i / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double pb = lo + (1.0 - lo) * j / (resolution - 1);
            const double lhs = lp_lhs(pa, pb);

            if (!mu_ok_lp_bad && lhs < theta - kWitnessMargin) {
                const double hsum = max_entropy_at(pa, dimension) +
                                    max_entropy_at(pb, dimension);
                if (hsum >= mu + kWitnessMargin) {
                    mu_ok_lp_bad = WitnessSide{
                        pa, pb,
                        ProbabilityVector(max_entropy_extension(pa, dimension)),
                        ProbabilityVector(max_entropy_extension(pb, dimension)),
                        hsum, lhs};
                }
            }
            if (!lp_ok_mu_bad && lhs >= theta - 1e-12) {
                const double hsum = entropy_sum_functional(pa, pb);
                if (hsum < mu - kWitnessMargin) {
                    lp_ok_mu_bad = WitnessSide{
                        pa, pb,
                        min_entropy_given_max(pa, dimension).distribution(),
                        min_entropy_given_max(pb, dimension).distribution(),
                        hsum, lhs};
                }
            }
            if (mu_ok_lp_bad && lp_ok_mu_bad) break;
        }
    }

    if (!mu_ok_lp_bad || !lp_ok_mu_bad) return std::nullopt;
    return IncomparabilityWitness{std::move(*mu_ok_lp_bad), std::move(*lp_ok_mu_bad)};
}

}  // namespace eur
