#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eur/entropy.hpp"

namespace eur {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kBandShrink = 1e-9;     // stay off the log singularities at the band edges
constexpr double kBisectWidth = 1e-13;
constexpr int kScanSamples = 10000;
constexpr double kSymmetricExclusion = 1e-8;  // |P_A - P_B| below this is the EqualP branch
constexpr double kValidityTol = 1e-12;
constexpr double kCstarEdge = 1e-6;
constexpr double kCstarMergeWindow = 1e-6;
constexpr int kMaxDiagnosticM = 64;

// Stationarity residual of the transcendental equation, written with
// half-angle identities (1 +- cos 2x = 2cos^2 x / 2sin^2 x) so it stays
// finite-precision near the band edges.
double residual(double alpha, double theta, int m) {
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    const double t1 = std::sin(2.0 * alpha) * std::log((ca * ca) / (sa * sa));
    const double u = alpha - theta;
    const double su = std::sin(u);
    const double cu = std::cos(u);
    const double den = (m == 1) ? su * su : 1.0 - m * cu * cu;
    const double t2 = m * std::sin(2.0 * u) * std::log((cu * cu) / den);
    return t1 + t2;
}

// One side's closed form of the constraint multiplier; the residual equals
// the difference of the two sides, so it vanishes at reported roots.
double lambda_side(int m, double p) {
    return 2.0 * m * std::sqrt(p * (1.0 - p)) * std::log(p / (1.0 - m * p));
}

struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

// Admissible alpha range: P_A = cos^2(alpha) in (1/2, 1) and
// P_B = cos^2(theta - alpha) in (1/(M+1), 1/M), shrunk off both ends.
std::optional<Band> admissible_band(double theta, int m) {
    double lo = theta - std::acos(1.0 / std::sqrt(static_cast<double>(m + 1)));
    double hi = theta;
    if (m > 1) hi -= std::acos(1.0 / std::sqrt(static_cast<double>(m)));
    lo = std::max(lo, 0.0) + kBandShrink;
    hi = std::min(hi, kPi / 4.0) - kBandShrink;
    if (!(lo < hi)) return std::nullopt;
    return Band{lo, hi};
}

double bisect_root(double lo, double hi, double flo, double theta, int m) {
    while (hi - lo > kBisectWidth) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = residual(mid, theta, m);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

KktCandidate make_transcendental(double alpha, const Overlap& ov) {
    KktCandidate k;
    k.alpha = alpha;
    const double ca = std::cos(alpha);
    const double cb = std::cos(ov.theta() - alpha);
    k.p_a = ca * ca;
    k.p_b = cb * cb;
    k.m_a = multiplicity_for(k.p_a);
    k.m_b = multiplicity_for(k.p_b);
    k.lambda = lambda_side(k.m_a, k.p_a);
    k.entropy_sum = entropy_sum_functional(k.p_a, k.p_b);
    k.branch = KktBranch::TranscendentalM;
    return k;
}

bool h1_exists_below_f(double c) {
    const Overlap ov(c);
    const auto v = h_m_value(ov, 1);
    return v.has_value() && *v < f_bound(ov);
}

}  // namespace

double deutsch_bound(const Overlap& ov) {
    return -2.0 * std::log((1.0 + ov.c()) / 2.0);
}

double mu_bound(const Overlap& ov) { return -2.0 * std::log(ov.c()); }

double f_bound(const Overlap& ov) {
    const double c = ov.c();
    double v = -(1.0 + c) * std::log((1.0 + c) / 2.0);
    if (c < 1.0) v -= (1.0 - c) * std::log((1.0 - c) / 2.0);
    return v;
}

double g_bound(const Overlap& ov) {
    const double c2 = ov.c() * ov.c();
    const double inv = 1.0 / c2;
    const double nearest = std::round(inv);
    const double m = (std::abs(inv - nearest) < kValidityTol) ? nearest : std::floor(inv);
    const double mc2 = m * c2;
    double v = -mc2 * std::log(c2);
    const double tail = 1.0 - mc2;
    if (tail > kValidityTol) v -= tail * std::log(tail);  // 0 ln 0 at integer 1/c^2
    return v;
}

KktCandidate symmetric_candidate(const Overlap& ov) {
    KktCandidate k;
    k.p_a = k.p_b = (1.0 + ov.c()) / 2.0;
    k.m_a = k.m_b = 1;
    k.alpha = ov.theta() / 2.0;
    k.lambda = (k.p_a < 1.0) ? lambda_side(1, k.p_a) : 0.0;
    k.entropy_sum = entropy_sum_functional(k.p_a, k.p_b);
    k.branch = KktBranch::EqualP;
    return k;
}

KktCandidate boundary_candidate(const Overlap& ov) {
    KktCandidate k;
    k.p_a = 1.0;
    k.p_b = ov.c() * ov.c();
    k.m_a = 1;
    k.m_b = multiplicity_for(k.p_b);
    k.alpha = 0.0;
    const double tail = 1.0 - k.m_b * k.p_b;
    k.lambda = (tail > 0.0 && k.p_b < 1.0)
                   ? lambda_side(k.m_b, k.p_b)
                   : std::numeric_limits<double>::quiet_NaN();
    k.entropy_sum = entropy_sum_functional(k.p_a, k.p_b);
    k.branch = KktBranch::Boundary;
    return k;
}

std::vector<KktCandidate> h_m_candidates(const Overlap& ov, int m) {
    if (m < 1) throw std::invalid_argument("M must be a positive integer");
    if (ov.c() > 1.0 / std::sqrt(static_cast<double>(m)) + kValidityTol) {
        throw std::domain_error("transcendental family M = " + std::to_string(m) +
                                " is only valid for c <= 1/sqrt(M)");
    }
    std::vector<KktCandidate> out;
    const double theta = ov.theta();
    const auto band = admissible_band(theta, m);
    if (!band) return out;

    // Sample density tied to theta so narrow high-M bands stay cheap while
    // the M = 1 band gets the full 1e4-point scan.
    const double width = band->hi - band->lo;
    const double spacing = theta / kScanSamples;
    const int n = std::clamp(static_cast<int>(std::ceil(width / spacing)), 256,
                             2 * kScanSamples);

    double x_prev = band->lo;
    double r_prev = residual(x_prev, theta, m);
    for (int i = 1; i <= n; ++i) {
        const double x = band->lo + width * i / n;
        const double r = residual(x, theta, m);
        double root = std::numeric_limits<double>::quiet_NaN();
        if (r_prev == 0.0) {
            root = x_prev;
        } else if ((r_prev < 0.0) != (r < 0.0)) {
            root = bisect_root(x_prev, x, r_prev, theta, m);
        }
        if (std::isfinite(root)) {
            KktCandidate k = make_transcendental(root, ov);
            if (std::abs(k.p_a - k.p_b) >= kSymmetricExclusion) {
                out.push_back(std::move(k));
            }
        }
        x_prev = x;
        r_prev = r;
    }
    return out;
}

std::optional<double> h_m_value(const Overlap& ov, int m) {
    const auto candidates = h_m_candidates(ov, m);
    if (candidates.empty()) return std::nullopt;
    double best = candidates.front().entropy_sum;
    for (const auto& k : candidates) best = std::min(best, k.entropy_sum);
    return best;
}

double crossover_cstar(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    double lo = kInvSqrt2 + kCstarEdge;
    double hi = 1.0 - kCstarEdge;
    if (!h1_exists_below_f(lo) || h1_exists_below_f(hi)) {
        throw std::runtime_error("crossover: no sign change of F - H1 on (1/sqrt(2), 1)");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (h1_exists_below_f(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double cached_cstar() {
    static const double value = crossover_cstar(1e-9);
    return value;
}

const char* to_string(BoundBranch b) noexcept {
    switch (b) {
        case BoundBranch::MU: return "MU";
        case BoundBranch::H1: return "H1";
        case BoundBranch::F: return "F";
    }
    return "?";
}

BoundBreakdown new_bound(const Overlap& ov) {
    BoundBreakdown b;
    b.c = ov.c();
    b.deutsch = deutsch_bound(ov);
    b.maassen_uffink = mu_bound(ov);
    b.f_val = f_bound(ov);
    b.g_val = g_bound(ov);

    const double inv = 1.0 / (b.c * b.c);
    const int m_max = std::clamp(static_cast<int>(std::floor(inv + kValidityTol)), 1,
                                 kMaxDiagnosticM);
    b.h_m.reserve(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        b.h_m.emplace_back(m, h_m_value(ov, m));
    }

    if (b.c <= kInvSqrt2) {
        b.bound = b.maassen_uffink;
        b.active_branch = BoundBranch::MU;
        return b;
    }
    const double cs = cached_cstar();
    if (b.c <= cs) {
        const auto h1 = b.h1();
        if (h1) {
            b.bound = *h1;
        } else if (cs - b.c <= kCstarMergeWindow) {
            // The non-symmetric root has merged with the symmetric point at
            // the crossover; F is the exact limit of H1 there.
            b.bound = b.f_val;
        } else {
            throw std::runtime_error(
                "transcendental candidate missing inside its branch range at c = " +
                std::to_string(b.c));
        }
        b.active_branch = BoundBranch::H1;
    } else {
        b.bound = b.f_val;
        b.active_branch = BoundBranch::F;
    }
    return b;
}

}  // namespace eur
