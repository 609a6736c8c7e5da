// bounds.hpp — closed-form bound candidates, the transcendental KKT family,
// the crossover c*, and the final piecewise entropic-uncertainty bound
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eur/lp_geometry.hpp"

namespace eur {

enum class KktBranch {
    EqualP,           // symmetric stationary point P_A = P_B = (1+c)/2
    TranscendentalM,  // non-symmetric root with M_A = 1, M_B = M
    Boundary,         // P_A = 1, P_B = c^2
};

// A stationary point of the reduced entropy-sum minimization. All candidates
// saturate the Landau-Pollak relation; lambda is the constraint multiplier,
// kept for diagnostics only.
struct KktCandidate {
    double p_a = 0.0;
    double p_b = 0.0;
    int m_a = 0;
    int m_b = 0;
    double alpha = 0.0;  // arccos(sqrt(P_A)), in [0, theta]
    double lambda = 0.0;
    double entropy_sum = 0.0;  // nats
    KktBranch branch = KktBranch::TranscendentalM;
};

double deutsch_bound(const Overlap& ov);  // -2 ln((1+c)/2)
double mu_bound(const Overlap& ov);       // -2 ln c

// F(c) = -(1+c) ln((1+c)/2) - (1-c) ln((1-c)/2), the symmetric candidate.
double f_bound(const Overlap& ov);

// G(c) = -c^2 [1/c^2] ln c^2 - (1 - c^2 [1/c^2]) ln(1 - c^2 [1/c^2]),
// the boundary candidate P_A = 1, P_B = c^2. Equals ln n at c = 1/sqrt(n).
double g_bound(const Overlap& ov);

// The stationary points behind f_bound and g_bound, as candidates.
KktCandidate symmetric_candidate(const Overlap& ov);
KktCandidate boundary_candidate(const Overlap& ov);

// All roots of the transcendental stationarity equation
//   sin 2a ln((1+cos 2a)/(1-cos 2a))
//     + M sin 2(a-th) ln((1+cos 2(a-th)) / (2(1 - M cos^2(a-th)))) = 0
// on the open band P_A in (1/2, 1), P_B in (1/(M+1), 1/M), excluding the
// symmetric point P_A = P_B. Valid for c <= 1/sqrt(M); the band is scanned
// with ~1e4 samples for sign changes, each bracket bisected to 1e-13.
// Returns an empty list when no root exists.
std::vector<KktCandidate> h_m_candidates(const Overlap& ov, int m);

// min entropy_sum over h_m_candidates, or absent when the list is empty.
std::optional<double> h_m_value(const Overlap& ov, int m);

// The crossover c* where F(c) stops exceeding H_1(c): bisection on
// (1/sqrt(2), 1) to tolerance tol. The H_1 roots merge into the symmetric
// point exactly at c*, so the bisection predicate is "H_1 exists and lies
// below F". Throws on a missing sign change (an implementation bug).
double crossover_cstar(double tol);

// c* at tolerance 1e-9, computed once and cached (thread-safe).
double cached_cstar();

enum class BoundBranch { MU, H1, F };
const char* to_string(BoundBranch b) noexcept;

// Every candidate at a given overlap plus the final piecewise bound:
//   -2 ln c      for c <= 1/sqrt(2),
//   H_1(c)       for 1/sqrt(2) < c <= c*,
//   F(c)         for c > c*.
// h_m holds (M, value-or-absent) for M = 1 .. floor(1/c^2), capped at M = 64
// (larger M is diagnostic-only and never affects the bound).
struct BoundBreakdown {
    double c = 0.0;
    double deutsch = 0.0;
    double maassen_uffink = 0.0;
    double f_val = 0.0;
    double g_val = 0.0;
    std::vector<std::pair<int, std::optional<double>>> h_m;
    double bound = 0.0;
    BoundBranch active_branch = BoundBranch::MU;

    std::optional<double> h1() const {
        return h_m.empty() ? std::nullopt : h_m.front().second;
    }
};

BoundBreakdown new_bound(const Overlap& ov);

}  // namespace eur
