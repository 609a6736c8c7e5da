// oracle.hpp — brute-force verification of the constrained minimization:
// grid search along the saturation curve, random feasible sampling, and
// Maassen-Uffink / Landau-Pollak incomparability witnesses
#pragma once

#include <cstdint>
#include <optional>

#include "eur/entropy.hpp"
#include "eur/lp_geometry.hpp"

namespace eur {

struct GridOracleResult {
    double c = 0.0;
    double min_value = 0.0;  // nats
    double argmin_p_a = 0.0;
    double argmin_p_b = 0.0;
    int resolution = 0;
};

// Minimum of the entropy-sum functional over a uniform P_A grid on [c^2, 1]
// along the saturation curve P_B = saturating_partner(P_A). The exact points
// P_A = 1 (the G candidate) and P_A = (1+c)/2 (the F candidate) are always
// included. Independent of the KKT machinery by construction.
GridOracleResult grid_min(const Overlap& ov, int resolution);

// Minimum observed H(p) + H(q) over `samples` random pairs of length-N
// distributions (flat Dirichlet, rejection-sampled on the Landau-Pollak
// constraint applied to their maxima). Unlike grid_min this assumes neither
// the minimal-shape reduction nor saturation. Returns +infinity for
// samples == 0.
double sampled_min(const Overlap& ov, int dimension, long long samples,
                   std::uint64_t seed, int workers = 1);

// One side of an incomparability witness: the explicit distribution pair and
// the certified quantities.
struct WitnessSide {
    double p_max = 0.0;
    double q_max = 0.0;
    ProbabilityVector p;
    ProbabilityVector q;
    double entropy_sum = 0.0;  // H(p) + H(q)
    double lp_lhs_value = 0.0;
};

struct IncomparabilityWitness {
    WitnessSide mu_allowed_lp_forbidden;  // entropy sum >= -2 ln c, lp_lhs < theta
    WitnessSide lp_allowed_mu_forbidden;  // lp_lhs >= theta, entropy sum < -2 ln c
};

// Grid search (resolution points per axis) for both witness kinds, extending
// each (P_A, P_B) cell to length-`dimension` distributions: maximal-entropy
// extensions for the MU-allowed side, minimal-entropy shapes for the
// MU-forbidden side. Absent when either witness is not found — for
// c >= 1/sqrt(2) no LP-allowed/MU-forbidden pair exists at all.
std::optional<IncomparabilityWitness> incomparability_witness(const Overlap& ov,
                                                              int resolution = 1000,
                                                              int dimension = 8);

}  // namespace eur
