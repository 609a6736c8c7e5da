#include "eur/lp_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eur {

namespace {
constexpr double kLpSlackTol = 1e-12;
constexpr double kPartnerDomainTol = 1e-12;
constexpr double kRoundoffTol = 1e-12;

// Validates, tolerating round-off excursions above 1 (a Born probability of
// a near-eigenstate can land at 1 + 1ulp); returns the clamped value.
double check_prob(double p, const char* name) {
    if (!(p >= 0.0) || p > 1.0 + kRoundoffTol) {
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(p) +
                                    " is not a probability");
    }
    return std::min(p, 1.0);
}
}  // namespace

Overlap::Overlap(double c) : c_(c) {
    if (!(c > 0.0) || c > 1.0) {
        throw std::invalid_argument("overlap c must lie in (0, 1], got " +
                                    std::to_string(c));
    }
    theta_ = std::acos(c_);
}

double lp_lhs(double p_a, double p_b) {
    p_a = check_prob(p_a, "P_A");
    p_b = check_prob(p_b, "P_B");
    return std::acos(std::sqrt(p_a)) + std::acos(std::sqrt(p_b));
}

bool lp_satisfied(double p_a, double p_b, const Overlap& ov) {
    return lp_lhs(p_a, p_b) >= ov.theta() - kLpSlackTol;
}

double saturating_partner(double p_a, const Overlap& ov) {
    p_a = check_prob(p_a, "P_A");
    const double c2 = ov.c() * ov.c();
    if (p_a < c2 - kPartnerDomainTol) {
        throw std::domain_error("no saturating partner: P_A < c^2 would need P_B > 1");
    }
    const double alpha = std::acos(std::sqrt(p_a));
    const double beta = std::max(0.0, ov.theta() - alpha);  // clamp rounding at P_A ~ c^2
    const double r = std::cos(beta);
    return r * r;
}

}  // namespace eur
