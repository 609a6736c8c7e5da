// lp_geometry.hpp — the Landau-Pollak constraint and its saturation curve
#pragma once

namespace eur {

// The observable overlap c = max |<a_i|b_j>| together with its angle
// theta = arccos(c), kept precomputed because the root solver evaluates
// trigonometric forms heavily.
class Overlap {
public:
    explicit Overlap(double c);

    double c() const noexcept { return c_; }
    double theta() const noexcept { return theta_; }

private:
    double c_;
    double theta_;
};

// arccos(sqrt(P_A)) + arccos(sqrt(P_B)), the left-hand side of the
// Landau-Pollak inequality.
double lp_lhs(double p_a, double p_b);

// lp_lhs >= theta - 1e-12.
bool lp_satisfied(double p_a, double p_b, const Overlap& ov);

// The unique P_B in [c^2, 1] with lp_lhs(P_A, P_B) = theta, i.e.
// cos^2(theta - arccos sqrt(P_A)). Requires P_A >= c^2; below that the
// partner would have to exceed 1.
double saturating_partner(double p_a, const Overlap& ov);

}  // namespace eur
