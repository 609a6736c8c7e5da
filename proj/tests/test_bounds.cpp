#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "eur/bounds.hpp"
#include "eur/entropy.hpp"
#include "eur/oracle.hpp"
#include "eur/rng.hpp"

using namespace eur;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// The stationarity equation exactly as stated, used as an independent check
// on reported roots (the implementation solves a half-angle rewrite of it).
double residual_literal(double alpha, double theta, int m) {
    const double t1 = std::sin(2.0 * alpha) *
                      std::log((1.0 + std::cos(2.0 * alpha)) /
                               (1.0 - std::cos(2.0 * alpha)));
    const double u = alpha - theta;
    const double cu = std::cos(u);
    const double t2 = m * std::sin(2.0 * u) *
                      std::log((1.0 + std::cos(2.0 * u)) /
                               (2.0 * (1.0 - m * cu * cu)));
    return t1 + t2;
}

double lambda_expr(int m, double p) {
    return 2.0 * m * std::sqrt(p * (1.0 - p)) * std::log(p / (1.0 - m * p));
}

void check_candidate_invariants(const KktCandidate& k, const Overlap& ov, int m) {
    // every candidate saturates the Landau-Pollak relation
    CHECK(std::abs(lp_lhs(k.p_a, k.p_b) - ov.theta()) <= 1e-10);
    // multiplicity ranges of the minimal-shape reduction
    CHECK(k.m_a <= 1.0 / k.p_a + 1e-9);
    CHECK(1.0 / k.p_a < k.m_a + 1.0 + 1e-9);
    CHECK(k.m_b == m);
    CHECK(std::min(k.m_a, k.m_b) == 1);
    CHECK(ov.c() <= 1.0 / std::sqrt(double(std::max(k.m_a, k.m_b))) + 1e-12);
    CHECK(k.entropy_sum ==
          doctest::Approx(entropy_sum_functional(k.p_a, k.p_b)).epsilon(1e-12));
    // both expressions for the constraint multiplier agree at a root
    CHECK(std::abs(lambda_expr(k.m_a, k.p_a) - lambda_expr(k.m_b, k.p_b)) <= 1e-6);
}

}  // namespace

TEST_CASE("deutsch bound") {
    CHECK(deutsch_bound(Overlap(1.0)) == 0.0);
    CHECK(deutsch_bound(Overlap(kInvSqrt2)) ==
          doctest::Approx(0.31669436764074993).epsilon(1e-12));
    CHECK(deutsch_bound(Overlap(0.5)) ==
          doctest::Approx(0.5753641449035618).epsilon(1e-12));
}

TEST_CASE("maassen-uffink bound") {
    CHECK(mu_bound(Overlap(1.0)) == 0.0);
    CHECK(mu_bound(Overlap(kInvSqrt2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    for (int n = 2; n <= 10; ++n) {
        CHECK(mu_bound(Overlap(1.0 / std::sqrt(double(n)))) ==
              doctest::Approx(std::log(double(n))).epsilon(1e-12));
    }
}

TEST_CASE("f bound") {
    CHECK(f_bound(Overlap(1.0)) == 0.0);
    // limit c -> 0 is 2 ln 2
    CHECK(f_bound(Overlap(1e-15)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(f_bound(Overlap(0.9)) == doctest::Approx(0.3970304866917452).epsilon(1e-12));

    // F(c) is the entropy sum of the symmetric saturating point
    auto rng = make_rng(808);
    std::uniform_real_distribution<double> uc(1e-3, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double c = uc(rng);
        const double p = (1.0 + c) / 2.0;
        CHECK(f_bound(Overlap(c)) ==
              doctest::Approx(entropy_sum_functional(p, p)).epsilon(1e-12));
    }
}

TEST_CASE("g bound") {
    CHECK(g_bound(Overlap(1.0)) == 0.0);
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(g_bound(Overlap(1.0 / std::sqrt(double(n)))) -
                       std::log(double(n))) <= 1e-12);
    }
    CHECK(g_bound(Overlap(0.8)) == doctest::Approx(0.6534181947937018).epsilon(1e-12));
    CHECK(g_bound(Overlap(0.8)) ==
          doctest::Approx(entropy_sum_functional(1.0, 0.64)).epsilon(1e-12));
}

TEST_CASE("f dominates deutsch everywhere") {
    auto rng = make_rng(4242);
    std::uniform_real_distribution<double> uc(1e-6, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Overlap ov(uc(rng));
        CHECK(f_bound(ov) >= deutsch_bound(ov) - 1e-12);
    }
}

TEST_CASE("symmetric and boundary candidates") {
    for (const double c : {0.4, 0.75, 0.9}) {
        const Overlap ov(c);
        const KktCandidate sym = symmetric_candidate(ov);
        CHECK(sym.branch == KktBranch::EqualP);
        CHECK(sym.p_a == sym.p_b);
        CHECK(std::abs(lp_lhs(sym.p_a, sym.p_b) - ov.theta()) <= 1e-10);
        CHECK(sym.entropy_sum == doctest::Approx(f_bound(ov)).epsilon(1e-12));

        const KktCandidate bdry = boundary_candidate(ov);
        CHECK(bdry.branch == KktBranch::Boundary);
        CHECK(bdry.p_a == 1.0);
        CHECK(bdry.p_b == doctest::Approx(c * c).epsilon(1e-15));
        CHECK(std::abs(lp_lhs(bdry.p_a, bdry.p_b) - ov.theta()) <= 1e-10);
        CHECK(bdry.entropy_sum == doctest::Approx(g_bound(ov)).epsilon(1e-11));
    }
}

TEST_CASE("transcendental candidates at c = 0.75, M = 1") {
    const Overlap ov(0.75);
    const auto roots = h_m_candidates(ov, 1);
    REQUIRE(!roots.empty());
    CHECK(roots.size() == 2);  // mirror pair
    for (const auto& k : roots) {
        check_candidate_invariants(k, ov, 1);
        CHECK(std::abs(residual_literal(k.alpha, ov.theta(), 1)) < 1e-10);
        CHECK(std::abs(k.p_a - k.p_b) >= 1e-8);
    }
    // value pinned against the independent grid oracle
    const auto h1 = h_m_value(ov, 1);
    REQUIRE(h1.has_value());
    CHECK(*h1 == doctest::Approx(grid_min(ov, 10000).min_value).epsilon(1e-4));
    CHECK(*h1 == doctest::Approx(0.6830575877093683).epsilon(1e-9));
}

TEST_CASE("transcendental family absence and validity") {
    // above the crossover the non-symmetric root has merged away
    CHECK(h_m_candidates(Overlap(0.95), 1).empty());
    CHECK(!h_m_value(Overlap(0.95), 1).has_value());
    // at exactly c = 1/sqrt(2) the root degenerates onto the band edge
    CHECK(h_m_candidates(Overlap(kInvSqrt2), 1).empty());

    // M = 2 at c = 0.6: the entropy sum is monotone across the whole band,
    // so the scan correctly reports no stationary point.
    const auto m2 = h_m_candidates(Overlap(0.6), 2);
    for (const auto& k : m2) {
        check_candidate_invariants(k, Overlap(0.6), 2);
        CHECK(std::abs(residual_literal(k.alpha, Overlap(0.6).theta(), 2)) < 1e-10);
    }
    CHECK(m2.empty());

    // M = 2 at c = 0.45 has a genuine interior root
    const Overlap ov45(0.45);
    const auto m2roots = h_m_candidates(ov45, 2);
    REQUIRE(m2roots.size() == 1);
    check_candidate_invariants(m2roots.front(), ov45, 2);
    CHECK(std::abs(residual_literal(m2roots.front().alpha, ov45.theta(), 2)) < 1e-10);
    CHECK(m2roots.front().entropy_sum == doctest::Approx(1.243931).epsilon(1e-4));

    CHECK_THROWS_AS(h_m_candidates(Overlap(0.8), 2), std::domain_error);
    CHECK_THROWS_AS(h_m_candidates(Overlap(0.5), 0), std::invalid_argument);
}

TEST_CASE("h1 meets the MU bound at the 1/sqrt(2) boundary") {
    // The interior root exists just above the boundary and its value tends
    // to ln 2 there.
    const auto h1 = h_m_value(Overlap(kInvSqrt2 + 1e-6), 1);
    REQUIRE(h1.has_value());
    CHECK(std::abs(*h1 - std::log(2.0)) <= 1e-6);
}

TEST_CASE("crossover") {
    const double cs = crossover_cstar(1e-6);
    CHECK(cs >= 0.832);
    CHECK(cs <= 0.836);
    CHECK(cs == crossover_cstar(1e-6));  // deterministic
    CHECK(std::abs(cs - cached_cstar()) <= 2e-6);
    CHECK_THROWS_AS(crossover_cstar(0.0), std::invalid_argument);
    CHECK_THROWS_AS(crossover_cstar(-1e-3), std::invalid_argument);

    // orderings on either side of the crossover
    const auto below = h_m_value(Overlap(cs - 0.01), 1);
    REQUIRE(below.has_value());
    CHECK(f_bound(Overlap(cs - 0.01)) > *below);
    // above c* the transcendental candidate is absent (min over the empty
    // set is +infinity, so F is trivially the smaller candidate)
    CHECK(!h_m_value(Overlap(cs + 0.01), 1).has_value());
}

TEST_CASE("new_bound piecewise branches") {
    const BoundBreakdown at_half = new_bound(Overlap(0.5));
    CHECK(at_half.bound == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(at_half.bound == at_half.maassen_uffink);
    CHECK(at_half.active_branch == BoundBranch::MU);
    CHECK(at_half.h_m.size() == 4);  // M = 1..floor(1/c^2)

    const BoundBreakdown at_09 = new_bound(Overlap(0.9));
    CHECK(at_09.active_branch == BoundBranch::F);
    CHECK(at_09.bound == at_09.f_val);
    CHECK(!at_09.h1().has_value());

    const BoundBreakdown at_075 = new_bound(Overlap(0.75));
    CHECK(at_075.active_branch == BoundBranch::H1);
    CHECK(at_075.bound == doctest::Approx(0.6830575877093683).epsilon(1e-9));
    CHECK(at_075.bound > mu_bound(Overlap(0.75)));
}

TEST_CASE("new_bound equals MU exactly below 1/sqrt(2)") {
    for (int i = 1; i <= 200; ++i) {
        const double c = kInvSqrt2 * i / 201.0;
        const BoundBreakdown b = new_bound(Overlap(c));
        CHECK(b.bound == mu_bound(Overlap(c)));
        CHECK(b.active_branch == BoundBranch::MU);
    }
}

TEST_CASE("strict improvement over MU above 1/sqrt(2)") {
    auto rng = make_rng(1234);
    std::uniform_real_distribution<double> uc(kInvSqrt2 + 1e-6, 1.0 - 1e-6);
    for (int trial = 0; trial < 1000; ++trial) {
        const Overlap ov(uc(rng));
        CHECK(new_bound(ov).bound > mu_bound(ov) + 1e-9);
    }
}

TEST_CASE("the bound never drops below MU and stays positive for c < 1") {
    auto rng = make_rng(2468);
    std::uniform_real_distribution<double> uc(1e-4, 1.0 - 1e-9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Overlap ov(uc(rng));
        const BoundBreakdown b = new_bound(ov);
        CHECK(b.bound >= b.maassen_uffink);
        CHECK(b.bound > 0.0);
    }
    CHECK(new_bound(Overlap(1.0)).bound == 0.0);
}

TEST_CASE("breakdown minimum identity on the improvement region") {
    // final = max(MU, min over available candidates); valid on (1/sqrt2, 1]
    auto rng = make_rng(5678);
    std::uniform_real_distribution<double> uc(kInvSqrt2 + 1e-6, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const BoundBreakdown b = new_bound(Overlap(uc(rng)));
        double cand = std::min(b.f_val, b.g_val);
        for (const auto& [m, v] : b.h_m) {
            if (v) cand = std::min(cand, *v);
        }
        CHECK(b.bound == doctest::Approx(std::max(b.maassen_uffink, cand)).epsilon(1e-12));
    }
}

TEST_CASE("G dominates H1 below the crossover and F above it") {
    const double cs = cached_cstar();
    auto rng = make_rng(11);
    std::uniform_real_distribution<double> ulow(kInvSqrt2 + 1e-5, cs - 1e-5);
    std::uniform_real_distribution<double> uhigh(cs + 1e-5, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Overlap lo(ulow(rng));
        const auto h1 = h_m_value(lo, 1);
        REQUIRE(h1.has_value());
        CHECK(g_bound(lo) >= *h1 - 1e-9);

        const Overlap hi(uhigh(rng));
        CHECK(g_bound(hi) >= f_bound(hi) - 1e-9);  // G is never the strict minimum
    }
}

TEST_CASE("branch continuity at the case boundaries") {
    const double mu_at_boundary = new_bound(Overlap(kInvSqrt2)).bound;
    const double h1_near_boundary = new_bound(Overlap(kInvSqrt2 + 1e-6)).bound;
    CHECK(std::abs(mu_at_boundary - h1_near_boundary) <= 1e-4);

    const double cs = cached_cstar();
    const BoundBreakdown just_below = new_bound(Overlap(cs - 1e-6));
    const BoundBreakdown just_above = new_bound(Overlap(cs + 1e-6));
    CHECK(just_below.active_branch == BoundBranch::H1);
    CHECK(just_above.active_branch == BoundBranch::F);
    CHECK(std::abs(just_below.bound - just_above.bound) <= 1e-4);
}

TEST_CASE("new_bound stays finite right at the crossover") {
    // within rounding of c* the root pair may have merged; the bound must
    // come back as the common limit value rather than an error
    const double cs = cached_cstar();
    for (const double c : {cs, cs - 1e-12, cs - 1e-9}) {
        const BoundBreakdown b = new_bound(Overlap(c));
        CHECK(b.active_branch == BoundBranch::H1);
        CHECK(std::abs(b.bound - f_bound(Overlap(c))) <= 1e-6);
    }
}
