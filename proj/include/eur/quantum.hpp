// quantum.hpp — Haar-random bases and states, Born-rule probabilities, and
// Monte Carlo validation of the entropic bound against actual quantum states
#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "eur/entropy.hpp"
#include "eur/lp_geometry.hpp"

namespace eur {

// Unit-norm state vector, expressed in the A eigenbasis.
class PureState {
public:
    explicit PureState(Eigen::VectorXcd amplitudes);

    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    int dimension() const noexcept { return static_cast<int>(amplitudes_.size()); }

private:
    Eigen::VectorXcd amplitudes_;
};

// Two orthonormal bases via their transition matrix U[i][j] = <a_i|b_j>;
// construction verifies unitarity to 1e-10 entrywise.
class BasisPair {
public:
    explicit BasisPair(Eigen::MatrixXcd transition);

    const Eigen::MatrixXcd& transition() const noexcept { return u_; }
    int dimension() const noexcept { return static_cast<int>(u_.rows()); }

private:
    Eigen::MatrixXcd u_;
};

enum class Side { A, B };

// Born-rule outcome probabilities of measuring `state` in one basis of the
// pair: |psi_i|^2 on side A, |(U^dagger psi)_j|^2 on side B.
ProbabilityVector born_probabilities(const PureState& state, const BasisPair& pair,
                                     Side side);

// c = max entrywise modulus of the transition matrix.
Overlap overlap_of(const BasisPair& pair);

// Haar-distributed random basis pair: QR of a complex Gaussian matrix with
// the R-diagonal phase correction. Deterministic for a fixed seed.
BasisPair haar_random_pair(int dimension, std::uint64_t seed);

// Discrete-Fourier pair: complementary bases with all |<a_i|b_j>| = 1/sqrt(N).
BasisPair fourier_pair(int dimension);

// The 2x2 rotation [[c, s], [-s, c]] with s = sqrt(1-c^2); its overlap is
// exactly c, which requires c >= 1/sqrt(2).
BasisPair qubit_pair_with_overlap(double c);

PureState haar_random_state(int dimension, std::mt19937_64& rng);

struct McReport {
    long long states = 0;
    double bound = 0.0;            // the piecewise bound checked against
    double min_entropy_sum = 0.0;
    double min_bound_slack = 0.0;  // min over states of H(A)+H(B) - bound
    double min_lp_slack = 0.0;     // min over states of lp_lhs - theta
    long long violations = 0;
    bool pass = false;
    std::optional<Eigen::VectorXcd> offending_state;  // first violator, if any
};

// Draws `states` Haar-random pure states and checks each against the
// entropic bound (tolerance 1e-9) and the Landau-Pollak relation
// (tolerance 1e-12). Shards deterministically over `workers` threads.
McReport verify_bound_mc(const BasisPair& pair, long long states, std::uint64_t seed,
                         int workers = 1);

// Numerical minimum of H(A)+H(B) over pure qubit states for the rotation
// pair with overlap c, by multi-start coordinate descent on the two-angle
// state parameterization (cos(x/2), e^{i phi} sin(x/2)).
double qubit_min_entropy_sum(double c, int restarts, std::uint64_t seed);

}  // namespace eur
