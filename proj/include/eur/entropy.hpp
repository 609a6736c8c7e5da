// entropy.hpp — Shannon entropy and minimal-entropy distributions at fixed maximum probability
#pragma once

#include <cstddef>
#include <vector>

namespace eur {

// A finite discrete probability distribution. Construction validates that
// entries are non-negative (values above -1e-12 are clamped to zero, anything
// more negative is rejected) and that they sum to one within 1e-10.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> entries);

    const std::vector<double>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    double max_entry() const noexcept;

private:
    std::vector<double> entries_;
};

// -sum p_i ln p_i in nats, with 0 ln 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

// The unique M with M <= 1/P < M+1. A 1e-12 snap-to-integer guard maps
// near-integer 1/P (e.g. 1/(1.0/93) = 92.99999999999999) to the integer.
int multiplicity_for(double max_prob);

// Dimension-free minimal entropy over distributions with maximum max_prob:
// -M P ln P - (1 - M P) ln(1 - M P) with M = multiplicity_for(max_prob).
double min_entropy_at_max(double max_prob);

// The minimal-entropy shape at fixed maximum: M copies of P, one residual
// entry 1 - M P, and zeros.
struct MinEntropyProfile {
    double max_prob = 0.0;
    int multiplicity = 0;
    int dimension = 0;
    double entropy = 0.0;  // nats

    // The explicit minimizing distribution of length `dimension`. The
    // residual entry is omitted when multiplicity == dimension (M P = 1).
    ProbabilityVector distribution() const;
};

MinEntropyProfile min_entropy_given_max(double max_prob, int dimension);

// H_min(P_A) + H_min(P_B); symmetric in its arguments.
double entropy_sum_functional(double p_a, double p_b);

}  // namespace eur
