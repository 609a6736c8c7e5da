#include "eur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace eur {

namespace {
constexpr double kNegativeEntryTol = 1e-12;
constexpr double kSumTol = 1e-10;
constexpr double kIntegerSnap = 1e-12;
}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("probability vector needs at least one entry");
    }
    double sum = 0.0;
    for (double& p : entries_) {
        if (!(p >= -kNegativeEntryTol)) {  // also rejects NaN
            throw std::invalid_argument("probability entry " + std::to_string(p) +
                                        " is negative");
        }
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
    }
}

double ProbabilityVector::max_entry() const noexcept {
    return *std::max_element(entries_.begin(), entries_.end());
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double q : p.entries()) {
        if (q > 0.0) h -= q * std::log(q);
    }
    return h < 0.0 ? 0.0 : h;
}

int multiplicity_for(double max_prob) {
    if (!(max_prob > 0.0) || max_prob > 1.0) {
        throw std::invalid_argument("maximum probability must lie in (0, 1]");
    }
    const double inv = 1.0 / max_prob;
    const double nearest = std::round(inv);
    const double m = (std::abs(inv - nearest) < kIntegerSnap) ? nearest : std::floor(inv);
    if (m > static_cast<double>(std::numeric_limits<int>::max())) {
        throw std::domain_error("multiplicity 1/P exceeds integer range");
    }
    return static_cast<int>(m);
}

double min_entropy_at_max(double max_prob) {
    const int m = multiplicity_for(max_prob);
    const double mp = m * max_prob;
    const double tail = 1.0 - mp;
    double h = -mp * std::log(max_prob);
    if (tail > 0.0) h -= tail * std::log(tail);  // 0 ln 0 = 0
    return h;
}

ProbabilityVector MinEntropyProfile::distribution() const {
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < multiplicity; ++i) p.push_back(max_prob);
    if (multiplicity < dimension) {
        p.push_back(std::max(0.0, 1.0 - multiplicity * max_prob));
        for (int i = multiplicity + 1; i < dimension; ++i) p.push_back(0.0);
    }
    return ProbabilityVector(std::move(p));
}

MinEntropyProfile min_entropy_given_max(double max_prob, int dimension) {
    if (dimension < 1) {
        throw std::invalid_argument("dimension must be a positive integer");
    }
    if (!(max_prob > 0.0) || max_prob > 1.0) {
        throw std::invalid_argument("maximum probability must lie in (0, 1]");
    }
    if (max_prob < 1.0 / dimension - kIntegerSnap) {
        throw std::invalid_argument("no distribution of length " +
                                    std::to_string(dimension) +
                                    " has maximum below 1/N");
    }
    MinEntropyProfile profile;
    profile.max_prob = max_prob;
    profile.multiplicity = std::min(multiplicity_for(max_prob), dimension);
    profile.dimension = dimension;
    profile.entropy = min_entropy_at_max(max_prob);
    return profile;
}

double entropy_sum_functional(double p_a, double p_b) {
    if (!(p_a > 0.0) || p_a > 1.0 || !(p_b > 0.0) || p_b > 1.0) {
        throw std::invalid_argument("maximum probabilities must lie in (0, 1]");
    }
    return min_entropy_at_max(p_a) + min_entropy_at_max(p_b);
}

}  // namespace eur
