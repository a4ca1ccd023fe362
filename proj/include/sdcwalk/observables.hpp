#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdcwalk/walk.hpp"

namespace sdcwalk {

struct ProbabilityField {
    std::int64_t step = 0;
    std::vector<std::pair<Site, double>> values;  // sorted by site

    double total() const;
};

// Step-indexed scalar diagnostic. push() enforces strictly increasing t and
// finite values.
struct TimeSeries {
    struct Point {
        std::int64_t t;
        double value;
    };

    std::string label;
    std::vector<Point> points;

    void push(std::int64_t t, double value);
};

enum class LogBase { Natural, Two };

inline constexpr double kDefaultSupportThreshold = 1e-12;

ProbabilityField probability_field(const Wavefunction& psi);

std::size_t support_count(const ProbabilityField& field, double threshold = kDefaultSupportThreshold);

// P at `origin`, 0 when the site is not stored.
double return_probability(const ProbabilityField& field, const Site& origin = {});

// -sum P log P over sites with P > 0.
double shannon_position(const ProbabilityField& field, LogBase base = LogBase::Natural);

// Entropy of the coin-label marginal P_i = sum_x |A_x^(i)|^2, with 0 log 0 = 0.
double shannon_coin(const Wavefunction& psi, LogBase base = LogBase::Natural);

}  // namespace sdcwalk
