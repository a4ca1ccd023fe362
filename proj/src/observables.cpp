#include "sdcwalk/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {
namespace {

double log_in(LogBase base, double x) { return base == LogBase::Two ? std::log2(x) : std::log(x); }

}  // namespace

double ProbabilityField::total() const {
    double sum = 0.0;
    for (const auto& [site, p] : values) sum += p;
    return sum;
}

void TimeSeries::push(std::int64_t t, double value) {
    if (!std::isfinite(value)) throw ValidationError("time series '" + label + "': non-finite value");
    if (!points.empty() && t <= points.back().t) {
        throw ValidationError("time series '" + label + "': t must be strictly increasing");
    }
    points.push_back({t, value});
}

ProbabilityField probability_field(const Wavefunction& psi) {
    ProbabilityField f;
    f.step = psi.step();
    f.values.reserve(psi.site_count());
    for (const auto& e : psi.entries()) f.values.emplace_back(e.site, e.amp.squaredNorm());
    return f;
}

std::size_t support_count(const ProbabilityField& field, double threshold) {
    if (threshold < 0.0) throw ValidationError("support threshold must be >= 0");
    return static_cast<std::size_t>(std::count_if(field.values.begin(), field.values.end(),
                                                  [&](const auto& v) { return v.second > threshold; }));
}

double return_probability(const ProbabilityField& field, const Site& origin) {
    const auto it = std::lower_bound(field.values.begin(), field.values.end(), origin,
                                     [](const auto& v, const Site& s) { return v.first < s; });
    if (it != field.values.end() && it->first == origin) return it->second;
    return 0.0;
}

double shannon_position(const ProbabilityField& field, LogBase base) {
    double s = 0.0;
    std::size_t occupied = 0;
    for (const auto& [site, p] : field.values) {
        if (p > 0.0) {
            s -= p * log_in(base, p);
            ++occupied;
        }
    }
    // a single occupied site gives -1*log(1 +- eps); report the exact zero
    if (occupied <= 1) return 0.0;
    return std::max(s, 0.0);
}

double shannon_coin(const Wavefunction& psi, LogBase base) {
    std::array<double, 4> marginal{};
    for (const auto& e : psi.entries()) {
        for (Eigen::Index i = 0; i < 4; ++i) marginal[static_cast<std::size_t>(i)] += std::norm(e.amp[i]);
    }
    double s = 0.0;
    for (double p : marginal) {
        if (p > 0.0) s -= p * log_in(base, p);
    }
    return std::max(s, 0.0);
}

}  // namespace sdcwalk
