#include "sdcwalk/walk.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {
namespace {

constexpr std::array<Site, 4> kDisplacement{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

bool site_less(const SiteAmplitude& a, const SiteAmplitude& b) { return a.site < b.site; }

}  // namespace

Wavefunction::Wavefunction(std::int64_t step, std::vector<SiteAmplitude> entries)
    : step_(step), entries_(std::move(entries)) {
    if (step < 0) throw ValidationError("wavefunction step must be >= 0");
    std::sort(entries_.begin(), entries_.end(), site_less);
    const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                        [](const auto& a, const auto& b) { return a.site == b.site; });
    if (dup != entries_.end()) throw ValidationError("duplicate site in wavefunction");
}

Spinor Wavefunction::at(const Site& s) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                                     [](const SiteAmplitude& e, const Site& x) { return e.site < x; });
    if (it != entries_.end() && it->site == s) return it->amp;
    return Spinor::Zero();
}

double Wavefunction::norm_squared() const {
    double total = 0.0;
    for (const auto& e : entries_) total += e.amp.squaredNorm();
    return total;
}

bool Wavefunction::respects_light_cone(const Site& origin) const {
    const auto t = step_;
    return std::all_of(entries_.begin(), entries_.end(), [&](const SiteAmplitude& e) {
        const std::int64_t dm = e.site.m - origin.m;
        const std::int64_t dn = e.site.n - origin.n;
        return std::abs(dm) <= t && std::abs(dn) <= t && (dm - t) % 2 == 0 && (dn - t) % 2 == 0;
    });
}

InitialState InitialState::make(const Spinor& spinor, Site origin) {
    if (std::abs(spinor.norm() - 1.0) > 1e-12) throw ValidationError("initial spinor must have unit norm");
    return InitialState{spinor, origin};
}

Wavefunction InitialState::wavefunction() const { return Wavefunction(0, {{origin, spinor}}); }

InitialState default_initial_state() {
    const double r = 1.0 / std::sqrt(2.0);
    Spinor s;
    s << complex_t{r, 0.0}, complex_t{0.0, r}, 0.0, 0.0;
    return InitialState{s, Site{0, 0}};
}

Wavefunction apply_coin(const Wavefunction& psi, const CoinMatrix& c) {
    std::vector<SiteAmplitude> out(psi.entries_.begin(), psi.entries_.end());
    for (auto& e : out) e.amp = c.entries * e.amp;
    return Wavefunction(Wavefunction::Sorted{}, psi.step_, std::move(out));
}

Wavefunction apply_shift(const Wavefunction& psi) {
    // A translation keeps each component's site list sorted, so the four
    // shifted lists are merged rather than re-sorted.
    std::array<std::vector<SiteAmplitude>, 4> moved;
    for (std::size_t i = 0; i < 4; ++i) {
        moved[i].reserve(psi.entries_.size());
        for (const auto& e : psi.entries_) {
            const complex_t a = e.amp[static_cast<Eigen::Index>(i)];
            if (a == complex_t{}) continue;
            SiteAmplitude s{{e.site.m + kDisplacement[i].m, e.site.n + kDisplacement[i].n}, Spinor::Zero()};
            s.amp[static_cast<Eigen::Index>(i)] = a;
            moved[i].push_back(std::move(s));
        }
    }

    auto merge = [](const std::vector<SiteAmplitude>& a, const std::vector<SiteAmplitude>& b) {
        std::vector<SiteAmplitude> out;
        out.reserve(a.size() + b.size());
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() || j != b.end()) {
            if (j == b.end() || (i != a.end() && i->site < j->site)) {
                out.push_back(*i++);
            } else if (i == a.end() || j->site < i->site) {
                out.push_back(*j++);
            } else {
                // distinct components, so this is a placement, not a sum
                SiteAmplitude s{i->site, i->amp + j->amp};
                out.push_back(std::move(s));
                ++i;
                ++j;
            }
        }
        return out;
    };

    auto merged = merge(merge(moved[0], moved[1]), merge(moved[2], moved[3]));
    return Wavefunction(Wavefunction::Sorted{}, psi.step_ + 1, std::move(merged));
}

Wavefunction prune(const Wavefunction& psi, double threshold) {
    std::vector<SiteAmplitude> kept;
    kept.reserve(psi.entries_.size());
    for (const auto& e : psi.entries_) {
        if (e.amp.squaredNorm() >= threshold) kept.push_back(e);
    }
    return Wavefunction(Wavefunction::Sorted{}, psi.step_, std::move(kept));
}

Wavefunction step(const Wavefunction& psi, const CoinParams& params) {
    const CoinMatrix c = coin_matrix(params, psi.step() + 1);
    return prune(apply_shift(apply_coin(psi, c)));
}

void check_site_budget(std::int64_t steps, const EvolveOptions& options) {
    if (steps < 0) throw ValidationError("step count must be >= 0");
    const double worst = static_cast<double>(steps + 1) * static_cast<double>(steps + 1);
    if (worst > static_cast<double>(options.max_sites)) {
        throw ResourceError("evolution of " + std::to_string(steps) + " steps may need " +
                            std::to_string(static_cast<long long>(worst)) + " sites, budget is " +
                            std::to_string(options.max_sites));
    }
}

void evolve_each(const InitialState& init, const CoinParams& params, std::int64_t steps,
                 const std::function<void(const Wavefunction&)>& visit, const EvolveOptions& options) {
    check_site_budget(steps, options);
    Wavefunction psi = init.wavefunction();
    visit(psi);
    for (std::int64_t t = 1; t <= steps; ++t) {
        psi = step(psi, params);
        visit(psi);
    }
}

std::vector<Wavefunction> evolve(const InitialState& init, const CoinParams& params, std::int64_t steps,
                                 const EvolveOptions& options) {
    std::vector<Wavefunction> out;
    if (options.snapshot_only) {
        evolve_each(
            init, params, steps, [&](const Wavefunction& psi) { if (psi.step() == steps) out.push_back(psi); },
            options);
    } else {
        out.reserve(static_cast<std::size_t>(steps) + 1);
        evolve_each(init, params, steps, [&](const Wavefunction& psi) { out.push_back(psi); }, options);
    }
    return out;
}

}  // namespace sdcwalk
