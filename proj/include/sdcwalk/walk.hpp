#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sdcwalk/coin.hpp"
#include "sdcwalk/types.hpp"

namespace sdcwalk {

struct SiteAmplitude {
    Site site;
    Spinor amp;
};

// Walker state at a given step: a sparse map from lattice sites to the four
// coin amplitudes, stored as a vector sorted by site. Sites absent from the
// map carry zero amplitude.
class Wavefunction {
public:
    Wavefunction() = default;

    // Entries need not be sorted; duplicate sites are rejected.
    Wavefunction(std::int64_t step, std::vector<SiteAmplitude> entries);

    std::int64_t step() const noexcept { return step_; }
    std::span<const SiteAmplitude> entries() const noexcept { return entries_; }
    std::size_t site_count() const noexcept { return entries_.size(); }

    // Zero spinor when the site is absent.
    Spinor at(const Site& s) const;

    double norm_squared() const;

    // Every site within the light cone of `origin`: |dm|, |dn| <= step and
    // dm = dn = step (mod 2).
    bool respects_light_cone(const Site& origin) const;

private:
    friend Wavefunction apply_coin(const Wavefunction&, const CoinMatrix&);
    friend Wavefunction apply_shift(const Wavefunction&);
    friend Wavefunction prune(const Wavefunction&, double);

    struct Sorted {};
    Wavefunction(Sorted, std::int64_t step, std::vector<SiteAmplitude> entries)
        : step_(step), entries_(std::move(entries)) {}

    std::int64_t step_ = 0;
    std::vector<SiteAmplitude> entries_;
};

struct InitialState {
    Spinor spinor;
    Site origin;

    // Throws ValidationError unless ||spinor|| = 1 within 1e-12.
    static InitialState make(const Spinor& spinor, Site origin = {});

    Wavefunction wavefunction() const;
};

// (1, i, 0, 0)/sqrt(2) at the origin.
InitialState default_initial_state();

inline constexpr double kPruneThreshold = 1e-30;

// Multiplies every site's spinor by the coin.
Wavefunction apply_coin(const Wavefunction& psi, const CoinMatrix& c);

// Moves component 0 by (1,1), 1 by (1,-1), 2 by (-1,1), 3 by (-1,-1) and
// advances the step counter. Zero components do not create sites.
Wavefunction apply_shift(const Wavefunction& psi);

// Drops sites whose total probability is below `threshold`.
Wavefunction prune(const Wavefunction& psi, double threshold = kPruneThreshold);

// One walk step S (C_t x I) with t = psi.step() + 1, followed by pruning.
Wavefunction step(const Wavefunction& psi, const CoinParams& params);

struct EvolveOptions {
    bool snapshot_only = false;
    // Worst-case number of stored sites, (steps + 1)^2, must not exceed this.
    std::size_t max_sites = std::size_t{1} << 24;
};

// Throws ResourceError when `steps` cannot fit within options.max_sites.
void check_site_budget(std::int64_t steps, const EvolveOptions& options);

// Calls `visit` with Psi(0), Psi(1), ..., Psi(steps) without keeping the trajectory.
void evolve_each(const InitialState& init, const CoinParams& params, std::int64_t steps,
                 const std::function<void(const Wavefunction&)>& visit,
                 const EvolveOptions& options = {});

// [Psi(0), ..., Psi(steps)], or just [Psi(steps)] in snapshot mode.
std::vector<Wavefunction> evolve(const InitialState& init, const CoinParams& params, std::int64_t steps,
                                 const EvolveOptions& options = {});

}  // namespace sdcwalk
