#include "sdcwalk/harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "sdcwalk/entropy.hpp"
#include "sdcwalk/localization.hpp"
#include "sdcwalk/harness/output.hpp"
#include "sdcwalk/harness/svg.hpp"

namespace sdcwalk::harness {
namespace {

using json = nlohmann::ordered_json;

const char* walk_name(CoinMode m) { return m == CoinMode::SDC ? "sdc" : "sic"; }

json angle_json(const Angle& a, const std::string& expr) {
    json j;
    j["expr"] = expr;
    j["radians"] = a.value();
    j["pi_multiple"] = a.is_exact() ? json(a.pi_multiple()->str()) : json();
    return j;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }

class Emitter {
public:
    explicit Emitter(const RunSpec& spec) : spec_(spec) {}

    void table(const std::string& name, const Table& t, const std::string& kind) {
        if (spec_.format == OutputFormat::Json) {
            put(name + ".json", to_json(t), kind, t.rows.size());
        } else {
            put(name + ".csv", to_csv(t), kind, t.rows.size());
        }
    }

    void plot(const std::string& name, const std::string& svg) {
        if (spec_.format == OutputFormat::Svg) put(name + ".svg", svg, "plot", 0);
    }

    const json& outputs() const { return outputs_; }

private:
    void put(const std::string& file, const std::string& contents, const std::string& kind, std::size_t rows) {
        const auto path = spec_.out_dir / file;
        write_file(path, contents);
        json o;
        o["path"] = path.generic_string();
        o["kind"] = kind;
        o["rows"] = rows;
        outputs_.push_back(std::move(o));
    }

    const RunSpec& spec_;
    json outputs_ = json::array();
};

EvolveOptions evolve_options(const RunSpec& spec) {
    EvolveOptions o;
    o.max_sites = spec.max_sites;
    return o;
}

Table probability_table() { return Table{{"walk", "t", "m", "n", "p"}, {}}; }

void add_probability_rows(Table& t, const char* walk, const ProbabilityField& f) {
    for (const auto& [site, p] : f.values) t.add({std::string(walk), f.step, std::int64_t{site.m}, std::int64_t{site.n}, p});
}

json field_metrics(const Wavefunction& psi, const RunSpec& spec) {
    const auto f = probability_field(psi);
    int radius = 0;
    for (const auto& [s, p] : f.values) {
        if (p > spec.tol.support) {
            radius = std::max({radius, std::abs(s.m - spec.init.origin.m), std::abs(s.n - spec.init.origin.n)});
        }
    }
    json j;
    j["t"] = psi.step();
    j["support_count"] = support_count(f, spec.tol.support);
    j["radius"] = radius;
    j["total_probability"] = f.total();
    j["return_probability"] = return_probability(f, spec.init.origin);
    j["shannon_position"] = shannon_position(f, spec.shannon_base);
    j["entanglement"] = entanglement(reduced_density(psi), spec.tol.zero);
    return j;
}

json run_probability(const RunSpec& spec, Emitter& out) {
    Table t = probability_table();
    std::vector<HeatmapPanel> panels;
    json results = json::object();
    for (CoinMode mode : spec.modes()) {
        Wavefunction last;
        evolve_each(
            spec.init, spec.params.with_mode(mode), spec.steps,
            [&](const Wavefunction& psi) {
                const bool keep = psi.step() == spec.steps || (spec.every > 0 && psi.step() % spec.every == 0);
                if (keep) add_probability_rows(t, walk_name(mode), probability_field(psi));
                if (psi.step() == spec.steps) last = psi;
            },
            evolve_options(spec));
        results[walk_name(mode)] = field_metrics(last, spec);
        panels.push_back({std::string(walk_name(mode)) + ", t = " + std::to_string(spec.steps), probability_field(last).values});
    }
    out.table("probability", t, "probability");
    out.plot("probability", render_heatmaps("Probability distribution", panels));
    return results;
}

// Per-walk scalar series through evolve_each.
template <typename F>
json run_walk_series(const RunSpec& spec, Emitter& out, const std::string& name, const std::string& y_label, F value) {
    Table t{{"walk", "t", "value"}, {}};
    LinePlot plot{name, "t", y_label, false, {}};
    json results = json::object();
    for (CoinMode mode : spec.modes()) {
        PlotSeries s{walk_name(mode), {}, {}};
        double lo = kInfinity, hi = -kInfinity;
        evolve_each(
            spec.init, spec.params.with_mode(mode), spec.steps,
            [&](const Wavefunction& psi) {
                const double v = value(psi);
                t.add({std::string(walk_name(mode)), psi.step(), v});
                s.x.push_back(static_cast<double>(psi.step()));
                s.y.push_back(v);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            },
            evolve_options(spec));
        json r;
        r["min"] = lo;
        r["max"] = hi;
        r["final"] = s.y.back();
        results[walk_name(mode)] = r;
        plot.series.push_back(std::move(s));
    }
    out.table(name, t, "series");
    out.plot(name, render(plot));
    return results;
}

void add_series(Table& t, LinePlot& plot, const char* walk, const TimeSeries& s) {
    PlotSeries ps{walk, {}, {}};
    for (const auto& p : s.points) {
        t.add({std::string(walk), p.t, p.value});
        ps.x.push_back(static_cast<double>(p.t));
        ps.y.push_back(p.value);
    }
    plot.series.push_back(std::move(ps));
}

json series_stats(const TimeSeries& s) {
    json r;
    double lo = kInfinity, hi = -kInfinity;
    for (const auto& p : s.points) lo = std::min(lo, p.value), hi = std::max(hi, p.value);
    r["min"] = finite_or_null(lo);
    r["max"] = finite_or_null(hi);
    r["final"] = s.points.empty() ? json() : json(s.points.back().value);
    return r;
}

EntropySeries series_for(const RunSpec& spec) {
    SeriesOptions o;
    o.qre.zero_tol = spec.tol.zero;
    o.qre.smoothing_eps = spec.tol.smoothing_eps;
    o.evolve = evolve_options(spec);
    o.shannon_base = spec.shannon_base;
    return entropy_series(spec.params, spec.init, spec.steps, o);
}

json run_shannon(const RunSpec& spec, Emitter& out) {
    const auto s = series_for(spec);
    json results = json::object();
    struct Quantity {
        const char* name;
        const TimeSeries* sdc;
        const TimeSeries* sic;
    };
    for (const auto& q : {Quantity{"shannon_position", &s.shannon_position_sdc, &s.shannon_position_sic},
                          Quantity{"shannon_coin", &s.shannon_coin_sdc, &s.shannon_coin_sic}}) {
        Table t{{"walk", "t", "value"}, {}};
        LinePlot plot{q.name, "t", spec.shannon_base == LogBase::Two ? "entropy (bits)" : "entropy (nats)", false, {}};
        json r = json::object();
        for (CoinMode mode : spec.modes()) {
            const TimeSeries& ts = mode == CoinMode::SDC ? *q.sdc : *q.sic;
            add_series(t, plot, walk_name(mode), ts);
            r[walk_name(mode)] = series_stats(ts);
        }
        out.table(q.name, t, "series");
        out.plot(q.name, render(plot));
        results[q.name] = r;
    }
    return results;
}

json run_entanglement(const RunSpec& spec, Emitter& out) {
    const auto s = series_for(spec);
    Table t{{"walk", "t", "value"}, {}};
    LinePlot plot{"entanglement", "t", "E (nats)", false, {}};
    json results = json::object();
    for (CoinMode mode : spec.modes()) {
        const TimeSeries& ts = mode == CoinMode::SDC ? s.entanglement_sdc : s.entanglement_sic;
        add_series(t, plot, walk_name(mode), ts);
        results[walk_name(mode)] = series_stats(ts);
    }
    out.table("entanglement", t, "series");
    out.plot("entanglement", render(plot));
    return results;
}

json run_qre(const RunSpec& spec, Emitter& out) {
    const auto s = series_for(spec);
    json results = json::object();
    for (const auto* ts : {&s.qre_d, &s.qre_v}) {
        const std::string name = ts == &s.qre_d ? "qre_d" : "qre_v";
        Table t{{"walk", "t", "value"}, {}};
        LinePlot plot{ts->label, "t", name == "qre_d" ? "D (nats)" : "V", false, {}};
        add_series(t, plot, "sdc||sic", *ts);
        out.table(name, t, "series");
        out.plot(name, render(plot));
        results[name] = series_stats(*ts);
    }
    results["support_violation_steps"] = s.support_violation_steps;
    results["zero_variance_steps"] = s.zero_variance_steps;
    return results;
}

json peaks_json(const std::vector<double>& omega, const std::vector<double>& value) {
    // all grid points attaining the maximum
    json j = json::object();
    const double peak = *std::max_element(value.begin(), value.end());
    json at = json::array();
    for (std::size_t i = 0; i < value.size(); ++i)
        if (value[i] == peak) at.push_back(omega[i]);
    j["value"] = finite_or_null(peak);
    j["infinite"] = std::isinf(peak);
    j["omega"] = at;
    return j;
}

json run_lyapunov(const RunSpec& spec, Emitter& out) {
    const auto grid = make_grid(spec.grid->min, spec.grid->max, spec.grid->step);
    json results = json::object();
    LinePlot plot{"Localization length", "omega", "l_loc", true, {}};
    for (CoinMode mode : spec.modes()) {
        const auto sweep = lloc_sweep(spec.params.with_mode(mode), grid, spec.steps, spec.threads, spec.tol.pole);
        Table t{{"omega", "lambda", "l_loc", "divergent"}, {}};
        PlotSeries ps{walk_name(mode), {}, {}};
        std::vector<double> lloc;
        std::size_t divergent = 0;
        for (const auto& r : sweep) {
            t.add({r.omega, r.lambda, r.l_loc, r.divergent});
            ps.x.push_back(r.omega);
            ps.y.push_back(r.l_loc);
            lloc.push_back(r.l_loc);
            divergent += r.divergent ? 1 : 0;
        }
        const std::string name = std::string("lyapunov-sweep_") + walk_name(mode);
        out.table(name, t, "sweep");
        json r;
        r["points"] = sweep.size();
        r["divergent_points"] = divergent;
        r["peak"] = peaks_json(grid, lloc);
        results[walk_name(mode)] = r;
        plot.series.push_back(std::move(ps));
    }
    out.plot("lyapunov-sweep", render(plot));
    return results;
}

json run_analytic(const RunSpec& spec, Emitter& out) {
    const auto grid = make_grid(spec.grid->min, spec.grid->max, spec.grid->step);
    Sec2Options o;
    o.n_max = spec.tol.n_max;
    const auto curve = analytic_lloc_curve(spec.params, grid, o);
    const bool divergent = !sec2_average(spec.params.theta1, o) || !sec2_average(spec.params.theta2, o);
    Table t{{"omega", "l_loc", "l_loc_normalized", "divergent"}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) t.add({grid[i], curve.raw[i], curve.normalized[i], divergent});
    out.table("analytic-lloc", t, "analytic");
    out.plot("analytic-lloc", render(LinePlot{"Analytic localization length (normalized)", "omega", "l_loc / max", false,
                                              {PlotSeries{"analytic", grid, curve.normalized}}}));
    json r;
    r["divergent"] = divergent;
    r["peak"] = peaks_json(grid, curve.raw);
    return r;
}

json run_categories(const RunSpec& spec, Emitter& out) {
    Table metrics{{"j", "theta", "walk", "t", "support_count", "radius", "return_probability", "shannon_position",
                   "entanglement"},
                  {}};
    json results = json::array();
    for (std::int64_t j = 1; j <= 10; ++j) {
        // theta = pi/3 (1 + j/10)
        const Angle theta = Angle::pi_times(Rational(10 + j, 30));
        CoinParams params{theta, theta, spec.params.phi, CoinMode::SDC};
        Table probs = probability_table();
        std::vector<HeatmapPanel> panels;
        json entry;
        entry["j"] = j;
        entry["theta"] = angle_json(theta, "pi/3*(1+" + std::to_string(j) + "/10)");
        for (CoinMode mode : spec.modes()) {
            EvolveOptions eo = evolve_options(spec);
            eo.snapshot_only = true;
            const auto psi = evolve(spec.init, params.with_mode(mode), spec.steps, eo).back();
            const auto f = probability_field(psi);
            add_probability_rows(probs, walk_name(mode), f);
            const json m = field_metrics(psi, spec);
            metrics.add({j, theta.value(), std::string(walk_name(mode)), psi.step(),
                         m["support_count"].get<std::int64_t>(), m["radius"].get<std::int64_t>(),
                         m["return_probability"].get<double>(), m["shannon_position"].get<double>(),
                         m["entanglement"].get<double>()});
            entry[walk_name(mode)] = m;
            panels.push_back({walk_name(mode), f.values});
        }
        char name[32];
        std::snprintf(name, sizeof name, "categories_j%02lld", static_cast<long long>(j));
        out.table(name, probs, "probability");
        out.plot(name, render_heatmaps("theta = pi/3 (1 + " + std::to_string(j) + "/10), t = " +
                                           std::to_string(spec.steps), panels));
        results.push_back(std::move(entry));
    }
    out.table("categories_metrics", metrics, "metrics");
    return results;
}

json run_experiment(const RunSpec& spec, Emitter& out) {
    switch (spec.experiment) {
        case Experiment::Probability: return run_probability(spec, out);
        case Experiment::Support:
            return run_walk_series(spec, out, "support", "support count", [&](const Wavefunction& psi) {
                return static_cast<double>(support_count(probability_field(psi), spec.tol.support));
            });
        case Experiment::ReturnProb:
            return run_walk_series(spec, out, "return-prob", "P(origin)", [&](const Wavefunction& psi) {
                return return_probability(probability_field(psi), spec.init.origin);
            });
        case Experiment::Shannon: return run_shannon(spec, out);
        case Experiment::Entanglement: return run_entanglement(spec, out);
        case Experiment::Qre: return run_qre(spec, out);
        case Experiment::LyapunovSweep: return run_lyapunov(spec, out);
        case Experiment::AnalyticLloc: return run_analytic(spec, out);
        case Experiment::Categories: return run_categories(spec, out);
    }
    return json();
}

}  // namespace

json run(const RunSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    Emitter out(spec);
    json results = run_experiment(spec, out);
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

    json s;
    s["schema_version"] = 1;
    s["experiment"] = to_string(spec.experiment);
    s["params"] = {{"theta1", angle_json(spec.params.theta1, spec.theta1_text)},
                   {"theta2", angle_json(spec.params.theta2, spec.theta2_text)},
                   {"phi", angle_json(spec.params.phi, spec.phi_text)}};
    json walks = json::array();
    for (CoinMode m : spec.modes()) walks.push_back(walk_name(m));
    s["walks"] = walks;
    s["steps"] = spec.steps;
    json spinor = json::array();
    for (Eigen::Index i = 0; i < 4; ++i) spinor.push_back({spec.init.spinor[i].real(), spec.init.spinor[i].imag()});
    s["initial_state"] = {{"spinor", spinor}, {"origin", {spec.init.origin.m, spec.init.origin.n}}};
    if (spec.grid) {
        s["grid"] = {{"min", spec.grid->min},
                     {"max", spec.grid->max},
                     {"step", spec.grid->step},
                     {"points", make_grid(spec.grid->min, spec.grid->max, spec.grid->step).size()}};
    } else {
        s["grid"] = nullptr;
    }
    s["tolerances"] = {{"support", spec.tol.support},
                       {"pole", spec.tol.pole},
                       {"zero", spec.tol.zero},
                       {"smoothing_eps", spec.tol.smoothing_eps ? json(*spec.tol.smoothing_eps) : json()},
                       {"n_max", spec.tol.n_max}};
    s["shannon_log_base"] = spec.shannon_base == LogBase::Two ? "2" : "e";
    s["max_sites"] = spec.max_sites;
    s["threads"] = spec.threads;
    s["format"] = to_string(spec.format);
    s["outputs"] = out.outputs();
    s["results"] = std::move(results);
    s["wall_time_seconds"] = wall.count();
    return s;
}

}  // namespace sdcwalk::harness
