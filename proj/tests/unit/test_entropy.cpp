#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sdcwalk/entropy.hpp"
#include "sdcwalk/errors.hpp"
#include "support/oracles.hpp"

using namespace sdcwalk;

namespace {

ReducedDensity density(const Matrix4& m, std::int64_t step = 0) { return ReducedDensity{m, step}; }

Matrix4 diag(double a, double b, double c, double d) {
    Eigen::Vector4cd v(a, b, c, d);
    return v.asDiagonal();
}

const Angle kQuarter = Angle::pi_times(Rational(1, 4));

}  // namespace

TEST_CASE("reduced_density") {
    SUBCASE("initial product state is the projector onto the spinor") {
        const auto init = default_initial_state();
        const auto r = reduced_density(init.wavefunction());
        CHECK(max_abs(r.matrix - init.spinor * init.spinor.adjoint()) == 0.0);
        CHECK(eig_hermitian(r.matrix).values[3] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("matches a brute-force outer-product sum over the dense grid") {
        const CoinParams p{Angle::radians(0.9), Angle::radians(0.35), Angle::radians(0.2)};
        oracle::DenseWalk dense(6, default_initial_state().spinor);
        Wavefunction psi = default_initial_state().wavefunction();
        for (int t = 1; t <= 6; ++t) {
            psi = step(psi, p);
            dense.advance(0.9, 0.35, 0.2, false);
            Matrix4 ref = Matrix4::Zero();
            for (int m = -6; m <= 6; ++m)
                for (int n = -6; n <= 6; ++n)
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) ref(i, j) += dense.at(m, n, i) * std::conj(dense.at(m, n, j));
            const auto r = reduced_density(psi);
            REQUIRE(max_abs(r.matrix - ref) <= 1e-13);
            REQUIRE(r.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("localized state at t = 2 for theta = pi/4 is pure") {
        const auto snap = evolve(default_initial_state(), symmetric_params(kQuarter), 2, {true});
        const auto r = reduced_density(snap[0]);
        CHECK(eig_hermitian(r.matrix).values[3] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(entanglement(r) <= 1e-12);
    }
}

TEST_CASE("entanglement closed forms") {
    CHECK(entanglement(density(diag(1, 0, 0, 0))) == 0.0);
    CHECK(entanglement(density(Matrix4::Identity() / 4.0)) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
    CHECK(entanglement(density(diag(0.5, 0.5, 0, 0))) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("qre closed forms") {
    SUBCASE("rho = sigma") {
        std::mt19937_64 rng(4);
        const Matrix4 m = oracle::random_density(rng);
        const auto q = qre(density(m), density(m));
        CHECK(std::abs(q.d) <= 1e-12);
        CHECK(std::abs(q.v) <= 1e-12);
        CHECK_FALSE(q.support_violation);
    }
    SUBCASE("pure vs maximally mixed") {
        const auto q = qre(density(diag(1, 0, 0, 0)), density(Matrix4::Identity() / 4.0));
        CHECK(q.d == doctest::Approx(std::log(4.0)).epsilon(1e-14));
        CHECK(std::abs(q.v) <= 1e-14);
        CHECK(q.zero_variance_event());
    }
    SUBCASE("support violation") {
        const auto q = qre(density(diag(0.5, 0.5, 0, 0)), density(diag(1, 0, 0, 0)));
        CHECK(q.support_violation);
        CHECK(std::isinf(q.d));
        CHECK(std::isnan(q.v));
        CHECK_FALSE(q.zero_variance_event());
    }
    SUBCASE("smoothing removes the violation") {
        QreOptions opts;
        opts.smoothing_eps = 1e-9;
        const auto q = qre(density(diag(0.5, 0.5, 0, 0)), density(diag(1, 0, 0, 0)), opts);
        CHECK_FALSE(q.support_violation);
        CHECK(std::isfinite(q.d));
        CHECK(q.d > 0.0);
    }
    SUBCASE("rho supported inside a singular sigma is fine") {
        const auto q = qre(density(diag(1, 0, 0, 0)), density(diag(0.5, 0.5, 0, 0)));
        CHECK_FALSE(q.support_violation);
        CHECK(q.d == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(qre(density(diag(1, 0, 0, 0), 3), density(diag(1, 0, 0, 0), 4)), ValidationError);
}

TEST_CASE("qre properties on random pairs") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 100; ++k) {
        const Matrix4 rho = oracle::random_density(rng);
        const Matrix4 sigma = oracle::random_density(rng);
        const auto q = qre(density(rho), density(sigma));
        REQUIRE_FALSE(q.support_violation);
        REQUIRE(q.d >= -1e-9);

        const auto direct = oracle::direct_qre(rho, sigma);
        REQUIRE(std::abs(q.d - direct.d) <= 1e-9);
        REQUIRE(std::abs(q.v - direct.v) <= 1e-8);

        for (int i = 0; i < 4; ++i) REQUIRE(q.overlap.row(i).sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("entropy_series") {
    SUBCASE("D vanishes at t = 0 and t = 1") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> angle(-3.0, 3.0);
        for (int k = 0; k < 10; ++k) {
            const CoinParams p{Angle::radians(angle(rng)), Angle::radians(angle(rng)), Angle::radians(angle(rng))};
            const auto s = entropy_series(p, default_initial_state(), 3);
            REQUIRE(s.qre_d.points.size() >= 2);
            CHECK(s.qre_d.points[0].t == 0);
            CHECK(s.qre_d.points[1].t == 1);
            CHECK(std::abs(s.qre_d.points[1].value) <= 1e-12);
            CHECK(std::abs(s.qre_v.points[1].value) <= 1e-12);
        }
    }
    SUBCASE("theta = pi/4: E and S_P vanish together at localized steps") {
        const auto s = entropy_series(symmetric_params(kQuarter), default_initial_state(), 40);
        int zeros = 0;
        for (std::size_t i = 0; i < s.shannon_position_sdc.points.size(); ++i) {
            const double sp = s.shannon_position_sdc.points[i].value;
            const double e = s.entanglement_sdc.points[i].value;
            if (sp == 0.0) {
                ++zeros;
                CHECK(e <= 1e-9);
            }
        }
        CHECK(zeros > 3);
    }
    SUBCASE("series lengths") {
        const auto s = entropy_series(symmetric_params(Angle::radians(0.5)), default_initial_state(), 10);
        CHECK(s.shannon_position_sdc.points.size() == 11);
        CHECK(s.entanglement_sic.points.size() == 11);
        CHECK(s.qre_d.points.size() + s.support_violation_steps.size() == 11);
    }
    CHECK_THROWS_AS(entropy_series(symmetric_params(kQuarter), default_initial_state(), 0), ValidationError);
}

TEST_CASE("entanglement zero iff pure over a walk") {
    evolve_each(default_initial_state(), symmetric_params(Angle::pi_times(Rational(1, 8))), 60,
                [](const Wavefunction& psi) {
                    const auto r = reduced_density(psi);
                    const double e = entanglement(r);
                    const double top = eig_hermitian(r.matrix).values[3];
                    if (e <= 1e-9) REQUIRE(std::abs(top - 1.0) <= 1e-9);
                    if (std::abs(top - 1.0) <= 1e-12) REQUIRE(e <= 1e-9);
                    if (support_count(probability_field(psi)) == 1) REQUIRE(e <= 1e-9);
                });
}
