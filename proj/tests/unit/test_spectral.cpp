#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sdcwalk/errors.hpp"
#include "sdcwalk/spectral.hpp"
#include "support/oracles.hpp"

using namespace sdcwalk;

namespace {

Matrix4 diag(double a, double b, double c, double d) {
    Eigen::Vector4cd v(a, b, c, d);
    return v.asDiagonal();
}

double orthonormality_error(const EigenDecomposition& d) {
    return max_abs(d.vectors.adjoint() * d.vectors - Matrix4::Identity());
}

}  // namespace

TEST_CASE("eig_hermitian on diagonal inputs") {
    SUBCASE("I/4") {
        const auto d = eig_hermitian(Matrix4::Identity() / 4.0);
        for (double v : d.values) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("diag(0, 0, 1/2, 1/2)") {
        const auto d = eig_hermitian(diag(0, 0, 0.5, 0.5));
        CHECK(d.values[0] == 0.0);
        CHECK(d.values[1] == 0.0);
        CHECK(d.values[2] == 0.5);
        CHECK(d.values[3] == 0.5);
        // eigenvectors are standard basis vectors up to phase
        CHECK(max_abs(d.vectors.cwiseAbs2() - Eigen::Matrix4d::Identity().cast<complex_t>()) < 1e-15);
    }
    SUBCASE("ascending order for a permuted diagonal") {
        const auto d = eig_hermitian(diag(3, -1, 2, 0));
        CHECK(d.values == std::array<double, 4>{-1, 0, 2, 3});
        CHECK(max_abs(d.reconstruct() - diag(3, -1, 2, 0)) == 0.0);
    }
}

TEST_CASE("eig_hermitian reconstruction on random draws") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 500; ++k) {
        const Matrix4 m = oracle::random_hermitian(rng, k % 2 ? 1.0 : 1e-3);
        const auto d = eig_hermitian(m);
        REQUIRE(max_abs(m - d.reconstruct()) <= 1e-11);
        REQUIRE(orthonormality_error(d) <= 1e-11);
        REQUIRE(std::is_sorted(d.values.begin(), d.values.end()));

        // independent check of the spectrum against Eigen's solver
        Eigen::SelfAdjointEigenSolver<Matrix4> ref(m);
        for (int i = 0; i < 4; ++i) REQUIRE(std::abs(d.values[static_cast<std::size_t>(i)] - ref.eigenvalues()[i]) <= 1e-12);

        // decompose -> reconstruct -> decompose
        const auto again = eig_hermitian(d.reconstruct(), 1e-10);
        for (std::size_t i = 0; i < 4; ++i) REQUIRE(std::abs(again.values[i] - d.values[i]) <= 1e-10);
    }
}

TEST_CASE("eig_hermitian with degenerate spectra") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const Matrix4 u = oracle::random_unitary(rng);
        const Matrix4 m = u * diag(0.1, 0.1, 0.4, 0.4) * u.adjoint();
        const auto d = eig_hermitian(m);
        CHECK(max_abs(m - d.reconstruct()) <= 1e-11);
        CHECK(orthonormality_error(d) <= 1e-11);
        CHECK(d.values[0] == doctest::Approx(0.1).epsilon(1e-12));
        CHECK(d.values[3] == doctest::Approx(0.4).epsilon(1e-12));
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    Matrix4 m = Matrix4::Identity();
    m(0, 1) = 1e-6;
    CHECK_THROWS_AS(eig_hermitian(m), ValidationError);
    m(0, 1) = 1e-14;
    CHECK_NOTHROW(eig_hermitian(m));
}

TEST_CASE("log_on_support") {
    SUBCASE("identity") {
        const auto l = log_on_support(eig_hermitian(Matrix4::Identity()));
        CHECK(max_abs(l.log) == 0.0);
        CHECK(l.support == std::array<bool, 4>{true, true, true, true});
    }
    SUBCASE("diag(1/2, 1/2, 0, 0)") {
        const auto l = log_on_support(eig_hermitian(diag(0.5, 0.5, 0, 0)));
        CHECK(max_abs(l.log - std::log(0.5) * diag(1, 1, 0, 0)) < 1e-15);
        // support mask expressed on the standard basis
        CHECK(max_abs(l.projector - diag(1, 1, 0, 0)) < 1e-15);
        CHECK(std::count(l.support.begin(), l.support.end(), true) == 2);
    }
    SUBCASE("pure state projector") {
        std::mt19937_64 rng(1);
        const Eigen::Vector4cd v = oracle::random_unitary(rng).col(0);
        const auto l = log_on_support(eig_hermitian(v * v.adjoint()));
        CHECK(max_abs(l.log) < 1e-14);
        CHECK(std::count(l.support.begin(), l.support.end(), true) == 1);
    }
    SUBCASE("negative eigenvalue") {
        CHECK_THROWS_AS(log_on_support(eig_hermitian(diag(-1e-6, 0.5, 0.5, 0))), NotPsdError);
        CHECK_NOTHROW(log_on_support(eig_hermitian(diag(-1e-14, 0.5, 0.5, 0))));
    }
    SUBCASE("inverts the matrix exponential on full support") {
        std::mt19937_64 rng(9);
        for (int k = 0; k < 100; ++k) {
            const Matrix4 h = oracle::random_hermitian(rng);
            Eigen::SelfAdjointEigenSolver<Matrix4> es(h);
            const Matrix4 exp_h =
                es.eigenvectors() * es.eigenvalues().array().exp().matrix().cast<complex_t>().asDiagonal() *
                es.eigenvectors().adjoint();
            const auto l = log_on_support(eig_hermitian(exp_h, 1e-9));
            REQUIRE(max_abs(l.log - h) <= 1e-9);
        }
    }
}
