#include "doctest.h"

#include "ptscatter/bound.hpp"
#include "ptscatter/oracle.hpp"
#include "ptscatter/scatter.hpp"

#include <cmath>
#include <random>

using namespace ptscatter::oracle;
using ptscatter::model::CaseKind;
using ptscatter::model::PotentialParams;

TEST_CASE("free particle integrates to r = 0, t = 1") {
    PotentialParams p{0.0, 0.3, CaseKind::MuImaginary};
    IntegrationConfig cfg;
    cfg.rel_tol = 1e-12;
    const OracleAmplitudes a = integrate_scattering(p, 4.0, cfg);
    CHECK(std::abs(a.r) < 1e-10);
    CHECK(std::abs(a.t - Complex(1.0, 0.0)) < 1e-10);
}

TEST_CASE("hermitian unitarity with flux factor") {
    SUBCASE("symmetric asymptotes") {
        PotentialParams p{2.0, 0.0, CaseKind::MuImaginary};
        const OracleAmplitudes a = integrate_scattering(p, 5.0);
        CHECK(std::abs(std::norm(a.r) + std::norm(a.t) - 1.0) < 1e-8);
    }
    SUBCASE("asymmetric real well") {
        PotentialParams p{2.0, 0.25, CaseKind::Real};
        const auto m = ptscatter::model::momenta(p, 6.0);
        const OracleAmplitudes a = integrate_scattering(p, 6.0);
        const double flux = m.k_plus.real() / m.k_minus.real();
        CHECK(std::abs(std::norm(a.r) + flux * std::norm(a.t) - 1.0) < 1e-8);
    }
}

TEST_CASE("closed form matches integration for the mu -> i mu case") {
    using ptscatter::scatter::amplitudes_case1;
    PotentialParams p{1.0, M_PI / 12.0, CaseKind::MuImaginary};
    const auto closed = amplitudes_case1(1.0, M_PI / 12.0, 2.0);
    const OracleAmplitudes left = integrate_scattering(p, 2.0);
    REQUIRE(closed.r_left.finite());
    CHECK(std::abs(left.r - closed.r_left.value) <= 1e-6 * std::abs(closed.r_left.value));
    CHECK(std::abs(left.t - closed.t_left.value) <= 1e-6 * std::abs(closed.t_left.value));

    IntegrationConfig right_cfg;
    right_cfg.side = Side::RightIncidence;
    const OracleAmplitudes right = integrate_scattering(p, 2.0, right_cfg);
    CHECK(std::abs(right.r - closed.r_right.value) <= 1e-6 * std::abs(closed.r_right.value));
    CHECK(std::abs(right.t - closed.t_right.value) <= 1e-6 * std::abs(closed.t_right.value));
}

TEST_CASE("closed form matches integration for penetrating states") {
    using ptscatter::scatter::amplitudes_case2_penetrating;
    PotentialParams p{1.0, 0.5, CaseKind::DImaginary};
    for (double eps : {-0.05, -0.2, -0.3}) {
        const auto closed = amplitudes_case2_penetrating(1.0, 0.5, eps);
        const OracleAmplitudes a = integrate_scattering(p, eps);
        REQUIRE(closed.r_left.finite());
        CHECK(std::abs(a.r - closed.r_left.value) <= 1e-6 * std::abs(closed.r_left.value));
        CHECK(std::abs(a.t - closed.t_left.value) <= 1e-6 * std::abs(closed.t_left.value));
    }
}

TEST_CASE("transmission magnitude independent of incidence side") {
    PotentialParams p{3.54, 1.11, CaseKind::MuImaginary};
    IntegrationConfig cfg;
    const OracleAmplitudes left = integrate_scattering(p, 4.5, cfg);
    cfg.side = Side::RightIncidence;
    const OracleAmplitudes right = integrate_scattering(p, 4.5, cfg);
    CHECK(std::abs(std::abs(left.t) - std::abs(right.t)) < 1e-8 * std::abs(left.t));
}

TEST_CASE("tolerance convergence") {
    PotentialParams p{2.0, 0.8, CaseKind::MuImaginary};
    const double eps = 2.0 * std::cos(1.6) * 2.0 + 6.0;
    IntegrationConfig coarse, fine;
    coarse.rel_tol = 1e-8;
    fine.rel_tol = 5e-9;
    const OracleAmplitudes a = integrate_scattering(p, eps, coarse);
    const OracleAmplitudes b = integrate_scattering(p, eps, fine);
    CHECK(std::abs(a.r - b.r) < 10.0 * coarse.rel_tol * std::max(1.0, std::abs(a.r)));
    CHECK(std::abs(a.t - b.t) < 10.0 * coarse.rel_tol * std::max(1.0, std::abs(a.t)));
}

TEST_CASE("domain growth stability") {
    PotentialParams p{1.5, 0.6, CaseKind::MuImaginary};
    const double eps = 1.5 + 4.0;
    IntegrationConfig small_box, large_box;
    small_box.half_domain = 12.0;
    small_box.rel_tol = 1e-12;
    large_box.half_domain = 24.0;
    large_box.rel_tol = 1e-12;
    const OracleAmplitudes a = integrate_scattering(p, eps, small_box);
    const OracleAmplitudes b = integrate_scattering(p, eps, large_box);
    CHECK(std::abs(a.r - b.r) < 1e-8);
    CHECK(std::abs(a.t - b.t) < 1e-8);
}

TEST_CASE("config validation") {
    PotentialParams p{1.0, 0.5, CaseKind::DImaginary};
    IntegrationConfig cfg;
    cfg.half_domain = 4.0;
    CHECK_THROWS_AS(integrate_scattering(p, -0.2, cfg), std::domain_error);
    CHECK_THROWS_AS(integrate_scattering(p, 1.0), std::domain_error);  // free states excluded
}

TEST_CASE("finite-difference spectrum reproduces the closed form") {
    SUBCASE("single level of the complexified well") {
        PotentialParams p{1.0, M_PI / 12.0, CaseKind::MuImaginary};
        const auto eigs = bound_oracle(p, 2000, 12.0);
        REQUIRE(eigs.size() == 1);
        CHECK(std::abs(eigs[0].imag()) < 1e-4);
        CHECK(eigs[0].real() == doctest::Approx(0.701651).epsilon(2e-4));
    }
    SUBCASE("hermitian limit") {
        PotentialParams p{6.0, 1e-9, CaseKind::MuImaginary};
        const auto eigs = bound_oracle(p, 2000, 12.0);
        REQUIRE(eigs.size() == 2);
        CHECK(eigs[0].real() == doctest::Approx(2.0).epsilon(1e-3));
        CHECK(eigs[1].real() == doctest::Approx(5.0).epsilon(1e-3));
    }
    SUBCASE("shallow well count") {
        PotentialParams p{0.01, M_PI / 12.0, CaseKind::MuImaginary};
        const auto eigs = bound_oracle(p, 2000, 12.0);
        CHECK(eigs.size() <= 1);
    }
}
