#include "doctest.h"

#include "ptscatter/scatter.hpp"

#include <cmath>
#include <random>

using namespace ptscatter::scatter;
using ptscatter::model::CaseKind;
using ptscatter::model::PotentialParams;

TEST_CASE("free particle is transparent in all three families") {
    for (double eps : {0.3, 1.7, 8.9, 43.21}) {
        for (const ScatteringAmplitudes& amps :
             {amplitudes_case1(0.0, 0.4, eps), amplitudes_case2_free(0.0, 0.4, eps)}) {
            CHECK(amps.r_left.zero());
            CHECK(amps.r_right.zero());
            REQUIRE(amps.t_left.finite());
            CHECK(std::abs(amps.t_left.value - 1.0) < 1e-12);
            REQUIRE(amps.t_right.finite());
            CHECK(std::abs(amps.t_right.value - 1.0) < 1e-12);
        }
    }
    // The penetrating window collapses with v, so its small-v limit is the
    // long-wavelength step formula in the two channel momenta rather than
    // full transparency.
    const double v = 1e-10, mu = 0.3, eps = -2e-11;
    const ScatteringAmplitudes amps = amplitudes_case2_penetrating(v, mu, eps);
    const auto m = ptscatter::model::momenta({v, mu, CaseKind::DImaginary}, eps);
    const Complex kp = m.k_plus, km = m.k_minus;
    CHECK(std::abs(amps.r_left.value - (km - kp) / (km + kp)) < 1e-4);
    CHECK(std::abs(amps.t_left.value - 2.0 * km / (km + kp)) < 1e-4);
}

TEST_CASE("hermitian limit is reciprocal") {
    for (double eps : {2.5, 5.0, 11.0}) {
        const ScatteringAmplitudes amps = amplitudes_case1(2.0, 0.0, eps);
        const ScatteringCoefficients c = coefficients(amps);
        CHECK(c.R_left == doctest::Approx(c.R_right).epsilon(1e-12));
        CHECK(std::abs(c.defect) < 1e-10);
    }
}

TEST_CASE("case I transmission symmetry |t_l| = |t_r|") {
    std::mt19937_64 rng(20240201);
    std::uniform_real_distribution<double> uv(0.1, 10.0), umu(0.05, 1.5), ue(0.2, 30.0);
    int checked = 0;
    while (checked < 500) {
        const double v = uv(rng), mu = umu(rng);
        const double eps = v * std::cos(2.0 * mu) + ue(rng);
        const ScatteringAmplitudes amps = amplitudes_case1(v, mu, eps);
        if (!amps.t_left.finite() || !amps.t_right.finite()) continue;
        const double tl = std::abs(amps.t_left.value), tr = std::abs(amps.t_right.value);
        if (tl > 1e5) continue;  // singular neighbourhood
        CHECK(std::abs(tl - tr) <= 1e-10 * tl);
        ++checked;
    }
}

TEST_CASE("case I conjugation ties left and right reflection at mu = 0") {
    std::mt19937_64 rng(20240202);
    std::uniform_real_distribution<double> uv(0.1, 8.0), ue(0.1, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double v = uv(rng);
        const ScatteringAmplitudes amps = amplitudes_case1(v, 0.0, v + ue(rng));
        REQUIRE(amps.r_left.finite());
        REQUIRE(amps.r_right.finite());
        CHECK(std::abs(amps.r_left.value) ==
              doctest::Approx(std::abs(amps.r_right.value)).epsilon(1e-11));
    }
}

TEST_CASE("penetrating states are exactly reciprocal and never singular") {
    std::mt19937_64 rng(20240203);
    std::uniform_real_distribution<double> uv(0.05, 5.0), umu(0.05, 1.5), ux(0.02, 0.98);
    for (int trial = 0; trial < 20; ++trial) {
        const double v = uv(rng), mu = umu(rng);
        const double window = v * std::exp(-2.0 * mu);
        int defect_nonzero = 0, n = 0;
        for (int i = 0; i < 200; ++i) {
            const double eps = -window * ux(rng);
            const ScatteringAmplitudes amps = amplitudes_case2_penetrating(v, mu, eps);
            REQUIRE(!amps.r_left.pole());
            REQUIRE(!amps.r_right.pole());
            REQUIRE(!amps.t_left.pole());
            const ScatteringCoefficients c = coefficients(amps);
            CHECK(std::abs(c.R_left - c.R_right) <= 1e-12 * std::max(c.R_left, 1e-300));
            if (std::abs(c.defect) > 1e-10) ++defect_nonzero;
            ++n;
        }
        CHECK(defect_nonzero * 10 >= n * 9);  // unitarity defect nonzero at >= 90% of points
    }
}

TEST_CASE("penetrating family conjugation structure") {
    const ScatteringAmplitudes amps = amplitudes_case2_penetrating(1.0, 0.5, -0.2);
    REQUIRE(amps.family[0].finite());
    CHECK(std::abs(std::conj(amps.family[0].value) - amps.family[3].value) <
          1e-13 * std::abs(amps.family[0].value));
    CHECK(std::abs(std::conj(amps.family[1].value) - amps.family[2].value) <
          1e-13 * std::abs(amps.family[1].value));
    const ScatteringCoefficients c = coefficients(amps);
    CHECK(std::abs(c.defect) > 1e-6);  // non-unitary
}

TEST_CASE("free states of case II diverge at the analytic pole energies") {
    const double v = 0.18, mu = 0.42;
    const double base = v * std::exp(-2.0 * mu);
    for (int m : {1, 2}) {
        const double eps_ss = base + m * m;
        // exactly at the pole the reflection is tagged infinite
        const ScatteringAmplitudes at_pole = amplitudes_case2_free(v, mu, eps_ss);
        CHECK(at_pole.r_left.pole());
        CHECK(coefficients(at_pole).singular);
        // slightly off the pole it is finite but enormous
        const ScatteringAmplitudes near_pole = amplitudes_case2_free(v, mu, eps_ss + 1e-5);
        REQUIRE(near_pole.r_left.finite());
        CHECK(std::norm(near_pole.r_left.value) > 1e4);
    }
}

TEST_CASE("right reflection of case II free states never vanishes") {
    const double v = 0.18, mu = 0.42;
    for (int i = 1; i <= 500; ++i) {
        const double eps = 0.1 * i;
        const ScatteringAmplitudes amps = amplitudes_case2_free(v, mu, eps);
        if (!amps.r_right.finite()) continue;  // a divergence is still nonzero
        CHECK(std::norm(amps.r_right.value) > 0.0);
    }
}

TEST_CASE("coefficients basics") {
    SUBCASE("transparent amplitudes") {
        ScatteringAmplitudes amps;
        amps.t_left = {Complex(1.0, 0.0), ValueTag::Finite};
        amps.t_right = {Complex(1.0, 0.0), ValueTag::Finite};
        amps.r_left = {Complex(0.0, 0.0), ValueTag::Zero};
        amps.r_right = {Complex(0.0, 0.0), ValueTag::Zero};
        const ScatteringCoefficients c = coefficients(amps);
        CHECK(c.T_left == 1.0);
        CHECK(c.R_left == 0.0);
        CHECK(c.defect == 0.0);
        CHECK(!c.singular);
    }
    SUBCASE("pole rows are flagged infinite") {
        ScatteringAmplitudes amps;
        amps.t_left = {Complex(0.5, 0.0), ValueTag::Finite};
        amps.r_left = {{}, ValueTag::Pole};
        amps.r_right = {Complex(0.1, 0.0), ValueTag::Finite};
        amps.t_right = {Complex(0.5, 0.0), ValueTag::Finite};
        const ScatteringCoefficients c = coefficients(amps);
        CHECK(std::isinf(c.R_left));
        CHECK(std::isinf(c.defect));
        CHECK(c.singular);
    }
    SUBCASE("hermitian scan is unitary") {
        for (int i = 1; i <= 50; ++i) {
            const double eps = 2.0 + 0.5 * i;
            const ScatteringCoefficients c = coefficients(amplitudes_case1(2.0, 0.0, eps));
            CHECK(std::abs(c.defect) < 1e-10);
        }
    }
}

TEST_CASE("flux-corrected transmission restores unitarity for real asymmetric wells") {
    // real-case potential with distinct asymptotes; |t|^2 alone does not
    // satisfy R + T = 1, the flux ratio Re k+ / Re k- does
    PotentialParams p{2.0, 0.25, CaseKind::Real};
    for (double eps : {4.0, 6.5, 9.0}) {
        const auto m = ptscatter::model::momenta(p, eps);
        const ScatteringCoefficients plain = coefficients(amplitudes(p, eps));
        const ScatteringCoefficients flux =
            coefficients(amplitudes(p, eps), m, FluxConvention::FluxCorrected);
        CHECK(std::abs(flux.R_left + flux.T_left - 1.0) < 1e-10);
        CHECK(std::abs(plain.defect) > 1e-3);
    }
}
