#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pulab/params.hpp"
#include "pulab/sampling.hpp"

using namespace pulab;

TEST_CASE("derive_params at the reference point") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    CHECK(p.alpha == doctest::Approx(1.76777).epsilon(1e-5));
    CHECK(p.beta == doctest::Approx(0.35355).epsilon(1e-5));
    CHECK(p.gamma == doctest::Approx(1.06066).epsilon(1e-5));
    CHECK(p.kappa == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(p.lambda == doctest::Approx(2.12132).epsilon(1e-5));
    CHECK(p.g == doctest::Approx(-3.0));
    CHECK(p.omega == doctest::Approx(1.41421).epsilon(1e-5));
}

TEST_CASE("derive_params at (1, 0)") {
    const ModelParams p = derive_params(1.0, 0.0, +1);
    CHECK(p.alpha == doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))));
    // alpha - beta = 2*kappa pins beta at -1/(2 sqrt 2)
    CHECK(p.beta == doctest::Approx(-0.35355).epsilon(1e-5));
    CHECK(p.gamma == doctest::Approx(0.35355).epsilon(1e-5));
    CHECK(p.kappa == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("derive_params rejects bad input") {
    CHECK_THROWS_AS(derive_params(1.0, 1.0, +1), DegenerateGap);
    CHECK_THROWS_AS(derive_params(1.0, 2.0, +1), DegenerateGap);
    CHECK_THROWS_AS(derive_params(1.0, -1.0, +1), SingularSigma);
    CHECK_THROWS_AS(derive_params(2.0, 1.0, 0), InvalidSector);
    CHECK_THROWS_AS(derive_params(2.0, 1.0, 2), InvalidSector);
}

TEST_CASE("parameter invariants at sampled points") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = sample_params(rng);
        CHECK(p.alpha - p.beta ==
              doctest::Approx(2.0 * p.eta * p.kappa).epsilon(1e-12));
        CHECK(p.alpha * p.beta - p.gamma * p.gamma ==
              doctest::Approx((p.Omega - p.nu2) / 2.0).epsilon(1e-12));
        CHECK(p.omega == doctest::Approx(2.0 * p.kappa));
    }
}

TEST_CASE("general_ground_params matches the resonant constants at eps=+1") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = sample_params(rng);
        const GroundConstants c =
            general_ground_params(p.nu2, p.Omega, p.g, +1, p.eta);
        CHECK(c.alpha == doctest::Approx(p.alpha).epsilon(1e-10));
        CHECK(c.beta == doctest::Approx(p.beta).epsilon(1e-10));
        CHECK(c.gamma == doctest::Approx(p.gamma).epsilon(1e-10));
    }
}

TEST_CASE("general_ground_params error branches") {
    CHECK_THROWS_AS(general_ground_params(2.0, 1.0, -3.0, -1, +1), SingularSigma);
    CHECK_THROWS_AS(general_ground_params(2.0, 1.0, -3.0, -1, -1), SingularSigma);
    CHECK_THROWS_AS(general_ground_params(1.0, 1.0, 1.0, +1, +1), ComplexBranch);
    // off the resonant coupling the triple is finite
    const GroundConstants c = general_ground_params(1.0, 1.0, 2.0001, +1, +1);
    CHECK(std::isfinite(c.alpha));
    CHECK(std::isfinite(c.beta));
    CHECK(std::isfinite(c.gamma));
}

TEST_CASE("pu_frequencies") {
    const PUFrequencies f = pu_frequencies(2.0, 1.0, -3.0);
    CHECK(f.omega1 == doctest::Approx(1.41421).epsilon(1e-5));
    CHECK(f.omega2 == doctest::Approx(1.41421).epsilon(1e-5));
    const PUFrequencies g = pu_frequencies(1.0, 0.0, 0.0);
    CHECK(g.omega1 != doctest::Approx(g.omega2));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = sample_params(rng);
        const PUFrequencies h = pu_frequencies(p.nu2, p.Omega, p.g);
        CHECK(std::abs(h.omega1 - h.omega2) < 1e-12 * (1.0 + h.omega2));
        CHECK(h.omega1 == doctest::Approx(2.0 * p.kappa).epsilon(1e-12));
    }
}

TEST_CASE("pu_from_ghost reference values") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const PUState u = pu_from_ghost({1.0, 0.0, 0.0, 0.0}, p);
    // q = -(x+y)/(2 sqrt2 r) with r = sqrt(6)
    CHECK(u.q == doctest::Approx(-1.0 / (2.0 * std::sqrt(12.0))).epsilon(1e-12));
    CHECK(u.qdot == doctest::Approx(0.0));
    CHECK(u.qddot == doctest::Approx(7.0 / std::sqrt(12.0)).epsilon(1e-12));
    CHECK(u.qdddot == doctest::Approx(0.0));
    const PUState z = pu_from_ghost({0.0, 0.0, 0.0, 0.0}, p);
    CHECK(z.q == 0.0);
    CHECK(z.qdot == 0.0);
    CHECK(z.qddot == 0.0);
    CHECK(z.qdddot == 0.0);
}

TEST_CASE("hg_value reference values") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    CHECK(hg_value({1, 0, 0, 0}, p) == doctest::Approx(2.0));
    CHECK(hg_value({0, 0, 1, 1}, p) == doctest::Approx(0.0));
    CHECK(hg_value({1, 1, 0, 0}, p) == doctest::Approx(0.0));
}

TEST_CASE("hpu_value reference values") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    CHECK(hpu_value({1, 0, 0, 0}, p) == doctest::Approx(-2.0)); // -omega^4/2
    CHECK(hpu_value({0, 0, 0, 0}, p) == doctest::Approx(0.0));
}

TEST_CASE("hpu composed with the ghost map equals hg") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = sample_params(rng);
        if (p.nu2 + p.Omega <= 0.0) continue; // map undefined there
        const PhaseState s{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        const double hg = hg_value(s, p);
        const double hpu = hpu_value(pu_from_ghost(s, p), p);
        CHECK(std::abs(hpu - hg) <= 1e-12 * std::max(1.0, std::abs(hg)));
    }
}

TEST_CASE("pu_from_ghost rejects a non-positive map radicand") {
    ModelParams p = derive_params(2.0, 1.0, +1);
    p.g = p.nu2 + p.Omega; // forces nu2 + Omega - g = 0
    CHECK_THROWS_AS(pu_from_ghost({1, 0, 0, 0}, p), SingularMap);
}
