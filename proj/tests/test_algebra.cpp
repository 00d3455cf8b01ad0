#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pulab/algebra.hpp"
#include "pulab/sampling.hpp"
#include "pulab/states.hpp"

using namespace pulab;

TEST_CASE("Hg coefficients at the reference point") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const WeylOp Hg = build_Hg(p);
    CHECK(Hg.coeff({1, 1, 0, 0}) == doctest::Approx(-3.0));
    CHECK(Hg.coeff({0, 0, 0, 2}) == doctest::Approx(1.0));
    CHECK(Hg.coeff({0, 0, 2, 0}) == doctest::Approx(-1.0));
    CHECK(Hg.coeff({2, 0, 0, 0}) == doctest::Approx(2.0));
    CHECK(Hg.coeff({0, 2, 0, 0}) == doctest::Approx(1.0));
    CHECK(op_commutator(Hg, Hg).empty());
}

TEST_CASE("named commutator values at the reference point") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const LadderOps l = build_ladder(p);
    const WeylOp c = op_commutator(l.b_plus, l.b_minus);
    CHECK(c.terms().size() == 1);
    CHECK(c.coeff({0, 0, 0, 0}) == doctest::Approx(2.12132).epsilon(1e-5));
    CHECK(op_commutator(l.a_plus, l.a_minus).empty());
}

TEST_CASE("central element fixes the ground state") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const GaussPolyState g = ground_state(p);
    const GaussPolyState kg = apply_to_state(build_K(p), g);
    const GaussPolyState d = state_add(kg, g, 1.0, -1.0);
    CHECK(state_is_zero(d, 1e-10));
    // Casimir eigenvalue (k^2-1)/4 = 0 on the k=1 sector
    const GaussPolyState cg = apply_to_state(build_casimir(p), g);
    CHECK(state_is_zero(cg, 1e-10));
}

TEST_CASE("Hamiltonian decomposition against the centre") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10; ++i) {
        const ModelParams p = sample_params(rng);
        CHECK(op_equal(build_Hg(p),
                       build_K(p) * (2.0 * p.kappa) + build_su2(p).M_minus,
                       1e-10));
        CHECK(op_equal(build_casimir(p),
                       (op_compose(build_K(p), build_K(p)) -
                        WeylOp::identity(VarSet::GhostXY)) *
                           0.25,
                       1e-10));
    }
}

TEST_CASE("kinetic symbol of M- is definite at the reference point") {
    // M- = -c [2(dx^2 + 2 dx dy + dy^2) - w (x-y)^2] with c = (nu2+Omega)/(4w):
    // the multiplication part is a perfect square, eigenvalues {0, positive}.
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const WeylOp Mm = build_su2(p).M_minus;
    const double c = (p.nu2 + p.Omega) / (4.0 * (p.nu2 - p.Omega));
    CHECK(Mm.coeff({2, 0, 0, 0}) == doctest::Approx(c * (p.nu2 - p.Omega)));
    CHECK(Mm.coeff({1, 1, 0, 0}) ==
          doctest::Approx(-2.0 * c * (p.nu2 - p.Omega)));
    CHECK(Mm.coeff({0, 2, 0, 0}) == doctest::Approx(c * (p.nu2 - p.Omega)));
    CHECK(Mm.coeff({0, 0, 2, 0}) == doctest::Approx(-2.0 * c));
    CHECK(Mm.coeff({0, 0, 1, 1}) == doctest::Approx(-4.0 * c));
    CHECK(Mm.coeff({0, 0, 0, 2}) == doctest::Approx(-2.0 * c));
}

TEST_CASE("identity suite passes at the reference point and random samples") {
    const ModelParams ref = derive_params(2.0, 1.0, +1);
    CHECK(verify_identity_suite(ref, 1e-10).pass());
    CHECK(verify_identity_suite(derive_params(2.0, 1.0, -1), 1e-10).pass());
    std::mt19937_64 rng(42);
    for (int i = 0; i < 25; ++i) {
        const ModelParams p = sample_params(rng);
        const Report r = verify_identity_suite(p, 1e-10);
        if (!r.pass()) {
            for (const auto& c : r.checks)
                if (!c.pass)
                    MESSAGE("failed: ", c.name, " resid=", c.residual,
                            " at nu2=", p.nu2, " Omega=", p.Omega);
        }
        CHECK(r.pass());
    }
}

TEST_CASE("negative control: a perturbed kappa breaks the ladder relations") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const Report r = verify_identity_suite(p, 1e-10, 1.01);
    CHECK_FALSE(r.pass());
    bool ladder_failed = false;
    for (const auto& c : r.checks)
        if (!c.pass && c.name.find("kappa") != std::string::npos)
            ladder_failed = true;
    CHECK(ladder_failed);
}

TEST_CASE("suite runtime covers both representations") {
    const ModelParams p = derive_params(2.0, 1.0, +1);
    const Report r = verify_identity_suite(p, 1e-10);
    int pu_checks = 0;
    for (const auto& c : r.checks)
        if (c.name.rfind("pu:", 0) == 0) ++pu_checks;
    CHECK(pu_checks >= 9);
    CHECK(r.checks.size() >= 40);
}

TEST_CASE("pu representation satisfies the same algebra") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        const ModelParams p = sample_params(rng);
        const PuRepresentation r = build_pu_representation(p);
        const double s = std::max(1.0, r.Hg.max_abs_coeff());
        CHECK(op_commutator(r.Hg, r.K).max_abs_coeff() / s < 1e-10);
        CHECK((op_commutator(r.M0, r.M_plus) - r.M_plus).max_abs_coeff() /
                  std::max(1.0, r.M_plus.max_abs_coeff()) <
              1e-10);
        CHECK(op_equal(r.Hg, r.K * (2.0 * p.kappa) + r.M_minus, 1e-10));
    }
}

TEST_CASE("H2 commutes with the whole su(2)") {
    const ModelParams p = derive_params(3.0, 0.5, +1);
    const WeylOp H2 = build_H2(p);
    const Su2Generators m = build_su2(p);
    CHECK(op_commutator(H2, m.M0).max_abs_coeff() < 1e-10);
    CHECK(op_commutator(H2, m.M_plus).max_abs_coeff() < 1e-10);
    CHECK(op_commutator(H2, m.M_minus).max_abs_coeff() < 1e-10);
}

TEST_CASE("intertwiners at both sectors") {
    for (int eta : {+1, -1}) {
        const ModelParams p = derive_params(2.0, 1.0, eta);
        const Intertwiners iw = build_intertwiners(p);
        const WeylOp Hg = build_Hg(p);
        CHECK(op_equal(op_compose(iw.A_minus, iw.H1),
                       op_compose(Hg, iw.A_minus), 1e-10));
        CHECK(op_equal(op_compose(iw.H1, iw.A_plus),
                       op_compose(iw.A_plus, Hg), 1e-10));
        CHECK(op_commutator(iw.A_plus, iw.A_minus).max_abs_coeff() < 1e-10);
        const LadderOps l = build_ladder(p);
        CHECK(op_equal(iw.A_plus, eta > 0 ? l.a_plus : l.a_minus, 1e-12));
    }
}
