#pragma once

// Builders for every named operator of the model in both representations,
// plus the master identity-verification suite.

#include "pulab/params.hpp"
#include "pulab/report.hpp"
#include "pulab/weyl.hpp"

namespace pulab {

struct LadderOps {
    WeylOp a_plus, a_minus, b_plus, b_minus;
};

struct Bilinears {
    WeylOp R, S, T_plus, T_minus;
};

struct Su2Generators {
    WeylOp M0, M_plus, M_minus;
};

struct Intertwiners {
    WeylOp A_plus, A_minus, H1;
};

struct PuRepresentation {
    WeylOp Hg, K, M0, M_minus, M_plus;
};

// H_g = dy^2 - dx^2 + nu2 x^2 + Omega y^2 - (nu2+Omega) x y
WeylOp build_Hg(const ModelParams& p);

// a+- = (dx + dy +- kappa (y - x))/2
// b+- = (dx - dy +- (1/kappa)(Omega y - nu2 x))/2
LadderOps build_ladder(const ModelParams& p);

// R = a+ a-, S = b+ b-, T+- = a+ b- +- b+ a-
Bilinears build_bilinears(const ModelParams& p);

// M0 = T-/2k, M- = -(2 lambda/kappa) R,
// M+ = (1/2k)(T+/2k - S/lambda - lambda R/4k^2)
Su2Generators build_su2(const ModelParams& p);

// K = (lambda/kappa^2) R - T+/kappa + 1; commutes with everything.
WeylOp build_K(const ModelParams& p);

// C = M0^2 + (M+ M- + M- M+)/2 = (K^2 - 1)/4
WeylOp build_casimir(const ModelParams& p);

// A- = (alpha-gamma) dx + (gamma-beta) dy + (nu2-Omega)(x-y)/2
// A+ = (dx + dy)/2 + ((alpha-gamma)/2)(y - x)
// H1 = Hg - (alpha-beta)
Intertwiners build_intertwiners(const ModelParams& p);

// H2 = sqrt(2) kappa K, the diagonalisable partner Hamiltonian.
WeylOp build_H2(const ModelParams& p);

// Same five operators realised on (q, q'') via D_n+- = dq +- n w dQ and
// q_n+- = Q +- n w q with n in {2, 6} and w = nu2 - Omega.
PuRepresentation build_pu_representation(const ModelParams& p);

// Every commutation relation, centrality statement, operator identity and
// explicit-display cross-check, in both representations, as named checks.
// kappa_perturb != 1 deliberately rescales kappa inside the ladder builders
// (negative control: the [b+-, a-+] = +-kappa checks must then fail).
Report verify_identity_suite(const ModelParams& p, double tol,
                             double kappa_perturb = 1.0);

} // namespace pulab
