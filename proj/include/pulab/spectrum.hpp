#pragma once

// Generalised eigenspaces: Jordan chains under M+, their termination and
// relation coefficients, the sector actions of K/M0/M-, and the first-order
// intertwiner ladder A+^n.

#include <vector>

#include "pulab/algebra.hpp"
#include "pulab/report.hpp"
#include "pulab/states.hpp"

namespace pulab {

inline constexpr int kChainDepthCap = 12;

struct JordanChainReport {
    int k = 0;
    std::vector<GaussPolyState> states; // psi_{k,0} .. psi_{k,k-1}
    double termination_residual = 0.0;  // max coeff of M+^k psi_{k-1}, rel. to chain scale
    std::vector<double> relation_residuals; // (Hg - k(a-b)) psi_{k,l} = l(k-l) psi_{k,l-1}
    double eigenvalue = 0.0;            // k*(alpha-beta) = 2*eta*kappa*k
    double chain_scale = 1.0;
    bool pass(double tol) const {
        if (termination_residual > tol) return false;
        for (double r : relation_residuals)
            if (r > tol) return false;
        return true;
    }
};

// E_n = (n+1)(alpha-beta); equals 2*kappa*(n+1) in the eta=+1 sector.
double eigenvalue_E(int n, const ModelParams& p);

JordanChainReport build_chain(int k, const ModelParams& p, double tol);

// K psi_{k-1} = eta*k psi_{k-1}; M0 psi_k = -(k/2) psi_k; M- psi_k = 0;
// H2 psi_{k-1} = sqrt(2)*eta*kappa*k psi_{k-1}.
Report verify_sector_actions(int k, const ModelParams& p, double tol);

// Explicit one-step action: M+ psi_k = (k/(nu2+Omega)) [eta*chi psi_{k-1}
// + (1-k) psi_{k-2}] with chi = (nu2(3x+y) - Omega(x+3y))/(2 sqrt(2) sqrt(w)).
Report verify_mplus_explicit(int k, const ModelParams& p, double tol);

struct RaiseResult {
    GaussPolyState state;       // A+^n psi0
    double ratio = 0.0;         // proportionality against chain_seed(n)
    double expected_magnitude = 0.0; // kappa^n
    int measured_sign = 0;      // sign of ratio (0 when n = 0 gives +1 trivially)
};
RaiseResult raise_with_Aplus(int n, const ModelParams& p);

// H1 psi_n = n(alpha-beta) psi_n and Hg psi_n = (n+1)(alpha-beta) psi_n
// for psi_n = A+^n psi0.
Report verify_intertwiner_ladder(int n_max, const ModelParams& p, double tol);

} // namespace pulab
