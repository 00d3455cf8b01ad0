#pragma once

#include "pulab/errors.hpp"

namespace pulab {

// Guard for ill-conditioned parameter regions: every derived constant divides
// by sqrt(nu2 - Omega), and the factorisation divides by gamma ~ (nu2 + Omega).
inline constexpr double kParamGuard = 1e-8;

// All scalar model constants at the resonant coupling g = -(nu2 + Omega).
// Construct through derive_params(); the fields satisfy
//   alpha - beta        = 2*eta*kappa
//   alpha*beta - gamma2 = (Omega - nu2)/2
struct ModelParams {
    double nu2 = 0.0;    // frequency-squared parameter of the x channel
    double Omega = 0.0;  // frequency-squared parameter of the y channel
    int eta = +1;        // sector label, +1 or -1
    double g = 0.0;      // coupling, always -(nu2 + Omega)
    double kappa = 0.0;  // sqrt(nu2 - Omega)/sqrt(2)
    double lambda = 0.0; // (nu2 + Omega)/(sqrt(2)*sqrt(nu2 - Omega))
    double omega = 0.0;  // common PU frequency, 2*kappa
    double alpha = 0.0;  // Gaussian exponent constants of the formal ground state
    double beta = 0.0;
    double gamma = 0.0;
};

struct PUState {
    double q = 0.0;
    double qdot = 0.0;
    double qddot = 0.0;
    double qdddot = 0.0;
};

struct PhaseState {
    double x = 0.0;
    double y = 0.0;
    double px = 0.0;
    double py = 0.0;
};

struct GroundConstants {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Throws DegenerateGap when nu2 - Omega <= guard, SingularSigma when
// |nu2 + Omega| <= guard, InvalidSector when eta is not +-1.
ModelParams derive_params(double nu2, double Omega, int eta);

// Ground-state constants of the general (non-resonant) coupling, branch (eps, eta):
//   sigma = eps*sqrt(g^2 - 4*nu2*Omega),  Sigma = 2*eta*sqrt(nu2 - Omega + sigma)
//   alpha = (2*nu2 + sigma)/Sigma, beta = (2*Omega - sigma)/Sigma, gamma = -g/Sigma.
// At g = -(nu2+Omega), eps=+1 this reduces to derive_params' triple.
GroundConstants general_ground_params(double nu2, double Omega, double g,
                                      int eps, int eta);

// The two characteristic frequencies of the fourth-order equation:
//   omega_{1,2} = sqrt(2)*sqrt(nu2 - Omega -+ sqrt((nu2+Omega)^2 - g^2)).
// Both collapse to 2*kappa at the resonant coupling.
struct PUFrequencies {
    double omega1 = 0.0;
    double omega2 = 0.0;
};
PUFrequencies pu_frequencies(double nu2, double Omega, double g);

// Linear map from ghost phase space to the PU variables (q, qdot, qddot, qdddot).
// Chosen so that d/dt chains correctly along the ghost flow and
// hpu_value(pu_from_ghost(s)) == hg_value(s) identically.
PUState pu_from_ghost(const PhaseState& s, const ModelParams& p);

// H_PU = q''^2/2 - (w1^2+w2^2) q'^2/2 - w1^2 w2^2 q^2/2 - q' q''' at w1=w2=omega.
double hpu_value(const PUState& s, const ModelParams& p);

// H_g = px^2 - py^2 + nu2 x^2 + Omega y^2 + g x y.
double hg_value(const PhaseState& s, const ModelParams& p);

} // namespace pulab
