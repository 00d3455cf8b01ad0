#include "pulab/params.hpp"

#include <cmath>
#include <string>

namespace pulab {

ModelParams derive_params(double nu2, double Omega, int eta) {
    if (eta != 1 && eta != -1)
        throw InvalidSector("eta must be +1 or -1, got " + std::to_string(eta));
    const double w = nu2 - Omega;
    if (!(w > kParamGuard))
        throw DegenerateGap("nu2 - Omega = " + std::to_string(w) +
                            " is below the guard " + std::to_string(kParamGuard));
    if (std::abs(nu2 + Omega) <= kParamGuard)
        throw SingularSigma("nu2 + Omega = " + std::to_string(nu2 + Omega) +
                            " is within the guard of 0; gamma would vanish");
    ModelParams p;
    p.nu2 = nu2;
    p.Omega = Omega;
    p.eta = eta;
    p.g = -(nu2 + Omega);
    const double r2 = std::sqrt(2.0);
    const double sw = std::sqrt(w);
    p.kappa = sw / r2;
    p.lambda = (nu2 + Omega) / (r2 * sw);
    p.omega = 2.0 * p.kappa;
    p.alpha = eta * (3.0 * nu2 - Omega) / (2.0 * r2 * sw);
    p.beta = -eta * (nu2 - 3.0 * Omega) / (2.0 * r2 * sw);
    p.gamma = eta * (nu2 + Omega) / (2.0 * r2 * sw);
    return p;
}

GroundConstants general_ground_params(double nu2, double Omega, double g,
                                      int eps, int eta) {
    if (eps != 1 && eps != -1)
        throw InvalidSector("eps must be +1 or -1, got " + std::to_string(eps));
    if (eta != 1 && eta != -1)
        throw InvalidSector("eta must be +1 or -1, got " + std::to_string(eta));
    const double disc = g * g - 4.0 * nu2 * Omega;
    if (disc < 0.0)
        throw ComplexBranch("g^2 - 4*nu2*Omega = " + std::to_string(disc) +
                            " is negative; sigma would be complex");
    const double sigma = eps * std::sqrt(disc);
    const double rad = nu2 - Omega + sigma;
    if (!(rad > kParamGuard))
        throw SingularSigma("nu2 - Omega + sigma = " + std::to_string(rad) +
                            " is not positive; Sigma is singular");
    const double Sigma = 2.0 * eta * std::sqrt(rad);
    GroundConstants c;
    c.alpha = (2.0 * nu2 + sigma) / Sigma;
    c.beta = (2.0 * Omega - sigma) / Sigma;
    c.gamma = -g / Sigma;
    return c;
}

PUFrequencies pu_frequencies(double nu2, double Omega, double g) {
    const double inner = (nu2 + Omega) * (nu2 + Omega) - g * g;
    if (inner < 0.0)
        throw ComplexFrequency("(nu2+Omega)^2 - g^2 = " + std::to_string(inner) +
                               " is negative");
    const double s = std::sqrt(inner);
    const double r1 = nu2 - Omega - s;
    const double r2 = nu2 - Omega + s;
    if (r1 < 0.0 || r2 < 0.0)
        throw ComplexFrequency("frequency radicand is negative: " +
                               std::to_string(r1 < 0.0 ? r1 : r2));
    PUFrequencies f;
    f.omega1 = std::sqrt(2.0) * std::sqrt(r1);
    f.omega2 = std::sqrt(2.0) * std::sqrt(r2);
    return f;
}

PUState pu_from_ghost(const PhaseState& s, const ModelParams& p) {
    const double rad = p.nu2 + p.Omega - p.g; // = 2(nu2+Omega) at resonance
    if (!(rad > 0.0))
        throw SingularMap("nu2 + Omega - g = " + std::to_string(rad) +
                          " is not positive");
    const double r = std::sqrt(rad);
    const double r2 = std::sqrt(2.0);
    const double cx = 2.0 * p.nu2 - p.g;  // x-column weight of the q'' row
    const double cy = p.g - 2.0 * p.Omega; // y-column weight of the q'' row
    PUState u;
    u.q = -(s.x + s.y) / (2.0 * r2 * r);
    // Momentum rows carry py with flipped sign so that q, q', q'', q''' form a
    // genuine derivative chain along the ghost flow (and Q stays conserved).
    u.qdot = -(s.px - s.py) / (r2 * r);
    u.qddot = (cx * s.x + cy * s.y) / (r2 * r);
    u.qdddot = r2 * (cx * s.px - cy * s.py) / r;
    return u;
}

double hpu_value(const PUState& s, const ModelParams& p) {
    const double w2 = p.omega * p.omega;
    return 0.5 * s.qddot * s.qddot - w2 * s.qdot * s.qdot -
           0.5 * w2 * w2 * s.q * s.q - s.qdot * s.qdddot;
}

double hg_value(const PhaseState& s, const ModelParams& p) {
    return s.px * s.px - s.py * s.py + p.nu2 * s.x * s.x +
           p.Omega * s.y * s.y + p.g * s.x * s.y;
}

} // namespace pulab
