#pragma once

// Polynomial-times-Gaussian wavefunctions: the function class exactly closed
// under the action of every operator in the model.

#include <optional>
#include <string>

#include "pulab/params.hpp"
#include "pulab/weyl.hpp"

namespace pulab {

struct Gaussian {
    // exponent -alpha/2 u^2 - beta/2 v^2 + gamma u v
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct GaussPolyState {
    Poly2 poly;           // P(u, v)
    Gaussian gauss;       // shared Gaussian envelope
    VarSet vars = VarSet::GhostXY;
};

// P = 1 with the sector's (alpha, beta, gamma); normalisation fixed to 1.
GaussPolyState ground_state(const ModelParams& p);

// (x - y)^m times the ground-state Gaussian; these span the kernel of M-.
GaussPolyState chain_seed(int m, const ModelParams& p);

GaussPolyState state_add(const GaussPolyState& a, const GaussPolyState& b,
                         double ca = 1.0, double cb = 1.0);
GaussPolyState state_scale(const GaussPolyState& a, double c);
bool state_is_zero(const GaussPolyState& a, double tol);
double eval_at(const GaussPolyState& a, double u, double v);

// c with a = c*b when all coefficient ratios agree within tol; otherwise empty.
std::optional<double> proportionality(const GaussPolyState& a,
                                      const GaussPolyState& b, double tol);

// Exact image of the state: the Gaussian triple is preserved, derivatives act
// on the polynomial by the product/chain rule.
GaussPolyState apply_to_state(const WeylOp& op, const GaussPolyState& psi);

// L2 normalisability of the Gaussian triple: alpha>0, beta>0, alpha*beta-gamma^2>0.
bool is_normalizable(const Gaussian& g);

// Deterministic serialisation (sorted polynomial terms + Gaussian triple).
std::string state_str(const GaussPolyState& a);

} // namespace pulab
