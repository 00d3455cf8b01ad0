#pragma once

// Diagonalisation of the formal ground-state quadratic form, the orthogonal
// coordinate change, the transformed Hamiltonian, and the effective
// one-dimensional Hamiltonian obtained by integrating out the normalisable
// direction.

#include <vector>

#include "pulab/classical.hpp"
#include "pulab/params.hpp"

namespace pulab {

struct DiagonalizedForm {
    double lambda_plus = 0.0, lambda_minus = 0.0;
    Vec2 v_plus = Vec2::Zero(), v_minus = Vec2::Zero();
    double rho_plus = 0.0, rho_minus = 0.0;
    Mat2 U = Mat2::Zero(); // rows are v_plus, v_minus; orthogonal
};

// Coefficients of the Hamiltonian in the rotated variables:
// kin_pp p+^2 + kin_mm p-^2 + kin_pm p+ p- + pot_pp x+^2 + pot_mm x-^2 + pot_pm x+ x-
struct TransformedHamiltonian {
    double kin_pp = 0.0, kin_mm = 0.0, kin_pm = 0.0;
    double pot_pp = 0.0, pot_mm = 0.0, pot_pm = 0.0;
};

struct EffectiveHamiltonian {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0; // a1 p^2 + a2 x^2 + a3
    bool lambda_plus_positive = false;
};

struct FactorizationResult {
    Mat2 M = Mat2::Zero();
    double lambda_plus = 0.0, lambda_minus = 0.0;
    Vec2 v_plus = Vec2::Zero(), v_minus = Vec2::Zero();
    double rho_plus = 0.0, rho_minus = 0.0;
    Mat2 U = Mat2::Zero();
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    bool lambda_plus_positive = false;
};

struct RegionScanRow {
    double nu2 = 0.0, Omega = 0.0;
    int eta = 0;
    double lambda_plus = 0.0, lambda_minus = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    bool normalizable = false; // lambda_plus > 0
};

struct RegionScanReport {
    std::vector<RegionScanRow> rows;
    double lambda_plus_positive_fraction = 0.0;
    bool lambda_minus_all_negative = false;
    RegionScanRow closest_to_boundary; // smallest lambda_plus seen
};

// M = [[alpha, -gamma], [-gamma, beta]] from the sector constants.
Mat2 quad_form_matrix(const ModelParams& p);

// Closed-form eigen-data:
//   lambda+- = (alpha + beta +- sqrt((alpha-beta)^2 + 4 gamma^2))/2
//   rho+-    = sqrt((l+ - l-)/(+-(beta-alpha) + l+ - l-))
//   v+ = (-sqrt2 gamma rho+/(l+ - l-), 1/(sqrt2 rho+)), v- likewise with + sign.
DiagonalizedForm diagonalize_form(const Mat2& M);

// Coefficients of the rotated Hamiltonian by direct orthogonal substitution
// (kinetic form diag(1,-1) and potential [[nu2, g/2],[g/2, Omega]] conjugated
// by U).
TransformedHamiltonian transformed_hamiltonian(const ModelParams& p);

// integral of x^n exp(-lam x^2) over the line; zero for odd n.
// Throws NonNormalizable for lam <= 0.
double gaussian_moment(double lam, int n);

// Project the rotated Hamiltonian onto the normalisable Gaussian direction:
// apply it to exp(-l+/2 x+^2) exp(-l-/2 x-^2), multiply by the x+ Gaussian
// again and integrate x+ out, leaving a1 p-^2 + a2 x-^2 + a3.
EffectiveHamiltonian effective_hamiltonian(const ModelParams& p);

FactorizationResult factorize(const ModelParams& p);

RegionScanReport lambda_region_scan(int samples, unsigned long seed);

} // namespace pulab
