#pragma once

// 4D phase-space dynamics: both Poisson structures, flow equality, trajectory
// integration against the exact secular solution, the Jordan structure of the
// evolution matrix, the combined bi-Hamiltonian pair, the definiteness no-go
// scan, and the conserved quantity Q.

#include <Eigen/Dense>
#include <array>
#include <utility>
#include <vector>

#include "pulab/params.hpp"

namespace pulab {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

inline Vec4 to_vec(const PhaseState& s) { return Vec4(s.x, s.y, s.px, s.py); }
inline PhaseState to_state(const Vec4& z) { return {z[0], z[1], z[2], z[3]}; }

struct PoissonTensor {
    Mat4 J = Mat4::Zero(); // antisymmetric by construction
};

struct QuadHamiltonian {
    Mat4 Hmat = Mat4::Zero(); // symmetric; H(z) = z^T Hmat z, grad H = 2 Hmat z
    double value(const Vec4& z) const { return z.dot(Hmat * z); }
    Vec4 grad(const Vec4& z) const { return 2.0 * Hmat * z; }
};

struct CombinedPair {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, Delta = 0.0;
    PoissonTensor Jbar;
    QuadHamiltonian Hbar;
};

struct JordanStructureReport {
    Mat4 A = Mat4::Zero();             // flow matrix, zdot = A z
    std::array<double, 5> charpoly{};  // monic coefficients, degree 4 down to 0
    std::array<double, 5> expected{};  // (1, 0, 2 omega^2, 0, omega^4)
    double charpoly_residual = 0.0;
    double nilpotent_norm = 0.0;       // ||(A^2 + omega^2 I)^2||
    double n_norm = 0.0;               // ||A^2 + omega^2 I|| (must be nonzero)
    int rank_at_i_omega = 0;           // numerical rank of A - i omega I
    bool pass(double tol) const {
        return charpoly_residual <= tol && nilpotent_norm <= tol &&
               n_norm > tol && rank_at_i_omega == 3;
    }
};

struct DefinitenessScanReport {
    long grid_points = 0;       // (c1,c2) x parameter samples actually tested
    long simultaneous_pd = 0;   // points with both blocks positive definite
    double best_min_eig = 0.0;  // max over grid of min(min eig Mp, min eig Mv)
    double best_c1 = 0.0, best_c2 = 0.0, best_nu2 = 0.0, best_Omega = 0.0;
    double max_closed_form_residual = 0.0; // closed-form vs numerical eigenvalues
};

PoissonTensor build_Jg();
PoissonTensor build_J2(const ModelParams& p);
QuadHamiltonian build_Hg_classical(const ModelParams& p);
QuadHamiltonian build_H2_classical(const ModelParams& p);

Vec4 flow_field(const PoissonTensor& J, const QuadHamiltonian& H, const Vec4& z);

// Flow matrix of the canonical equations of motion (equals Jg * 2 Hg).
Mat4 flow_matrix(const ModelParams& p);

// Jbar = c1 Jg + c2 J2, Hbar = c3 Hg + c4 H2 with c3 = c1/Delta, c4 = 2 c2/Delta,
// Delta = c1^2 + 2 sqrt2 c1 c2 + 2 c2^2; generates the identical flow.
// Throws ForbiddenRay near c1 = -sqrt2 c2.
CombinedPair combined_pair(double c1, double c2, const ModelParams& p);

// Fixed-step RK4 trajectory of zdot = J grad H.
std::vector<std::pair<double, Vec4>> integrate(const PoissonTensor& J,
                                               const QuadHamiltonian& H,
                                               const Vec4& z0, double t_max,
                                               double dt);

// Closed-form z(t) = exp(At) z0; exp(At) carries cos, sin, t*cos, t*sin terms.
Vec4 exact_solution(const Vec4& z0, double t, const ModelParams& p);

JordanStructureReport jordan_structure(const ModelParams& p);

// The kinetic (Mp) and potential (Mv) 2x2 blocks of Hbar.
std::pair<Mat2, Mat2> build_Mp_Mv(double c1, double c2, const ModelParams& p);

// Closed-form eigenvalue pairs (ascending) of the two blocks.
std::pair<double, double> mp_eigenvalues(double c1, double c2,
                                         const ModelParams& p);
std::pair<double, double> mv_eigenvalues(double c1, double c2,
                                         const ModelParams& p);

// Scan (c1,c2) on [-5,5]^2 (grid_c per axis, forbidden ray excluded) times
// grid_p sampled parameter points. abs_control replaces the block eigenvalues
// by their absolute values (sanity check: the counter must then fire).
DefinitenessScanReport definiteness_scan(int grid_c, int grid_p,
                                         unsigned long seed,
                                         bool abs_control = false);

// Q = ((nu2+Omega)/w) [ (px+py)^2/w + (x-y)^2/2 ]; conserved along the flow.
double conserved_Q(const PhaseState& s, const ModelParams& p);

// The same quantity in PU variables: omega^2 (q + q''/omega^2)^2 + (q' + q'''/omega^2)^2.
double conserved_Q_pu(const PUState& s, const ModelParams& p);

} // namespace pulab
