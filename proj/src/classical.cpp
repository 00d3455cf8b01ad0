#include "pulab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pulab/sampling.hpp"

namespace pulab {

namespace {

void check_forbidden_ray(double c1, double c2) {
    const double r2 = std::sqrt(2.0);
    if (std::abs(c1 + r2 * c2) <
        1e-6 * (std::abs(c1) + std::abs(c2) + 1.0))
        throw ForbiddenRay("c1 = -sqrt(2) c2 makes the combined pair singular "
                           "(c1=" + std::to_string(c1) +
                           ", c2=" + std::to_string(c2) + ")");
}

} // namespace

PoissonTensor build_Jg() {
    PoissonTensor t;
    t.J << 0, 0, 1, 0,
           0, 0, 0, 1,
          -1, 0, 0, 0,
           0, -1, 0, 0;
    return t;
}

PoissonTensor build_J2(const ModelParams& p) {
    const double n = p.nu2, O = p.Omega;
    const double s = 1.0 / (std::sqrt(2.0) * (n - O));
    PoissonTensor t;
    t.J << 0, 0, 3 * n - O, -(n + O),
           0, 0, n + O, n - 3 * O,
           O - 3 * n, -(n + O), 0, 0,
           n + O, 3 * O - n, 0, 0;
    t.J *= s;
    return t;
}

QuadHamiltonian build_Hg_classical(const ModelParams& p) {
    QuadHamiltonian h;
    h.Hmat << p.nu2, p.g / 2, 0, 0,
              p.g / 2, p.Omega, 0, 0,
              0, 0, 1, 0,
              0, 0, 0, -1;
    return h;
}

QuadHamiltonian build_H2_classical(const ModelParams& p) {
    const double n = p.nu2, O = p.Omega, w = n - O;
    const double pref = 1.0 / (2.0 * std::sqrt(2.0));
    QuadHamiltonian h;
    h.Hmat(0, 0) = pref * 0.5 * (3 * n - O);
    h.Hmat(1, 1) = pref * 0.5 * (3 * O - n);
    h.Hmat(0, 1) = h.Hmat(1, 0) = pref * (-(n + O) / 2.0);
    h.Hmat(2, 2) = pref * (n - 3 * O) / w;
    h.Hmat(3, 3) = pref * (O - 3 * n) / w;
    h.Hmat(2, 3) = h.Hmat(3, 2) = pref * (-(n + O) / w);
    return h;
}

Vec4 flow_field(const PoissonTensor& J, const QuadHamiltonian& H,
                const Vec4& z) {
    return J.J * H.grad(z);
}

Mat4 flow_matrix(const ModelParams& p) {
    const double n = p.nu2, O = p.Omega;
    Mat4 A;
    A << 0, 0, 2, 0,
         0, 0, 0, -2,
        -2 * n, n + O, 0, 0,
         n + O, -2 * O, 0, 0;
    return A;
}

CombinedPair combined_pair(double c1, double c2, const ModelParams& p) {
    check_forbidden_ray(c1, c2);
    const double r2 = std::sqrt(2.0);
    CombinedPair cp;
    cp.c1 = c1;
    cp.c2 = c2;
    cp.Delta = c1 * c1 + 2.0 * r2 * c1 * c2 + 2.0 * c2 * c2;
    cp.c3 = c1 / cp.Delta;
    cp.c4 = 2.0 * c2 / cp.Delta;
    cp.Jbar.J = c1 * build_Jg().J + c2 * build_J2(p).J;
    cp.Hbar.Hmat =
        cp.c3 * build_Hg_classical(p).Hmat + cp.c4 * build_H2_classical(p).Hmat;
    return cp;
}

std::vector<std::pair<double, Vec4>> integrate(const PoissonTensor& J,
                                               const QuadHamiltonian& H,
                                               const Vec4& z0, double t_max,
                                               double dt) {
    if (!(dt > 0.0) || !(t_max > 0.0))
        throw Error("integrate: t_max and dt must be positive");
    const long n = std::lround(t_max / dt);
    std::vector<std::pair<double, Vec4>> traj;
    traj.reserve(n + 1);
    Vec4 z = z0;
    traj.emplace_back(0.0, z);
    auto f = [&](const Vec4& zz) { return flow_field(J, H, zz); };
    for (long i = 1; i <= n; ++i) {
        const Vec4 k1 = f(z);
        const Vec4 k2 = f(z + 0.5 * dt * k1);
        const Vec4 k3 = f(z + 0.5 * dt * k2);
        const Vec4 k4 = f(z + dt * k3);
        z += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.emplace_back(i * dt, z);
    }
    return traj;
}

Vec4 exact_solution(const Vec4& z0, double t, const ModelParams& p) {
    // exp(At) for a matrix with minimal polynomial (s^2 + w^2)^2: Hermite
    // interpolation of exp at the double roots +-i*omega gives
    //   exp(At) = u0 I + u1 A + u2 A^2 + u3 A^3
    const double om = p.omega;
    const double c = std::cos(om * t), s = std::sin(om * t);
    const double u0 = c + om * t * s / 2.0;
    const double u1 = 3.0 * s / (2.0 * om) - t * c / 2.0;
    const double u2 = t * s / (2.0 * om);
    const double u3 = (s / om - t * c) / (2.0 * om * om);
    const Mat4 A = flow_matrix(p);
    const Mat4 A2 = A * A;
    const Mat4 E = u0 * Mat4::Identity() + u1 * A + u2 * A2 + u3 * A2 * A;
    return E * z0;
}

JordanStructureReport jordan_structure(const ModelParams& p) {
    JordanStructureReport r;
    r.A = flow_matrix(p);
    const double om2 = p.omega * p.omega;
    // Faddeev-LeVerrier for the monic characteristic polynomial
    Mat4 M = Mat4::Zero();
    double c = 1.0;
    r.charpoly[0] = 1.0;
    for (int i = 1; i <= 4; ++i) {
        M = r.A * M + c * Mat4::Identity();
        c = -(r.A * M).trace() / i;
        r.charpoly[i] = c;
    }
    r.expected = {1.0, 0.0, 2.0 * om2, 0.0, om2 * om2};
    double scale = std::max(1.0, om2 * om2);
    for (int i = 0; i <= 4; ++i)
        r.charpoly_residual = std::max(
            r.charpoly_residual, std::abs(r.charpoly[i] - r.expected[i]) / scale);
    const Mat4 N = r.A * r.A + om2 * Mat4::Identity();
    r.n_norm = N.norm() / std::max(1.0, om2);
    r.nilpotent_norm = (N * N).norm() / std::max(1.0, om2 * om2);
    Eigen::Matrix4cd B = r.A.cast<std::complex<double>>();
    B -= std::complex<double>(0.0, p.omega) * Eigen::Matrix4cd::Identity();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(B);
    const double cut = 1e-8 * r.A.norm();
    r.rank_at_i_omega = 0;
    for (int i = 0; i < 4; ++i)
        if (svd.singularValues()[i] > cut) ++r.rank_at_i_omega;
    return r;
}

std::pair<Mat2, Mat2> build_Mp_Mv(double c1, double c2, const ModelParams& p) {
    const CombinedPair cp = combined_pair(c1, c2, p);
    Mat2 Mv = cp.Hbar.Hmat.topLeftCorner<2, 2>();
    Mat2 Mp = cp.Hbar.Hmat.bottomRightCorner<2, 2>();
    return {Mp, Mv};
}

std::pair<double, double> mp_eigenvalues(double c1, double c2,
                                         const ModelParams& p) {
    check_forbidden_ray(c1, c2);
    const double n = p.nu2, O = p.Omega, w = n - O;
    const double r2 = std::sqrt(2.0);
    const double D = c1 * c1 + 2.0 * r2 * c1 * c2 + 2.0 * c2 * c2;
    const double disc =
        std::sqrt(2.0 * c1 * c1 * w * w + 4.0 * r2 * c1 * c2 * w * w +
                  c2 * c2 * (5.0 * n * n - 6.0 * n * O + 5.0 * O * O));
    const double e1 = (-c2 * (n + O) - disc) / (r2 * D * w);
    const double e2 = (-c2 * (n + O) + disc) / (r2 * D * w);
    return {std::min(e1, e2), std::max(e1, e2)};
}

std::pair<double, double> mv_eigenvalues(double c1, double c2,
                                         const ModelParams& p) {
    check_forbidden_ray(c1, c2);
    const double n = p.nu2, O = p.Omega;
    const double r2 = std::sqrt(2.0);
    const double D = c1 * c1 + 2.0 * r2 * c1 * c2 + 2.0 * c2 * c2;
    const double disc = std::sqrt(
        8.0 * c1 * c1 * (n * n + O * O) +
        4.0 * r2 * c1 * c2 * (3.0 * n * n - 2.0 * n * O + 3.0 * O * O) +
        2.0 * c2 * c2 * (5.0 * n * n - 6.0 * n * O + 5.0 * O * O));
    const double e1 = ((2.0 * c1 + r2 * c2) * (n + O) - disc) / (4.0 * D);
    const double e2 = ((2.0 * c1 + r2 * c2) * (n + O) + disc) / (4.0 * D);
    return {std::min(e1, e2), std::max(e1, e2)};
}

DefinitenessScanReport definiteness_scan(int grid_c, int grid_p,
                                         unsigned long seed, bool abs_control) {
    if (grid_c < 1 || grid_p < 1)
        throw Error("definiteness_scan: grid sizes must be >= 1");
    DefinitenessScanReport rep;
    rep.best_min_eig = -1e300;
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> params;
    params.reserve(grid_p);
    for (int i = 0; i < grid_p; ++i) params.push_back(sample_params(rng, +1));
    const double lo = -5.0, hi = 5.0;
    for (int ic = 0; ic < grid_c; ++ic) {
        const double c1 =
            grid_c == 1 ? lo : lo + (hi - lo) * ic / double(grid_c - 1);
        for (int jc = 0; jc < grid_c; ++jc) {
            const double c2 =
                grid_c == 1 ? lo : lo + (hi - lo) * jc / double(grid_c - 1);
            if (std::abs(c1 + std::sqrt(2.0) * c2) <
                1e-6 * (std::abs(c1) + std::abs(c2) + 1.0))
                continue;
            for (const auto& p : params) {
                const auto [Mp, Mv] = build_Mp_Mv(c1, c2, p);
                Eigen::SelfAdjointEigenSolver<Mat2> ep(Mp), ev(Mv);
                const auto cp = mp_eigenvalues(c1, c2, p);
                const auto cv = mv_eigenvalues(c1, c2, p);
                const double sc =
                    std::max({1.0, std::abs(cp.first), std::abs(cp.second),
                              std::abs(cv.first), std::abs(cv.second)});
                rep.max_closed_form_residual = std::max(
                    {rep.max_closed_form_residual,
                     std::abs(cp.first - ep.eigenvalues()[0]) / sc,
                     std::abs(cp.second - ep.eigenvalues()[1]) / sc,
                     std::abs(cv.first - ev.eigenvalues()[0]) / sc,
                     std::abs(cv.second - ev.eigenvalues()[1]) / sc});
                double min_p = cp.first, min_v = cv.first;
                if (abs_control) {
                    min_p = std::min(std::abs(cp.first), std::abs(cp.second));
                    min_v = std::min(std::abs(cv.first), std::abs(cv.second));
                }
                ++rep.grid_points;
                if (min_p > 0.0 && min_v > 0.0) ++rep.simultaneous_pd;
                const double m = std::min(min_p, min_v);
                if (m > rep.best_min_eig) {
                    rep.best_min_eig = m;
                    rep.best_c1 = c1;
                    rep.best_c2 = c2;
                    rep.best_nu2 = p.nu2;
                    rep.best_Omega = p.Omega;
                }
            }
        }
    }
    return rep;
}

double conserved_Q(const PhaseState& s, const ModelParams& p) {
    const double w = p.nu2 - p.Omega;
    const double m = s.px + s.py;
    const double d = s.x - s.y;
    return (p.nu2 + p.Omega) / w * (m * m / w + 0.5 * d * d);
}

double conserved_Q_pu(const PUState& s, const ModelParams& p) {
    const double om2 = p.omega * p.omega;
    const double a = s.q + s.qddot / om2;
    const double b = s.qdot + s.qdddot / om2;
    return om2 * a * a + b * b;
}

} // namespace pulab
