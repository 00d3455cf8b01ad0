#include "pulab/factorization.hpp"

#include <cmath>
#include <string>

#include "pulab/sampling.hpp"

namespace pulab {

Mat2 quad_form_matrix(const ModelParams& p) {
    Mat2 M;
    M << p.alpha, -p.gamma,
         -p.gamma, p.beta;
    return M;
}

DiagonalizedForm diagonalize_form(const Mat2& M) {
    const double alpha = M(0, 0), beta = M(1, 1), gamma = -M(0, 1);
    const double disc =
        std::sqrt((alpha - beta) * (alpha - beta) + 4.0 * gamma * gamma);
    DiagonalizedForm d;
    d.lambda_plus = 0.5 * (alpha + beta + disc);
    d.lambda_minus = 0.5 * (alpha + beta - disc);
    const double gap = d.lambda_plus - d.lambda_minus;
    if (gap < kParamGuard)
        throw DegenerateEigenvalues("eigenvalue gap " + std::to_string(gap) +
                                    " below the guard");
    const double r2 = std::sqrt(2.0);
    d.rho_plus = std::sqrt(gap / ((beta - alpha) + gap));
    d.rho_minus = std::sqrt(gap / (-(beta - alpha) + gap));
    d.v_plus << -r2 * gamma * d.rho_plus / gap, 1.0 / (r2 * d.rho_plus);
    d.v_minus << r2 * gamma * d.rho_minus / gap, 1.0 / (r2 * d.rho_minus);
    d.U.row(0) = d.v_plus.transpose();
    d.U.row(1) = d.v_minus.transpose();
    return d;
}

TransformedHamiltonian transformed_hamiltonian(const ModelParams& p) {
    const DiagonalizedForm d = diagonalize_form(quad_form_matrix(p));
    Mat2 kin0;
    kin0 << 1.0, 0.0, 0.0, -1.0;
    Mat2 pot0;
    pot0 << p.nu2, p.g / 2.0, p.g / 2.0, p.Omega;
    const Mat2 kin = d.U * kin0 * d.U.transpose();
    const Mat2 pot = d.U * pot0 * d.U.transpose();
    TransformedHamiltonian t;
    t.kin_pp = kin(0, 0);
    t.kin_mm = kin(1, 1);
    t.kin_pm = 2.0 * kin(0, 1);
    t.pot_pp = pot(0, 0);
    t.pot_mm = pot(1, 1);
    t.pot_pm = 2.0 * pot(0, 1);
    return t;
}

double gaussian_moment(double lam, int n) {
    if (!(lam > 0.0))
        throw NonNormalizable("gaussian_moment requires lam > 0, got " +
                              std::to_string(lam));
    if (n < 0) throw Error("gaussian_moment: n must be nonnegative");
    if (n % 2 == 1) return 0.0;
    // int x^n e^{-lam x^2} dx = Gamma((n+1)/2) / lam^{(n+1)/2}
    return std::tgamma((n + 1) / 2.0) / std::pow(lam, (n + 1) / 2.0);
}

EffectiveHamiltonian effective_hamiltonian(const ModelParams& p) {
    const DiagonalizedForm d = diagonalize_form(quad_form_matrix(p));
    EffectiveHamiltonian e;
    e.lambda_plus_positive = d.lambda_plus > 0.0;
    if (!e.lambda_plus_positive) return e; // reported, not fatal, for scans
    const TransformedHamiltonian t = transformed_hamiltonian(p);
    const double lp = d.lambda_plus;
    const double m0 = gaussian_moment(lp, 0);
    const double m2 = gaussian_moment(lp, 2);
    // -d^2/dx+^2 acting on exp(-lp x+^2/2) yields (lp - lp^2 x+^2); multiply by
    // the same Gaussian and integrate x+ out. Cross terms are odd and vanish.
    e.a1 = t.kin_mm * m0;
    e.a2 = t.pot_mm * m0;
    e.a3 = t.kin_pp * (lp * m0 - lp * lp * m2) + t.pot_pp * m2;
    return e;
}

FactorizationResult factorize(const ModelParams& p) {
    FactorizationResult r;
    r.M = quad_form_matrix(p);
    const DiagonalizedForm d = diagonalize_form(r.M);
    r.lambda_plus = d.lambda_plus;
    r.lambda_minus = d.lambda_minus;
    r.v_plus = d.v_plus;
    r.v_minus = d.v_minus;
    r.rho_plus = d.rho_plus;
    r.rho_minus = d.rho_minus;
    r.U = d.U;
    const EffectiveHamiltonian e = effective_hamiltonian(p);
    r.a1 = e.a1;
    r.a2 = e.a2;
    r.a3 = e.a3;
    r.lambda_plus_positive = e.lambda_plus_positive;
    return r;
}

RegionScanReport lambda_region_scan(int samples, unsigned long seed) {
    if (samples < 1) throw Error("lambda_region_scan: samples must be >= 1");
    RegionScanReport rep;
    rep.lambda_minus_all_negative = true;
    std::mt19937_64 rng(seed);
    long positive = 0;
    double closest = 1e300;
    for (int i = 0; i < samples; ++i) {
        const ModelParams p = sample_params(rng);
        const FactorizationResult f = factorize(p);
        RegionScanRow row;
        row.nu2 = p.nu2;
        row.Omega = p.Omega;
        row.eta = p.eta;
        row.lambda_plus = f.lambda_plus;
        row.lambda_minus = f.lambda_minus;
        row.a1 = f.a1;
        row.a2 = f.a2;
        row.a3 = f.a3;
        row.normalizable = f.lambda_plus_positive;
        if (row.normalizable) ++positive;
        if (f.lambda_minus >= 0.0) rep.lambda_minus_all_negative = false;
        if (std::abs(f.lambda_plus) < closest) {
            closest = std::abs(f.lambda_plus);
            rep.closest_to_boundary = row;
        }
        rep.rows.push_back(row);
    }
    rep.lambda_plus_positive_fraction = double(positive) / double(samples);
    return rep;
}

} // namespace pulab
