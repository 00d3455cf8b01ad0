#include "pulab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pulab {

namespace {

double state_resid(const GaussPolyState& a, const GaussPolyState& b,
                   double scale) {
    GaussPolyState d = state_add(a, b, 1.0, -1.0);
    return poly_max_abs(d.poly) / std::max(1.0, scale);
}

} // namespace

double eigenvalue_E(int n, const ModelParams& p) {
    if (n < 0) throw Error("eigenvalue_E: n must be nonnegative");
    return (n + 1) * (p.alpha - p.beta);
}

JordanChainReport build_chain(int k, const ModelParams& p, double tol) {
    if (k < 1 || k > kChainDepthCap)
        throw ChainDepthExceeded("chain depth k=" + std::to_string(k) +
                                 " outside [1," +
                                 std::to_string(kChainDepthCap) + "]");
    const WeylOp Hg = build_Hg(p);
    const WeylOp Mp = build_su2(p).M_plus;
    JordanChainReport rep;
    rep.k = k;
    rep.eigenvalue = k * (p.alpha - p.beta);
    rep.states.push_back(chain_seed(k - 1, p));
    for (int l = 1; l < k; ++l)
        rep.states.push_back(apply_to_state(Mp, rep.states.back()));
    const GaussPolyState beyond = apply_to_state(Mp, rep.states.back());
    double scale = 1.0;
    for (const auto& s : rep.states)
        scale = std::max(scale, poly_max_abs(s.poly));
    rep.chain_scale = scale;
    rep.termination_residual = poly_max_abs(beyond.poly) / scale;
    for (int l = 1; l < k; ++l) {
        // (Hg - k(alpha-beta)) psi_{k,l} = l(k-l) psi_{k,l-1}
        GaussPolyState lhs = apply_to_state(Hg, rep.states[l]);
        lhs = state_add(lhs, rep.states[l], 1.0, -rep.eigenvalue);
        const GaussPolyState rhs =
            state_scale(rep.states[l - 1], double(l) * double(k - l));
        rep.relation_residuals.push_back(state_resid(lhs, rhs, scale));
    }
    (void)tol;
    return rep;
}

Report verify_sector_actions(int k, const ModelParams& p, double tol) {
    if (k < 0 || k > kChainDepthCap)
        throw ChainDepthExceeded("sector index k=" + std::to_string(k) +
                                 " outside [0," +
                                 std::to_string(kChainDepthCap) + "]");
    Report rep;
    const WeylOp K = build_K(p);
    const WeylOp H2 = build_H2(p);
    const Su2Generators m = build_su2(p);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    const GaussPolyState seed = chain_seed(k, p);
    const double scale = poly_max_abs(seed.poly);
    rep.add(tag + "M- seed = 0",
            poly_max_abs(apply_to_state(m.M_minus, seed).poly) /
                std::max(1.0, scale),
            tol);
    rep.add(tag + "M0 seed = -(k/2) seed",
            state_resid(apply_to_state(m.M0, seed),
                        state_scale(seed, -0.5 * k), scale),
            tol);
    if (k >= 1) {
        const GaussPolyState prev = chain_seed(k - 1, p);
        const double ps = poly_max_abs(prev.poly);
        rep.add(tag + "K seed = eta*k seed",
                state_resid(apply_to_state(K, prev),
                            state_scale(prev, double(p.eta) * k), ps),
                tol);
        rep.add(tag + "H2 seed = sqrt2*eta*kappa*k seed",
                state_resid(apply_to_state(H2, prev),
                            state_scale(prev,
                                        std::sqrt(2.0) * p.eta * p.kappa * k),
                            ps),
                tol);
    }
    return rep;
}

Report verify_mplus_explicit(int k, const ModelParams& p, double tol) {
    if (k < 1) throw Error("verify_mplus_explicit: k must be >= 1");
    Report rep;
    const WeylOp Mp = build_su2(p).M_plus;
    const double r2 = std::sqrt(2.0);
    const double sw = std::sqrt(p.nu2 - p.Omega);
    // chi as a multiplication operator (degree-1 polynomial)
    Poly2 chi;
    chi[{1, 0}] = (3.0 * p.nu2 - p.Omega) / (2.0 * r2 * sw);
    chi[{0, 1}] = (p.nu2 - 3.0 * p.Omega) / (2.0 * r2 * sw);
    const GaussPolyState psik = chain_seed(k, p);
    const double c = double(k) / (p.nu2 + p.Omega);
    GaussPolyState rhs = psik;
    rhs.poly = poly_mul(chi, chain_seed(k - 1, p).poly);
    for (auto& [key, v] : rhs.poly) v *= c * p.eta;
    if (k >= 2)
        rhs = state_add(rhs, chain_seed(k - 2, p), 1.0, c * (1.0 - k));
    const GaussPolyState lhs = apply_to_state(Mp, psik);
    rep.add("M+ action display, k=" + std::to_string(k),
            state_resid(lhs, rhs, std::max(poly_max_abs(rhs.poly),
                                           poly_max_abs(psik.poly))),
            tol);
    return rep;
}

RaiseResult raise_with_Aplus(int n, const ModelParams& p) {
    if (n < 0 || n > kChainDepthCap)
        throw ChainDepthExceeded("ladder index n=" + std::to_string(n) +
                                 " outside [0," +
                                 std::to_string(kChainDepthCap) + "]");
    const WeylOp Ap = build_intertwiners(p).A_plus;
    RaiseResult r;
    r.state = ground_state(p);
    for (int i = 0; i < n; ++i) r.state = apply_to_state(Ap, r.state);
    r.expected_magnitude = std::pow(p.kappa, n);
    const auto c = proportionality(r.state, chain_seed(n, p), 1e-9);
    r.ratio = c.value_or(0.0);
    r.measured_sign = r.ratio > 0.0 ? +1 : (r.ratio < 0.0 ? -1 : 0);
    return r;
}

Report verify_intertwiner_ladder(int n_max, const ModelParams& p, double tol) {
    if (n_max < 0 || n_max > kChainDepthCap)
        throw ChainDepthExceeded("n_max=" + std::to_string(n_max) +
                                 " outside [0," +
                                 std::to_string(kChainDepthCap) + "]");
    Report rep;
    const WeylOp Hg = build_Hg(p);
    const Intertwiners iw = build_intertwiners(p);
    GaussPolyState psi = ground_state(p);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) psi = apply_to_state(iw.A_plus, psi);
        const double scale = poly_max_abs(psi.poly);
        const double ab = p.alpha - p.beta;
        rep.add("H1 psi_" + std::to_string(n) + " = n(a-b) psi",
                state_resid(apply_to_state(iw.H1, psi),
                            state_scale(psi, n * ab), scale),
                tol);
        rep.add("Hg psi_" + std::to_string(n) + " = (n+1)(a-b) psi",
                state_resid(apply_to_state(Hg, psi),
                            state_scale(psi, (n + 1) * ab), scale),
                tol);
    }
    return rep;
}

} // namespace pulab
