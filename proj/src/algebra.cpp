#include "pulab/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace pulab {

namespace {

using Idx = WeylOp::Index;

WeylOp mk(VarSet vs, std::initializer_list<std::pair<Idx, double>> terms) {
    WeylOp::Terms t;
    for (const auto& [k, v] : terms) t[k] += v;
    return WeylOp(vs, std::move(t));
}

LadderOps build_ladder_with_kappa(const ModelParams& p, double kappa) {
    const VarSet vs = VarSet::GhostXY;
    const double k2 = kappa / 2.0;
    const double cb = 1.0 / (2.0 * kappa);
    LadderOps l;
    l.a_plus = mk(vs, {{{0, 0, 1, 0}, 0.5}, {{0, 0, 0, 1}, 0.5},
                       {{0, 1, 0, 0}, k2}, {{1, 0, 0, 0}, -k2}});
    l.a_minus = mk(vs, {{{0, 0, 1, 0}, 0.5}, {{0, 0, 0, 1}, 0.5},
                        {{0, 1, 0, 0}, -k2}, {{1, 0, 0, 0}, k2}});
    l.b_plus = mk(vs, {{{0, 0, 1, 0}, 0.5}, {{0, 0, 0, 1}, -0.5},
                       {{0, 1, 0, 0}, cb * p.Omega}, {{1, 0, 0, 0}, -cb * p.nu2}});
    l.b_minus = mk(vs, {{{0, 0, 1, 0}, 0.5}, {{0, 0, 0, 1}, -0.5},
                        {{0, 1, 0, 0}, -cb * p.Omega}, {{1, 0, 0, 0}, cb * p.nu2}});
    return l;
}

Bilinears bilinears_from(const LadderOps& l) {
    Bilinears b;
    b.R = op_compose(l.a_plus, l.a_minus);
    b.S = op_compose(l.b_plus, l.b_minus);
    const WeylOp ab = op_compose(l.a_plus, l.b_minus);
    const WeylOp ba = op_compose(l.b_plus, l.a_minus);
    b.T_plus = ab + ba;
    b.T_minus = ab - ba;
    return b;
}

Su2Generators su2_from(const Bilinears& b, const ModelParams& p) {
    const double k = p.kappa, lam = p.lambda;
    Su2Generators m;
    m.M0 = b.T_minus * (1.0 / (2.0 * k));
    m.M_minus = b.R * (-2.0 * lam / k);
    m.M_plus = (b.T_plus * (1.0 / (2.0 * k)) + b.S * (-1.0 / lam) +
                b.R * (-lam / (4.0 * k * k))) *
               (1.0 / (2.0 * k));
    return m;
}

WeylOp K_from(const Bilinears& b, const ModelParams& p) {
    return b.R * (p.lambda / (p.kappa * p.kappa)) + b.T_plus * (-1.0 / p.kappa) +
           WeylOp::identity(VarSet::GhostXY);
}

} // namespace

WeylOp build_Hg(const ModelParams& p) {
    return mk(VarSet::GhostXY,
              {{{0, 0, 0, 2}, 1.0},
               {{0, 0, 2, 0}, -1.0},
               {{2, 0, 0, 0}, p.nu2},
               {{0, 2, 0, 0}, p.Omega},
               {{1, 1, 0, 0}, -(p.nu2 + p.Omega)}});
}

LadderOps build_ladder(const ModelParams& p) {
    return build_ladder_with_kappa(p, p.kappa);
}

Bilinears build_bilinears(const ModelParams& p) {
    return bilinears_from(build_ladder(p));
}

Su2Generators build_su2(const ModelParams& p) {
    return su2_from(build_bilinears(p), p);
}

WeylOp build_K(const ModelParams& p) {
    return K_from(build_bilinears(p), p);
}

WeylOp build_casimir(const ModelParams& p) {
    const Su2Generators m = build_su2(p);
    return op_compose(m.M0, m.M0) +
           (op_compose(m.M_plus, m.M_minus) + op_compose(m.M_minus, m.M_plus)) * 0.5;
}

Intertwiners build_intertwiners(const ModelParams& p) {
    const VarSet vs = VarSet::GhostXY;
    const double w = p.nu2 - p.Omega;
    const double ag = p.alpha - p.gamma; // equals eta*kappa
    Intertwiners iw;
    iw.A_minus = mk(vs, {{{0, 0, 1, 0}, ag},
                         {{0, 0, 0, 1}, p.gamma - p.beta},
                         {{1, 0, 0, 0}, 0.5 * w},
                         {{0, 1, 0, 0}, -0.5 * w}});
    iw.A_plus = mk(vs, {{{0, 0, 1, 0}, 0.5}, {{0, 0, 0, 1}, 0.5},
                        {{0, 1, 0, 0}, ag / 2.0}, {{1, 0, 0, 0}, -ag / 2.0}});
    iw.H1 = build_Hg(p) - WeylOp::identity(vs) * (p.alpha - p.beta);
    return iw;
}

WeylOp build_H2(const ModelParams& p) {
    return build_K(p) * (std::sqrt(2.0) * p.kappa);
}

PuRepresentation build_pu_representation(const ModelParams& p) {
    const VarSet vs = VarSet::PuQ;
    const double w = p.nu2 - p.Omega;
    const double r2 = std::sqrt(2.0);
    auto D = [&](int n, double sgn) {
        return mk(vs, {{{0, 0, 1, 0}, 1.0}, {{0, 0, 0, 1}, sgn * n * w}});
    };
    auto qn = [&](int n, double sgn) {
        return mk(vs, {{{0, 1, 0, 0}, 1.0}, {{1, 0, 0, 0}, sgn * n * w}});
    };
    const WeylOp dq = mk(vs, {{{0, 0, 1, 0}, 1.0}});
    const WeylOp dQ = mk(vs, {{{0, 0, 0, 1}, 1.0}});
    PuRepresentation r;
    r.Hg = op_compose(D(2, -1.0), dQ) + op_compose(qn(2, 1.0), qn(2, -1.0)) * 0.5;
    r.K = (op_compose(D(6, 1.0), D(2, -1.0)) * (1.0 / (2.0 * w)) +
           op_compose(qn(6, -1.0), qn(2, 1.0))) *
          (1.0 / (4.0 * r2 * std::sqrt(w)));
    r.M0 = (op_compose(qn(2, -1.0), dq) * (1.0 / (2.0 * w)) +
            op_compose(qn(6, 1.0), dQ)) *
           (-0.25);
    r.M_minus = (op_compose(D(2, -1.0), D(2, -1.0)) * (1.0 / (2.0 * w)) -
                 op_compose(qn(2, 1.0), qn(2, 1.0))) *
                (-0.25);
    r.M_plus = (op_compose(D(6, 1.0), D(6, 1.0)) * (1.0 / (2.0 * w)) -
                op_compose(qn(6, -1.0), qn(6, -1.0))) *
               (-1.0 / (32.0 * w));
    return r;
}

Report verify_identity_suite(const ModelParams& p, double tol,
                             double kappa_perturb) {
    Report rep;
    const double k = p.kappa, lam = p.lambda;
    const double nu2 = p.nu2, Om = p.Omega, w = nu2 - Om;
    const double r2 = std::sqrt(2.0);
    const VarSet vs = VarSet::GhostXY;
    const WeylOp I = WeylOp::identity(vs);
    const WeylOp Hg = build_Hg(p);

    const LadderOps l = build_ladder_with_kappa(p, k * kappa_perturb);
    const Bilinears b = bilinears_from(l);
    const Su2Generators m = su2_from(b, p);
    const WeylOp K = K_from(b, p);
    const WeylOp H2 = K * (r2 * k);
    const Intertwiners iw = build_intertwiners(p);

    const double scale =
        std::max({1.0, Hg.max_abs_coeff(), 1.0 / k, std::abs(lam), k});
    auto check_zero = [&](const std::string& name, const WeylOp& d) {
        rep.add(name, d.max_abs_coeff() / scale, tol);
    };
    auto check_eq = [&](const std::string& name, const WeylOp& a,
                        const WeylOp& c) { check_zero(name, a - c); };
    auto comm = [](const WeylOp& a, const WeylOp& c) {
        return op_commutator(a, c);
    };

    // ladder commutation relations
    check_zero("comm(a+,a-)=0", comm(l.a_plus, l.a_minus));
    check_zero("comm(a+,b+)=0", comm(l.a_plus, l.b_plus));
    check_eq("comm(b+,a-)=kappa", comm(l.b_plus, l.a_minus), I * k);
    check_eq("comm(b-,a+)=-kappa", comm(l.b_minus, l.a_plus), I * -k);
    check_eq("comm(b+,b-)=lambda", comm(l.b_plus, l.b_minus), I * lam);
    check_eq("comm(Hg,a+)=2k a+", comm(Hg, l.a_plus), l.a_plus * (2.0 * k));
    check_eq("comm(Hg,a-)=-2k a-", comm(Hg, l.a_minus), l.a_minus * (-2.0 * k));
    check_eq("comm(Hg,b+)=2k b+ + 2lam a+", comm(Hg, l.b_plus),
             l.b_plus * (2.0 * k) + l.a_plus * (2.0 * lam));
    check_eq("comm(Hg,b-)=-2k b- - 2lam a-", comm(Hg, l.b_minus),
             l.b_minus * (-2.0 * k) + l.a_minus * (-2.0 * lam));

    // bilinear relations
    check_eq("comm(T+,T-)=2lam R", comm(b.T_plus, b.T_minus), b.R * (2.0 * lam));
    check_eq("comm(R,S)=-k T-", comm(b.R, b.S), b.T_minus * -k);
    check_eq("comm(R,T-)=2k R", comm(b.R, b.T_minus), b.R * (2.0 * k));
    check_eq("comm(S,T-)=lam T+ - 2k S", comm(b.S, b.T_minus),
             b.T_plus * lam + b.S * (-2.0 * k));
    check_zero("comm(T+,R)=0", comm(b.T_plus, b.R));
    check_zero("comm(Hg,R)=0", comm(Hg, b.R));
    check_zero("comm(Hg,T+)=0", comm(Hg, b.T_plus));
    check_eq("comm(Hg,S)=2lam T-", comm(Hg, b.S), b.T_minus * (2.0 * lam));
    check_eq("comm(Hg,T-)=-4lam R", comm(Hg, b.T_minus), b.R * (-4.0 * lam));

    // su(2) closure, centre, Casimir
    check_eq("comm(M0,M+)=M+", comm(m.M0, m.M_plus), m.M_plus);
    check_eq("comm(M0,M-)=-M-", comm(m.M0, m.M_minus), m.M_minus * -1.0);
    check_eq("comm(M+,M-)=2M0", comm(m.M_plus, m.M_minus), m.M0 * 2.0);
    check_zero("comm(K,M0)=0", comm(K, m.M0));
    check_zero("comm(K,M+)=0", comm(K, m.M_plus));
    check_zero("comm(K,M-)=0", comm(K, m.M_minus));
    check_zero("comm(Hg,K)=0", comm(Hg, K));
    check_eq("Hg = 2k K + M-", Hg, K * (2.0 * k) + m.M_minus);
    const WeylOp Cas =
        op_compose(m.M0, m.M0) +
        (op_compose(m.M_plus, m.M_minus) + op_compose(m.M_minus, m.M_plus)) * 0.5;
    check_eq("C = (K^2-1)/4", Cas, (op_compose(K, K) - I) * 0.25);
    check_zero("comm(C,M+)=0", comm(Cas, m.M_plus));
    check_zero("comm(C,M-)=0", comm(Cas, m.M_minus));

    // explicit differential-operator displays (double entry)
    const double sw = std::sqrt(w);
    const WeylOp K_disp =
        mk(vs, {{{0, 0, 0, 2}, (3.0 * nu2 - Om) / (2.0 * r2 * w * sw)},
                {{0, 0, 1, 1}, (nu2 + Om) / (r2 * w * sw)},
                {{0, 0, 2, 0}, -(nu2 - 3.0 * Om) / (2.0 * r2 * w * sw)},
                {{2, 0, 0, 0}, (3.0 * nu2 - Om) / (4.0 * r2 * sw)},
                {{1, 1, 0, 0}, -(nu2 + Om) / (2.0 * r2 * sw)},
                {{0, 2, 0, 0}, (3.0 * Om - nu2) / (4.0 * r2 * sw)}});
    check_eq("K explicit display", K, K_disp);
    const WeylOp M0_disp =
        mk(vs, {{{1, 0, 1, 0}, (nu2 + Om) / (4.0 * w)},
                {{0, 1, 1, 0}, (nu2 - 3.0 * Om) / (4.0 * w)},
                {{1, 0, 0, 1}, (3.0 * nu2 - Om) / (4.0 * w)},
                {{0, 1, 0, 1}, -(nu2 + Om) / (4.0 * w)}});
    check_eq("M0 explicit display", m.M0, M0_disp);
    const double cm = (nu2 + Om) / (4.0 * w);
    const WeylOp Mm_disp = mk(vs, {{{0, 0, 0, 2}, -2.0 * cm},
                                   {{0, 0, 1, 1}, -4.0 * cm},
                                   {{0, 0, 2, 0}, -2.0 * cm},
                                   {{2, 0, 0, 0}, cm * w},
                                   {{1, 1, 0, 0}, -2.0 * cm * w},
                                   {{0, 2, 0, 0}, cm * w}});
    check_eq("M- explicit display", m.M_minus, Mm_disp);
    const double A_ = 3.0 * nu2 - Om, B_ = nu2 - 3.0 * Om;
    const double pref = 1.0 / (32.0 * (nu2 * nu2 - Om * Om));
    const WeylOp Mp_disp =
        mk(vs, {{{2, 0, 0, 0}, pref * A_ * A_},
                {{1, 1, 0, 0}, 2.0 * pref * A_ * B_},
                {{0, 2, 0, 0}, pref * B_ * B_},
                {{0, 0, 2, 0}, -2.0 * pref * B_ * B_ / w},
                {{0, 0, 1, 1}, 4.0 * pref * A_ * B_ / w},
                {{0, 0, 0, 2}, -2.0 * pref * A_ * A_ / w}});
    check_eq("M+ explicit display", m.M_plus, Mp_disp);

    // intertwining relations
    check_eq("A- H1 = Hg A-", op_compose(iw.A_minus, iw.H1),
             op_compose(Hg, iw.A_minus));
    check_eq("H1 A+ = A+ Hg", op_compose(iw.H1, iw.A_plus),
             op_compose(iw.A_plus, Hg));
    check_zero("comm(A+,A-)=0", comm(iw.A_plus, iw.A_minus));
    check_eq("A+ equals the eta-signed a ladder", iw.A_plus,
             p.eta > 0 ? build_ladder(p).a_plus : build_ladder(p).a_minus);

    // diagonalisable partner
    check_zero("comm(H2,M0)=0", comm(H2, m.M0));
    check_zero("comm(H2,M+)=0", comm(H2, m.M_plus));
    check_zero("comm(H2,M-)=0", comm(H2, m.M_minus));

    // (q, q'') representation
    const PuRepresentation pu = build_pu_representation(p);
    const double pu_scale = std::max(
        {1.0, pu.Hg.max_abs_coeff(), pu.K.max_abs_coeff(),
         pu.M_plus.max_abs_coeff(), pu.M_minus.max_abs_coeff()});
    auto pu_zero = [&](const std::string& name, const WeylOp& d) {
        rep.add(name, d.max_abs_coeff() / pu_scale, tol);
    };
    auto pu_eq = [&](const std::string& name, const WeylOp& a, const WeylOp& c) {
        pu_zero(name, a - c);
    };
    pu_eq("pu: comm(M0,M+)=M+", comm(pu.M0, pu.M_plus), pu.M_plus);
    pu_eq("pu: comm(M0,M-)=-M-", comm(pu.M0, pu.M_minus), pu.M_minus * -1.0);
    pu_eq("pu: comm(M+,M-)=2M0", comm(pu.M_plus, pu.M_minus), pu.M0 * 2.0);
    pu_zero("pu: comm(K,M0)=0", comm(pu.K, pu.M0));
    pu_zero("pu: comm(K,M+)=0", comm(pu.K, pu.M_plus));
    pu_zero("pu: comm(K,M-)=0", comm(pu.K, pu.M_minus));
    pu_zero("pu: comm(Hg,K)=0", comm(pu.Hg, pu.K));
    pu_eq("pu: Hg = 2k K + M-", pu.Hg, pu.K * (2.0 * k) + pu.M_minus);
    // term-by-term expansion of the (q, q'') Hamiltonian
    const WeylOp Hg_pu_disp = mk(VarSet::PuQ, {{{0, 0, 1, 1}, 1.0},
                                               {{0, 0, 0, 2}, -2.0 * w},
                                               {{0, 2, 0, 0}, 0.5},
                                               {{2, 0, 0, 0}, -2.0 * w * w}});
    pu_eq("pu: Hg term expansion", pu.Hg, Hg_pu_disp);

    return rep;
}

} // namespace pulab
