#include "pulab/states.hpp"

#include <cmath>
#include <sstream>

namespace pulab {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

void require_same_gauss(const GaussPolyState& a, const GaussPolyState& b) {
    const double tol = 1e-12;
    if (a.vars != b.vars)
        throw VarSetMismatch("states live over different variable sets");
    if (std::abs(a.gauss.alpha - b.gauss.alpha) > tol ||
        std::abs(a.gauss.beta - b.gauss.beta) > tol ||
        std::abs(a.gauss.gamma - b.gauss.gamma) > tol)
        throw GaussianMismatch("states carry different Gaussian envelopes");
}

// d/du of P * exp(-a/2 u^2 - b/2 v^2 + g u v) stays in the class:
// P -> dP/du + (-a u + g v) P.
Poly2 poly_du(const Poly2& p, const Gaussian& g) {
    Poly2 q;
    for (const auto& [k, c] : p) {
        if (k[0] > 0) q[{k[0] - 1, k[1]}] += k[0] * c;
        q[{k[0] + 1, k[1]}] += -g.alpha * c;
        q[{k[0], k[1] + 1}] += g.gamma * c;
    }
    return q;
}

Poly2 poly_dv(const Poly2& p, const Gaussian& g) {
    Poly2 q;
    for (const auto& [k, c] : p) {
        if (k[1] > 0) q[{k[0], k[1] - 1}] += k[1] * c;
        q[{k[0], k[1] + 1}] += -g.beta * c;
        q[{k[0] + 1, k[1]}] += g.gamma * c;
    }
    return q;
}

} // namespace

GaussPolyState ground_state(const ModelParams& p) {
    GaussPolyState s;
    s.poly[{0, 0}] = 1.0;
    s.gauss = {p.alpha, p.beta, p.gamma};
    s.vars = VarSet::GhostXY;
    return s;
}

GaussPolyState chain_seed(int m, const ModelParams& p) {
    if (m < 0) throw Error("chain_seed: m must be nonnegative");
    GaussPolyState s = ground_state(p);
    s.poly.clear();
    for (int i = 0; i <= m; ++i)
        s.poly[{m - i, i}] = binom(m, i) * ((i % 2 == 0) ? 1.0 : -1.0);
    return s;
}

GaussPolyState state_add(const GaussPolyState& a, const GaussPolyState& b,
                         double ca, double cb) {
    require_same_gauss(a, b);
    GaussPolyState out = a;
    out.poly.clear();
    poly_accumulate(out.poly, a.poly, ca);
    poly_accumulate(out.poly, b.poly, cb);
    out.poly = poly_pruned(std::move(out.poly));
    return out;
}

GaussPolyState state_scale(const GaussPolyState& a, double c) {
    GaussPolyState out = a;
    for (auto& [k, v] : out.poly) v *= c;
    out.poly = poly_pruned(std::move(out.poly));
    return out;
}

bool state_is_zero(const GaussPolyState& a, double tol) {
    return poly_max_abs(a.poly) <= tol;
}

double eval_at(const GaussPolyState& a, double u, double v) {
    const double expo = -0.5 * a.gauss.alpha * u * u -
                        0.5 * a.gauss.beta * v * v + a.gauss.gamma * u * v;
    return poly_eval(a.poly, u, v) * std::exp(expo);
}

std::optional<double> proportionality(const GaussPolyState& a,
                                      const GaussPolyState& b, double tol) {
    require_same_gauss(a, b);
    const double mb = poly_max_abs(b.poly);
    if (mb == 0.0) return std::nullopt;
    // pick the largest coefficient of b as the anchor
    double c = 0.0;
    for (const auto& [k, v] : b.poly)
        if (std::abs(v) == mb) {
            auto it = a.poly.find(k);
            c = (it == a.poly.end() ? 0.0 : it->second) / v;
            break;
        }
    Poly2 resid = a.poly;
    poly_accumulate(resid, b.poly, -c);
    const double scale = std::max({1.0, poly_max_abs(a.poly), std::abs(c) * mb});
    if (poly_max_abs(poly_pruned(std::move(resid))) > tol * scale)
        return std::nullopt;
    return c;
}

GaussPolyState apply_to_state(const WeylOp& op, const GaussPolyState& psi) {
    if (op.vars() != psi.vars)
        throw VarSetMismatch("operator and state live over different variable sets");
    GaussPolyState out = psi;
    out.poly.clear();
    for (const auto& [k, v] : op.terms()) {
        Poly2 p = psi.poly;
        for (int i = 0; i < k[3]; ++i) p = poly_dv(p, psi.gauss);
        for (int i = 0; i < k[2]; ++i) p = poly_du(p, psi.gauss);
        for (const auto& [m, c] : p) out.poly[{m[0] + k[0], m[1] + k[1]}] += v * c;
    }
    out.poly = poly_pruned(std::move(out.poly));
    return out;
}

bool is_normalizable(const Gaussian& g) {
    return g.alpha > 0.0 && g.beta > 0.0 &&
           g.alpha * g.beta - g.gamma * g.gamma > 0.0;
}

std::string state_str(const GaussPolyState& a) {
    std::ostringstream os;
    os << "gauss(" << a.gauss.alpha << ", " << a.gauss.beta << ", "
       << a.gauss.gamma << ") * [";
    bool first = true;
    for (const auto& [k, v] : a.poly) {
        os << (first ? "" : " + ") << v << "*u^" << k[0] << "*v^" << k[1];
        first = false;
    }
    if (first) os << "0";
    os << "]";
    return os.str();
}

} // namespace pulab
