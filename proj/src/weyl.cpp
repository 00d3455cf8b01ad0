#include "pulab/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pulab {

namespace {

constexpr double kPruneEps = 1e-14;

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

double falling(int a, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r *= double(a - i);
    return r;
}

} // namespace

double poly_max_abs(const Poly2& p) {
    double m = 0.0;
    for (const auto& [k, v] : p) m = std::max(m, std::abs(v));
    return m;
}

Poly2 poly_pruned(Poly2 p, double eps) {
    const double cut = eps * std::max(1.0, poly_max_abs(p));
    for (auto it = p.begin(); it != p.end();) {
        if (std::abs(it->second) <= cut)
            it = p.erase(it);
        else
            ++it;
    }
    return p;
}

void poly_accumulate(Poly2& dst, const Poly2& src, double c) {
    for (const auto& [k, v] : src) dst[k] += c * v;
}

Poly2 poly_mul(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
            out[{ka[0] + kb[0], ka[1] + kb[1]}] += va * vb;
    return poly_pruned(std::move(out));
}

double poly_eval(const Poly2& p, double u, double v) {
    double r = 0.0;
    for (const auto& [k, c] : p) r += c * std::pow(u, k[0]) * std::pow(v, k[1]);
    return r;
}

WeylOp::WeylOp(VarSet vars, Terms terms) : vars_(vars), terms_(std::move(terms)) {
    prune();
}

WeylOp WeylOp::identity(VarSet vars) {
    return monomial(vars, {0, 0, 0, 0}, 1.0);
}

WeylOp WeylOp::monomial(VarSet vars, Index idx, double coeff) {
    WeylOp op(vars);
    if (coeff != 0.0) op.terms_[idx] = coeff;
    return op;
}

double WeylOp::coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0.0 : it->second;
}

double WeylOp::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, v] : terms_) m = std::max(m, std::abs(v));
    return m;
}

void WeylOp::prune() {
    const double cut = kPruneEps * std::max(1.0, max_abs_coeff());
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= cut)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void WeylOp::require_same_vars(const WeylOp& o) const {
    if (vars_ != o.vars_)
        throw VarSetMismatch("cannot combine operators over different variable sets");
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    require_same_vars(o);
    for (const auto& [k, v] : o.terms_) terms_[k] += v;
    prune();
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    require_same_vars(o);
    for (const auto& [k, v] : o.terms_) terms_[k] -= v;
    prune();
    return *this;
}

WeylOp& WeylOp::operator*=(double c) {
    for (auto& [k, v] : terms_) v *= c;
    prune();
    return *this;
}

WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
WeylOp operator*(WeylOp a, double c) { return a *= c; }
WeylOp operator*(double c, WeylOp a) { return a *= c; }

WeylOp op_compose(const WeylOp& a, const WeylOp& b) {
    if (a.vars() != b.vars())
        throw VarSetMismatch("cannot compose operators over different variable sets");
    WeylOp::Terms out;
    for (const auto& [ka, va] : a.terms()) {
        const int a1 = ka[0], b1 = ka[1], c1 = ka[2], d1 = ka[3];
        for (const auto& [kb, vb] : b.terms()) {
            const int a2 = kb[0], b2 = kb[1], c2 = kb[2], d2 = kb[3];
            for (int j = 0; j <= std::min(c1, a2); ++j) {
                const double cj = binom(c1, j) * falling(a2, j);
                for (int l = 0; l <= std::min(d1, b2); ++l) {
                    const double cl = binom(d1, l) * falling(b2, l);
                    out[{a1 + a2 - j, b1 + b2 - l, c1 + c2 - j, d1 + d2 - l}] +=
                        va * vb * cj * cl;
                }
            }
        }
    }
    return WeylOp(a.vars(), std::move(out));
}

WeylOp op_commutator(const WeylOp& a, const WeylOp& b) {
    return op_compose(a, b) - op_compose(b, a);
}

bool op_equal(const WeylOp& a, const WeylOp& b, double tol) {
    if (a.vars() != b.vars())
        throw VarSetMismatch("cannot compare operators over different variable sets");
    const WeylOp d = a - b;
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    return d.max_abs_coeff() <= tol * scale;
}

Poly2 apply_to_poly(const WeylOp& a, const Poly2& p) {
    Poly2 out;
    for (const auto& [k, v] : a.terms()) {
        for (const auto& [m, c] : p) {
            // derivative du^c dv^d of u^i v^j
            const int i = m[0], j = m[1];
            if (i < k[2] || j < k[3]) continue;
            const double f = falling(i, k[2]) * falling(j, k[3]);
            out[{i - k[2] + k[0], j - k[3] + k[1]}] += v * c * f;
        }
    }
    return poly_pruned(std::move(out));
}

std::string WeylOp::str() const {
    static const char* names[2][4] = {{"x", "y", "dx", "dy"}, {"q", "Q", "dq", "dQ"}};
    const int rep = vars_ == VarSet::GhostXY ? 0 : 1;
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        os << (first ? "" : " + ") << v;
        first = false;
        for (int f = 0; f < 4; ++f) {
            if (k[f] == 0) continue;
            os << "*" << names[rep][f];
            if (k[f] > 1) os << "^" << k[f];
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace pulab
