#pragma once

// Two-variable Weyl algebra: differential operators with polynomial
// coefficients, kept in normal order (all multiplications left of all
// derivatives). A term is coeff * u^a v^b du^c dv^d, keyed by (a,b,c,d).
// (u,v) stands for (x,y) or (q,q'') depending on the representation tag.

#include <array>
#include <map>
#include <string>

#include "pulab/errors.hpp"

namespace pulab {

enum class VarSet { GhostXY, PuQ };

// Sparse bivariate polynomial, keyed by exponent pair (i, j).
using Poly2 = std::map<std::array<int, 2>, double>;

double poly_max_abs(const Poly2& p);
Poly2 poly_pruned(Poly2 p, double eps = 1e-14);
void poly_accumulate(Poly2& dst, const Poly2& src, double c = 1.0);
Poly2 poly_mul(const Poly2& a, const Poly2& b);
double poly_eval(const Poly2& p, double u, double v);

class WeylOp {
public:
    using Index = std::array<int, 4>; // (a, b, c, d): u^a v^b du^c dv^d
    using Terms = std::map<Index, double>;

    WeylOp() = default;
    explicit WeylOp(VarSet vars) : vars_(vars) {}
    WeylOp(VarSet vars, Terms terms);

    static WeylOp identity(VarSet vars);
    static WeylOp monomial(VarSet vars, Index idx, double coeff);

    VarSet vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    double coeff(const Index& idx) const;
    double max_abs_coeff() const;
    bool empty() const { return terms_.empty(); }

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(double c);

    // Sorted human-readable term list, deterministic.
    std::string str() const;

private:
    void prune();
    void require_same_vars(const WeylOp& o) const;

    VarSet vars_ = VarSet::GhostXY;
    Terms terms_;
};

WeylOp operator+(WeylOp a, const WeylOp& b);
WeylOp operator-(WeylOp a, const WeylOp& b);
WeylOp operator*(WeylOp a, double c);
WeylOp operator*(double c, WeylOp a);

// Normal-ordered product A.B via the per-variable reordering identity
//   du^c u^a = sum_j C(c,j) * (a)_j * u^(a-j) du^(c-j)   ((a)_j falling factorial)
WeylOp op_compose(const WeylOp& a, const WeylOp& b);
WeylOp op_commutator(const WeylOp& a, const WeylOp& b);

// true iff max|coeff(A-B)| <= tol * max(1, max|A|, max|B|)
bool op_equal(const WeylOp& a, const WeylOp& b, double tol);

// Pointwise action on a pure polynomial (independent oracle for op_compose).
Poly2 apply_to_poly(const WeylOp& a, const Poly2& p);

} // namespace pulab
