#include "kcones/equivariant_class.hpp"

#include "kcones/errors.hpp"

namespace kcones {

LaurentDivision laurent_divmod(const LaurentExpr& p, const TorusAction& action) {
    if (p.rank() != action.rank()) throw DimensionError("class rank does not match action rank");
    if (!p.t_integral())
        throw FractionalExponentError("laurent_reduce requires integer t-exponents");

    const int n = action.n();
    const LaurentExpr relation = action.relation();
    // unit leading monomial of the relation: (-1)^{n+1} t^{n+1} / prod(b_i)
    const LaurentExpr lead = relation.t_coefficient(n + 1);
    const LaurentExpr lead_inv = lead.pow(-1);

    LaurentExpr rem = p;
    LaurentExpr quotient(p.rank());

    // eliminate negative powers from below; the relation's t^0 coefficient is 1
    while (!rem.is_zero() && rem.t_min() < 0) {
        long m = rem.t_min();
        LaurentExpr layer = rem.t_coefficient(m) * LaurentExpr::t_power(p.rank(), Frac(m));
        rem = rem - layer * relation;
        quotient = quotient + layer;
    }
    // ordinary division from the top
    while (!rem.is_zero() && rem.t_max() > n) {
        long d = rem.t_max();
        LaurentExpr factor = rem.t_coefficient(d) * lead_inv *
                             LaurentExpr::t_power(p.rank(), Frac(d - (n + 1)));
        rem = rem - factor * relation;
        quotient = quotient + factor;
    }
    return LaurentDivision{rem, quotient};
}

EquivariantClass::EquivariantClass(TorusAction action, const LaurentExpr& p)
    : action_(std::move(action)), terms_(laurent_divmod(p, action_).reduced) {}

EquivariantClass EquivariantClass::operator+(const EquivariantClass& o) const {
    if (!(action_ == o.action_)) throw DimensionError("mismatched torus actions");
    return EquivariantClass(action_, terms_ + o.terms_);
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& o) const {
    if (!(action_ == o.action_)) throw DimensionError("mismatched torus actions");
    return EquivariantClass(action_, terms_ - o.terms_);
}

EquivariantClass EquivariantClass::operator*(const EquivariantClass& o) const {
    if (!(action_ == o.action_)) throw DimensionError("mismatched torus actions");
    return EquivariantClass(action_, terms_ * o.terms_);
}

EquivariantClass EquivariantClass::operator*(const YRational& s) const {
    return EquivariantClass(action_, terms_ * s);
}

EquivariantClass laurent_reduce(const LaurentExpr& p, const TorusAction& action) {
    return EquivariantClass(action, p);
}

TruncatedClass to_truncated(const EquivariantClass& c) {
    if (c.action().rank() != 0)
        throw DimensionError("only rank-0 classes map to the non-equivariant ring");
    const int n = c.action().n();
    std::vector<YRational> t_coeffs(static_cast<size_t>(n) + 1);
    for (const auto& [k, coeff] : c.terms().terms())
        t_coeffs[static_cast<size_t>(k.t.num)] = coeff;
    return TruncatedClass(n, Basis::T, std::move(t_coeffs)).in_h();
}

LaurentExpr to_laurent(const TruncatedClass& c) {
    TruncatedClass t = c.in_t();
    LaurentExpr r(0);
    for (int j = 0; j <= t.n(); ++j) {
        ExpKey key;
        key.t = Frac(j);
        r.add_term(key, t.coeff(j));
    }
    return r;
}

EquivariantClass divide_exact_y(const EquivariantClass& c, const YRational& d) {
    return EquivariantClass(c.action(), divide_exact_y(c.terms(), d));
}

} // namespace kcones
