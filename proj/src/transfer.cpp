#include "kcones/transfer.hpp"

#include "kcones/errors.hpp"

namespace kcones {

namespace {

bool laurent_y_polynomial(const LaurentExpr& e) {
    for (const auto& [k, c] : e.terms())
        if (!c.is_polynomial()) return false;
    return true;
}

// Validates that the embedding really scales every character with weight q.
TorusAction with_embedding(const TorusAction& action, const ScalarEmbedding& emb) {
    return TorusAction(action.rank(), action.characters(), emb);
}

} // namespace

bool AffineEquivariantClass::y_polynomial() const {
    return laurent_y_polynomial(terms);
}

EquivariantClass kirwan(const AffineEquivariantClass& c) {
    return laurent_reduce(c.terms, c.action);
}

LinearSubspaceClasses equiv_linear_subspace(int k, const TorusAction& action) {
    const int n = action.n();
    if (k < 0 || k > n) throw InputError("subspace dimension outside 0..n");
    const int rank = action.rank();
    const YRational y = YRational::y();
    const LaurentExpr one = LaurentExpr::constant(rank, YRational(1));

    LaurentExpr m = one;
    for (int i = 1; i <= n + 1; ++i) {
        LaurentExpr t_over_beta =
            LaurentExpr::t_power(rank, Frac(1)) * action.character(i).pow(-1);
        if (i <= k + 1)
            m = m * (one + t_over_beta * y);
        else
            m = m * (one - t_over_beta);
    }
    LaurentExpr r = action.relation();

    YRational minus_y_pow = (-y).pow(k + 1);
    EquivariantClass mcT = divide_exact_y(
        EquivariantClass(action, m - r * minus_y_pow), YRational(1) + y);

    return LinearSubspaceClasses{{action, m}, {action, r}, mcT};
}

EquivariantClass affine_to_projective_segre(const AffineEquivariantClass& ms0,
                                            const ScalarEmbedding& emb) {
    // Rank 0 is the scalar-only case: the class already carries its t-grading
    // and the substitution has nothing to act on.
    TorusAction action = ms0.action;
    LaurentExpr substituted = ms0.terms;
    if (action.rank() > 0) {
        action = with_embedding(ms0.action, emb);
        if (!ms0.terms.t_free())
            throw InputError("affine T-equivariant input must not contain t");
        substituted = ms0.terms.substitute_scalar(emb.weights, emb.q);
    }
    LaurentExpr integral_part(action.rank());
    for (const auto& [residue, piece] : substituted.split_fractional()) {
        LaurentExpr reduced = laurent_divmod(piece, action).reduced;
        if (residue.is_zero()) {
            integral_part = reduced;
        } else if (!reduced.is_zero()) {
            throw FractionalExponentError(
                "reduced class keeps t-exponent residue " + residue.to_string() +
                "; the input is not the class of a scalar-invariant cone");
        }
    }
    return EquivariantClass(action, integral_part);
}

EquivariantClass affine_to_projective_mc(const AffineEquivariantClass& mc0,
                                         const ScalarEmbedding& emb) {
    EquivariantClass raw = affine_to_projective_segre(mc0, emb);
    const YRational one_plus_y = YRational(1) + YRational::y();
    EquivariantClass divided = divide_exact_y(raw, one_plus_y);
    if (mc0.y_polynomial() && !laurent_y_polynomial(divided.terms()))
        throw DivisionError("(1+y) does not divide the reduced class coefficientwise; "
                            "malformed motivic input");
    return divided;
}

AffineEquivariantClass projective_to_affine_full(const EquivariantClass& mcT,
                                                 const YRational& chi_y) {
    const YRational one_plus_y = YRational(1) + YRational::y();
    LaurentExpr out = (mcT.terms() - mcT.action().relation() * chi_y) * one_plus_y;
    return AffineEquivariantClass{mcT.action(), out};
}

AffineEquivariantClass projective_to_affine_scalar(const TruncatedClass& mc,
                                                   const YRational& chi_y) {
    TorusAction gamma = TorusAction::trivial(mc.n());
    const YRational one_plus_y = YRational(1) + YRational::y();
    LaurentExpr out = (to_laurent(mc) - gamma.relation() * chi_y) * one_plus_y;
    return AffineEquivariantClass{gamma, out};
}

AffineEquivariantClass projective_to_affine_forget(const EquivariantClass& mcT,
                                                   const YRational& chi_y) {
    const YRational one_plus_y = YRational(1) + YRational::y();
    LaurentExpr out =
        (mcT.terms().eval_t1() - mcT.action().origin_forget_t() * chi_y) * one_plus_y;
    return AffineEquivariantClass{mcT.action(), out};
}

} // namespace kcones
