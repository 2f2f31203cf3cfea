#pragma once

#include "kcones/equivariant_class.hpp"

namespace kcones {

/// Equivariant class on affine space: no relation applies, the canonical
/// sparse Laurent form is the representative. The t-variable is the scalar
/// (Gamma) grading and is present only for Gamma-equivariant classes.
struct AffineEquivariantClass {
    TorusAction action;
    LaurentExpr terms;

    bool operator==(const AffineEquivariantClass& o) const {
        return action == o.action && terms == o.terms;
    }
    bool y_polynomial() const;
    std::string to_string() const { return terms.to_string(); }
};

/// Output bundle of the equivariant linear-subspace constructor.
struct LinearSubspaceClasses {
    AffineEquivariantClass M;   // mC of the punctured cone plus the origin term
    AffineEquivariantClass R;   // [0]: the relation product
    EquivariantClass mcT;       // motivic Chern class of P^k in P^n
};

/// Kirwan map: identify t with the tautological-bundle class and reduce.
EquivariantClass kirwan(const AffineEquivariantClass& c);

/// For the coordinate subspace P^k spanned by the first k+1 eigenvectors:
/// M = prod_{i<=k+1}(1 + yt/b_i) prod_{i>k+1}(1 - t/b_i), R = prod(1 - t/b_i),
/// and (1+y) mcT = M - (-y)^{k+1} R in reduced form.
LinearSubspaceClasses equiv_linear_subspace(int k, const TorusAction& action);

/// Substitute a_i -> a_i t^{-w_i/q} and reduce; nonvanishing fractional
/// residues mean the input was not the class of a scalar-invariant cone.
EquivariantClass affine_to_projective_segre(const AffineEquivariantClass& ms0,
                                            const ScalarEmbedding& emb);

/// Same substitution followed by exact division by (1+y). If the input has
/// y-polynomial coefficients the quotient must too; anything else is a
/// malformed input.
EquivariantClass affine_to_projective_mc(const AffineEquivariantClass& mc0,
                                         const ScalarEmbedding& emb);

/// (1+y)(mcT - chi_y [0]) with [0] = prod(1 - t/b_i): the Gamma x T class of
/// the punctured affine cone from the reduced projective class.
AffineEquivariantClass projective_to_affine_full(const EquivariantClass& mcT,
                                                 const YRational& chi_y);

/// Scalar-only specialization at rank 0: (1+y)(mc - chi_y (1-t)^{n+1}).
AffineEquivariantClass projective_to_affine_scalar(const TruncatedClass& mc,
                                                   const YRational& chi_y);

/// Forget the scalar grading: (1+y)(mcT|_{t=1} - chi_y prod(1 - 1/b_i)).
AffineEquivariantClass projective_to_affine_forget(const EquivariantClass& mcT,
                                                   const YRational& chi_y);

} // namespace kcones
