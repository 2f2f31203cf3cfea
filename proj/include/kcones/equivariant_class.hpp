#pragma once

#include "kcones/laurent.hpp"
#include "kcones/torus_action.hpp"
#include "kcones/truncated_class.hpp"

namespace kcones {

/// Result of division by the relation prod(1 - t/b_i):
/// input = quotient * relation + reduced, with reduced of t-degree in [0, n].
struct LaurentDivision {
    LaurentExpr reduced;
    LaurentExpr quotient;
};

/// Normal form modulo the relation. Requires integer t-exponents; negative
/// powers are eliminated from below (the relation has unit constant term)
/// and degrees above n from the top (the relation has unit leading
/// monomial), so the representative with t-degree in [0, n] is unique.
LaurentDivision laurent_divmod(const LaurentExpr& p, const TorusAction& action);

/// Element of K_T(P^n)[y] in reduced form.
class EquivariantClass {
public:
    /// Reduces p on construction.
    EquivariantClass(TorusAction action, const LaurentExpr& p);

    const TorusAction& action() const { return action_; }
    const LaurentExpr& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    EquivariantClass operator+(const EquivariantClass& o) const;
    EquivariantClass operator-(const EquivariantClass& o) const;
    EquivariantClass operator*(const EquivariantClass& o) const;
    EquivariantClass operator*(const YRational& s) const;
    bool operator==(const EquivariantClass& o) const {
        return action_ == o.action_ && terms_ == o.terms_;
    }
    bool operator!=(const EquivariantClass& o) const { return !(*this == o); }

    std::string to_string() const { return terms_.to_string(); }

private:
    TorusAction action_;
    LaurentExpr terms_;
};

/// Spec-facing name for reduction into the quotient ring.
EquivariantClass laurent_reduce(const LaurentExpr& p, const TorusAction& action);

/// Rank-0 bridge: a reduced class with no torus characters is an element of
/// the non-equivariant ring K(P^n).
TruncatedClass to_truncated(const EquivariantClass& c);
/// t-basis view of a truncated class as a rank-0 Laurent polynomial in t.
LaurentExpr to_laurent(const TruncatedClass& c);

EquivariantClass divide_exact_y(const EquivariantClass& c, const YRational& d);

} // namespace kcones
