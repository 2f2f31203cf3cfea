#pragma once

#include "kcones/int_poly.hpp"
#include "kcones/truncated_class.hpp"

#include <utility>
#include <vector>

namespace kcones {

/// Motivic Chern class of a projective cone together with its input data.
/// The formula is proved for smooth bases and extends to constructible ones
/// through the motivic chi_y genus; smooth_certified records the caller's
/// assertion about the base.
struct ConeResult {
    TruncatedClass base_class;  // at n
    TruncatedClass cone_class;  // at n+1
    YRational chi_y_base;
    bool smooth_certified = true;
};

/// Cone recursion for the motivic Chern class:
/// qhat_i = (1+y) q_i - y q_{i-1} for i <= n,
/// qhat_{n+1} = 1 - y q_n - (1+y) chi_y(X), with chi_y(X) = sum q_i.
ConeResult projective_cone_mc(const TruncatedClass& mcX, bool smooth_certified = true);

/// y = 0 slice of the recursion: same coefficients plus (1 - td(X)) H^{n+1}.
TruncatedClass projective_cone_mc0(const TruncatedClass& mc0X, const mpq_class& toddX);

/// Pushforward class of the cone: identical coefficients one dimension up.
TruncatedClass projective_cone_pushforward(const TruncatedClass& classX);

/// Sheaf classes of X and of its cone from the shared K-polynomial: the
/// exact H-expansion of K(t) truncated at degree n and at degree n+1.
std::pair<TruncatedClass, TruncatedClass> projective_cone_sheaf(const IntPoly& kpoly, int n);

/// CSM mirror of the recursion: qhat_i = q_i + q_{i-1}, qhat_{n+1} = q_n + 1.
std::vector<mpz_class> csm_projective_cone(const std::vector<mpz_class>& csmX);

/// Restriction along a hyperplane P^n -> P^{n+1}: re-reduce the same t-basis
/// expression modulo (1-t)^{n+1} (drops the top H-coefficient).
TruncatedClass hyperplane_restriction(const TruncatedClass& c);

} // namespace kcones
