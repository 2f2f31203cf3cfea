#pragma once

#include "kcones/int_poly.hpp"
#include "kcones/laurent.hpp"
#include "kcones/truncated_class.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kcones {

/// Numerator of the Hilbert series over (1-t)^{n+1}. Unreduced: the degree
/// is arbitrary, only the class modulo (1-t)^{n+1} is an invariant of X.
struct KPolynomial {
    int n = 0;       // ambient projective dimension
    IntPoly poly;    // integer polynomial in t
};

/// Monomial ideal in n+1 = num_vars homogeneous coordinates, held with a
/// minimal generating set (divisible generators are dropped on
/// construction).
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<std::vector<int>> generators);

    int num_vars() const { return num_vars_; }
    const std::vector<std::vector<int>>& generators() const { return generators_; }

private:
    int num_vars_;
    std::vector<std::vector<int>> generators_;
};

/// Polynomial in m with exact rational coefficients; integer-valued at all
/// sufficiently large integers.
struct HilbertPolynomial {
    std::vector<mpq_class> coeffs;                      // ascending powers of m
    std::vector<std::pair<mpq_class, int>> binomial_terms; // (q, r): q * C(m+r, r)

    mpq_class eval(const mpq_class& m) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;
    std::string to_binomial_string() const;
};

inline constexpr int kDefaultGeneratorCap = 20;

/// Alternating subset sum over lcm degrees (Taylor complex Euler
/// characteristic); exact even though the underlying resolution is not
/// minimal. Throws ResourceLimitError above the generator cap.
KPolynomial kpoly_from_monomial_ideal(const MonomialIdeal& ideal,
                                      int generator_cap = kDefaultGeneratorCap);

/// First J+1 coefficients of K(t) / (1-t)^{n+1}.
std::vector<mpz_class> hilbert_series_coefficients(const KPolynomial& k, int J);

/// The sheaf class: K(t) reduced modulo (1-t)^{n+1} into canonical H form.
TruncatedClass sheaf_class_from_kpoly(const KPolynomial& k);

/// Basis change H^{n-i} -> C(m+i, i): the Hilbert polynomial of the class.
/// Requires y-free coefficients.
HilbertPolynomial hilbert_polynomial_from_class(const TruncatedClass& c);

/// The K-polynomial reinterpreted as the scalar-equivariant sheaf class of
/// the affine cone: identity on data, rank-0 Laurent polynomial in t.
LaurentExpr gamma_equivariant_sheaf_class(const KPolynomial& k);

} // namespace kcones
