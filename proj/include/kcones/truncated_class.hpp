#pragma once

#include "kcones/yrational.hpp"

#include <string>
#include <vector>

namespace kcones {

enum class Basis { H, T };

/// Element of K(P^n)[y] = Z[t]/((1-t)^{n+1}) with rational-function
/// coefficients in y, held in canonical reduced form: exactly n+1
/// coefficient slots for degrees 0..n of H = 1-t (or of t in the t-basis
/// view). H is the canonical storage basis; the two views are exchanged by
/// the involution H = 1-t, t = 1-H.
class TruncatedClass {
public:
    /// Zero class at ambient dimension n (all-zero slots).
    static TruncatedClass zero(int n, Basis basis = Basis::H);
    static TruncatedClass one(int n, Basis basis = Basis::H);
    /// coeff * H^k (or t^k in the t-basis); k must lie in 0..n.
    static TruncatedClass monomial(int n, int k, YRational coeff, Basis basis = Basis::H);
    TruncatedClass(int n, Basis basis, std::vector<YRational> coeffs);

    /// Reduce an arbitrary-degree t-polynomial modulo (1-t)^{n+1}; the input
    /// is indexed by ascending powers of t.
    static TruncatedClass from_t_polynomial(int n, const std::vector<YRational>& t_coeffs);
    static TruncatedClass from_t_polynomial(int n, const IntPoly& t_poly);

    int n() const { return n_; }
    Basis basis() const { return basis_; }
    const std::vector<YRational>& coeffs() const { return coeffs_; }
    const YRational& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    /// True when every coefficient lies in Z[y].
    bool is_y_polynomial() const;

    /// The same class expressed in the other basis; an involution.
    TruncatedClass converted(Basis target) const;
    TruncatedClass in_h() const { return converted(Basis::H); }
    TruncatedClass in_t() const { return converted(Basis::T); }

    TruncatedClass operator+(const TruncatedClass& o) const;
    TruncatedClass operator-(const TruncatedClass& o) const;
    TruncatedClass operator*(const TruncatedClass& o) const;
    TruncatedClass operator*(const YRational& s) const;
    TruncatedClass operator-() const;

    /// Equality as ring elements (compares canonical H forms).
    bool operator==(const TruncatedClass& o) const;
    bool operator!=(const TruncatedClass& o) const { return !(*this == o); }

    /// Multiplicative inverse; requires an invertible (nonzero) degree-0 part.
    TruncatedClass inverse() const;
    TruncatedClass operator/(const TruncatedClass& o) const { return *this * o.inverse(); }

    /// Substitute a rational value for y in every coefficient.
    TruncatedClass eval_y(const mpq_class& v) const;

    std::string to_string() const;

private:
    int n_;
    Basis basis_;
    std::vector<YRational> coeffs_; // exactly n_+1 entries
};

/// Arithmetic entry point keyed by an operation name, mirroring the module
/// contract; op is one of "add", "sub", "mul".
TruncatedClass ring_ops(const TruncatedClass& a, const TruncatedClass& b, const std::string& op);
TruncatedClass ring_scalar(const TruncatedClass& a, const YRational& s);

/// Divide every coefficient by a polynomial in y. Division happens in the
/// rational-function field and is verified by multiplying back; a zero
/// divisor is an error.
TruncatedClass divide_exact_y(const TruncatedClass& c, const YRational& d);

} // namespace kcones
