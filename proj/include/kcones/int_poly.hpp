#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kcones {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v);                       // NOLINT(google-explicit-constructor)
    IntPoly(mpz_class v);                  // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly variable();             // the generator, degree 1
    static IntPoly monomial(mpz_class coeff, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of the given degree (zero beyond the stored range).
    const mpz_class& coeff(int deg) const;
    const mpz_class& leading_coeff() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    mpz_class content() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly pow(unsigned e) const;

    /// Quotient of an exact division; returns false when b does not divide a
    /// over the integers.
    static bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient);

    /// Positive-leading-coefficient gcd in Z[x] (content times primitive gcd).
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    mpq_class eval(const mpq_class& x) const;

    /// Space-separated decimal coefficients in ascending degree ("0" for zero).
    std::string coeff_string() const;
    static IntPoly from_coeff_string(const std::string& s);

    /// Human form, e.g. "1 - 2*y + y^3" for variable name "y".
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

mpz_class binomial(long n, long k);

} // namespace kcones
