#pragma once

#include "kcones/yrational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kcones {

/// Exact rational exponent, normalized with positive denominator.
struct Frac {
    long num = 0;
    long den = 1;

    Frac() = default;
    Frac(long n) : num(n), den(1) {} // NOLINT
    Frac(long n, long d);

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator-() const { return Frac(-num, den); }
    Frac operator*(long s) const { return Frac(num * s, den); }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
    /// Fractional part in [0,1).
    Frac frac_part() const;
    std::string to_string() const;
};

/// Exponent vector of a Laurent monomial: integer exponents for the torus
/// characters a1..ak plus an exact-rational exponent for t.
struct ExpKey {
    std::vector<int> alpha;
    Frac t;

    bool operator==(const ExpKey& o) const { return alpha == o.alpha && t == o.t; }
    bool operator<(const ExpKey& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return t < o.t;
    }
};

/// Finite YRational-combination of Laurent monomials in a1..ak and t.
/// No zero coefficients are stored; the exponent lattice for t is whatever
/// the terms carry (integers except transiently inside the scalar
/// substitution).
class LaurentExpr {
public:
    explicit LaurentExpr(int rank = 0) : rank_(rank) {}

    static LaurentExpr constant(int rank, YRational c);
    static LaurentExpr monomial(int rank, ExpKey key, YRational c);
    /// The character a_i (1-based index).
    static LaurentExpr alpha(int rank, int i, int exponent = 1);
    static LaurentExpr t_power(int rank, Frac e);

    int rank() const { return rank_; }
    const std::map<ExpKey, YRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentExpr operator+(const LaurentExpr& o) const;
    LaurentExpr operator-(const LaurentExpr& o) const;
    LaurentExpr operator-() const;
    LaurentExpr operator*(const LaurentExpr& o) const;
    LaurentExpr operator*(const YRational& s) const;
    bool operator==(const LaurentExpr& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const LaurentExpr& o) const { return !(*this == o); }

    /// Integer power; a negative exponent requires a single-term base.
    LaurentExpr pow(int e) const;

    void add_term(const ExpKey& key, const YRational& c);

    bool t_free() const;
    bool t_integral() const;
    /// Bounds of integer t-exponents; requires t_integral() and non-empty.
    long t_min() const;
    long t_max() const;

    /// The coefficient of t^j as a t-free expression.
    LaurentExpr t_coefficient(long j) const;

    /// Substitute a_i -> a_i * t^(-w_i/q); exponents move onto the 1/q lattice.
    LaurentExpr substitute_scalar(const std::vector<long>& weights, long q) const;

    /// Set t = 1 (collapse the t-grading).
    LaurentExpr eval_t1() const;

    /// Split into fractional-part classes: for each residue r in [0,1) the
    /// piece holds the terms with t-exponent in r + Z, shifted by -r so its
    /// t-exponents are integers.
    std::map<Frac, LaurentExpr> split_fractional() const;

    LaurentExpr eval_y(const mpq_class& v) const;

    std::string to_string() const;

private:
    int rank_;
    std::map<ExpKey, YRational> terms_;
};

/// Divide every coefficient by d in the rational-function field, verifying
/// the quotient by multiplying back.
LaurentExpr divide_exact_y(const LaurentExpr& p, const YRational& d);

} // namespace kcones
