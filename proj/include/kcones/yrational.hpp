#pragma once

#include "kcones/int_poly.hpp"

#include <string>

namespace kcones {

/// Exact rational function in the genus variable y: the universal coefficient
/// domain. Canonical form: nonzero denominator with positive leading
/// coefficient, gcd(numerator, denominator) a unit, integer content of the
/// pair reduced. Equality is literal equality of canonical forms.
class YRational {
public:
    YRational() : num_(), den_(1L) {}
    YRational(long v) : num_(v), den_(1L) {}                // NOLINT
    YRational(mpz_class v) : num_(std::move(v)), den_(1L) {} // NOLINT
    YRational(const mpq_class& v);                           // NOLINT
    YRational(IntPoly num);                                  // NOLINT
    YRational(IntPoly num, IntPoly den);

    static YRational y() { return YRational(IntPoly::variable()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in Z[y] (denominator exactly 1).
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    YRational operator-() const;
    YRational operator+(const YRational& o) const;
    YRational operator-(const YRational& o) const;
    YRational operator*(const YRational& o) const;
    YRational operator/(const YRational& o) const;
    YRational& operator+=(const YRational& o) { return *this = *this + o; }
    YRational& operator-=(const YRational& o) { return *this = *this - o; }
    YRational& operator*=(const YRational& o) { return *this = *this * o; }

    bool operator==(const YRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const YRational& o) const { return !(*this == o); }

    YRational pow(int e) const;

    /// Evaluate at y = v; throws DivisionError on a pole.
    mpq_class eval(const mpq_class& v) const;

    /// Substitute y = v, giving a constant rational function; pole -> throw.
    YRational eval_rational(const mpq_class& v) const { return YRational(eval(v)); }

    /// Plain rendering, integers bare, otherwise "(num)/(den)".
    std::string to_string(const std::string& var = "y") const;

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

} // namespace kcones
