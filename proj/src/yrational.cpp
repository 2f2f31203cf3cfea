#include "kcones/yrational.hpp"

#include "kcones/errors.hpp"

namespace kcones {

YRational::YRational(const mpq_class& v)
    : num_(mpz_class(v.get_num())), den_(mpz_class(v.get_den())) {
    normalize();
}

YRational::YRational(IntPoly num) : num_(std::move(num)), den_(1L) {}

YRational::YRational(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void YRational::normalize() {
    if (den_.is_zero()) throw DivisionError("zero denominator in rational function");
    if (num_.is_zero()) {
        den_ = IntPoly(1L);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        IntPoly q;
        if (!IntPoly::divide_exact(num_, g, q)) throw Error("gcd does not divide numerator");
        num_ = q;
        if (!IntPoly::divide_exact(den_, g, q)) throw Error("gcd does not divide denominator");
        den_ = q;
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

YRational YRational::operator-() const {
    YRational r(*this);
    r.num_ = -r.num_;
    return r;
}

YRational YRational::operator+(const YRational& o) const {
    return YRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

YRational YRational::operator-(const YRational& o) const {
    return YRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

YRational YRational::operator*(const YRational& o) const {
    return YRational(num_ * o.num_, den_ * o.den_);
}

YRational YRational::operator/(const YRational& o) const {
    if (o.is_zero()) throw DivisionError("division by zero rational function");
    return YRational(num_ * o.den_, den_ * o.num_);
}

YRational YRational::pow(int e) const {
    if (e == 0) return YRational(1);
    if (e < 0) {
        if (is_zero()) throw DivisionError("negative power of zero");
        return YRational(den_, num_).pow(-e);
    }
    return YRational(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

mpq_class YRational::eval(const mpq_class& v) const {
    mpq_class d = den_.eval(v);
    if (d == 0) throw DivisionError("pole of rational function at y = " + v.get_str());
    mpq_class r = num_.eval(v) / d;
    r.canonicalize();
    return r;
}

std::string YRational::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    return "(" + n + ")/(" + d + ")";
}

} // namespace kcones
