#include "kcones/int_poly.hpp"

#include "kcones/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kcones {

namespace {
const mpz_class kZero = 0;
} // namespace

IntPoly::IntPoly(long v) {
    if (v != 0) coeffs_.push_back(mpz_class(v));
}

IntPoly::IntPoly(mpz_class v) {
    if (v != 0) coeffs_.push_back(std::move(v));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::variable() {
    return monomial(1, 1);
}

IntPoly IntPoly::monomial(mpz_class coeff, int degree) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, kZero);
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

bool IntPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const mpz_class& IntPoly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(deg)];
}

const mpz_class& IntPoly::leading_coeff() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result(1L);
    IntPoly base(*this);
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

bool IntPoly::divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        quotient = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem = a.coeffs_;
    std::vector<mpz_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1, kZero);
    const mpz_class& lead = b.leading_coeff();
    for (int d = a.degree(); d >= b.degree();) {
        mpz_class& top = rem[static_cast<size_t>(d)];
        if (top != 0) {
            mpz_class qc, r;
            mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            if (r != 0) return false;
            int shift = d - b.degree();
            q[static_cast<size_t>(shift)] = qc;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(i + shift)] -= qc * b.coeff(i);
        }
        --d;
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading_coeff() < 0 ? -b : b;
    if (b.is_zero()) return a.leading_coeff() < 0 ? -a : a;

    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    // Primitive-part Euclid with pseudo-remainders; degrees here are tiny.
    auto primitive = [](IntPoly p) {
        mpz_class c = p.content();
        if (c > 1) {
            for (auto& x : p.coeffs_) x /= c;
        }
        if (p.leading_coeff() < 0) p = -p;
        return p;
    };
    IntPoly u = primitive(a);
    IntPoly v = primitive(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // scaled remainder: repeatedly cancel the top term without dividing
        IntPoly r = u;
        while (!r.is_zero() && r.degree() >= v.degree()) {
            int shift = r.degree() - v.degree();
            mpz_class lr = r.leading_coeff();
            r = r * v.leading_coeff() - (v * lr) * monomial(1, shift);
        }
        u = v;
        v = primitive(r);
    }
    return primitive(u) * cont;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

std::string IntPoly::coeff_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

IntPoly IntPoly::from_coeff_string(const std::string& s) {
    std::istringstream is(s);
    std::vector<mpz_class> coeffs;
    std::string tok;
    while (is >> tok) {
        try {
            coeffs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer coefficient '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw ParseError("empty coefficient string");
    return IntPoly(std::move(coeffs));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str() << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace kcones
