#include "kcones/laurent.hpp"

#include "kcones/errors.hpp"

#include <numeric>
#include <sstream>

namespace kcones {

Frac::Frac(long n, long d) {
    if (d == 0) throw DivisionError("zero denominator in exponent");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Frac Frac::operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
Frac Frac::operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }

Frac Frac::frac_part() const {
    long r = num % den;
    if (r < 0) r += den;
    return Frac(r, den);
}

std::string Frac::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

LaurentExpr LaurentExpr::constant(int rank, YRational c) {
    LaurentExpr e(rank);
    ExpKey key;
    key.alpha.assign(static_cast<size_t>(rank), 0);
    e.add_term(key, c);
    return e;
}

LaurentExpr LaurentExpr::monomial(int rank, ExpKey key, YRational c) {
    if (static_cast<int>(key.alpha.size()) != rank)
        throw DimensionError("exponent vector does not match rank");
    LaurentExpr e(rank);
    e.add_term(key, c);
    return e;
}

LaurentExpr LaurentExpr::alpha(int rank, int i, int exponent) {
    if (i < 1 || i > rank) throw InputError("character index out of range");
    ExpKey key;
    key.alpha.assign(static_cast<size_t>(rank), 0);
    key.alpha[static_cast<size_t>(i - 1)] = exponent;
    return monomial(rank, key, YRational(1));
}

LaurentExpr LaurentExpr::t_power(int rank, Frac e) {
    ExpKey key;
    key.alpha.assign(static_cast<size_t>(rank), 0);
    key.t = e;
    return monomial(rank, key, YRational(1));
}

void LaurentExpr::add_term(const ExpKey& key, const YRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentExpr LaurentExpr::operator+(const LaurentExpr& o) const {
    if (rank_ != o.rank_) throw DimensionError("rank mismatch in Laurent sum");
    LaurentExpr r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

LaurentExpr LaurentExpr::operator-(const LaurentExpr& o) const { return *this + (-o); }

LaurentExpr LaurentExpr::operator-() const {
    LaurentExpr r(rank_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentExpr LaurentExpr::operator*(const LaurentExpr& o) const {
    if (rank_ != o.rank_) throw DimensionError("rank mismatch in Laurent product");
    LaurentExpr r(rank_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            ExpKey k;
            k.alpha.resize(ka.alpha.size());
            for (size_t i = 0; i < ka.alpha.size(); ++i) k.alpha[i] = ka.alpha[i] + kb.alpha[i];
            k.t = ka.t + kb.t;
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

LaurentExpr LaurentExpr::operator*(const YRational& s) const {
    LaurentExpr r(rank_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

LaurentExpr LaurentExpr::pow(int e) const {
    if (e == 0) return constant(rank_, YRational(1));
    if (e < 0) {
        if (terms_.size() != 1)
            throw DivisionError("negative power of a non-monomial Laurent expression");
        const auto& [k, c] = *terms_.begin();
        ExpKey inv;
        inv.alpha.resize(k.alpha.size());
        for (size_t i = 0; i < k.alpha.size(); ++i) inv.alpha[i] = -k.alpha[i];
        inv.t = -k.t;
        return monomial(rank_, inv, YRational(1) / c).pow(-e);
    }
    LaurentExpr result = constant(rank_, YRational(1));
    LaurentExpr base(*this);
    unsigned exp = static_cast<unsigned>(e);
    while (exp > 0) {
        if (exp & 1u) result = result * base;
        base = base * base;
        exp >>= 1u;
    }
    return result;
}

bool LaurentExpr::t_free() const {
    for (const auto& [k, c] : terms_)
        if (!k.t.is_zero()) return false;
    return true;
}

bool LaurentExpr::t_integral() const {
    for (const auto& [k, c] : terms_)
        if (!k.t.is_integer()) return false;
    return true;
}

long LaurentExpr::t_min() const {
    bool first = true;
    long m = 0;
    for (const auto& [k, c] : terms_) {
        if (!k.t.is_integer()) throw FractionalExponentError("fractional t-exponent");
        if (first || k.t.num < m) m = k.t.num;
        first = false;
    }
    return m;
}

long LaurentExpr::t_max() const {
    bool first = true;
    long m = 0;
    for (const auto& [k, c] : terms_) {
        if (!k.t.is_integer()) throw FractionalExponentError("fractional t-exponent");
        if (first || k.t.num > m) m = k.t.num;
        first = false;
    }
    return m;
}

LaurentExpr LaurentExpr::t_coefficient(long j) const {
    LaurentExpr r(rank_);
    for (const auto& [k, c] : terms_) {
        if (k.t == Frac(j)) {
            ExpKey nk = k;
            nk.t = Frac(0);
            r.terms_.emplace(nk, c);
        }
    }
    return r;
}

LaurentExpr LaurentExpr::substitute_scalar(const std::vector<long>& weights, long q) const {
    if (static_cast<int>(weights.size()) != rank_)
        throw DimensionError("weight vector does not match rank");
    if (q == 0) throw InputError("scalar exponent q must be nonzero");
    LaurentExpr r(rank_);
    for (const auto& [k, c] : terms_) {
        long w = 0;
        for (size_t i = 0; i < weights.size(); ++i) w += weights[i] * k.alpha[i];
        ExpKey nk = k;
        nk.t = k.t - Frac(w, q);
        r.add_term(nk, c);
    }
    return r;
}

LaurentExpr LaurentExpr::eval_t1() const {
    LaurentExpr r(rank_);
    for (const auto& [k, c] : terms_) {
        ExpKey nk = k;
        nk.t = Frac(0);
        r.add_term(nk, c);
    }
    return r;
}

std::map<Frac, LaurentExpr> LaurentExpr::split_fractional() const {
    std::map<Frac, LaurentExpr> parts;
    for (const auto& [k, c] : terms_) {
        Frac r = k.t.frac_part();
        auto it = parts.find(r);
        if (it == parts.end()) it = parts.emplace(r, LaurentExpr(rank_)).first;
        ExpKey nk = k;
        nk.t = k.t - r; // integer now
        it->second.add_term(nk, c);
    }
    return parts;
}

LaurentExpr LaurentExpr::eval_y(const mpq_class& v) const {
    LaurentExpr r(rank_);
    for (const auto& [k, c] : terms_) r.add_term(k, YRational(c.eval(v)));
    return r;
}

std::string LaurentExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool printed = false;
        std::ostringstream mono;
        for (size_t i = 0; i < k.alpha.size(); ++i) {
            if (k.alpha[i] == 0) continue;
            if (printed) mono << '*';
            mono << 'a' << (i + 1);
            if (k.alpha[i] != 1) mono << '^' << k.alpha[i];
            printed = true;
        }
        if (!k.t.is_zero()) {
            if (printed) mono << '*';
            mono << 't';
            if (k.t != Frac(1)) mono << '^' << (k.t.is_integer() ? k.t.to_string() : "(" + k.t.to_string() + ")");
            printed = true;
        }
        if (!printed) {
            os << cs;
        } else if (cs == "1") {
            os << mono.str();
        } else if (cs == "-1") {
            os << '-' << mono.str();
        } else if (cs.find_first_of("+- ", 1) != std::string::npos && cs[0] != '(') {
            os << '(' << cs << ")*" << mono.str();
        } else {
            os << cs << '*' << mono.str();
        }
    }
    return os.str();
}

LaurentExpr divide_exact_y(const LaurentExpr& p, const YRational& d) {
    if (d.is_zero()) throw DivisionError("exact division by zero polynomial");
    LaurentExpr r(p.rank());
    for (const auto& [k, c] : p.terms()) {
        YRational q = c / d;
        if (q * d != c) throw DivisionError("inexact division of Laurent coefficient");
        r.add_term(k, q);
    }
    return r;
}

} // namespace kcones
