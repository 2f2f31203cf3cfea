#include "kcones/truncated_class.hpp"

#include "kcones/errors.hpp"

#include <sstream>

namespace kcones {

TruncatedClass TruncatedClass::zero(int n, Basis basis) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    return TruncatedClass(n, basis, std::vector<YRational>(static_cast<size_t>(n) + 1));
}

TruncatedClass TruncatedClass::one(int n, Basis basis) {
    TruncatedClass c = zero(n, basis);
    c.coeffs_[0] = YRational(1);
    return c;
}

TruncatedClass TruncatedClass::monomial(int n, int k, YRational coeff, Basis basis) {
    if (k < 0 || k > n) throw InputError("monomial degree outside 0..n");
    TruncatedClass c = zero(n, basis);
    c.coeffs_[static_cast<size_t>(k)] = std::move(coeff);
    return c;
}

TruncatedClass::TruncatedClass(int n, Basis basis, std::vector<YRational> coeffs)
    : n_(n), basis_(basis), coeffs_(std::move(coeffs)) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    coeffs_.resize(static_cast<size_t>(n) + 1);
}

TruncatedClass TruncatedClass::from_t_polynomial(int n, const std::vector<YRational>& t_coeffs) {
    // expand p(t) with t = 1-H and truncate at degree n
    TruncatedClass c = zero(n, Basis::H);
    for (size_t j = 0; j < t_coeffs.size(); ++j) {
        if (t_coeffs[j].is_zero()) continue;
        // (1-H)^j contributes C(j,i)(-1)^i H^i
        for (int i = 0; i <= n && i <= static_cast<int>(j); ++i) {
            mpz_class b = binomial(static_cast<long>(j), i);
            if (i & 1) b = -b;
            c.coeffs_[static_cast<size_t>(i)] += t_coeffs[j] * YRational(b);
        }
    }
    return c;
}

TruncatedClass TruncatedClass::from_t_polynomial(int n, const IntPoly& t_poly) {
    std::vector<YRational> coeffs;
    coeffs.reserve(static_cast<size_t>(t_poly.degree()) + 1);
    for (int j = 0; j <= t_poly.degree(); ++j) coeffs.emplace_back(t_poly.coeff(j));
    return from_t_polynomial(n, coeffs);
}

bool TruncatedClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool TruncatedClass::is_y_polynomial() const {
    for (const auto& c : coeffs_)
        if (!c.is_polynomial()) return false;
    return true;
}

TruncatedClass TruncatedClass::converted(Basis target) const {
    if (target == basis_) return *this;
    // Sum q_i (1-x)^i re-expanded in x; same transform both directions.
    std::vector<YRational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j <= i; ++j) {
            mpz_class b = binomial(static_cast<long>(i), static_cast<long>(j));
            if (j & 1) b = -b;
            out[j] += coeffs_[i] * YRational(b);
        }
    }
    return TruncatedClass(n_, target, std::move(out));
}

TruncatedClass TruncatedClass::operator+(const TruncatedClass& o) const {
    if (n_ != o.n_)
        throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    TruncatedClass a = in_h();
    TruncatedClass b = o.in_h();
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

TruncatedClass TruncatedClass::operator-(const TruncatedClass& o) const {
    return *this + (-o);
}

TruncatedClass TruncatedClass::operator-() const {
    TruncatedClass r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedClass TruncatedClass::operator*(const TruncatedClass& o) const {
    if (n_ != o.n_)
        throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    TruncatedClass a = in_h();
    TruncatedClass b = o.in_h();
    TruncatedClass r = zero(n_, Basis::H);
    for (int i = 0; i <= n_; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= n_; ++j) {
            if (b.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            r.coeffs_[static_cast<size_t>(i + j)] +=
                a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
        }
    }
    return r;
}

TruncatedClass TruncatedClass::operator*(const YRational& s) const {
    TruncatedClass r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

bool TruncatedClass::operator==(const TruncatedClass& o) const {
    if (n_ != o.n_) return false;
    return in_h().coeffs() == o.in_h().coeffs();
}

TruncatedClass TruncatedClass::inverse() const {
    TruncatedClass a = in_h();
    const YRational& c0 = a.coeffs_[0];
    if (c0.is_zero())
        throw DivisionError("class is not invertible: zero degree-0 part");
    // a = c0 (1 + nu), nu nilpotent: 1/a = (1/c0) sum (-nu)^j, j <= n
    YRational inv0 = YRational(1) / c0;
    TruncatedClass nu = a * inv0 - one(n_);
    TruncatedClass acc = one(n_);
    TruncatedClass power = one(n_);
    for (int j = 1; j <= n_; ++j) {
        power = power * nu;
        if (power.is_zero()) break;
        acc = (j & 1) ? acc - power : acc + power;
    }
    return acc * inv0;
}

TruncatedClass TruncatedClass::eval_y(const mpq_class& v) const {
    TruncatedClass r(*this);
    for (auto& c : r.coeffs_) c = YRational(c.eval(v));
    return r;
}

std::string TruncatedClass::to_string() const {
    const char* var = (basis_ == Basis::H) ? "H" : "t";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string cs = coeffs_[i].to_string();
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (cs == "1")
            ;
        else if (cs == "-1")
            os << '-';
        else if (cs.find_first_of("+- ", 1) != std::string::npos && cs[0] != '(')
            os << '(' << cs << ")*";
        else
            os << cs << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    if (first) return "0";
    return os.str();
}

TruncatedClass ring_ops(const TruncatedClass& a, const TruncatedClass& b, const std::string& op) {
    if (op == "add") return a + b;
    if (op == "sub") return a - b;
    if (op == "mul") return a * b;
    throw InputError("unknown ring operation '" + op + "'");
}

TruncatedClass ring_scalar(const TruncatedClass& a, const YRational& s) {
    return a * s;
}

TruncatedClass divide_exact_y(const TruncatedClass& c, const YRational& d) {
    if (d.is_zero()) throw DivisionError("exact division by zero polynomial");
    TruncatedClass h = c.in_h();
    std::vector<YRational> out;
    out.reserve(h.coeffs().size());
    for (const auto& q : h.coeffs()) out.push_back(q / d);
    TruncatedClass r(h.n(), Basis::H, std::move(out));
    for (size_t i = 0; i < r.coeffs().size(); ++i) {
        if (r.coeff(static_cast<int>(i)) * d != h.coeff(static_cast<int>(i)))
            throw DivisionError("inexact division at coefficient " + std::to_string(i));
    }
    return r.converted(c.basis());
}

} // namespace kcones
