#include "kcones/cohomology.hpp"

#include "kcones/errors.hpp"
#include "kcones/int_poly.hpp"

#include <sstream>

namespace kcones {

CohomPoly CohomPoly::constant(int rank, const mpq_class& c) {
    CohomPoly p(rank);
    p.add_term(std::vector<int>(static_cast<size_t>(rank), 0), c);
    return p;
}

CohomPoly CohomPoly::variable(int rank, int i) {
    if (i < 1 || i > rank) throw InputError("variable index out of range");
    std::vector<int> e(static_cast<size_t>(rank), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(rank, std::move(e), 1);
}

CohomPoly CohomPoly::monomial(int rank, std::vector<int> exps, const mpq_class& c) {
    if (static_cast<int>(exps.size()) != rank)
        throw DimensionError("exponent vector does not match rank");
    for (int e : exps)
        if (e < 0) throw InputError("negative exponent in polynomial monomial");
    CohomPoly p(rank);
    p.add_term(exps, c);
    return p;
}

void CohomPoly::add_term(const std::vector<int>& exps, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        mpq_class v = c;
        v.canonicalize();
        terms_.emplace(exps, v);
    } else {
        it->second += c;
        it->second.canonicalize();
        if (it->second == 0) terms_.erase(it);
    }
}

CohomPoly CohomPoly::operator+(const CohomPoly& o) const {
    if (rank_ != o.rank_) throw DimensionError("rank mismatch");
    CohomPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

CohomPoly CohomPoly::operator-(const CohomPoly& o) const { return *this + (-o); }

CohomPoly CohomPoly::operator-() const {
    CohomPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CohomPoly CohomPoly::operator*(const CohomPoly& o) const {
    if (rank_ != o.rank_) throw DimensionError("rank mismatch");
    CohomPoly r(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

CohomPoly CohomPoly::operator*(const mpq_class& s) const {
    CohomPoly r(rank_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

std::string CohomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool printed = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) mono << '*';
            mono << 'a' << (i + 1);
            if (e[i] != 1) mono << '^' << e[i];
            printed = true;
        }
        if (!printed)
            os << c.get_str();
        else if (c == 1)
            os << mono.str();
        else if (c == -1)
            os << '-' << mono.str();
        else
            os << c.get_str() << '*' << mono.str();
    }
    return os.str();
}

std::string CohomClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < x_coeffs.size(); ++d) {
        if (x_coeffs[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << x_coeffs[d].to_string();
            continue;
        }
        os << '(' << x_coeffs[d].to_string() << ")*x";
        if (d > 1) os << '^' << d;
    }
    if (first) return "0";
    return os.str();
}

namespace {

// b_i - x as an x-polynomial with CohomPoly coefficients
std::vector<CohomPoly> weight_minus_x(int rank, const std::vector<long>& b) {
    CohomPoly form(rank);
    for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        std::vector<int> e(static_cast<size_t>(rank), 0);
        e[j] = 1;
        form.add_term(e, mpq_class(b[j]));
    }
    return {form, CohomPoly::constant(rank, -1)};
}

std::vector<CohomPoly> xpoly_mul(int rank, const std::vector<CohomPoly>& a,
                                 const std::vector<CohomPoly>& b) {
    std::vector<CohomPoly> r(a.size() + b.size() - 1, CohomPoly(rank));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

void xpoly_trim(std::vector<CohomPoly>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

} // namespace

CohomClass coho_affine_to_projective(const CohomPoly& cx, const std::vector<long>& weights,
                                     long q,
                                     const std::vector<std::vector<long>>& action_weights) {
    const int rank = cx.rank();
    if (static_cast<int>(weights.size()) != rank)
        throw DimensionError("weight vector does not match rank");
    if (q == 0) throw InputError("scalar exponent q must be nonzero");
    if (action_weights.empty()) throw InputError("action needs at least one weight");
    for (const auto& b : action_weights)
        if (static_cast<int>(b.size()) != rank)
            throw DimensionError("action weight does not match rank");
    const int n = static_cast<int>(action_weights.size()) - 1;

    // substituted images a_i - (w_i/q) x as x-polynomials
    std::vector<std::vector<CohomPoly>> images;
    images.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        mpq_class ratio(-weights[static_cast<size_t>(i)], q);
        ratio.canonicalize();
        std::vector<CohomPoly> img{CohomPoly::variable(rank, i + 1),
                                   CohomPoly::constant(rank, ratio)};
        xpoly_trim(img);
        images.push_back(std::move(img));
    }

    std::vector<CohomPoly> acc{CohomPoly(rank)};
    for (const auto& [exps, coeff] : cx.terms()) {
        std::vector<CohomPoly> term{CohomPoly::constant(rank, coeff)};
        for (size_t i = 0; i < exps.size(); ++i)
            for (int rep = 0; rep < exps[i]; ++rep) term = xpoly_mul(rank, term, images[i]);
        if (term.size() > acc.size()) acc.resize(term.size(), CohomPoly(rank));
        for (size_t d = 0; d < term.size(); ++d) acc[d] = acc[d] + term[d];
    }
    xpoly_trim(acc);

    // reduce modulo prod(b_i - x); the leading x-coefficient is (-1)^{n+1}
    std::vector<CohomPoly> relation{CohomPoly::constant(rank, 1)};
    for (const auto& b : action_weights)
        relation = xpoly_mul(rank, relation, weight_minus_x(rank, b));
    const mpq_class lead_sign = (n % 2 == 0) ? -1 : 1; // (-1)^{n+1}

    while (static_cast<int>(acc.size()) - 1 > n) {
        size_t d = acc.size() - 1;
        if (!acc[d].is_zero()) {
            CohomPoly factor = acc[d] * (mpq_class(1) / lead_sign);
            size_t shift = d - static_cast<size_t>(n + 1);
            for (size_t i = 0; i < relation.size(); ++i)
                acc[i + shift] = acc[i + shift] - factor * relation[i];
        }
        acc.pop_back();
    }

    CohomClass out;
    out.rank = rank;
    out.n = n;
    out.action_weights = action_weights;
    acc.resize(static_cast<size_t>(n) + 1, CohomPoly(rank));
    out.x_coeffs = std::move(acc);
    return out;
}

CohomPoly coho_projective_to_affine(const CohomClass& x_class) {
    if (x_class.x_coeffs.empty()) return CohomPoly(x_class.rank);
    return x_class.x_coeffs.front();
}

} // namespace kcones
