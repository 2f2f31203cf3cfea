#include "kcones/cones.hpp"

#include "kcones/errors.hpp"
#include "kcones/projective_classes.hpp"

namespace kcones {

ConeResult projective_cone_mc(const TruncatedClass& mcX, bool smooth_certified) {
    const TruncatedClass base = mcX.in_h();
    const int n = base.n();
    const YRational y = YRational::y();
    const YRational one_plus_y = YRational(1) + y;

    YRational chi_y = integral(base);

    std::vector<YRational> hat(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n; ++i) {
        YRational prev = (i > 0) ? base.coeff(i - 1) : YRational(0);
        hat[static_cast<size_t>(i)] = one_plus_y * base.coeff(i) - y * prev;
    }
    hat[static_cast<size_t>(n) + 1] = YRational(1) - y * base.coeff(n) - one_plus_y * chi_y;

    ConeResult result{base, TruncatedClass(n + 1, Basis::H, std::move(hat)), chi_y,
                      smooth_certified};
    return result;
}

TruncatedClass projective_cone_mc0(const TruncatedClass& mc0X, const mpq_class& toddX) {
    const TruncatedClass base = mc0X.in_h();
    const int n = base.n();
    std::vector<YRational> hat(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n; ++i) hat[static_cast<size_t>(i)] = base.coeff(i);
    hat[static_cast<size_t>(n) + 1] = YRational(mpq_class(1) - toddX);
    return TruncatedClass(n + 1, Basis::H, std::move(hat));
}

TruncatedClass projective_cone_pushforward(const TruncatedClass& classX) {
    const TruncatedClass base = classX.in_h();
    const int n = base.n();
    std::vector<YRational> hat(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n; ++i) hat[static_cast<size_t>(i)] = base.coeff(i);
    return TruncatedClass(n + 1, Basis::H, std::move(hat));
}

std::pair<TruncatedClass, TruncatedClass> projective_cone_sheaf(const IntPoly& kpoly, int n) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    return {TruncatedClass::from_t_polynomial(n, kpoly),
            TruncatedClass::from_t_polynomial(n + 1, kpoly)};
}

std::vector<mpz_class> csm_projective_cone(const std::vector<mpz_class>& csmX) {
    if (csmX.empty()) throw InputError("CSM coefficient list must have n+1 entries");
    std::vector<mpz_class> hat(csmX.size() + 1);
    for (size_t i = 0; i < csmX.size(); ++i) {
        hat[i] = csmX[i];
        if (i > 0) hat[i] += csmX[i - 1];
    }
    hat[csmX.size()] = csmX.back() + 1;
    return hat;
}

TruncatedClass hyperplane_restriction(const TruncatedClass& c) {
    const TruncatedClass h = c.in_h();
    if (h.n() < 1) throw InputError("cannot restrict below dimension 0");
    std::vector<YRational> coeffs(h.coeffs().begin(), h.coeffs().end() - 1);
    return TruncatedClass(h.n() - 1, Basis::H, std::move(coeffs));
}

} // namespace kcones
