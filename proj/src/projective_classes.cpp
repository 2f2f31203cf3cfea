#include "kcones/projective_classes.hpp"

#include "kcones/errors.hpp"

namespace kcones {

namespace {

// 1 - t^d as a reduced class at n
TruncatedClass one_minus_t_pow(int d, int n) {
    std::vector<YRational> coeffs(static_cast<size_t>(d) + 1);
    coeffs[0] = YRational(1);
    coeffs[static_cast<size_t>(d)] = YRational(-1);
    return TruncatedClass::from_t_polynomial(n, coeffs);
}

// 1 + y t^d as a reduced class at n
TruncatedClass one_plus_y_t_pow(int d, int n) {
    std::vector<YRational> coeffs(static_cast<size_t>(d) + 1);
    coeffs[0] = YRational(1);
    coeffs[static_cast<size_t>(d)] = YRational::y();
    return TruncatedClass::from_t_polynomial(n, coeffs);
}

} // namespace

TruncatedClass linear_subspace_class(int k, int n) {
    if (k < 0 || k > n) throw InputError("subspace dimension outside 0..n");
    return TruncatedClass::monomial(n, n - k, YRational(1));
}

TruncatedClass complete_intersection_class(const std::vector<int>& degrees, int n) {
    if (degrees.empty()) throw InputError("complete intersection needs at least one degree");
    if (static_cast<int>(degrees.size()) > n)
        throw InputError("more hypersurfaces than the ambient dimension");
    TruncatedClass c = TruncatedClass::one(n);
    for (int d : degrees) {
        if (d < 1) throw InputError("degrees must be positive");
        c = c * one_minus_t_pow(d, n);
    }
    return c;
}

TruncatedClass mc_projective_space(int n) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    const YRational y = YRational::y();
    const YRational one_plus_y = YRational(1) + y;
    std::vector<YRational> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        coeffs[static_cast<size_t>(i)] =
            YRational(binomial(n + 1, i)) * (-y).pow(i) * one_plus_y.pow(n - i);
    return TruncatedClass(n, Basis::H, std::move(coeffs));
}

TruncatedClass mc_smooth_hypersurface(int d, int n) {
    if (d < 1) throw InputError("degree must be positive");
    if (n < 1) throw InputError("ambient dimension must be at least 1");
    TruncatedClass ambient = mc_projective_space(n);
    return split_divisor_mc({d}, ambient);
}

TruncatedClass split_divisor_mc(const std::vector<int>& chern_roots,
                                const TruncatedClass& ambient_mc) {
    const int n = ambient_mc.n();
    TruncatedClass c = ambient_mc.in_h();
    for (int d : chern_roots) {
        if (d < 1) throw InputError("split bundle roots must be positive powers of the hyperplane bundle");
        c = c * one_minus_t_pow(d, n);                 // e(E) factor
        c = c * one_plus_y_t_pow(d, n).inverse();      // lambda_y(-E) factor
    }
    return c;
}

TruncatedClass pushforward_self_map_p1(int d) {
    if (d < 1) throw InputError("map degree must be positive");
    return TruncatedClass(1, Basis::H, {YRational(d), YRational(1 - d)});
}

TruncatedClass linear_inclusion_pushforward(const TruncatedClass& c, int n, int N) {
    if (c.n() != n) throw DimensionError("class does not live at the stated dimension");
    if (n > N) throw InputError("cannot push forward to a smaller projective space");
    TruncatedClass h = c.in_h();
    TruncatedClass out = TruncatedClass::zero(N);
    int shift = N - n;
    std::vector<YRational> coeffs(static_cast<size_t>(N) + 1);
    for (int j = 0; j <= n; ++j) coeffs[static_cast<size_t>(j + shift)] = h.coeff(j);
    return TruncatedClass(N, Basis::H, std::move(coeffs));
}

TruncatedClass union_additive_pushforward(const std::vector<TruncatedClass>& parts) {
    if (parts.empty()) throw InputError("empty component list");
    TruncatedClass sum = parts.front().in_h();
    for (size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
    return sum;
}

TruncatedClass mc0_union_two_linear(int k, int l, int n) {
    if (k <= 0 || l <= 0) throw InputError("codimensions must be positive");
    if (k > n || l > n) throw InputError("codimension exceeds ambient dimension");
    TruncatedClass c = linear_subspace_class(n - k, n) + linear_subspace_class(n - l, n);
    if (k + l <= n) c = c - TruncatedClass::monomial(n, k + l, YRational(1));
    return c;
}

YRational integral(const TruncatedClass& c) {
    TruncatedClass h = c.in_h();
    YRational sum;
    for (const auto& q : h.coeffs()) sum += q;
    return sum;
}

GenusReport genus_report(const TruncatedClass& mc, int dim) {
    GenusReport report;
    report.chi_y = integral(mc);
    report.todd = report.chi_y.eval(mpq_class(0));
    report.arithmetic_genus = report.todd - 1;
    if (dim % 2 != 0) report.arithmetic_genus = -report.arithmetic_genus;
    report.dim = dim;
    return report;
}

std::pair<int, YRational> degree_codim(const TruncatedClass& c) {
    TruncatedClass h = c.in_h();
    for (int i = 0; i <= h.n(); ++i)
        if (!h.coeff(i).is_zero()) return {i, h.coeff(i)};
    throw InputError("degree/codimension undefined for the zero class");
}

std::vector<CatalogueRow> cubic_catalogue() {
    const TruncatedClass sheaf = complete_intersection_class({3}, 2);
    const TruncatedClass line = linear_subspace_class(1, 2);
    const TruncatedClass point = linear_subspace_class(0, 2);
    const TruncatedClass conic = complete_intersection_class({2}, 2);

    // resolution P^1 -> P^2 of degree 3 for the rational cubics
    const TruncatedClass rational_push =
        linear_inclusion_pushforward(pushforward_self_map_p1(3), 1, 2);

    std::vector<CatalogueRow> rows;
    rows.push_back({"nodal", "nodal cubic",
                    // the normalization identifies two points, so the motivic
                    // class loses one point class relative to the pushforward
                    {sheaf, rational_push, rational_push - point}});
    rows.push_back({"cuspidal", "cuspidal cubic",
                    {sheaf, rational_push, rational_push}});
    rows.push_back({"conic-chord", "conic and intersecting line",
                    {sheaf, union_additive_pushforward({conic, line}),
                     conic + line - point * YRational(2)}});
    rows.push_back({"conic-tangent", "conic and tangent line",
                    {sheaf, union_additive_pushforward({conic, line}),
                     conic + line - point}});
    rows.push_back({"triangle", "three nonconcurrent lines",
                    {sheaf, union_additive_pushforward({line, line, line}),
                     line * YRational(3) - point * YRational(3)}});
    rows.push_back({"concurrent", "three concurrent lines",
                    {sheaf, union_additive_pushforward({line, line, line}),
                     line * YRational(3) - point * YRational(2)}});
    return rows;
}

} // namespace kcones
