#include "doctest.h"

#include "kcones/errors.hpp"
#include "kcones/projective_classes.hpp"

#include "test_util.hpp"

using namespace kcones;

namespace {

const YRational kY = YRational::y();
const YRational kOneY = YRational(1) + kY;

YRational chi_y_pn(int n) {
    // 1 - y + y^2 - ... +- y^n
    std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs[static_cast<size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return YRational(IntPoly(std::move(coeffs)));
}

TruncatedClass mc_linear_subspace(int k, int n) {
    return linear_inclusion_pushforward(mc_projective_space(k), k, n);
}

} // namespace

TEST_CASE("linear subspace classes") {
    CHECK(linear_subspace_class(2, 3) == TruncatedClass::monomial(3, 1, YRational(1)));
    CHECK(linear_subspace_class(3, 3) == TruncatedClass::one(3));
    CHECK(linear_subspace_class(1, 3) == TruncatedClass::monomial(3, 2, YRational(1)));
    CHECK_THROWS_AS(linear_subspace_class(4, 3), InputError);
}

TEST_CASE("complete intersections") {
    CHECK(complete_intersection_class({3}, 2) ==
          TruncatedClass(2, Basis::H, {YRational(0), YRational(3), YRational(-3)}));
    CHECK(complete_intersection_class({1, 1, 1}, 5) ==
          TruncatedClass::monomial(5, 3, YRational(1)));
    // binomial expansion of 1 - (1-H)^d
    for (int d = 1; d <= 6; ++d) {
        int n = 4;
        TruncatedClass c = complete_intersection_class({d}, n);
        for (int i = 1; i <= n; ++i) {
            mpz_class expect = binomial(d, i);
            if (i % 2 == 0) expect = -expect;
            CHECK(c.in_h().coeff(i) == YRational(expect));
        }
        CHECK(c.in_h().coeff(0).is_zero());
    }
    CHECK_THROWS_AS(complete_intersection_class({}, 3), InputError);
}

TEST_CASE("mc of projective space") {
    CHECK(mc_projective_space(0) == TruncatedClass::one(0));
    CHECK(mc_projective_space(1) ==
          TruncatedClass(1, Basis::H, {kOneY, kY * YRational(-2)}));
    CHECK(mc_projective_space(2) ==
          TruncatedClass(2, Basis::H,
                         {kOneY * kOneY, kY * kOneY * YRational(-3), kY * kY * YRational(3)}));
}

TEST_CASE("mc of smooth hypersurfaces") {
    // d=1 agrees with the pushforward of mc(P^{n-1})
    for (int n = 1; n <= 5; ++n)
        CHECK(mc_smooth_hypersurface(1, n) == mc_linear_subspace(n - 1, n));

    // y=0 slice is the sheaf class 1 - t^d
    for (int d = 1; d <= 6; ++d)
        for (int n = 2; n <= 5; ++n)
            CHECK(mc_smooth_hypersurface(d, n).eval_y(0) == complete_intersection_class({d}, n));
}

TEST_CASE("split divisor trick") {
    for (int d = 1; d <= 4; ++d)
        CHECK(split_divisor_mc({d}, mc_projective_space(3)) == mc_smooth_hypersurface(d, 3));
    CHECK(split_divisor_mc({1, 1}, mc_projective_space(3)) == mc_linear_subspace(1, 3));
    TruncatedClass ambient = mc_projective_space(2);
    CHECK(split_divisor_mc({}, ambient) == ambient);
    CHECK_THROWS_AS(split_divisor_mc({0}, ambient), InputError);
}

TEST_CASE("degree-d self maps of P^1 and linear inclusions") {
    CHECK(pushforward_self_map_p1(1) == TruncatedClass::one(1));
    CHECK(pushforward_self_map_p1(2) == TruncatedClass(1, Basis::H, {YRational(2), YRational(-1)}));
    CHECK(pushforward_self_map_p1(3) == TruncatedClass(1, Basis::H, {YRational(3), YRational(-2)}));

    CHECK(linear_inclusion_pushforward(TruncatedClass::one(1), 1, 2) ==
          linear_subspace_class(1, 2));
    CHECK(linear_inclusion_pushforward(pushforward_self_map_p1(3), 1, 2) ==
          TruncatedClass(2, Basis::H, {YRational(0), YRational(3), YRational(-2)}));
    for (int d = 2; d <= 8; ++d) {
        TruncatedClass rnc = linear_inclusion_pushforward(pushforward_self_map_p1(d), 1, d);
        CHECK(rnc.coeff(d - 1) == YRational(d));
        CHECK(rnc.coeff(d) == YRational(1 - d));
        auto [codim, degree] = degree_codim(rnc);
        CHECK(codim == d - 1);
        CHECK(degree == YRational(d));
    }
    CHECK_THROWS_AS(linear_inclusion_pushforward(TruncatedClass::one(3), 3, 2), InputError);
}

TEST_CASE("unions: additivity and inclusion-exclusion") {
    TruncatedClass h = linear_subspace_class(1, 2);
    CHECK(union_additive_pushforward({h, h}) == h * YRational(2));
    CHECK(union_additive_pushforward({linear_subspace_class(1, 4), linear_subspace_class(2, 4)}) ==
          TruncatedClass::monomial(4, 3, YRational(1)) + TruncatedClass::monomial(4, 2, YRational(1)));
    CHECK(union_additive_pushforward({h, h, h}) == h * YRational(3));

    CHECK(mc0_union_two_linear(2, 2, 3) == TruncatedClass::monomial(3, 2, YRational(2)));
    CHECK(mc0_union_two_linear(1, 1, 2) ==
          TruncatedClass(2, Basis::H, {YRational(0), YRational(2), YRational(-1)}));
    CHECK(mc0_union_two_linear(1, 2, 3) ==
          TruncatedClass(3, Basis::H, {YRational(0), YRational(1), YRational(1), YRational(-1)}));
}

TEST_CASE("integral formula") {
    CHECK(integral(TruncatedClass::monomial(1, 1, YRational(1))) == YRational(1));
    CHECK(integral(TruncatedClass(2, Basis::H, {YRational(0), YRational(3), YRational(-2)})) ==
          YRational(1));
    for (int n = 0; n <= 10; ++n) CHECK(integral(mc_projective_space(n)) == chi_y_pn(n));
}

TEST_CASE("genus reports") {
    // arithmetic genus of smooth hypersurfaces
    for (int d = 1; d <= 8; ++d)
        for (int n = 2; n <= 5; ++n) {
            GenusReport g = genus_report(mc_smooth_hypersurface(d, n), n - 1);
            CHECK(g.arithmetic_genus == mpq_class(binomial(d - 1, n)));
        }
    // td(P^n) = 1
    for (int n = 0; n <= 8; ++n) {
        GenusReport g = genus_report(mc_projective_space(n), n);
        CHECK(g.todd == 1);
        CHECK(g.arithmetic_genus == 0);
    }
    // chi_y of plane curves: (C(d-1,2) - 1)(y - 1)
    for (int d = 1; d <= 4; ++d) {
        YRational chi = integral(mc_smooth_hypersurface(d, 2));
        YRational expect =
            (YRational(binomial(d - 1, 2)) - YRational(1)) * (kY - YRational(1));
        CHECK(chi == expect);
    }
}

TEST_CASE("degree and codimension") {
    CHECK(degree_codim(complete_intersection_class({3}, 2)) ==
          std::pair<int, YRational>(1, YRational(3)));
    CHECK(degree_codim(TruncatedClass::monomial(5, 3, YRational(1))) ==
          std::pair<int, YRational>(3, YRational(1)));
    CHECK_THROWS_AS(degree_codim(TruncatedClass::zero(2)), InputError);

    testutil::Rng rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedClass c = testutil::random_class(rng, 3);
        if (c.is_zero()) continue;
        CHECK(degree_codim(c) == degree_codim(c.in_t().in_h()));
    }
}

TEST_CASE("cubic catalogue matches the classified triples") {
    auto rows = cubic_catalogue();
    REQUIRE(rows.size() == 6);
    const TruncatedClass sheaf(2, Basis::H, {YRational(0), YRational(3), YRational(-3)});
    auto cls = [](int a, int b) {
        return TruncatedClass(2, Basis::H, {YRational(0), YRational(a), YRational(b)});
    };
    for (const auto& row : rows) CHECK(row.triple.sheaf == sheaf);

    CHECK(rows[0].name == "nodal");
    CHECK(rows[0].triple.pushforward == cls(3, -2));
    CHECK(rows[0].triple.motivic0 == cls(3, -3));

    CHECK(rows[1].name == "cuspidal");
    CHECK(rows[1].triple.pushforward == cls(3, -2));
    CHECK(rows[1].triple.motivic0 == cls(3, -2));

    CHECK(rows[2].name == "conic-chord");
    CHECK(rows[2].triple.pushforward == cls(3, -1));
    CHECK(rows[2].triple.motivic0 == cls(3, -3));

    CHECK(rows[3].name == "conic-tangent");
    CHECK(rows[3].triple.pushforward == cls(3, -1));
    CHECK(rows[3].triple.motivic0 == cls(3, -2));

    CHECK(rows[4].name == "triangle");
    CHECK(rows[4].triple.pushforward == cls(3, 0));
    CHECK(rows[4].triple.motivic0 == cls(3, -3));

    CHECK(rows[5].name == "concurrent");
    CHECK(rows[5].triple.pushforward == cls(3, 0));
    CHECK(rows[5].triple.motivic0 == cls(3, -2));
}

TEST_CASE("chi_y of linear subspaces and rigidity normalization") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            YRational chi = integral(mc_linear_subspace(k, n));
            CHECK(chi == chi_y_pn(k));
            // (1 - (-y)^{k+1})/(1+y) form
            CHECK(chi == (YRational(1) - (-kY).pow(k + 1)) / kOneY);
            YRational normalized = chi * kOneY;
            CHECK(normalized.is_polynomial());
        }
}

TEST_CASE("chi_y is independent of the embedding") {
    for (int n = 1; n <= 4; ++n) {
        TruncatedClass mc = mc_smooth_hypersurface(2, n);
        for (int N = n; N <= n + 3; ++N)
            CHECK(integral(linear_inclusion_pushforward(mc, n, N)) == integral(mc));
    }
}

TEST_CASE("integral is additive over unions") {
    testutil::Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<TruncatedClass> parts;
        YRational sum;
        for (int i = 0; i < 3; ++i) {
            parts.push_back(testutil::random_class(rng, 3));
            sum += integral(parts.back());
        }
        CHECK(integral(union_additive_pushforward(parts)) == sum);
    }
}
