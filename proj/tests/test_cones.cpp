#include "doctest.h"

#include "kcones/cones.hpp"
#include "kcones/errors.hpp"
#include "kcones/projective_classes.hpp"

using namespace kcones;

namespace {

const YRational kY = YRational::y();

TruncatedClass mc_linear_subspace(int k, int n) {
    return linear_inclusion_pushforward(mc_projective_space(k), k, n);
}

// smooth and constructible motivic Chern classes used as recursion bases
std::vector<TruncatedClass> mc_catalogue() {
    std::vector<TruncatedClass> bases;
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) bases.push_back(mc_linear_subspace(k, n));
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 5; ++d) bases.push_back(mc_smooth_hypersurface(d, n));
    // two disjoint lines in P^3, a constructible (smooth but disconnected) base
    bases.push_back(mc_linear_subspace(1, 3) + mc_linear_subspace(1, 3));
    return bases;
}

IntPoly one_minus_t_pow(int d) {
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    c[0] = 1;
    c[static_cast<size_t>(d)] = -1;
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("cone over a point is the line") {
    ConeResult cone = projective_cone_mc(mc_projective_space(0));
    CHECK(cone.cone_class == mc_projective_space(1));
    CHECK(cone.chi_y_base == YRational(1));
}

TEST_CASE("mc cone recursion specializes at y=0 to the mc0 rule") {
    for (const auto& base : mc_catalogue()) {
        ConeResult cone = projective_cone_mc(base);
        TruncatedClass mc0 = base.eval_y(0);
        mpq_class todd = integral(base).eval(0);
        CHECK(cone.cone_class.eval_y(0) == projective_cone_mc0(mc0, todd));
    }
}

TEST_CASE("quartic curve cone: y=0 slice") {
    ConeResult cone = projective_cone_mc(mc_smooth_hypersurface(4, 2));
    TruncatedClass expect(3, Basis::H,
                          {YRational(0), YRational(4), YRational(-6), YRational(3)});
    CHECK(cone.cone_class.eval_y(0) == expect);
}

TEST_CASE("mc0 cone rule") {
    CHECK(projective_cone_mc0(TruncatedClass::monomial(1, 1, YRational(1)), 1) ==
          TruncatedClass::monomial(2, 1, YRational(1)));
    CHECK(projective_cone_mc0(TruncatedClass(2, Basis::H,
                                             {YRational(0), YRational(4), YRational(-6)}),
                              -2) ==
          TruncatedClass(3, Basis::H, {YRational(0), YRational(4), YRational(-6), YRational(3)}));
    // smooth cubic: todd read off the class itself
    TruncatedClass cubic = complete_intersection_class({3}, 2);
    mpq_class todd = integral(cubic).eval(0);
    CHECK(todd == 0);
    CHECK(projective_cone_mc0(cubic, todd) ==
          TruncatedClass(3, Basis::H, {YRational(0), YRational(3), YRational(-3), YRational(1)}));
}

TEST_CASE("pushforward cone class re-homes the coefficients") {
    TruncatedClass quartic(2, Basis::H, {YRational(0), YRational(4), YRational(-6)});
    TruncatedClass lifted = projective_cone_pushforward(quartic);
    CHECK(lifted.n() == 3);
    CHECK(lifted == TruncatedClass(3, Basis::H,
                                   {YRational(0), YRational(4), YRational(-6), YRational(0)}));
    CHECK(projective_cone_pushforward(TruncatedClass::one(2)) == TruncatedClass::one(3));
    TruncatedClass nodal(2, Basis::H, {YRational(0), YRational(3), YRational(-2)});
    CHECK(projective_cone_pushforward(nodal) ==
          TruncatedClass(3, Basis::H, {YRational(0), YRational(3), YRational(-2), YRational(0)}));

    // smooth-base cross-check: [cone] = mc0(cone) + (td - 1) H^{n+1}
    mpq_class td = integral(quartic).eval(0);
    TruncatedClass mc0_cone = projective_cone_mc0(quartic, td);
    TruncatedClass correction = TruncatedClass::monomial(3, 3, YRational(mpq_class(td - 1)));
    CHECK(lifted == mc0_cone + correction);
}

TEST_CASE("sheaf cone classes from the K-polynomial") {
    auto [base, cone] = projective_cone_sheaf(one_minus_t_pow(3), 2);
    CHECK(base == complete_intersection_class({3}, 2));
    CHECK(cone == TruncatedClass(3, Basis::H,
                                 {YRational(0), YRational(3), YRational(-3), YRational(1)}));

    for (int d = 1; d <= 6; ++d) {
        auto [b, c] = projective_cone_sheaf(one_minus_t_pow(d), 2);
        CHECK(c == TruncatedClass(3, Basis::H,
                                  {YRational(0), YRational(binomial(d, 1)),
                                   YRational(mpz_class(-binomial(d, 2))),
                                   YRational(binomial(d, 3))}));
    }
    auto [one_base, one_cone] = projective_cone_sheaf(IntPoly(1L), 4);
    CHECK(one_base == TruncatedClass::one(4));
    CHECK(one_cone == TruncatedClass::one(5));
}

TEST_CASE("csm cone recursion") {
    CHECK(csm_projective_cone({0, 1}) == std::vector<mpz_class>{0, 1, 2});
    CHECK(csm_projective_cone({1}) == std::vector<mpz_class>{1, 2});
    CHECK(csm_projective_cone({0, 0, 0}) == std::vector<mpz_class>{0, 0, 0, 1});
}

TEST_CASE("hyperplane restriction truncates the top coefficient") {
    CHECK(hyperplane_restriction(TruncatedClass::monomial(3, 3, YRational(1))) ==
          TruncatedClass::zero(2));
    CHECK(hyperplane_restriction(TruncatedClass::one(3)) == TruncatedClass::one(2));
}

TEST_CASE("genus of the cone: chi_y(cone) = 1 - y chi_y(base)") {
    for (const auto& base : mc_catalogue()) {
        ConeResult cone = projective_cone_mc(base);
        CHECK(integral(cone.cone_class) == YRational(1) - kY * cone.chi_y_base);
    }
}

TEST_CASE("motivic Segre classes pull back along the hyperplane") {
    for (const auto& base : mc_catalogue()) {
        const int n = base.n();
        ConeResult cone = projective_cone_mc(base);
        TruncatedClass ms_cone = cone.cone_class * mc_projective_space(n + 1).inverse();
        TruncatedClass ms_base = base * mc_projective_space(n).inverse();
        CHECK(hyperplane_restriction(ms_cone) == ms_base);
    }
}

TEST_CASE("three cone classes of the degree-d curve") {
    for (int d = 1; d <= 8; ++d) {
        TruncatedClass mc0_cone = projective_cone_mc(mc_smooth_hypersurface(d, 2)).cone_class.eval_y(0);
        TruncatedClass sheaf_cone = projective_cone_sheaf(one_minus_t_pow(d), 2).second;
        TruncatedClass push_cone =
            projective_cone_pushforward(complete_intersection_class({d}, 2));
        if (d >= 4) {
            CHECK(mc0_cone != sheaf_cone);
            CHECK(mc0_cone != push_cone);
            CHECK(sheaf_cone != push_cone);
            // the three point-integrals (motivic Todd, holomorphic Euler
            // characteristic, Todd of the resolution) also differ pairwise
            YRational i_mc0 = integral(mc0_cone);
            YRational i_sheaf = integral(sheaf_cone);
            YRational i_push = integral(push_cone);
            CHECK(i_mc0 != i_sheaf);
            CHECK(i_mc0 != i_push);
            CHECK(i_sheaf != i_push);
        } else {
            CHECK(mc0_cone == sheaf_cone);
        }
    }
    // the printed d=4 values
    TruncatedClass mc0_cone = projective_cone_mc(mc_smooth_hypersurface(4, 2)).cone_class.eval_y(0);
    CHECK(integral(mc0_cone) == YRational(1));
    CHECK(integral(projective_cone_sheaf(one_minus_t_pow(4), 2).second) == YRational(2));
    CHECK(integral(projective_cone_pushforward(complete_intersection_class({4}, 2))) ==
          YRational(-2));
}
