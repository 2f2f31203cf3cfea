#pragma once

#include "kcones/truncated_class.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kcones {

/// The three K-classes a subvariety of P^n carries: structure sheaf,
/// resolution pushforward, and the y=0 motivic class.
struct ClassTriple {
    TruncatedClass sheaf;
    TruncatedClass pushforward;
    TruncatedClass motivic0;
};

/// Genus data read off a class by pushing forward to a point.
struct GenusReport {
    YRational chi_y;
    mpq_class todd;
    mpq_class arithmetic_genus;
    int dim = 0;
};

/// Named entry of the plane-cubic catalogue.
struct CatalogueRow {
    std::string name;        // stable id, e.g. "nodal"
    std::string description; // human description of the curve
    ClassTriple triple;
};

/// [P^k in P^n] = H^{n-k}.
TruncatedClass linear_subspace_class(int k, int n);

/// prod (1 - t^{d_i}) reduced: sheaf class of a complete intersection.
TruncatedClass complete_intersection_class(const std::vector<int>& degrees, int n);

/// Motivic Chern class of P^n itself: coefficients C(n+1,i)(-y)^i(1+y)^{n-i}.
TruncatedClass mc_projective_space(int n);

/// Motivic Chern class of a smooth degree-d hypersurface in P^n, by the
/// divisor trick; the 1/(1+y t^d) factor inverts through nilpotence.
TruncatedClass mc_smooth_hypersurface(int d, int n);

/// Divisor trick for a split bundle: roots are powers of the hyperplane
/// bundle, the class is e(E) lambda_y(-E) multiplied into the ambient class.
TruncatedClass split_divisor_mc(const std::vector<int>& chern_roots,
                                const TruncatedClass& ambient_mc);

/// Pushforward of 1 along a degree-d self-map of P^1: d - (d-1)H.
TruncatedClass pushforward_self_map_p1(int d);

/// Pushforward along a linear inclusion P^n -> P^N: shifts H^j to H^{j+N-n}.
TruncatedClass linear_inclusion_pushforward(const TruncatedClass& c, int n, int N);

/// Additivity of the pushforward class over irreducible components.
TruncatedClass union_additive_pushforward(const std::vector<TruncatedClass>& parts);

/// Motivic class of a general-position union of two linear subspaces of
/// codimensions k and l: H^k + H^l - H^{k+l} (last term truncates away when
/// k+l > n).
TruncatedClass mc0_union_two_linear(int k, int l, int n);

/// Pushforward to the point: the sum of H-basis coefficients.
YRational integral(const TruncatedClass& c);

/// chi_y = integral; todd = chi_y at y=0; p_a = (-1)^dim (todd - 1).
GenusReport genus_report(const TruncatedClass& mc, int dim);

/// (codimension, degree) read off the lowest nonzero H-coefficient.
std::pair<int, YRational> degree_codim(const TruncatedClass& c);

/// The six singular plane cubics with their class triples.
std::vector<CatalogueRow> cubic_catalogue();

} // namespace kcones
