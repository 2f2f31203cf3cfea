#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace kcones {

/// Polynomial in a1..ak with exact rational coefficients (nonnegative
/// exponents; equivariant cohomology of a vector space).
class CohomPoly {
public:
    explicit CohomPoly(int rank = 0) : rank_(rank) {}

    static CohomPoly constant(int rank, const mpq_class& c);
    static CohomPoly variable(int rank, int i); // a_i, 1-based
    static CohomPoly monomial(int rank, std::vector<int> exps, const mpq_class& c);

    int rank() const { return rank_; }
    const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CohomPoly operator+(const CohomPoly& o) const;
    CohomPoly operator-(const CohomPoly& o) const;
    CohomPoly operator-() const;
    CohomPoly operator*(const CohomPoly& o) const;
    CohomPoly operator*(const mpq_class& s) const;
    bool operator==(const CohomPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const CohomPoly& o) const { return !(*this == o); }

    void add_term(const std::vector<int>& exps, const mpq_class& c);

    std::string to_string() const;

private:
    int rank_;
    std::map<std::vector<int>, mpq_class> terms_;
};

/// Element of H*_T(P^n) = Q[a1..ak][x]/(prod(b_i - x)) in reduced form:
/// x-degree at most n. The weights b_i are integer linear forms in the a's.
struct CohomClass {
    int rank = 0;
    int n = 0;
    std::vector<std::vector<long>> action_weights; // n+1 forms, each of length rank
    std::vector<CohomPoly> x_coeffs;               // ascending x-degree, size n+1

    bool operator==(const CohomClass& o) const {
        return rank == o.rank && n == o.n && action_weights == o.action_weights &&
               x_coeffs == o.x_coeffs;
    }
    std::string to_string() const;
};

/// Substitute a_i -> a_i - (w_i/q) x into an affine class and reduce modulo
/// prod(b_i - x).
CohomClass coho_affine_to_projective(const CohomPoly& cx, const std::vector<long>& weights,
                                     long q, const std::vector<std::vector<long>>& action_weights);

/// Evaluate x = 0 in the reduced form.
CohomPoly coho_projective_to_affine(const CohomClass& x_class);

} // namespace kcones
