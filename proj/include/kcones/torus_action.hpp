#pragma once

#include "kcones/laurent.hpp"

#include <optional>
#include <vector>

namespace kcones {

/// One-parameter subgroup acting as z -> z^q * Identity: the weights w_i of
/// the reparametrized torus factor together with the scalar exponent q.
struct ScalarEmbedding {
    std::vector<long> weights;
    long q = 1;

    bool operator==(const ScalarEmbedding& o) const { return weights == o.weights && q == o.q; }
};

/// Linear torus action on C^{n+1}: rank-k torus with characters b_1..b_{n+1},
/// each a single Laurent monomial in a1..ak, plus an optional scalar
/// embedding. When the embedding is present every character must have total
/// scalar weight exactly q (the action contains the scalars).
class TorusAction {
public:
    TorusAction(int rank, std::vector<std::vector<int>> characters,
                std::optional<ScalarEmbedding> scalar = std::nullopt);

    /// Rank-0 action on C^{n+1} (all characters trivial); the relation
    /// degenerates to (1-t)^{n+1}.
    static TorusAction trivial(int n);
    /// Full diagonal torus: rank n+1, b_i = a_i, scalars via w = (1,..,1), q = 1.
    static TorusAction diagonal(int n);

    int n() const { return static_cast<int>(characters_.size()) - 1; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& characters() const { return characters_; }
    const std::optional<ScalarEmbedding>& scalar() const { return scalar_; }

    /// The character b_i (1-based) as a Laurent monomial.
    LaurentExpr character(int i) const;
    /// The relation prod_i (1 - t/b_i); also the equivariant class of the
    /// origin [0] with the t-grading.
    LaurentExpr relation() const;
    /// prod_i (1 - 1/b_i): the class of the origin with the t-grading
    /// forgotten. Vanishes when some b_i is the unit character.
    LaurentExpr origin_forget_t() const;

    bool operator==(const TorusAction& o) const {
        return rank_ == o.rank_ && characters_ == o.characters_ && scalar_ == o.scalar_;
    }

private:
    int rank_;
    std::vector<std::vector<int>> characters_;
    std::optional<ScalarEmbedding> scalar_;
};

} // namespace kcones
