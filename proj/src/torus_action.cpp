#include "kcones/torus_action.hpp"

#include "kcones/errors.hpp"

namespace kcones {

TorusAction::TorusAction(int rank, std::vector<std::vector<int>> characters,
                         std::optional<ScalarEmbedding> scalar)
    : rank_(rank), characters_(std::move(characters)), scalar_(std::move(scalar)) {
    if (rank_ < 0) throw InputError("torus rank must be nonnegative");
    if (characters_.empty()) throw InputError("a torus action needs at least one character");
    for (const auto& c : characters_) {
        if (static_cast<int>(c.size()) != rank_)
            throw DimensionError("character exponent vector does not match torus rank");
    }
    if (scalar_) {
        if (static_cast<int>(scalar_->weights.size()) != rank_)
            throw DimensionError("scalar weight vector does not match torus rank");
        if (scalar_->q == 0) throw InputError("scalar exponent q must be nonzero");
        for (size_t i = 0; i < characters_.size(); ++i) {
            long w = 0;
            for (size_t j = 0; j < scalar_->weights.size(); ++j)
                w += scalar_->weights[j] * characters_[i][j];
            if (w != scalar_->q)
                throw InputError("character " + std::to_string(i + 1) +
                                 " has scalar weight " + std::to_string(w) +
                                 ", expected q = " + std::to_string(scalar_->q));
        }
    }
}

TorusAction TorusAction::trivial(int n) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    return TorusAction(0, std::vector<std::vector<int>>(static_cast<size_t>(n) + 1));
}

TorusAction TorusAction::diagonal(int n) {
    if (n < 0) throw InputError("ambient dimension must be nonnegative");
    int k = n + 1;
    std::vector<std::vector<int>> chars(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i) chars[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    ScalarEmbedding emb;
    emb.weights.assign(static_cast<size_t>(k), 1);
    emb.q = 1;
    return TorusAction(k, std::move(chars), emb);
}

LaurentExpr TorusAction::character(int i) const {
    if (i < 1 || i > static_cast<int>(characters_.size()))
        throw InputError("character index out of range");
    ExpKey key;
    key.alpha = characters_[static_cast<size_t>(i - 1)];
    return LaurentExpr::monomial(rank_, key, YRational(1));
}

LaurentExpr TorusAction::relation() const {
    LaurentExpr r = LaurentExpr::constant(rank_, YRational(1));
    for (size_t i = 0; i < characters_.size(); ++i) {
        ExpKey key;
        key.alpha.resize(characters_[i].size());
        for (size_t j = 0; j < characters_[i].size(); ++j) key.alpha[j] = -characters_[i][j];
        key.t = Frac(1);
        LaurentExpr factor = LaurentExpr::constant(rank_, YRational(1)) -
                             LaurentExpr::monomial(rank_, key, YRational(1));
        r = r * factor;
    }
    return r;
}

LaurentExpr TorusAction::origin_forget_t() const {
    LaurentExpr r = LaurentExpr::constant(rank_, YRational(1));
    for (size_t i = 0; i < characters_.size(); ++i) {
        ExpKey key;
        key.alpha.resize(characters_[i].size());
        for (size_t j = 0; j < characters_[i].size(); ++j) key.alpha[j] = -characters_[i][j];
        LaurentExpr factor = LaurentExpr::constant(rank_, YRational(1)) -
                             LaurentExpr::monomial(rank_, key, YRational(1));
        r = r * factor;
    }
    return r;
}

} // namespace kcones
