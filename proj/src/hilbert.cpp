#include "kcones/hilbert.hpp"

#include "kcones/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kcones {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<std::vector<int>> generators)
    : num_vars_(num_vars) {
    if (num_vars < 1) throw InputError("monomial ideal needs at least one variable");
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != num_vars)
            throw DimensionError("generator exponent vector has wrong length");
        for (int e : g)
            if (e < 0) throw InputError("negative exponent in monomial generator");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // drop generators divisible by another one (duplicates are already gone)
    for (size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < generators.size() && !redundant; ++j)
            if (i != j && divides(generators[j], generators[i])) redundant = true;
        if (!redundant) generators_.push_back(generators[i]);
    }
}

KPolynomial kpoly_from_monomial_ideal(const MonomialIdeal& ideal, int generator_cap) {
    const auto& gens = ideal.generators();
    if (static_cast<int>(gens.size()) > generator_cap)
        throw ResourceLimitError("monomial ideal has " + std::to_string(gens.size()) +
                                 " generators, cap is " + std::to_string(generator_cap));

    long max_degree = 0;
    std::vector<int> total_lcm(static_cast<size_t>(ideal.num_vars()), 0);
    for (const auto& g : gens)
        for (size_t i = 0; i < g.size(); ++i) total_lcm[i] = std::max(total_lcm[i], g[i]);
    max_degree = std::accumulate(total_lcm.begin(), total_lcm.end(), 0L);

    std::vector<mpz_class> coeffs(static_cast<size_t>(max_degree) + 1, mpz_class(0));

    // DFS over subsets carrying the running lcm and sign
    std::vector<int> lcm(static_cast<size_t>(ideal.num_vars()), 0);
    auto walk = [&](auto&& self, size_t next, long degree, int sign) -> void {
        coeffs[static_cast<size_t>(degree)] += sign;
        for (size_t i = next; i < gens.size(); ++i) {
            std::vector<int> saved;
            long new_degree = 0;
            saved.reserve(lcm.size());
            for (size_t v = 0; v < lcm.size(); ++v) {
                saved.push_back(lcm[v]);
                lcm[v] = std::max(lcm[v], gens[i][v]);
                new_degree += lcm[v];
            }
            self(self, i + 1, new_degree, -sign);
            lcm = std::move(saved);
        }
    };
    walk(walk, 0, 0, +1);

    KPolynomial k;
    k.n = ideal.num_vars() - 1;
    k.poly = IntPoly(std::move(coeffs));
    return k;
}

std::vector<mpz_class> hilbert_series_coefficients(const KPolynomial& k, int J) {
    if (J < 0) throw InputError("series truncation must be nonnegative");
    std::vector<mpz_class> h(static_cast<size_t>(J) + 1, mpz_class(0));
    for (int j = 0; j <= J; ++j) {
        mpz_class sum = 0;
        for (int i = 0; i <= std::min(j, k.poly.degree()); ++i)
            sum += k.poly.coeff(i) * binomial(k.n + j - i, k.n);
        h[static_cast<size_t>(j)] = sum;
    }
    return h;
}

TruncatedClass sheaf_class_from_kpoly(const KPolynomial& k) {
    return TruncatedClass::from_t_polynomial(k.n, k.poly);
}

HilbertPolynomial hilbert_polynomial_from_class(const TruncatedClass& c) {
    TruncatedClass h = c.in_h();
    const int n = h.n();
    HilbertPolynomial p;
    p.coeffs.assign(static_cast<size_t>(n) + 1, mpq_class(0));
    for (int i = 0; i <= n; ++i) {
        const YRational& q = h.coeff(i);
        if (q.is_zero()) continue;
        if (!q.is_constant())
            throw InputError("Hilbert polynomial requires y-free coefficients");
        mpq_class qv = q.eval(mpq_class(0));
        int r = n - i;
        p.binomial_terms.emplace_back(qv, r);
        // C(m+r, r) = prod_{s=1..r} (m+s) / r!
        std::vector<mpq_class> term{mpq_class(1)};
        for (int s = 1; s <= r; ++s) {
            std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
            for (size_t d = 0; d < term.size(); ++d) {
                next[d] += term[d] * s;
                next[d + 1] += term[d];
            }
            term = std::move(next);
        }
        mpz_class rfact;
        mpz_fac_ui(rfact.get_mpz_t(), static_cast<unsigned long>(r));
        for (size_t d = 0; d < term.size(); ++d) {
            mpq_class v = qv * term[d] / mpq_class(rfact);
            v.canonicalize();
            p.coeffs[d] += v;
        }
    }
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

mpq_class HilbertPolynomial::eval(const mpq_class& m) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + *it;
    acc.canonicalize();
    return acc;
}

std::string HilbertPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        mpq_class c = coeffs[d];
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpq_class mag = abs(c);
        if (mag != 1 || d == 0) os << mag.get_str() << (d > 0 ? "*" : "");
        if (d >= 1) os << 'm';
        if (d >= 2) os << '^' << d;
    }
    if (first) return "0";
    return os.str();
}

std::string HilbertPolynomial::to_binomial_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, r] : binomial_terms) {
        if (q == 0) continue;
        if (first) {
            if (q < 0) os << '-';
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        mpq_class mag = abs(q);
        if (mag != 1) os << mag.get_str() << '*';
        os << "C(m+" << r << "," << r << ")";
    }
    if (first) return "0";
    return os.str();
}

LaurentExpr gamma_equivariant_sheaf_class(const KPolynomial& k) {
    LaurentExpr e(0);
    for (int j = 0; j <= k.poly.degree(); ++j) {
        if (k.poly.coeff(j) == 0) continue;
        ExpKey key;
        key.t = Frac(j);
        e.add_term(key, YRational(k.poly.coeff(j)));
    }
    return e;
}

} // namespace kcones
