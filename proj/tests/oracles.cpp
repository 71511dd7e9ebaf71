#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<Poly> schur_by_product(int K, int component) {
    std::vector<Poly> series(static_cast<std::size_t>(K) + 1);
    series[0] = Poly(1);
    for (int i = 1; i <= K; ++i) {
        // factor = sum_{k: i k <= K} t_i^k / k!
        std::vector<Poly> factor(static_cast<std::size_t>(K) + 1);
        Rational fact(1);
        for (int k = 0; i * k <= K; ++k) {
            if (k > 0) fact *= Rational(k);
            factor[static_cast<std::size_t>(i * k)] =
                Poly::monomial(Monomial::of(tvar(i, component), static_cast<unsigned>(k)), Rational(1) / fact);
        }
        std::vector<Poly> next(static_cast<std::size_t>(K) + 1);
        for (int a = 0; a <= K; ++a)
            for (int b = 0; a + b <= K; ++b)
                if (!series[static_cast<std::size_t>(a)].is_zero() && !factor[static_cast<std::size_t>(b)].is_zero())
                    next[static_cast<std::size_t>(a + b)] +=
                        series[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(b)];
        series = std::move(next);
    }
    return series;
}

Poly leibniz_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        Poly term(1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
        total += inv % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

bool periodic_by_definition(const Partition& lambda, int n) {
    const int m = lambda.length();
    const int low = -m - 3 * n;
    std::set<int> V;
    for (int i = 1; i <= m; ++i) V.insert(lambda[i] - i + 1);
    for (int v = -m; v >= low; --v) V.insert(v);
    for (int v : V)
        if (v - n >= low && !V.count(v - n)) return false;
    return true;
}

LaurentZ differential_exponential(const Poly& p, int component, int max_index) {
    LaurentZ total(p);
    LaurentZ term(p);
    for (int k = 1;; ++k) {
        LaurentZ next;
        for (const auto& [e, c] : term.coeffs())
            for (int i = 1; i <= max_index; ++i) {
                Poly d = partial_derivative(c, tvar(i, component));
                if (!d.is_zero()) next.add(e - i, d * Rational(-1, static_cast<long>(i) * k));
            }
        if (next.is_zero()) break;
        total += next;
        term = std::move(next);
    }
    return total;
}

Poly residue_by_substitution(const Poly& A, const Poly& B, int component, int extra) {
    if (A.is_zero() || B.is_zero()) return Poly();
    const int dA = static_cast<int>(A.weighted_degree());
    const int dB = static_cast<int>(B.weighted_degree());
    LaurentZ la = differential_exponential(A, component, std::max(dA, 1));
    Poly By = rename_family(B, Family::T, Family::Y);
    // B(y + [z^{-1}]) via the same Taylor expansion with the sign flipped.
    LaurentZ lb(By);
    {
        LaurentZ term(By);
        for (int k = 1;; ++k) {
            LaurentZ next;
            for (const auto& [e, c] : term.coeffs())
                for (int i = 1; i <= std::max(dB, 1); ++i) {
                    Poly d = partial_derivative(c, yvar(i, component));
                    if (!d.is_zero()) next.add(e - i, d * Rational(1, static_cast<long>(i) * k));
                }
            if (next.is_zero()) break;
            lb += next;
            term = std::move(next);
        }
    }
    LaurentZ prod = la * lb;
    int K = -1 - extra - prod.min_exponent();
    if (K < 0) return Poly();
    // exp(sum (t_i - y_i) z^i) coefficients from the product formula in the difference.
    std::vector<Poly> diff_series = schur_by_product(K, component);
    std::map<VarId, Poly> sub;
    for (int i = 1; i <= K; ++i) sub[tvar(i, component)] = Poly::variable(tvar(i, component)) - Poly::variable(yvar(i, component));
    Poly out;
    for (const auto& [e, c] : prod.coeffs()) {
        int k = -1 - extra - e;
        if (k >= 0 && k <= K) out += c * substitute(diff_series[static_cast<std::size_t>(k)], sub);
    }
    return out;
}

Poly Rng::poly(int terms, int max_weight, int components, Family f) {
    PolyBuilder b;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = static_cast<int>(uniform(0, max_weight));
        while (left > 0) {
            int idx = static_cast<int>(uniform(1, left));
            int comp = static_cast<int>(uniform(1, components));
            m = m * Monomial::of(VarId(f, comp, idx));
            left -= idx;
        }
        b.add(m, rational());
    }
    return b.build();
}

} // namespace oracle
