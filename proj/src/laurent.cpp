#include "tauforge/laurent.hpp"

#include <string>

#include "tauforge/error.hpp"

namespace tauforge {

LaurentZ::LaurentZ(Poly constant) {
    if (!constant.is_zero()) coeffs_.emplace(0, std::move(constant));
}

LaurentZ LaurentZ::monomial(int exponent, Poly coeff) {
    LaurentZ out;
    if (!coeff.is_zero()) out.coeffs_.emplace(exponent, std::move(coeff));
    return out;
}

Poly LaurentZ::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Poly() : it->second;
}

void LaurentZ::add(int exponent, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        coeffs_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
    return out;
}

std::vector<Poly> exp_series(const std::vector<Poly>& args, int K) {
    std::vector<Poly> s;
    if (K < 0) return s;
    s.reserve(static_cast<std::size_t>(K) + 1);
    s.emplace_back(1);
    for (int k = 1; k <= K; ++k) {
        PolyBuilder acc;
        for (int i = 1; i <= k && i <= static_cast<int>(args.size()); ++i) {
            const Poly& a = args[static_cast<std::size_t>(i - 1)];
            if (a.is_zero() || s[static_cast<std::size_t>(k - i)].is_zero()) continue;
            acc.add_poly(a * s[static_cast<std::size_t>(k - i)], Rational(i, k));
        }
        s.push_back(acc.build());
    }
    return s;
}

namespace {

struct Piece {
    int zexp;
    Rational coeff;
    Monomial rest;
};

} // namespace

LaurentZ miwa_shift(const Poly& p, Family family, int component, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("Miwa shift sign must be +1 or -1");
    if (!p.uses_only(family))
        throw InvalidInput(std::string("Miwa shift expects only family ") + family_letter(family) + " variables");
    std::map<int, PolyBuilder> acc;
    std::vector<Piece> pieces, next;
    for (const auto& t : p.terms()) {
        pieces.assign(1, Piece{0, t.coeff, Monomial()});
        const Monomial& m = t.monomial;
        for (std::size_t f = 0; f < m.size(); ++f) {
            VarId v = m.var(f);
            unsigned e = m.exponent(f);
            if (v.component != component) {
                for (auto& pc : pieces) pc.rest = pc.rest * Monomial::of(v, e);
                continue;
            }
            // (v + sign z^{-i}/i)^e = sum_k C(e,k) (sign/i)^k z^{-ik} v^{e-k}
            next.clear();
            Rational step(sign, v.index);
            Rational binom(1);
            Rational weight(1);
            for (unsigned k = 0; k <= e; ++k) {
                Rational c = binom * weight;
                Monomial vpow = Monomial::of(v, e - k);
                for (const auto& pc : pieces)
                    next.push_back({pc.zexp - static_cast<int>(k) * v.index, pc.coeff * c, pc.rest * vpow});
                binom = binom * Rational(static_cast<long>(e - k), static_cast<long>(k + 1));
                weight = weight * step;
            }
            pieces.swap(next);
        }
        for (auto& pc : pieces) acc[pc.zexp].add(std::move(pc.rest), pc.coeff);
    }
    LaurentZ out;
    for (auto& [e, b] : acc) {
        b.merge_components(p.components());
        out.add(e, b.build());
    }
    return out;
}

namespace {

std::vector<Poly> difference_args(int K, int component) {
    std::vector<Poly> args;
    for (int i = 1; i <= K; ++i) args.push_back(Poly::variable(tvar(i, component)) - Poly::variable(yvar(i, component)));
    return args;
}

} // namespace

Poly exp_difference_coeff(int k, int component) {
    if (k < 0) return Poly();
    return exp_series(difference_args(k, component), k)[static_cast<std::size_t>(k)];
}

Poly laurent_mul_residue(const std::vector<LaurentZ>& factors, int extra_z_power, int component) {
    LaurentZ prod(Poly(1));
    for (const auto& f : factors) prod = prod * f;
    if (prod.is_zero()) return Poly();
    // Only exp coefficients 0..K can reach z^{-1}.
    int K = -1 - extra_z_power - prod.min_exponent();
    if (K < 0) return Poly();
    auto ex = exp_series(difference_args(K, component), K);
    PolyBuilder acc;
    for (const auto& [e, c] : prod.coeffs()) {
        int k = -1 - extra_z_power - e;
        if (k < 0) continue;
        acc.add_poly(c * ex[static_cast<std::size_t>(k)]);
    }
    return acc.build();
}

} // namespace tauforge
