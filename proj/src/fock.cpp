#include "tauforge/fock.hpp"

#include <algorithm>
#include <numeric>

#include "tauforge/error.hpp"
#include "tauforge/schur.hpp"

namespace tauforge {

void GeneratorVector::add(int component, int index, const Rational& c) {
    if (component < 1) throw InvalidInput("basis component must be >= 1");
    BasisVector b{component, index};
    auto it = entries.find(b);
    if (it == entries.end()) {
        if (!c.is_zero()) entries.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
}

void GeneratorVector::validate(bool require_positive) const {
    if (entries.empty()) throw InvalidInput("generator vector needs a nonzero entry");
    for (const auto& [b, c] : entries) {
        if (b.component < 1) throw InvalidInput("basis component must be >= 1");
        if (require_positive && b.index < 1) throw InvalidInput("generator indices must be >= 1");
        if (c.is_zero()) throw InvalidInput("generator entries must be nonzero");
    }
}

int GeneratorVector::max_index() const {
    int m = 0;
    for (const auto& [b, c] : entries) m = std::max(m, b.index);
    return m;
}

WedgeVector WedgeVector::vacuum(int floor) {
    WedgeVector w;
    w.floor = floor;
    w.terms.emplace(Factors{}, Poly(1));
    return w;
}

Poly WedgeVector::coefficient(const Factors& factors) const {
    auto it = terms.find(factors);
    return it == terms.end() ? Poly() : it->second;
}

void WedgeVector::add(const Factors& factors, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(factors);
    if (it == terms.end()) {
        terms.emplace(factors, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

EvolvedVector evolve(const GeneratorVector& f, int degree_cap) {
    if (degree_cap < 0) throw InvalidInput("degree cap must be >= 0");
    EvolvedVector out;
    for (const auto& [b, coeff] : f.entries) {
        if (b.index < 1) continue;
        if (b.index - 1 > degree_cap) throw InvalidInput("evolution needs s_i beyond the degree cap");
        // b e_L contributes b s_i(t) to e_{L-i} for i = 0..L-1.
        for (int i = 0; i < b.index; ++i) {
            Poly term = elementary_schur(i, b.component) * coeff;
            auto [it, inserted] = out.try_emplace(BasisVector{b.component, b.index - i}, term);
            if (!inserted) it->second += term;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

GeneratorVector lambda_shift(const GeneratorVector& f, const std::vector<int>& n_parts, int power) {
    if (power < 0) throw InvalidInput("shift power must be >= 0");
    GeneratorVector out;
    for (const auto& [b, c] : f.entries) {
        if (b.component > static_cast<int>(n_parts.size())) throw InvalidInput("basis component exceeds the profile");
        out.add(b.component, b.index - power * n_parts[static_cast<std::size_t>(b.component - 1)], c);
    }
    return out;
}

bool wedges_to_zero(const GeneratorVector& f, int floor) {
    return std::all_of(f.entries.begin(), f.entries.end(), [floor](const auto& e) { return e.first.index <= floor; });
}

int detect_k(const GeneratorVector& g, const std::vector<int>& n_parts) {
    if (wedges_to_zero(g)) throw InvalidInput("generator already vanishes against the vacuum");
    int k = 0;
    while (!wedges_to_zero(lambda_shift(g, n_parts, k + 1))) ++k;
    return k;
}

WedgeVector wedge_left(const EvolvedVector& f, const WedgeVector& w) {
    WedgeVector out;
    out.floor = w.floor;
    BasisOrder less;
    for (const auto& [factors, coeff] : w.terms) {
        for (const auto& [b, fc] : f) {
            if (b.index <= w.floor) continue; // already in the vacuum tail
            auto pos = std::lower_bound(factors.begin(), factors.end(), b, less);
            if (pos != factors.end() && *pos == b) continue;
            auto offset = pos - factors.begin();
            WedgeVector::Factors next(factors.begin(), pos);
            next.push_back(b);
            next.insert(next.end(), pos, factors.end());
            Poly c = fc * coeff;
            if (offset % 2) c = -c;
            out.add(next, c);
        }
    }
    return out;
}

Poly oracle_tau(const std::vector<GeneratorVector>& fs, const ChargeVector& charge,
                const std::optional<std::vector<int>>& n_parts) {
    const int s = static_cast<int>(charge.size());
    if (s < 1) throw InvalidInput("charge needs at least one component");
    std::vector<GeneratorVector> gens;
    for (const auto& f : fs) {
        f.validate(!n_parts.has_value());
        for (const auto& [b, c] : f.entries)
            if (b.component > s) throw InvalidInput("basis component exceeds the charge length");
        if (!n_parts) {
            gens.push_back(f);
            continue;
        }
        if (static_cast<int>(n_parts->size()) != s) throw InvalidInput("profile length must equal the charge length");
        int k = detect_k(f, *n_parts);
        for (int p = 0; p <= k; ++p) gens.push_back(lambda_shift(f, *n_parts, p));
    }
    const int m = static_cast<int>(gens.size());
    if (std::accumulate(charge.begin(), charge.end(), 0) != m)
        throw InvalidInput("charge entries must sum to " + std::to_string(m));
    if (std::any_of(charge.begin(), charge.end(), [](int c) { return c < 0; })) return Poly().with_components(s);

    WedgeVector w = WedgeVector::vacuum(0);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        w = wedge_left(evolve(*it, std::max(0, it->max_index())), w);
        if (w.terms.empty()) break;
    }
    WedgeVector::Factors target;
    for (int a = 1; a <= s; ++a)
        for (int l = charge[static_cast<std::size_t>(a - 1)]; l >= 1; --l) target.push_back({a, l});
    return w.coefficient(target).with_components(s);
}

WedgeVector alpha_action(const WedgeVector& w, int component, int i) {
    if (i < 1) throw InvalidInput("alpha index must be >= 1");
    WedgeVector out;
    out.floor = w.floor;
    BasisOrder less;
    for (const auto& [factors, coeff] : w.terms) {
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (factors[k].component != component) continue;
            BasisVector image{component, factors[k].index - i};
            // Images inside the vacuum tail repeat a vacuum factor.
            if (image.index <= w.floor) continue;
            WedgeVector::Factors rest(factors);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            auto pos = std::lower_bound(rest.begin(), rest.end(), image, less);
            if (pos != rest.end() && *pos == image) continue;
            auto offset = static_cast<std::size_t>(pos - rest.begin());
            rest.insert(pos, image);
            Poly c = coeff;
            if ((k + offset) % 2) c = -c;
            out.add(rest, c);
        }
    }
    return out;
}

} // namespace tauforge
