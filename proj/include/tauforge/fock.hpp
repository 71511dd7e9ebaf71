#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tauforge/poly.hpp"
#include "tauforge/tau.hpp"

namespace tauforge {

/// e_i^{(a)}.
struct BasisVector {
    int component = 1;
    int index = 1;

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Wedge order: component ascending, then index descending, so e_2^{(1)} < e_1^{(1)} < e_3^{(2)}.
struct BasisOrder {
    bool operator()(const BasisVector& x, const BasisVector& y) const {
        return x.component != y.component ? x.component < y.component : x.index > y.index;
    }
};

/// Finite combination of basis vectors with rational coefficients.
struct GeneratorVector {
    std::map<BasisVector, Rational, BasisOrder> entries;

    /// Adds c to the coefficient of e_index^{(component)}, dropping zeros.
    void add(int component, int index, const Rational& c);
    /// Throws unless some entry is nonzero; with require_positive also unless all indices are >= 1.
    void validate(bool require_positive = true) const;
    int max_index() const;
};

/// Basis vector -> polynomial coefficient.
using EvolvedVector = std::map<BasisVector, Poly, BasisOrder>;

/// Finite excitation over the vacuum tail {e_i^{(a)} : i <= floor, all a}.
/// Keys are strictly increasing factor lists in BasisOrder.
struct WedgeVector {
    using Factors = std::vector<BasisVector>;
    struct FactorsLess {
        bool operator()(const Factors& x, const Factors& y) const {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), BasisOrder());
        }
    };

    int floor = 0;
    std::map<Factors, Poly, FactorsLess> terms;

    static WedgeVector vacuum(int floor = 0);
    Poly coefficient(const Factors& factors) const;
    void add(const Factors& factors, const Poly& c);
};

/// Coefficients of f(t) on e_l^{(a)}, l >= 1: sum_i b_{l+i} s_i(t^{(a)}).
/// Throws if an s_i beyond degree_cap would be needed.
EvolvedVector evolve(const GeneratorVector& f, int degree_cap);

/// e_l^{(a)} -> e_{l - power * n_a}^{(a)}; nonpositive indices are kept.
GeneratorVector lambda_shift(const GeneratorVector& f, const std::vector<int>& n_parts, int power);

/// True when every index of f lies at or below the vacuum floor, so f wedged with the vacuum is 0.
bool wedges_to_zero(const GeneratorVector& f, int floor = 0);

/// Largest p with lambda_shift^p(g) not wedging to zero against the vacuum.
int detect_k(const GeneratorVector& g, const std::vector<int>& n_parts);

/// f wedged onto the left of w, with the sign of moving f into sorted position.
WedgeVector wedge_left(const EvolvedVector& f, const WedgeVector& w);

/// Coefficient of e_{m_1}^{(1)} ^ ... ^ e_1^{(1)} ^ e_{m_2}^{(2)} ^ ... ^ |0> in
/// f_1(t) ^ ... ^ f_m(t) ^ |0>. With n_parts, each f_j is first replaced by
/// f_j, Lambda f_j, ..., Lambda^{k_j} f_j.
Poly oracle_tau(const std::vector<GeneratorVector>& fs, const ChargeVector& charge,
                const std::optional<std::vector<int>>& n_parts = std::nullopt);

/// Derivation sending each factor e_j^{(a)} to e_{j-i}^{(a)}.
WedgeVector alpha_action(const WedgeVector& w, int component, int i);

} // namespace tauforge
