#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "tauforge/rational.hpp"

namespace tauforge {

/// Variable families: T are the hierarchy times, Y the second copy used inside
/// bilinear identities, X the AKNS coordinates.
enum class Family : std::uint8_t { T = 0, Y = 1, X = 2 };

char family_letter(Family f);
Family family_from_letter(char c);

/// A single variable, e.g. t_k^{(a)}. Ordered lexicographically on
/// (family, component, index).
struct VarId {
    Family family = Family::T;
    int component = 1;
    int index = 1;

    static constexpr int kMaxComponent = 255;
    static constexpr int kMaxIndex = 65535;

    VarId() = default;
    VarId(Family f, int a, int k);

    std::uint32_t key() const {
        return (static_cast<std::uint32_t>(family) << 24) | (static_cast<std::uint32_t>(component) << 16) |
               static_cast<std::uint32_t>(index);
    }
    static VarId from_key(std::uint32_t key);

    friend bool operator==(const VarId& a, const VarId& b) { return a.key() == b.key(); }
    friend auto operator<=>(const VarId& a, const VarId& b) { return a.key() <=> b.key(); }
};

inline VarId tvar(int index, int component = 1) { return {Family::T, component, index}; }
inline VarId yvar(int index, int component = 1) { return {Family::Y, component, index}; }
inline VarId xvar(int index, int component = 1) { return {Family::X, component, index}; }

/// Product of variables with positive exponents. Factors are kept sorted by
/// variable key, so equal monomials have equal representations.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(VarId v, unsigned exponent = 1);

    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    VarId var(std::size_t i) const { return VarId::from_key(static_cast<std::uint32_t>(factors_[i] >> 32)); }
    unsigned exponent(std::size_t i) const { return static_cast<unsigned>(factors_[i] & 0xffffffffu); }
    unsigned exponent_of(VarId v) const;

    /// Sum of index * exponent, the grading in which t_k has weight k.
    long weighted_degree() const;
    long total_degree() const;

    /// Monomial with exponent of v lowered by `by`; caller guarantees exponent_of(v) >= by.
    Monomial lowered(VarId v, unsigned by) const;
    Monomial without(VarId v) const { return lowered(v, exponent_of(v)); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// Canonical monomial order. The largest variable present decides first,
    /// then its exponent, then the next largest variable, and so on; the empty
    /// monomial is the smallest. Under this order t3 > t1*t2 > t1^3 > t1 > 1.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const;
    const std::vector<std::uint64_t>& packed() const { return factors_; }

private:
    static std::uint64_t pack(std::uint32_t key, unsigned e) { return (static_cast<std::uint64_t>(key) << 32) | e; }
    std::vector<std::uint64_t> factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are stored in ascending canonical monomial order with no zero
/// coefficients, so structural equality is polynomial equality. The ambient
/// component count (0 = not fixed yet) travels with the value; combining two
/// polynomials fixed to different counts throws.
class Poly {
public:
    Poly() = default;
    Poly(Rational c); // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    static Poly variable(VarId v, int components = 0);
    static Poly monomial(Monomial m, Rational c = Rational(1), int components = 0);
    /// Sums duplicate monomials and drops zeros.
    static Poly from_terms(std::vector<Term> terms, int components = 0);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.empty()); }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int components() const { return components_; }
    /// Fixes the ambient component count; throws if a variable's component exceeds it
    /// or the count was already fixed differently.
    Poly with_components(int s) const;

    long weighted_degree() const;
    /// Lowest weighted degree over the terms (0 for the zero polynomial).
    long min_weighted_degree() const;
    std::set<VarId> variables() const;
    bool uses_only(Family f) const;
    bool depends_on(VarId v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    /// Equality of terms; the ambient count is metadata and does not participate.
    friend bool operator==(const Poly& a, const Poly& b) { return a.equal_terms(b); }

    static int merge_components(int a, int b);

private:
    friend class PolyBuilder;
    bool equal_terms(const Poly& o) const;
    Poly combine(const Poly& o, bool subtract) const;

    std::vector<Term> terms_;
    int components_ = 0;
};

/// Hash-map accumulator used to assemble polynomials term by term.
class PolyBuilder {
public:
    void add(const Monomial& m, const Rational& c);
    void add(Monomial&& m, const Rational& c);
    void add_product(const Monomial& m, const Rational& a, const Rational& b);
    void add_poly(const Poly& p, const Rational& scale = Rational(1));
    void merge_components(int s) { components_ = Poly::merge_components(components_, s); }
    Poly build();

private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
    int components_ = 0;
};

Poly pow(const Poly& p, unsigned exponent);

/// Iterated partial derivative d^order p / dv^order.
Poly partial_derivative(const Poly& p, VarId v, unsigned order = 1);

/// Replaces each listed variable v by v + shifts[v].
Poly shift_vars(const Poly& p, const std::map<VarId, Rational>& shifts);

/// Replaces every occurrence of v by the polynomial `value`.
Poly substitute(const Poly& p, VarId v, const Poly& value);

/// Simultaneous substitution of several variables.
Poly substitute(const Poly& p, const std::map<VarId, Poly>& values);

/// Applies a variable renaming; the map must be injective on the variables of p.
Poly rename_variables(const Poly& p, const std::function<VarId(VarId)>& rename);

/// Rewrites every variable of family `from` into family `to`, keeping component and index.
Poly rename_family(const Poly& p, Family from, Family to);

/// Poly-valued scalar arithmetic used by the CLI and tests.
enum class ArithOp { Add, Sub, Mul, Pow, Scale };
Poly poly_arith(ArithOp op, const Poly& a, const Poly& b);
Poly poly_arith(ArithOp op, const Poly& a, const Rational& b);

} // namespace tauforge
