#include "tauforge/poly.hpp"

#include <algorithm>
#include <string>

#include "tauforge/error.hpp"

namespace tauforge {

char family_letter(Family f) {
    switch (f) {
    case Family::T: return 'T';
    case Family::Y: return 'Y';
    case Family::X: return 'X';
    }
    return '?';
}

Family family_from_letter(char c) {
    switch (c) {
    case 'T': case 't': return Family::T;
    case 'Y': case 'y': return Family::Y;
    case 'X': case 'x': return Family::X;
    default: throw InvalidInput(std::string("unknown variable family '") + c + "'");
    }
}

VarId::VarId(Family f, int a, int k) : family(f), component(a), index(k) {
    if (a < 1 || a > kMaxComponent) throw InvalidInput("variable component must lie in [1, 255]");
    if (k < 1 || k > kMaxIndex) throw InvalidInput("variable index must be >= 1");
}

VarId VarId::from_key(std::uint32_t key) {
    VarId v;
    v.family = static_cast<Family>(key >> 24);
    v.component = static_cast<int>((key >> 16) & 0xff);
    v.index = static_cast<int>(key & 0xffff);
    return v;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, unsigned exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.push_back(pack(v.key(), exponent));
    return m;
}

unsigned Monomial::exponent_of(VarId v) const {
    const auto key = v.key();
    auto it = std::lower_bound(factors_.begin(), factors_.end(), pack(key, 0));
    if (it != factors_.end() && static_cast<std::uint32_t>(*it >> 32) == key)
        return static_cast<unsigned>(*it & 0xffffffffu);
    return 0;
}

long Monomial::weighted_degree() const {
    long d = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) d += static_cast<long>(var(i).index) * exponent(i);
    return d;
}

long Monomial::total_degree() const {
    long d = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) d += exponent(i);
    return d;
}

Monomial Monomial::lowered(VarId v, unsigned by) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    const auto key = v.key();
    for (auto f : factors_) {
        if (static_cast<std::uint32_t>(f >> 32) == key) {
            unsigned e = static_cast<unsigned>(f & 0xffffffffu) - by;
            if (e > 0) out.factors_.push_back(pack(key, e));
        } else {
            out.factors_.push_back(f);
        }
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        auto ka = a.factors_[i] >> 32, kb = b.factors_[j] >> 32;
        if (ka < kb) {
            out.factors_.push_back(a.factors_[i++]);
        } else if (kb < ka) {
            out.factors_.push_back(b.factors_[j++]);
        } else {
            out.factors_.push_back(a.factors_[i++] + (b.factors_[j++] & 0xffffffffu));
        }
    }
    while (i < a.factors_.size()) out.factors_.push_back(a.factors_[i++]);
    while (j < b.factors_.size()) out.factors_.push_back(b.factors_[j++]);
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    // Walk both factor lists from the largest variable downwards.
    auto ia = a.factors_.rbegin(), ib = b.factors_.rbegin();
    for (; ia != a.factors_.rend() && ib != b.factors_.rend(); ++ia, ++ib) {
        auto ka = *ia >> 32, kb = *ib >> 32;
        if (ka != kb) return ka <=> kb;
        auto ea = *ia & 0xffffffffu, eb = *ib & 0xffffffffu;
        if (ea != eb) return ea <=> eb;
    }
    if (ia != a.factors_.rend()) return std::strong_ordering::greater;
    if (ib != b.factors_.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto f : factors_) {
        h ^= f;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(Rational c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Poly Poly::variable(VarId v, int components) {
    Poly p;
    p.terms_.push_back({Monomial::of(v), Rational(1)});
    return components ? p.with_components(components) : p;
}

Poly Poly::monomial(Monomial m, Rational c, int components) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return components ? p.with_components(components) : p;
}

Poly Poly::from_terms(std::vector<Term> terms, int components) {
    PolyBuilder b;
    for (auto& t : terms) b.add(std::move(t.monomial), t.coeff);
    b.merge_components(components);
    return b.build();
}

int Poly::merge_components(int a, int b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw InvalidInput("cannot mix polynomials with ambient component counts " + std::to_string(a) + " and " +
                       std::to_string(b));
}

Poly Poly::with_components(int s) const {
    if (s < 0) throw InvalidInput("component count must be nonnegative");
    Poly out = *this;
    out.components_ = merge_components(components_, s);
    if (s > 0)
        for (const auto& v : variables())
            if (v.component > s)
                throw InvalidInput("variable component " + std::to_string(v.component) +
                                   " exceeds ambient component count " + std::to_string(s));
    return out;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_[0].monomial.empty()) return terms_[0].coeff;
    return Rational(0);
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.monomial < k; });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return Rational(0);
}

long Poly::weighted_degree() const {
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.weighted_degree());
    return d;
}

long Poly::min_weighted_degree() const {
    if (terms_.empty()) return 0;
    long d = terms_.front().monomial.weighted_degree();
    for (const auto& t : terms_) d = std::min(d, t.monomial.weighted_degree());
    return d;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> out;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.monomial.size(); ++i) out.insert(t.monomial.var(i));
    return out;
}

bool Poly::uses_only(Family f) const {
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.monomial.size(); ++i)
            if (t.monomial.var(i).family != f) return false;
    return true;
}

bool Poly::depends_on(VarId v) const {
    for (const auto& t : terms_)
        if (t.monomial.exponent_of(v) > 0) return true;
    return false;
}

bool Poly::equal_terms(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].monomial == o.terms_[i].monomial) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly Poly::combine(const Poly& o, bool subtract) const {
    Poly out;
    out.components_ = merge_components(components_, o.components_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].monomial < o.terms_[j].monomial)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].monomial < terms_[i].monomial) {
            out.terms_.push_back(o.terms_[j]);
            if (subtract) out.terms_.back().coeff = -out.terms_.back().coeff;
            ++j;
        } else {
            Rational c = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.terms_.push_back({terms_[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) { return *this = combine(o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = combine(o, true); }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    int s = Poly::merge_components(a.components_, b.components_);
    if (a.is_zero() || b.is_zero()) {
        Poly z;
        z.components_ = s;
        return z;
    }
    if (a.is_constant()) {
        Poly out = b * a.terms_[0].coeff;
        out.components_ = s;
        return out;
    }
    if (b.is_constant()) {
        Poly out = a * b.terms_[0].coeff;
        out.components_ = s;
        return out;
    }
    PolyBuilder acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc.add_product(ta.monomial * tb.monomial, ta.coeff, tb.coeff);
    acc.merge_components(s);
    return acc.build();
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

// ---------------------------------------------------------------- PolyBuilder

void PolyBuilder::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void PolyBuilder::add(Monomial&& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
}

void PolyBuilder::add_product(const Monomial& m, const Rational& a, const Rational& b) {
    auto [it, inserted] = acc_.try_emplace(m);
    it->second.add_product(a, b);
}

void PolyBuilder::add_poly(const Poly& p, const Rational& scale) {
    merge_components(p.components());
    if (scale.is_zero()) return;
    for (const auto& t : p.terms()) add_product(t.monomial, t.coeff, scale);
}

Poly PolyBuilder::build() {
    Poly out;
    out.components_ = components_;
    out.terms_.reserve(acc_.size());
    for (auto& [m, c] : acc_)
        if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
    acc_.clear();
    return out;
}

// ---------------------------------------------------------------- free functions

Poly pow(const Poly& p, unsigned exponent) {
    Poly result(1);
    result = result.with_components(p.components());
    Poly base = p;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

Poly partial_derivative(const Poly& p, VarId v, unsigned order) {
    if (order == 0) return p;
    PolyBuilder b;
    b.merge_components(p.components());
    for (const auto& t : p.terms()) {
        unsigned e = t.monomial.exponent_of(v);
        if (e < order) continue;
        // e (e-1) ... (e-order+1)
        long falling = 1;
        for (unsigned k = 0; k < order; ++k) falling *= static_cast<long>(e - k);
        b.add_product(t.monomial.lowered(v, order), t.coeff, Rational(falling));
    }
    return b.build();
}

Poly substitute(const Poly& p, const std::map<VarId, Poly>& values) {
    if (values.empty()) return p;
    PolyBuilder out;
    out.merge_components(p.components());
    // Powers of each substituted value, grown on demand.
    std::map<VarId, std::vector<Poly>> powers;
    for (const auto& [v, val] : values) powers[v] = {Poly(1), val};
    auto power_of = [&](VarId v, unsigned e) -> const Poly& {
        auto& list = powers.at(v);
        while (list.size() <= e) list.push_back(list.back() * list[1]);
        return list[e];
    };
    for (const auto& t : p.terms()) {
        Poly term = Poly::monomial(Monomial(), t.coeff);
        Monomial rest;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            VarId v = t.monomial.var(i);
            unsigned e = t.monomial.exponent(i);
            if (values.count(v))
                term *= power_of(v, e);
            else
                rest = rest * Monomial::of(v, e);
        }
        for (const auto& tt : term.terms()) out.add(tt.monomial * rest, tt.coeff);
        out.merge_components(term.components());
    }
    return out.build();
}

Poly substitute(const Poly& p, VarId v, const Poly& value) { return substitute(p, std::map<VarId, Poly>{{v, value}}); }

Poly shift_vars(const Poly& p, const std::map<VarId, Rational>& shifts) {
    std::map<VarId, Poly> values;
    for (const auto& [v, c] : shifts)
        if (!c.is_zero()) values.emplace(v, Poly::variable(v) + Poly(c));
    return substitute(p, values);
}

Poly rename_variables(const Poly& p, const std::function<VarId(VarId)>& rename) {
    PolyBuilder b;
    b.merge_components(p.components());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) m = m * Monomial::of(rename(t.monomial.var(i)), t.monomial.exponent(i));
        b.add(std::move(m), t.coeff);
    }
    return b.build();
}

Poly rename_family(const Poly& p, Family from, Family to) {
    return rename_variables(p, [&](VarId v) {
        if (v.family == from) v.family = to;
        return v;
    });
}

Poly poly_arith(ArithOp op, const Poly& a, const Poly& b) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Pow:
    case ArithOp::Scale:
        if (!b.is_constant()) throw InvalidInput("pow/scale need a rational right operand");
        return poly_arith(op, a, b.constant_term());
    }
    return a;
}

Poly poly_arith(ArithOp op, const Poly& a, const Rational& b) {
    switch (op) {
    case ArithOp::Add: return a + Poly(b);
    case ArithOp::Sub: return a - Poly(b);
    case ArithOp::Mul:
    case ArithOp::Scale: return a * b;
    case ArithOp::Pow:
        if (!b.is_integer() || b.sign() < 0) throw InvalidInput("pow exponent must be a nonnegative integer");
        if (b > Rational(1L << 20)) throw InvalidInput("pow exponent too large");
        return pow(a, static_cast<unsigned>(b.raw().get_num().get_ui()));
    }
    return a;
}

} // namespace tauforge
