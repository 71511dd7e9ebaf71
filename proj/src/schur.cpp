#include "tauforge/schur.hpp"

#include <mutex>

#include "tauforge/error.hpp"
#include "tauforge/laurent.hpp"

namespace tauforge {

bool ShiftVector::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

ShiftVector ShiftVector::padded(std::size_t n) const {
    if (entries.size() > n)
        throw InvalidInput("shift vector has length " + std::to_string(entries.size()) + ", at most " +
                           std::to_string(n) + " allowed");
    ShiftVector out = *this;
    out.entries.resize(n, Rational(0));
    return out;
}

std::map<VarId, Rational> ShiftVector::as_shift_map(int component, Family family) const {
    std::map<VarId, Rational> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero()) out.emplace(VarId(family, component, static_cast<int>(i) + 1), entries[i]);
    return out;
}

bool operator==(const ShiftVector& a, const ShiftVector& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 1; i <= n; ++i)
        if (!(a.at(i) == b.at(i))) return false;
    return true;
}

namespace {

struct SchurCache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::vector<Poly>> table; // (family, component) -> s_0..s_K
};

SchurCache& cache() {
    static SchurCache c;
    return c;
}

} // namespace

Poly elementary_schur(int j, int component, Family family) {
    if (j < 0) return Poly();
    VarId(family, component, 1); // validates the component
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto& list = c.table[{static_cast<int>(family), component}];
    if (list.empty()) list.emplace_back(1);
    while (static_cast<int>(list.size()) <= j) {
        int k = static_cast<int>(list.size());
        PolyBuilder acc;
        for (int i = 1; i <= k; ++i)
            acc.add_poly(Poly::variable(VarId(family, component, i)) * list[static_cast<std::size_t>(k - i)],
                         Rational(i, k));
        list.push_back(acc.build());
    }
    return list[static_cast<std::size_t>(j)];
}

Poly schur_shifted(int j, int component, const ShiftVector& c, Family family) {
    return shift_vars(elementary_schur(j, component, family), c.as_shift_map(component, family));
}

Poly schur_shifted_sum(int j, int component, const ShiftVector& c, Family family) {
    if (j < 0) return Poly();
    auto sc = schur_constants(j, c);
    PolyBuilder acc;
    for (int i = 0; i <= j; ++i) acc.add_poly(elementary_schur(i, component, family), sc[static_cast<std::size_t>(j - i)]);
    return acc.build();
}

Poly schur_signed(int j, int component, int sign, const ShiftVector& c, Family family) {
    if (j < 0) return Poly();
    std::vector<Poly> args;
    for (int i = 1; i <= j; ++i)
        args.push_back(Poly::variable(VarId(family, component, i)) * Rational(sign) + Poly(c.at(static_cast<std::size_t>(i))));
    return exp_series(args, j)[static_cast<std::size_t>(j)];
}

std::vector<Rational> schur_constants(int K, const ShiftVector& c) {
    std::vector<Rational> s;
    if (K < 0) return s;
    s.emplace_back(1);
    for (int k = 1; k <= K; ++k) {
        Rational acc;
        for (int i = 1; i <= k; ++i) {
            Rational ci = c.at(static_cast<std::size_t>(i));
            if (!ci.is_zero()) acc.add_product(ci * Rational(i), s[static_cast<std::size_t>(k - i)]);
        }
        s.push_back(acc / Rational(k));
    }
    return s;
}

Rational schur_constant(int j, const ShiftVector& c) {
    if (j < 0) return Rational(0);
    return schur_constants(j, c)[static_cast<std::size_t>(j)];
}

ShiftVector solve_shifts(const std::vector<Rational>& b) {
    if (b.empty() || b.back().is_zero()) throw InvalidInput("leading coefficient b_M must be nonzero");
    const int M = static_cast<int>(b.size()) - 1;
    // Matching s_{M-k}(t): s_k(c) = b_{M-k} / b_M, then k c_k = k s_k(c) - sum_{i<k} i c_i s_{k-i}(c).
    std::vector<Rational> target(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) target[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(M - k)] / b.back();
    std::vector<Rational> c(static_cast<std::size_t>(M));
    for (int k = 1; k <= M; ++k) {
        Rational acc;
        for (int i = 1; i < k; ++i)
            acc.add_product(Rational(i) * c[static_cast<std::size_t>(i - 1)], target[static_cast<std::size_t>(k - i)]);
        c[static_cast<std::size_t>(k - 1)] = target[static_cast<std::size_t>(k)] - acc / Rational(k);
    }
    return ShiftVector(std::move(c));
}

} // namespace tauforge
