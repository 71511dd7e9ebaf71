#include "tauforge/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "tauforge/error.hpp"

namespace tauforge {

Poly determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant needs a square matrix");
    if (n == 0) return Poly(1);
    if (n > 24) throw InvalidInput("determinant size exceeds 24");

    int s = 0;
    for (const auto& row : m)
        for (const auto& e : row) s = Poly::merge_components(s, e.components());

    // minors[mask] = signed sum over injections of the first popcount(mask) rows into mask.
    std::unordered_map<std::uint32_t, Poly> minors{{0u, Poly(1)}};
    for (std::size_t i = 0; i < n; ++i) {
        std::unordered_map<std::uint32_t, PolyBuilder> next;
        for (const auto& [mask, val] : minors) {
            if (val.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if ((mask >> j) & 1u) continue;
                const Poly& e = m[i][j];
                if (e.is_zero()) continue;
                // Moving column j past the already chosen columns to its right.
                int inversions = std::popcount(mask >> (j + 1));
                next[mask | (1u << j)].add_poly(val * e, Rational(inversions % 2 ? -1 : 1));
            }
        }
        minors.clear();
        for (auto& [mask, b] : next) {
            Poly p = b.build();
            if (!p.is_zero()) minors.emplace(mask, std::move(p));
        }
        if (minors.empty()) return Poly().with_components(s);
    }
    auto it = minors.find((n == 32 ? 0u : (1u << n)) - 1u);
    Poly out = it == minors.end() ? Poly() : it->second;
    return s ? out.with_components(s) : out;
}

} // namespace tauforge
