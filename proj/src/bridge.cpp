#include "tauforge/bridge.hpp"

#include "tauforge/error.hpp"
#include "tauforge/schur.hpp"

namespace tauforge {

GeneratorVector generator_from_hspec(const HSpec& spec) {
    spec.validate();
    GeneratorVector g;
    for (std::size_t a = 0; a < spec.terms.size(); ++a) {
        const auto& t = spec.terms[a];
        if (t.lead.is_zero()) continue;
        auto sc = schur_constants(t.degree, t.shift);
        for (int k = 1; k <= t.degree; ++k)
            g.add(static_cast<int>(a) + 1, k, t.lead * sc[static_cast<std::size_t>(t.degree - k)]);
    }
    return g;
}

HSpec hspec_from_generator(const GeneratorVector& g, int components) {
    g.validate(true);
    HSpec spec;
    spec.terms.resize(static_cast<std::size_t>(components), HTerm{1, Rational(0), ShiftVector()});
    for (int a = 1; a <= components; ++a) {
        std::vector<Rational> b{Rational(0)};
        for (const auto& [bv, c] : g.entries) {
            if (bv.component > components) throw InvalidInput("basis component exceeds the component count");
            if (bv.component != a) continue;
            if (static_cast<int>(b.size()) <= bv.index) b.resize(static_cast<std::size_t>(bv.index) + 1, Rational(0));
            b[static_cast<std::size_t>(bv.index)] = c;
        }
        if (b.size() == 1) continue;
        HTerm& t = spec.terms[static_cast<std::size_t>(a - 1)];
        t.degree = static_cast<int>(b.size()) - 1;
        t.lead = b.back();
        t.shift = solve_shifts(b);
    }
    return spec;
}

} // namespace tauforge
