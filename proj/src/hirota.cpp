#include "tauforge/hirota.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "tauforge/error.hpp"
#include "tauforge/laurent.hpp"
#include "tauforge/schur.hpp"

namespace tauforge {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json charge_json(const ChargeVector& c) { return nlohmann::json(c); }

void finish(VerificationReport& r, Clock::time_point start) {
    r.pass = r.obstruction.is_zero();
    for (const auto& p : r.parts) r.pass = r.pass && p.pass;
    r.time_ms = elapsed_ms(start);
}

} // namespace

Poly bilinear_residue(const Poly& A, const Poly& B, int component, int extra) {
    if (A.is_zero() || B.is_zero()) return Poly();
    if (!A.uses_only(Family::T) || !B.uses_only(Family::T))
        throw InvalidInput("bilinear residue expects polynomials in the t variables");
    LaurentZ la = miwa_shift(A, Family::T, component, -1);
    LaurentZ lb = miwa_shift(rename_family(B, Family::T, Family::Y), Family::Y, component, +1);
    // U_N: coefficient of z^N in z^extra la exp(sum t_i z^i), N >= extra + min(la).
    // W_M: coefficient of z^M in lb exp(-sum y_i z^i), M >= min(lb). Pairs have N + M = -1.
    const int n_lo = extra + la.min_exponent();
    const int n_hi = -1 - lb.min_exponent();
    if (n_lo > n_hi) return Poly();
    const int span = n_hi - n_lo;
    std::vector<Poly> st, sy;
    for (int k = 0; k <= span; ++k) {
        st.push_back(elementary_schur(k, component, Family::T));
        sy.push_back(schur_signed(k, component, -1, ShiftVector(), Family::Y));
    }
    PolyBuilder total;
    for (int N = n_lo; N <= n_hi; ++N) {
        PolyBuilder u;
        for (const auto& [e, c] : la.coeffs()) {
            int k = N - extra - e;
            if (k >= 0) u.add_poly(c * st[static_cast<std::size_t>(k)]);
        }
        Poly U = u.build();
        if (U.is_zero()) continue;
        const int M = -1 - N;
        PolyBuilder w;
        for (const auto& [e, c] : lb.coeffs()) {
            int k = M - e;
            if (k >= 0) w.add_poly(c * sy[static_cast<std::size_t>(k)]);
        }
        Poly W = w.build();
        if (!W.is_zero()) total.add_poly(U * W);
    }
    total.merge_components(Poly::merge_components(A.components(), B.components()));
    return total.build();
}

Poly bilinear_residue_direct(const Poly& A, const Poly& B, int component, int extra) {
    if (A.is_zero() || B.is_zero()) return Poly();
    LaurentZ la = miwa_shift(A, Family::T, component, -1);
    LaurentZ lb = miwa_shift(rename_family(B, Family::T, Family::Y), Family::Y, component, +1);
    Poly out = laurent_mul_residue({la, lb}, extra, component);
    int s = Poly::merge_components(A.components(), B.components());
    return s ? out.with_components(s) : out;
}

VerificationReport hirota_kp_check(const Poly& tau, int j, int n) {
    auto start = Clock::now();
    if (j < 0) throw InvalidInput("j must be >= 0");
    if (n < 1) throw InvalidInput("n must be >= 1");
    for (const auto& v : tau.variables())
        if (v.family != Family::T || v.component != 1)
            throw InvalidInput("KP check expects a polynomial in t^{(1)} only");
    VerificationReport r;
    r.identity = n == 1 && j == 0 ? "kp" : "nkdv";
    r.params = {{"j", j}, {"n", n}};
    r.obstruction = bilinear_residue(tau, tau, 1, j * n);
    finish(r, start);
    return r;
}

VerificationReport hirota_mkp_check(const TauCollection& T, const ChargeVector& m, const ChargeVector& q, int j,
                                    const std::vector<int>& n_parts) {
    auto start = Clock::now();
    const int s = T.components;
    if (static_cast<int>(m.size()) != s || static_cast<int>(q.size()) != s)
        throw InvalidInput("label length must equal the component count");
    if (static_cast<int>(n_parts.size()) != s) throw InvalidInput("profile length must equal the component count");
    if (std::accumulate(m.begin(), m.end(), 0) != T.total + 1 || std::accumulate(q.begin(), q.end(), 0) != T.total - 1)
        throw InvalidInput("labels must sum to total+1 and total-1");
    if (j < 0) throw InvalidInput("j must be >= 0");
    VerificationReport r;
    r.identity = j == 0 && std::all_of(n_parts.begin(), n_parts.end(), [](int x) { return x == 1; }) ? "mkp" : "mnkdv";
    r.params = {{"m", charge_json(m)}, {"q", charge_json(q)}, {"j", j}, {"n_parts", nlohmann::json(n_parts)}};
    PolyBuilder acc;
    acc.merge_components(s);
    int prefix = 0;
    for (int a = 1; a <= s; ++a) {
        ChargeVector ma = m, qa = q;
        ma[static_cast<std::size_t>(a - 1)] -= 1;
        qa[static_cast<std::size_t>(a - 1)] += 1;
        Poly A = T.get(ma), B = T.get(qa);
        if (!A.is_zero() && !B.is_zero()) {
            int extra = m[static_cast<std::size_t>(a - 1)] - q[static_cast<std::size_t>(a - 1)] +
                        j * n_parts[static_cast<std::size_t>(a - 1)] - 2;
            acc.add_poly(bilinear_residue(A, B, a, extra), Rational(prefix % 2 ? -1 : 1));
        }
        prefix += m[static_cast<std::size_t>(a - 1)] + q[static_cast<std::size_t>(a - 1)];
    }
    r.obstruction = acc.build();
    finish(r, start);
    return r;
}

std::vector<std::pair<ChargeVector, ChargeVector>> admissible_labels(const TauCollection& T) {
    std::set<std::pair<ChargeVector, ChargeVector>> out;
    for (const auto& [k1, p1] : T.entries)
        for (const auto& [k2, p2] : T.entries)
            for (int a = 0; a < T.components; ++a) {
                ChargeVector m = k1, q = k2;
                m[static_cast<std::size_t>(a)] += 1;
                q[static_cast<std::size_t>(a)] -= 1;
                out.emplace(m, q);
            }
    return {out.begin(), out.end()};
}

VerificationReport verify_collection(const TauCollection& T, const std::vector<int>& n_parts, const std::vector<int>& js) {
    auto start = Clock::now();
    VerificationReport r;
    r.identity = "collection";
    r.params = {{"components", T.components}, {"total", T.total}, {"j", nlohmann::json(js)},
                {"n_parts", nlohmann::json(n_parts)}};
    auto labels = admissible_labels(T);
    for (int j : js)
        for (const auto& [m, q] : labels) {
            r.parts.push_back(hirota_mkp_check(T, m, q, j, n_parts));
            if (!r.parts.back().pass && r.obstruction.is_zero()) r.obstruction = r.parts.back().obstruction;
        }
    finish(r, start);
    return r;
}

VerificationReport reduction_check(const Poly& p, const std::vector<int>& n_parts, int j_max) {
    auto start = Clock::now();
    if (j_max < 1) throw InvalidInput("j_max must be >= 1");
    VerificationReport r;
    r.identity = "reduction";
    r.params = {{"n_parts", nlohmann::json(n_parts)}, {"j_max", j_max}};
    Poly total;
    for (int j = 1; j <= j_max; ++j) {
        auto s = Clock::now();
        VerificationReport part;
        part.identity = "reduction";
        part.params = {{"j", j}};
        part.obstruction = apply_D(p, j, n_parts);
        finish(part, s);
        total += part.obstruction * part.obstruction;
        r.parts.push_back(std::move(part));
    }
    r.obstruction = total;
    finish(r, start);
    return r;
}

namespace {

/// num / den^e with a fixed denominator polynomial.
struct Fraction {
    Poly num;
    unsigned e = 0;
};

Fraction derive(const Fraction& f, const Poly& den, VarId v) {
    // (n / F^e)' = (n' F - e n F') / F^{e+1}
    Poly n = partial_derivative(f.num, v) * den - f.num * partial_derivative(den, v) * Rational(static_cast<long>(f.e));
    return {n, f.e + 1};
}

Fraction times(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.e + b.e}; }

Poly cleared_sum(const std::vector<std::pair<Rational, Fraction>>& terms, const Poly& den) {
    unsigned E = 0;
    for (const auto& [c, f] : terms) E = std::max(E, f.e);
    Poly out;
    for (const auto& [c, f] : terms) out += f.num * pow(den, E - f.e) * c;
    return out;
}

} // namespace

VerificationReport akns_pde_check(const TauCollection& T, const ChargeVector& base) {
    auto start = Clock::now();
    if (T.components != 2 || base.size() != 2) throw InvalidInput("AKNS check needs two-component charges");
    Poly t0 = T.get(base);
    if (t0.is_zero()) throw InvalidInput("base tau-function must be nonzero");
    Poly tp = T.get({base[0] + 1, base[1] - 1});
    Poly tm = T.get({base[0] - 1, base[1] + 1});
    for (const Poly* p : {&t0, &tp, &tm})
        if (!p->uses_only(Family::X)) throw InvalidInput("AKNS taus must be polynomials in the x variables");

    VerificationReport r;
    r.identity = "akns";
    r.params = {{"base", charge_json(base)}};
    const VarId x1 = xvar(1), x2 = xvar(2);
    Fraction q{-tp, 1}, rr{tm, 1};
    auto eq = [&](const Fraction& u, const Fraction& w, const Rational& diffusion, const Rational& cubic,
                  const char* name) {
        auto s = Clock::now();
        Fraction u2 = derive(u, t0, x2);
        Fraction u11 = derive(derive(u, t0, x1), t0, x1);
        Fraction cub = times(times(u, u), w);
        VerificationReport part;
        part.identity = name;
        part.obstruction = cleared_sum({{Rational(1), u2}, {diffusion, u11}, {cubic, cub}}, t0);
        finish(part, s);
        return part;
    };
    r.parts.push_back(eq(q, rr, Rational(-1, 2), Rational(-4), "akns_q"));
    r.parts.push_back(eq(rr, q, Rational(1, 2), Rational(4), "akns_r"));
    Poly sq;
    for (const auto& p : r.parts) sq += p.obstruction * p.obstruction;
    r.obstruction = sq;
    finish(r, start);
    return r;
}

VerificationReport akns_family_check(const TauCollection& T) {
    auto start = Clock::now();
    VerificationReport r;
    r.identity = "akns_family";
    r.params = {{"total", T.total}};
    for (int p = 0; p <= T.total; ++p) {
        ChargeVector base{p, T.total - p};
        if (T.get(base).is_zero()) continue;
        r.parts.push_back(akns_pde_check(T, base));
        if (!r.parts.back().pass && r.obstruction.is_zero()) r.obstruction = r.parts.back().obstruction;
    }
    finish(r, start);
    return r;
}

} // namespace tauforge
