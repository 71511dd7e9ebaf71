#include "tauforge/tau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tauforge/error.hpp"
#include "tauforge/matrix.hpp"

namespace tauforge {

std::vector<ChargeVector> charge_lattice(int components, int total) {
    if (components < 1) throw InvalidInput("component count must be >= 1");
    std::vector<ChargeVector> out;
    if (total < 0) return out;
    ChargeVector cur(static_cast<std::size_t>(components), 0);
    // Odometer over the first s-1 entries; the last one absorbs the remainder.
    std::function<void(int, int)> rec = [&](int a, int left) {
        if (a == components - 1) {
            cur[static_cast<std::size_t>(a)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(a)] = v;
            rec(a + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

void HSpec::validate() const {
    if (terms.empty()) throw InvalidInput("generating function needs at least one component");
    bool any = false;
    for (const auto& t : terms) {
        if (t.degree < 1) throw InvalidInput("generating function degrees must be >= 1");
        if (t.shift.size() > static_cast<std::size_t>(t.degree))
            throw InvalidInput("shift vector longer than its degree " + std::to_string(t.degree));
        any = any || !t.lead.is_zero();
    }
    if (!any) throw InvalidInput("generating function needs a nonzero leading coefficient");
}

Poly HSpec::h() const {
    validate();
    Poly out = Poly().with_components(components());
    for (std::size_t a = 0; a < terms.size(); ++a) {
        const auto& t = terms[a];
        if (t.lead.is_zero()) continue;
        out += schur_shifted(t.degree, static_cast<int>(a) + 1, t.shift) * t.lead;
    }
    return out;
}

Poly TauCollection::get(const ChargeVector& charge) const {
    auto it = entries.find(charge);
    return it == entries.end() ? Poly() : it->second;
}

void TauCollection::put(const ChargeVector& charge, Poly p) {
    if (static_cast<int>(charge.size()) != components) throw InvalidInput("charge length must equal component count");
    if (p.is_zero())
        entries.erase(charge);
    else
        entries[charge] = std::move(p);
}

int KdVProfile::n() const { return std::accumulate(n_parts.begin(), n_parts.end(), 0); }

void KdVProfile::validate() const {
    if (n_parts.empty()) throw InvalidInput("profile needs at least one part");
    for (std::size_t i = 0; i < n_parts.size(); ++i) {
        if (n_parts[i] < 1) throw InvalidInput("profile parts must be positive");
        if (i > 0 && n_parts[i] > n_parts[i - 1]) throw InvalidInput("profile parts must be weakly decreasing");
    }
    if (specs.empty()) throw InvalidInput("profile needs at least one generating function");
    if (static_cast<int>(specs.size()) >= n()) throw InvalidInput("profile needs r < n generating functions");
    for (const auto& s : specs) {
        if (s.components() != components()) throw InvalidInput("generating function component count must match the profile");
        s.validate();
    }
}

Poly tau_kp(const Partition& lambda, const std::vector<ShiftVector>& C) {
    const int m = lambda.length();
    if (static_cast<int>(C.size()) > m) throw InvalidInput("more shift vectors than parts");
    std::vector<ShiftVector> shifts;
    for (int j = 1; j <= m; ++j)
        shifts.push_back(j <= static_cast<int>(C.size()) ? C[static_cast<std::size_t>(j - 1)].padded(shift_length(lambda, j))
                                                         : ShiftVector().padded(shift_length(lambda, j)));
    PolyMatrix mat(static_cast<std::size_t>(m), std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                schur_shifted(lambda[j] + i - j, 1, shifts[static_cast<std::size_t>(j - 1)]);
    return determinant(mat).with_components(1);
}

Poly block_determinant(const std::vector<Poly>& columns, const ChargeVector& charge, int components) {
    if (static_cast<int>(charge.size()) != components) throw InvalidInput("charge length must equal component count");
    const int m = static_cast<int>(columns.size());
    if (std::accumulate(charge.begin(), charge.end(), 0) != m)
        throw InvalidInput("charge entries must sum to " + std::to_string(m));
    if (std::any_of(charge.begin(), charge.end(), [](int c) { return c < 0; })) return Poly().with_components(components);
    PolyMatrix mat;
    for (int a = 1; a <= components; ++a) {
        int ma = charge[static_cast<std::size_t>(a - 1)];
        if (ma == 0) continue;
        // derivs[p][j] = d^p h_j / d(t_1^{(a)})^p
        std::vector<std::vector<Poly>> derivs{columns};
        for (int p = 1; p <= ma; ++p) {
            std::vector<Poly> next;
            for (const auto& c : derivs.back()) next.push_back(partial_derivative(c, tvar(1, a)));
            derivs.push_back(std::move(next));
        }
        for (int p = ma; p >= 1; --p) mat.push_back(derivs[static_cast<std::size_t>(p)]);
    }
    return determinant(mat).with_components(components);
}

namespace {

int common_components(const std::vector<HSpec>& specs) {
    int s = 0;
    for (const auto& h : specs) {
        if (s && h.components() != s) throw InvalidInput("all generating functions need the same component count");
        s = h.components();
    }
    return s;
}

} // namespace

Poly tau_mkp_entry(const std::vector<HSpec>& specs, const ChargeVector& charge) {
    int s = common_components(specs);
    if (s == 0) s = static_cast<int>(charge.size());
    std::vector<Poly> cols;
    for (const auto& h : specs) cols.push_back(h.h());
    return block_determinant(cols, charge, s);
}

namespace {

TauCollection collection_from_columns(const std::vector<Poly>& cols, int s) {
    TauCollection out;
    out.components = s;
    out.total = static_cast<int>(cols.size());
    for (const auto& ch : charge_lattice(s, out.total)) out.put(ch, block_determinant(cols, ch, s));
    return out;
}

} // namespace

TauCollection tau_mkp_collection(const std::vector<HSpec>& specs, int components) {
    int s = common_components(specs);
    if (s == 0) s = components;
    if (s < 1) throw InvalidInput("component count must be >= 1");
    if (components && components != s) throw InvalidInput("component count does not match the generating functions");
    std::vector<Poly> cols;
    for (const auto& h : specs) cols.push_back(h.h());
    return collection_from_columns(cols, s);
}

std::vector<HSpec> hspecs_from_partition(const Partition& lambda, const std::vector<ShiftVector>& C) {
    const int m = lambda.length();
    if (static_cast<int>(C.size()) > m) throw InvalidInput("more shift vectors than parts");
    std::vector<HSpec> out;
    for (int j = 1; j <= m; ++j) {
        ShiftVector c = j <= static_cast<int>(C.size()) ? C[static_cast<std::size_t>(j - 1)] : ShiftVector();
        HSpec h;
        h.terms.push_back({lambda[j] - j + m + 1, Rational(1), c.padded(shift_length(lambda, j))});
        out.push_back(std::move(h));
    }
    return out;
}

Poly tau_nkdv(const Partition& lambda, int n, const std::map<int, ShiftVector>& shifts_by_class) {
    if (!is_n_periodic(lambda, n))
        throw InvalidInput("partition " + lambda.to_string() + " is not " + std::to_string(n) + "-periodic");
    const int m = lambda.length();
    auto cls = [n](int v) { return ((v % n) + n) % n; };
    std::map<int, std::size_t> needed;
    for (int i = 1; i <= m; ++i) {
        auto& len = needed[cls(lambda[i] - i + 1)];
        len = std::max(len, static_cast<std::size_t>(lambda[i] + m - i));
    }
    if (static_cast<int>(needed.size()) > n - 1) throw InvalidInput("more than n-1 residue classes appear");
    std::map<int, ShiftVector> shifts;
    for (const auto& [c, vec] : shifts_by_class) {
        if (c < 0 || c >= n) throw InvalidInput("residue class label must lie in [0, n)");
        auto it = needed.find(c);
        if (it == needed.end()) {
            if (!vec.is_zero()) throw InvalidInput("shift given for residue class " + std::to_string(c) + " that no row uses");
            continue;
        }
        shifts[c] = vec.padded(it->second);
    }
    PolyMatrix mat(static_cast<std::size_t>(m), std::vector<Poly>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i) {
        auto it = shifts.find(cls(lambda[i] - i + 1));
        ShiftVector c = it == shifts.end() ? ShiftVector() : it->second;
        for (int j = 1; j <= m; ++j)
            mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = schur_shifted(lambda[i] + j - i, 1, c);
    }
    return determinant(mat).with_components(1);
}

int compute_kj(const HSpec& spec, const std::vector<int>& n_parts) {
    if (spec.components() != static_cast<int>(n_parts.size()))
        throw InvalidInput("generating function component count must match the profile");
    int k = -1;
    for (std::size_t a = 0; a < spec.terms.size(); ++a) {
        const auto& t = spec.terms[a];
        if (t.lead.is_zero()) continue;
        int na = n_parts[a];
        if (na < 1) throw InvalidInput("profile parts must be positive");
        k = std::max(k, (t.degree + na - 1) / na - 1);
    }
    if (k < 0) throw InvalidInput("generating function needs a nonzero leading coefficient");
    return k;
}

Poly apply_D(const Poly& p, int j, const std::vector<int>& n_parts) {
    if (j < 1) throw InvalidInput("D_j needs j >= 1");
    Poly out = Poly().with_components(p.components());
    for (std::size_t a = 0; a < n_parts.size(); ++a)
        out += partial_derivative(p, tvar(j * n_parts[a], static_cast<int>(a) + 1));
    return out;
}

std::vector<Poly> mnkdv_columns(const KdVProfile& profile) {
    profile.validate();
    std::vector<Poly> cols;
    for (const auto& spec : profile.specs) {
        int k = compute_kj(spec, profile.n_parts);
        Poly h = spec.h();
        for (int p = 0; p <= k; ++p) {
            cols.push_back(h);
            h = apply_D(h, 1, profile.n_parts);
        }
    }
    return cols;
}

int mnkdv_total(const KdVProfile& profile) {
    profile.validate();
    int m = 0;
    for (const auto& spec : profile.specs) m += 1 + compute_kj(spec, profile.n_parts);
    return m;
}

Poly tau_mnkdv_entry(const KdVProfile& profile, const ChargeVector& charge) {
    return block_determinant(mnkdv_columns(profile), charge, profile.components());
}

TauCollection tau_mnkdv_collection(const KdVProfile& profile) {
    return collection_from_columns(mnkdv_columns(profile), profile.components());
}

void AknsParams::validate() const {
    if (m1 < 1 || m2 < 1) throw InvalidInput("AKNS degrees M1, M2 must be >= 1");
    if (k < 1) throw InvalidInput("AKNS size K must be >= 1");
}

Poly akns_tau(const AknsParams& P, int p) {
    P.validate();
    if (p < 0 || p > P.k) throw InvalidInput("AKNS block split p must lie in [0, K]");
    const int K = P.k;
    PolyMatrix mat;
    for (int i = 1; i <= p; ++i) {
        std::vector<Poly> row;
        for (int j = 1; j <= K; ++j) row.push_back(schur_signed(P.m1 - i - j + 1, 1, +1, P.c1, Family::X));
        mat.push_back(std::move(row));
    }
    for (int i = 1; i <= K - p; ++i) {
        std::vector<Poly> row;
        for (int j = 1; j <= K; ++j) row.push_back(schur_signed(P.m2 - i - j + 1, 1, -1, P.c2, Family::X));
        mat.push_back(std::move(row));
    }
    Poly out = determinant(mat) * (P.b1.pow(static_cast<unsigned>(p)) * P.b2.pow(static_cast<unsigned>(K - p)));
    if (!out.uses_only(Family::X)) throw std::logic_error("AKNS tau must depend on x variables only");
    return out;
}

TauCollection akns_collection(const AknsParams& params) {
    TauCollection out;
    out.components = 2;
    out.total = params.k;
    for (int p = 0; p <= params.k; ++p) out.put({p, params.k - p}, akns_tau(params, p));
    return out;
}

} // namespace tauforge
