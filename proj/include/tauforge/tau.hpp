#pragma once

#include <map>
#include <vector>

#include "tauforge/partitions.hpp"
#include "tauforge/poly.hpp"
#include "tauforge/schur.hpp"

namespace tauforge {

/// Multicomponent charge label (m_1, ..., m_s).
using ChargeVector = std::vector<int>;

/// All charges with nonnegative entries summing to `total`, in lexicographic order.
std::vector<ChargeVector> charge_lattice(int components, int total);

/// One summand b * s_M(t^{(a)} + c) of a generating function h.
struct HTerm {
    int degree = 1;
    Rational lead = Rational(1);
    ShiftVector shift;
};

/// h(t) = sum_a b^{(a)} s_{M^{(a)}}(t^{(a)} + c^{(a)}), one HTerm per component.
struct HSpec {
    std::vector<HTerm> terms;

    int components() const { return static_cast<int>(terms.size()); }
    /// Throws unless every degree is >= 1, each shift has length <= degree and some lead is nonzero.
    void validate() const;
    Poly h() const;
};

/// Map from charge to tau-function; absent keys are zero.
struct TauCollection {
    int components = 1;
    int total = 0;
    std::map<ChargeVector, Poly> entries;

    Poly get(const ChargeVector& charge) const;
    void put(const ChargeVector& charge, Poly p);
};

/// (n_1 >= ... >= n_s >= 1) together with the r generating functions.
struct KdVProfile {
    std::vector<int> n_parts;
    std::vector<HSpec> specs;

    int n() const;
    int components() const { return static_cast<int>(n_parts.size()); }
    void validate() const;
};

/// det( s_{lambda_j + i - j}(t + c_j) ), short shift vectors zero-padded.
Poly tau_kp(const Partition& lambda, const std::vector<ShiftVector>& C);

/// Determinant whose columns are the given functions and whose row block for component a
/// holds their d^p / d(t_1^{(a)})^p for p = m_a, ..., 1. Charges with a negative entry give 0.
Poly block_determinant(const std::vector<Poly>& columns, const ChargeVector& charge, int components);

Poly tau_mkp_entry(const std::vector<HSpec>& specs, const ChargeVector& charge);
TauCollection tau_mkp_collection(const std::vector<HSpec>& specs, int components = 0);

/// The s = 1 generating functions reproducing tau_kp: h_j = s_{lambda_j - j + m + 1}(t + c_j).
std::vector<HSpec> hspecs_from_partition(const Partition& lambda, const std::vector<ShiftVector>& C);

/// det( s_{lambda_i + j - i}(t + c_{class(lambda_i - i + 1)}) ), class taken mod n.
Poly tau_nkdv(const Partition& lambda, int n, const std::map<int, ShiftVector>& shifts_by_class);

/// max over components with nonzero lead of ceil(M_a / n_a) - 1.
int compute_kj(const HSpec& spec, const std::vector<int>& n_parts);

/// sum_a d p / d t^{(a)}_{j n_a}.
Poly apply_D(const Poly& p, int j, const std::vector<int>& n_parts);

/// Columns h_1, D h_1, ..., D^{k_1} h_1, h_2, ..., D^{k_r} h_r.
std::vector<Poly> mnkdv_columns(const KdVProfile& profile);
/// r + sum_j k_j.
int mnkdv_total(const KdVProfile& profile);

Poly tau_mnkdv_entry(const KdVProfile& profile, const ChargeVector& charge);
TauCollection tau_mnkdv_collection(const KdVProfile& profile);

struct AknsParams {
    int m1 = 1;
    int m2 = 1;
    Rational b1 = Rational(1);
    Rational b2 = Rational(1);
    ShiftVector c1;
    ShiftVector c2;
    int k = 1;

    void validate() const;
};

/// K x K determinant in the x variables: p rows s_{M1-i-j+1}(x + c1) over K-p rows
/// s_{M2-i-j+1}(-x + c2), scaled by b1^p b2^{K-p}.
Poly akns_tau(const AknsParams& params, int p);

/// Entries (p, K - p) for p = 0..K, zero entries omitted.
TauCollection akns_collection(const AknsParams& params);

} // namespace tauforge
