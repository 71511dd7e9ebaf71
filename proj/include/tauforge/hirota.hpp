#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tauforge/poly.hpp"
#include "tauforge/tau.hpp"

namespace tauforge {

struct VerificationReport {
    std::string identity;
    /// Ordered (name, value) pairs describing the instance.
    std::vector<std::pair<std::string, nlohmann::json>> params;
    Poly obstruction;
    bool pass = true;
    double time_ms = 0;
    /// Sub-checks (per label, per j, per equation) in parameter order.
    std::vector<VerificationReport> parts;
};

/// Res_z z^extra A(t - [z^{-1}]_a) B(y + [z^{-1}]_a) exp(sum_i (t_i^{(a)} - y_i^{(a)}) z^i),
/// with B rewritten into the y variables. Splits the exponential into its t and y halves
/// and pairs coefficients of z^N and z^{-1-N}.
Poly bilinear_residue(const Poly& A, const Poly& B, int component, int extra);

/// Same residue through laurent_mul_residue on the full product; slower, kept as a cross-check.
Poly bilinear_residue_direct(const Poly& A, const Poly& B, int component, int extra);

/// Res z^{jn} tau(t - [z^{-1}]) tau(y + [z^{-1}]) exp(sum (t_i - y_i) z^i).
VerificationReport hirota_kp_check(const Poly& tau, int j, int n);

/// Multicomponent residue identity for labels m (sum = total + 1) and q (sum = total - 1).
VerificationReport hirota_mkp_check(const TauCollection& T, const ChargeVector& m, const ChargeVector& q, int j,
                                    const std::vector<int>& n_parts);

/// Label pairs (m, q) for which some component references two nonzero entries.
std::vector<std::pair<ChargeVector, ChargeVector>> admissible_labels(const TauCollection& T);

/// hirota_mkp_check over every admissible label pair and every j in js.
VerificationReport verify_collection(const TauCollection& T, const std::vector<int>& n_parts, const std::vector<int>& js);

/// D_j p = 0 for j = 1..j_max; the obstruction is sum_j (D_j p)^2.
VerificationReport reduction_check(const Poly& p, const std::vector<int>& n_parts, int j_max = 3);

/// With q = -tau^{base+(1,-1)} / tau^{base} and r = tau^{base+(-1,1)} / tau^{base}, checks
///   q_{x2} - 1/2 q_{x1 x1} - 4 q^2 r = 0  and  r_{x2} + 1/2 r_{x1 x1} + 4 r^2 q = 0
/// after multiplying through by (tau^{base})^3.
VerificationReport akns_pde_check(const TauCollection& T, const ChargeVector& base);

/// Runs akns_pde_check at every base p = 0..K with a nonzero entry.
VerificationReport akns_family_check(const TauCollection& T);

} // namespace tauforge
