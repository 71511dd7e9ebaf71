#pragma once

#include <map>
#include <vector>

#include "tauforge/poly.hpp"

namespace tauforge {

/// Constant shift (c_1, ..., c_L); entries past L read as zero.
struct ShiftVector {
    std::vector<Rational> entries;

    ShiftVector() = default;
    explicit ShiftVector(std::vector<Rational> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    Rational at(std::size_t i) const { return i >= 1 && i <= entries.size() ? entries[i - 1] : Rational(0); }
    bool is_zero() const;
    /// Zero-padded copy of length n; throws if the vector is already longer.
    ShiftVector padded(std::size_t n) const;
    /// {v_i^{(a)} -> c_i} for use with shift_vars.
    std::map<VarId, Rational> as_shift_map(int component, Family family = Family::T) const;

    friend bool operator==(const ShiftVector& a, const ShiftVector& b);
};

/// s_j in the variables of one component and family; zero for j < 0.
/// Values are memoized per (family, component) under a mutex.
Poly elementary_schur(int j, int component = 1, Family family = Family::T);

/// s_j(t + c), built by substituting the shift into elementary_schur.
Poly schur_shifted(int j, int component, const ShiftVector& c, Family family = Family::T);

/// s_j(t + c) as sum_i s_{j-i}(c) s_i(t).
Poly schur_shifted_sum(int j, int component, const ShiftVector& c, Family family = Family::T);

/// s_j(sign * v + c) in the variables of one component and family.
Poly schur_signed(int j, int component, int sign, const ShiftVector& c, Family family = Family::T);

/// s_j evaluated at the constants (c_1, c_2, ...).
Rational schur_constant(int j, const ShiftVector& c);

/// s_0(c), ..., s_K(c) at once.
std::vector<Rational> schur_constants(int K, const ShiftVector& c);

/// Given (b_0, ..., b_M) with b_M != 0, returns c of length M with
/// sum_i b_i s_i(t) = b_M s_M(t + c).
ShiftVector solve_shifts(const std::vector<Rational>& b);

} // namespace tauforge
