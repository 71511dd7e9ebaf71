#pragma once

#include <map>
#include <vector>

#include "tauforge/poly.hpp"

namespace tauforge {

/// Finite Laurent polynomial in an auxiliary variable z with Poly coefficients.
class LaurentZ {
public:
    LaurentZ() = default;
    LaurentZ(Poly constant); // NOLINT(google-explicit-constructor)
    static LaurentZ monomial(int exponent, Poly coeff);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Poly>& coeffs() const { return coeffs_; }
    Poly coefficient(int exponent) const;
    /// Smallest and largest exponents with nonzero coefficient; 0 for the zero series.
    int min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void add(int exponent, const Poly& coeff);

    LaurentZ& operator+=(const LaurentZ& o);
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    friend bool operator==(const LaurentZ& a, const LaurentZ& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::map<int, Poly> coeffs_;
};

/// Coefficients s_0..s_K of exp(sum_i args[i-1] z^i), via k s_k = sum_i i args_i s_{k-i}.
/// Missing args (i > args.size()) count as zero.
std::vector<Poly> exp_series(const std::vector<Poly>& args, int K);

/// Substitutes v_i -> v_i + sign * z^{-i} / i for every variable of the given family and
/// component. Throws if p contains a variable of another family.
LaurentZ miwa_shift(const Poly& p, Family family, int component, int sign);

/// Coefficient of z^k in exp(sum_i (t_i - y_i) z^i) for the given component.
Poly exp_difference_coeff(int k, int component = 1);

/// Coefficient of z^{-1} in z^extra * prod(factors) * exp(sum_i (t_i - y_i) z^i).
/// The exponential is truncated exactly where the finite negative support of the other
/// factors stops contributing.
Poly laurent_mul_residue(const std::vector<LaurentZ>& factors, int extra_z_power, int component = 1);

} // namespace tauforge
