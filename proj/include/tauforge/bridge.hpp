#pragma once

#include <vector>

#include "tauforge/fock.hpp"
#include "tauforge/tau.hpp"

namespace tauforge {

/// Generator whose evolution has e_l^{(a)} coefficient d^l h / d(t_1^{(a)})^l:
/// b s_M(t + c) becomes sum_{k=1}^{M} b s_{M-k}(c) e_k^{(a)}.
GeneratorVector generator_from_hspec(const HSpec& spec);

/// Inverse direction: per component the top index fixes the degree and lead, and the
/// remaining coefficients are converted to a shift with solve_shifts.
HSpec hspec_from_generator(const GeneratorVector& g, int components);

} // namespace tauforge
